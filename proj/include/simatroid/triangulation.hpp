#pragma once

#include "simatroid/dirac.hpp"

namespace simatroid {

struct DecompositionTerm {
    ExactScalar scale;
    Face apex;  ///< a (k+1)-face; the term is scale * boundary(apex)

    friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// target = sum of scale_j * boundary(apex_j), all scales nonzero, and the
/// vertices of the target's support are exactly the vertices of the apexes.
struct TriangulationCertificate {
    ChainVector target;
    std::vector<DecompositionTerm> terms;
    std::size_t rounds = 0;  ///< elimination passes, one per sequence entry visited

    friend bool operator==(const TriangulationCertificate&, const TriangulationCertificate&) = default;
};

/// Columns are the boundaries of the (k+1)-faces, in ground coordinates.
ExactMatrix small_circuit_matrix(const SimplicialMatroid& m);

/// The small-circuit vectors span the circuit space.
bool is_triangulable(const SimplicialMatroid& m);

/// Writes a nonzero circuit-space vector as a combination of small
/// circuits by walking a D-perfect sequence: at the first V_i meeting the
/// support, every member through V_i but the first is cancelled against the
/// small circuit on its union with the first. Throws Error when the peels
/// are not the successive stars, or the vector is outside the circuit space.
TriangulationCertificate strong_decompose(const SimplicialMatroid& m, const ChainVector& target,
                                          const DPerfectCertificate& cert);

/// Recomputes the combination and the vertex-union condition.
Verdict verify_decomposition(const HypercliqueComplex& c, FieldSpec field, const TriangulationCertificate& cert);

/// Exhaustive check, for every circuit, of a decomposition into small
/// circuits with nonzero scalars and matching vertex union. Past the
/// ground-set guard only circuits small enough for the enumeration budget
/// are tried, so the answer is false or inconclusive there.
Decision is_strongly_triangulable_brute(const SimplicialMatroid& m, const Guards& guards = {});

/// The six-vertex projective plane as a 3-hyperclique complex.
HypercliqueComplex gen_projective_plane();

/// Two k-simplices glued along a ridge with that ridge removed, each
/// remaining boundary face coned to vertex n. Requires 2 <= k <= n - 3.
HypercliqueComplex gen_prop54(int n, int k);

}  // namespace simatroid
