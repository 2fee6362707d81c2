#pragma once

#include <optional>

#include "simatroid/matroid.hpp"
#include "simatroid/verdict.hpp"

namespace simatroid {

/// One star deletion: the (k-1)-set removed and the generators it took.
struct PeelStep {
    Face v;
    FaceSet peeled;

    friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

/// A D-perfect sequence V_1..V_r with the cocircuits C*_j peeled at each
/// step. The residual complexes are recomputed on verification.
struct DPerfectCertificate {
    std::vector<PeelStep> steps;

    std::vector<Face> sequence() const;
    friend bool operator==(const DPerfectCertificate&, const DPerfectCertificate&) = default;
};

/// A maximal chain of relatively dense flats, listed from the top: step i
/// removes `peeled` from X_{r-i} to give the dense hyperplane X_{r-i-1},
/// witnessed by the simplicial (k-1)-set `v` of <X_{r-i}>.
struct SuperdenseCertificate {
    std::vector<PeelStep> steps;

    /// X_0 = {} up to X_r = the ground set.
    std::vector<FaceSet> chain(const FaceSet& ground) const;
    friend bool operator==(const SuperdenseCertificate&, const SuperdenseCertificate&) = default;
};

enum class Strategy { greedy_lex, backtracking };

/// Exactly one facet strictly contains v. Uses the union test: v is
/// simplicial iff its star is nonempty and the union of the star is a face.
bool is_simplicial_face(const HypercliqueComplex& c, Face v);

/// Same question answered by counting facets; the reference path.
bool is_simplicial_face_by_facets(const HypercliqueComplex& c, Face v);

/// All simplicial (k-1)-sets in lexicographic order.
FaceSet simplicial_faces(const HypercliqueComplex& c);

bool check_basic_linear_sequence(const HypercliqueComplex& c, FieldSpec field, std::span<const Face> seq);

/// Coboundaries of a basic linear sequence; throws Error when `seq` is not one.
std::vector<ChainVector> cocircuit_space_basis_from_sequence(const HypercliqueComplex& c, FieldSpec field,
                                                             std::span<const Face> seq);

/// Searches simplicial (k-1)-sets in lexicographic order. With
/// backtracking, nullopt means no D-perfect sequence exists; with
/// greedy_lex it only means the first-choice path got stuck.
std::optional<DPerfectCertificate> find_dperfect_sequence(const HypercliqueComplex& c, FieldSpec field,
                                                          Strategy strategy = Strategy::backtracking);

/// Pairs each entry with its star in the residual complex; no checks
/// beyond each entry being a (k-1)-set.
DPerfectCertificate certificate_from_sequence(const HypercliqueComplex& c, std::span<const Face> seq);

/// Re-checks every condition from scratch: length equals rank, each V_j is
/// simplicial in the residual complex, each peel is its star there and a
/// cocircuit, rank drops by one per step, and the peels partition the
/// k-skeleton.
Verdict verify_dperfect(const HypercliqueComplex& c, FieldSpec field, const DPerfectCertificate& cert);

/// Perfect-elimination test on the graph ([n], edges): repeatedly delete a
/// vertex whose neighbourhood is a clique.
bool check_chordal_graph(int n, std::span<const Face> edges);

bool is_dense_hyperplane(const SimplicialMatroid& m, std::span<const Face> h);

/// Depth-first search for a maximal chain of relatively dense flats.
/// nullopt means none exists.
std::optional<SuperdenseCertificate> check_superdense(const SimplicialMatroid& m);

Verdict verify_superdense(const SimplicialMatroid& m, const SuperdenseCertificate& cert);

/// Rank test, valid for k > 2: supersolvable iff there are no circuits.
bool supersolvable_by_rank(const SimplicialMatroid& m);

/// Searches the lattice of flats for a maximal chain of modular flats.
/// Throws GuardExceeded beyond guards.max_modular_ground or guards.max_flats.
bool supersolvable_by_modular_chain(const SimplicialMatroid& m, const Guards& guards = {});

/// Rank test for k > 2, modular-chain search for k = 2 (inconclusive past
/// its guards).
Decision check_supersolvable(const SimplicialMatroid& m, const Guards& guards = {});

}  // namespace simatroid
