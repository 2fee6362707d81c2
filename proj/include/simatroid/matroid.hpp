#pragma once

#include <optional>
#include <unordered_map>

#include "simatroid/chain.hpp"

namespace simatroid {

/// Configuration constants for the exhaustive routines.
struct Guards {
    std::size_t max_brute = 22;      ///< ground-set size for circuit/cocircuit enumeration
    int max_duality_n = 7;           ///< n for the full-duality check
    double max_enumeration = 2e6;    ///< estimated subsets visited by one enumeration
    std::size_t max_modular_ground = 16;  ///< ground-set size for the modular-chain search
    std::size_t max_flats = 512;          ///< flats enumerated by the modular-chain search
    double max_solution_points = 65536;  ///< GF(p) solution points scanned per circuit in the strong-triangulability search
};

/// The simplicial matroid of a hyperclique complex's k-skeleton over a
/// field: the column matroid of the boundary vectors of the generators.
class SimplicialMatroid {
public:
    SimplicialMatroid(HypercliqueComplex complex, FieldSpec field);

    const HypercliqueComplex& complex() const noexcept { return complex_; }
    FieldSpec field() const noexcept { return field_; }
    /// Ground set in lexicographic order (the generators of the complex).
    const FaceSet& ground() const noexcept { return complex_.generators(); }
    std::size_t size() const noexcept { return ground().size(); }
    std::size_t rank() const noexcept { return rank_; }

    std::optional<std::size_t> index_of(Face f) const;
    /// Throws Error when a face is outside the ground set.
    std::vector<std::size_t> indices_of(std::span<const Face> faces) const;
    FaceSet faces_of(std::span<const std::size_t> indices) const;

    /// Boundary columns restricted to the (k-1)-sets that occur in some
    /// generator; same column matroid as the full boundary matrix.
    const ExactMatrix& compact_matrix() const noexcept { return compact_; }
    const FaceSet& compact_rows() const noexcept { return rows_; }

    BoundaryMatrix boundary_matrix() const { return simatroid::boundary_matrix(complex_, field_); }

    std::size_t rank_of_indices(std::span<const std::size_t> indices) const;

private:
    HypercliqueComplex complex_;
    FieldSpec field_;
    FaceSet rows_;
    ExactMatrix compact_;
    std::size_t rank_ = 0;
    std::unordered_map<Face, std::size_t> index_;
};

struct SmallCircuit {
    Face apex;          ///< a (k+1)-face
    FaceSet members;    ///< its k-subsets
    ChainVector vector; ///< boundary of the apex over the ground set
};

std::size_t rank_of(const SimplicialMatroid& m, std::span<const Face> subset);
bool is_independent(const SimplicialMatroid& m, std::span<const Face> subset);

/// Closure of a subset of the ground set.
FaceSet closure(const SimplicialMatroid& m, std::span<const Face> subset);
bool is_flat(const SimplicialMatroid& m, std::span<const Face> subset);
bool is_hyperplane(const SimplicialMatroid& m, std::span<const Face> subset);

/// One small circuit per (k+1)-face, in lexicographic order of apexes.
std::vector<SmallCircuit> small_circuits(const SimplicialMatroid& m);

/// All circuits with at most max_size elements, by size then lexicographic
/// order. Throws GuardExceeded beyond guards.max_brute elements or when
/// the enumeration estimate exceeds guards.max_enumeration.
std::vector<FaceSet> circuits_brute(const SimplicialMatroid& m, std::size_t max_size, const Guards& guards = {},
                                    CircuitRoute route = CircuitRoute::automatic);

/// All cocircuits: minimal nonempty supports of the row space, obtained as
/// circuits of a kernel basis. Same guards as circuits_brute.
std::vector<FaceSet> cocircuits_brute(const SimplicialMatroid& m, const Guards& guards = {});

/// The kernel vector (unique up to scale, normalised to coefficient 1 on its
/// first face) supported on a circuit. Throws Error if `circuit` is not one.
ChainVector circuit_vector(const SimplicialMatroid& m, const FaceSet& circuit);

/// Basis of the circuit space as chains over the ground set.
std::vector<ChainVector> circuit_space_basis(const SimplicialMatroid& m);

/// True iff the chain is supported on the ground set and lies in the kernel
/// of the boundary map.
bool in_circuit_space(const SimplicialMatroid& m, const ChainVector& v);

struct CocircuitBasis {
    FaceSet generators;               ///< the (k-1)-sets whose coboundaries were kept
    std::vector<ChainVector> vectors; ///< their coboundaries, a row-space basis
};

/// Greedy lexicographic choice of coboundaries spanning the row space.
CocircuitBasis cocircuit_space_basis(const SimplicialMatroid& m);

/// Whether the chain lies in the row space of the boundary matrix.
bool in_cocircuit_space(const SimplicialMatroid& m, const ChainVector& v);

/// True iff the complement of `candidate` in the ground set is a hyperplane.
bool is_cocircuit(const SimplicialMatroid& m, std::span<const Face> candidate);

/// Checks that complementation maps the circuits of the full simplicial
/// matroid of (n-k)-sets onto the cocircuits of the full one of k-sets.
/// Requires 2 <= k <= n-2 and n <= guards.max_duality_n.
bool verify_full_duality(int n, int k, FieldSpec field, const Guards& guards = {});

}  // namespace simatroid
