#pragma once

#include <memory>
#include <mutex>
#include <unordered_set>

#include "simatroid/face.hpp"

namespace simatroid {

/// Incidence number [small : big]: (-1)^j when `small` is `big` with its
/// j-th vertex (1-based, increasing order) removed, and 0 otherwise.
int incidence(Face small, Face big);

/// The k-hyperclique complex on [n] generated by a family of k-sets: every
/// set of size < k is a face, and a larger set is a face exactly when all
/// of its k-subsets belong to the family.
///
/// Immutable. Higher skeletons and facets are computed on first request
/// behind a once-only cache shared between copies.
class HypercliqueComplex {
public:
    /// Requires 2 <= k <= n <= 64 and every face to have k vertices in [n].
    /// Duplicates are merged.
    HypercliqueComplex(int n, int k, FaceSet generators);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    /// The k-skeleton, lexicographically sorted.
    const FaceSet& generators() const noexcept { return s_k_; }
    bool has_generator(Face f) const { return lookup_.contains(f.mask()); }

    bool is_face(Face f) const;

    /// All d-faces in lexicographic order, 1 <= d <= n.
    FaceSet skeleton(int d) const;
    /// Memoized (k+1)-skeleton.
    const FaceSet& upper_skeleton() const;
    /// Inclusion-maximal faces, memoized, lexicographically sorted.
    const FaceSet& facets() const;

    /// Generators containing v (the support of the coboundary of v).
    FaceSet star(Face v) const;

    /// Whether the face obtained by adding `v` to the face `f` is a face.
    bool extends(Face f, int v) const;

    friend bool operator==(const HypercliqueComplex& a, const HypercliqueComplex& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.s_k_ == b.s_k_;
    }

private:
    struct Cache {
        std::once_flag upper_once, facets_once;
        FaceSet upper, facets;
    };

    int n_;
    int k_;
    FaceSet s_k_;
    std::unordered_set<std::uint64_t> lookup_;
    std::shared_ptr<Cache> cache_;
};

HypercliqueComplex build_complex(int n, int k, FaceSet generators);

/// Removes every generator containing the (k-1)-set v and regenerates.
HypercliqueComplex star_delete(const HypercliqueComplex& c, Face v);

/// Same as star_delete over several (k-1)-sets at once.
HypercliqueComplex star_delete(const HypercliqueComplex& c, std::span<const Face> vs);

/// Facets by exhaustive subset scan; reference for small n only.
FaceSet facets_brute(const HypercliqueComplex& c);

}  // namespace simatroid
