#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace simatroid {

inline constexpr int kMaxVertices = 64;

/// A finite subset of [64], vertex v stored as bit v-1. Faces compare in
/// lexicographic order of their increasing vertex sequences.
class Face {
public:
    constexpr Face() = default;
    explicit constexpr Face(std::uint64_t mask) : mask_(mask) {}

    /// Throws Error on a repeated vertex or one outside [1, 64].
    static Face of(std::span<const int> vertices);
    static Face of(std::initializer_list<int> vertices) {
        return of(std::span<const int>(vertices.begin(), vertices.size()));
    }
    /// {1, ..., n}
    static Face range(int n);

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool contains(int v) const noexcept { return (mask_ >> (v - 1)) & 1U; }
    /// Non-strict containment.
    constexpr bool contains(Face other) const noexcept { return (other.mask_ & ~mask_) == 0; }
    constexpr int max_vertex() const noexcept { return mask_ ? 64 - std::countl_zero(mask_) : 0; }

    constexpr Face with(int v) const noexcept { return Face(mask_ | (std::uint64_t{1} << (v - 1))); }
    constexpr Face without(int v) const noexcept { return Face(mask_ & ~(std::uint64_t{1} << (v - 1))); }
    constexpr Face operator|(Face o) const noexcept { return Face(mask_ | o.mask_); }
    constexpr Face operator&(Face o) const noexcept { return Face(mask_ & o.mask_); }
    constexpr Face minus(Face o) const noexcept { return Face(mask_ & ~o.mask_); }

    std::vector<int> vertices() const;

    /// Space-separated vertices, the instance-file spelling.
    std::string to_string() const;

    friend constexpr bool operator==(Face, Face) = default;
    friend constexpr std::strong_ordering operator<=>(Face a, Face b) noexcept {
        if (a.mask_ == b.mask_) return std::strong_ordering::equal;
        std::uint64_t diff = a.mask_ ^ b.mask_;
        std::uint64_t low = diff & (~diff + 1);
        // Below `low` the sequences agree. The side holding `low` continues
        // with it; the other side continues with something larger or ends.
        bool a_has = a.mask_ & low;
        std::uint64_t other = a_has ? b.mask_ : a.mask_;
        bool other_continues = (other & ~(low - 1)) != 0;
        bool a_less = a_has ? other_continues : !other_continues;
        return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    std::uint64_t mask_ = 0;
};

using FaceSet = std::vector<Face>;  ///< sorted, duplicate-free

/// Sorts and removes duplicates.
void normalize(FaceSet& faces);

/// Calls fn(subset) for every `size`-subset of `face`, in lexicographic order.
void for_each_subset(Face face, int size, const std::function<void(Face)>& fn);

/// All `size`-subsets of [n] in lexicographic order.
FaceSet all_subsets(int n, int size);

std::uint64_t binomial(int n, int k);

/// Union of the vertex sets of the given faces.
Face vertex_union(std::span<const Face> faces);

/// "{1 2 4, 1 2 5}"-style rendering for diagnostics.
std::string to_string(std::span<const Face> faces);

}  // namespace simatroid

template <>
struct std::hash<simatroid::Face> {
    std::size_t operator()(simatroid::Face f) const noexcept { return std::hash<std::uint64_t>{}(f.mask()); }
};
