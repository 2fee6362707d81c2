#include "simatroid/face.hpp"

#include <algorithm>
#include <numeric>

#include "simatroid/error.hpp"

namespace simatroid {

Face Face::of(std::span<const int> vertices) {
    std::uint64_t mask = 0;
    for (int v : vertices) {
        if (v < 1 || v > kMaxVertices) throw Error("vertex " + std::to_string(v) + " outside [1, 64]");
        std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if (mask & bit) throw Error("repeated vertex " + std::to_string(v));
        mask |= bit;
    }
    return Face(mask);
}

Face Face::range(int n) {
    if (n < 0 || n > kMaxVertices) throw Error("ground size outside [0, 64]");
    return Face(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::vector<int> Face::vertices() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::string Face::to_string() const {
    std::string out;
    for (int v : vertices()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

void normalize(FaceSet& faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

namespace {

void subsets_rec(const std::vector<int>& verts, std::size_t from, int need, std::uint64_t acc,
                 const std::function<void(Face)>& fn) {
    if (need == 0) {
        fn(Face(acc));
        return;
    }
    for (std::size_t i = from; i + need <= verts.size(); ++i)
        subsets_rec(verts, i + 1, need - 1, acc | (std::uint64_t{1} << (verts[i] - 1)), fn);
}

}  // namespace

void for_each_subset(Face face, int size, const std::function<void(Face)>& fn) {
    if (size < 0 || size > face.size()) return;
    subsets_rec(face.vertices(), 0, size, 0, fn);
}

FaceSet all_subsets(int n, int size) {
    FaceSet out;
    for_each_subset(Face::range(n), size, [&](Face f) { out.push_back(f); });
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) / i without overflowing the intermediate product
        std::uint64_t a = static_cast<std::uint64_t>(n - k + i), b = static_cast<std::uint64_t>(i);
        std::uint64_t g = std::gcd(r, b);
        r /= g;
        b /= g;
        a /= b;  // b divides a once r's share is removed
        r *= a;
    }
    return r;
}

Face vertex_union(std::span<const Face> faces) {
    Face u;
    for (Face f : faces) u = u | f;
    return u;
}

std::string to_string(std::span<const Face> faces) {
    std::string out = "{";
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (i) out += ", ";
        out += faces[i].to_string();
    }
    return out + "}";
}

}  // namespace simatroid
