#include "simatroid/complex.hpp"

#include <algorithm>

#include "simatroid/error.hpp"

namespace simatroid {

int incidence(Face small, Face big) {
    if (small.size() + 1 != big.size() || !big.contains(small)) return 0;
    std::uint64_t removed = big.mask() & ~small.mask();
    // j = 1 + number of vertices of big below the removed one
    int j = 1 + std::popcount(big.mask() & (removed - 1));
    return j % 2 == 0 ? 1 : -1;
}

HypercliqueComplex::HypercliqueComplex(int n, int k, FaceSet generators)
    : n_(n), k_(k), s_k_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (n < 2 || n > kMaxVertices) throw Error("n must lie in [2, 64], got " + std::to_string(n));
    if (k < 2 || k > n) throw Error("k must satisfy 2 <= k <= n, got k=" + std::to_string(k));
    Face ground = Face::range(n);
    for (Face f : s_k_) {
        if (f.size() != k)
            throw Error("face {" + f.to_string() + "} has " + std::to_string(f.size()) + " vertices, expected " +
                        std::to_string(k));
        if (!ground.contains(f)) throw Error("face {" + f.to_string() + "} has a vertex outside [" + std::to_string(n) + "]");
    }
    normalize(s_k_);
    lookup_.reserve(s_k_.size() * 2);
    for (Face f : s_k_) lookup_.insert(f.mask());
}

bool HypercliqueComplex::is_face(Face f) const {
    if (!Face::range(n_).contains(f)) return false;
    if (f.size() < k_) return true;
    if (f.size() == k_) return has_generator(f);
    bool ok = true;
    for_each_subset(f, k_, [&](Face s) { ok = ok && has_generator(s); });
    return ok;
}

bool HypercliqueComplex::extends(Face f, int v) const {
    if (f.contains(v)) return false;
    if (f.size() + 1 < k_) return true;
    // only the k-subsets through v are new
    bool ok = true;
    for_each_subset(f, k_ - 1, [&](Face s) { ok = ok && has_generator(s.with(v)); });
    return ok;
}

FaceSet HypercliqueComplex::skeleton(int d) const {
    if (d < 1 || d > n_) return {};
    if (d < k_) return all_subsets(n_, d);
    if (d == k_) return s_k_;
    if (d == k_ + 1) return upper_skeleton();
    // A (d)-set with d > k is a face iff all its (d-1)-subsets are.
    FaceSet prev = upper_skeleton();
    for (int size = k_ + 2; size <= d && !prev.empty(); ++size) {
        std::unordered_set<std::uint64_t> prev_lookup;
        for (Face f : prev) prev_lookup.insert(f.mask());
        FaceSet next;
        for (Face f : prev) {
            for (int v = f.max_vertex() + 1; v <= n_; ++v) {
                Face g = f.with(v);
                bool ok = true;
                for (int u : f.vertices()) ok = ok && prev_lookup.contains(g.without(u).mask());
                if (ok) next.push_back(g);
            }
        }
        normalize(next);
        prev = std::move(next);
    }
    return prev;
}

const FaceSet& HypercliqueComplex::upper_skeleton() const {
    std::call_once(cache_->upper_once, [&] {
        FaceSet out;
        if (k_ < n_) {
            for (Face f : s_k_)
                for (int v = f.max_vertex() + 1; v <= n_; ++v)
                    if (extends(f, v)) out.push_back(f.with(v));
        }
        normalize(out);
        cache_->upper = std::move(out);
    });
    return cache_->upper;
}

namespace {

// Maximal-set enumeration for a hereditary family (Bron-Kerbosch without
// pivoting): `r` is a face, `cand` and `excl` are the vertices extending it.
void maximal_faces(const HypercliqueComplex& c, Face r, std::vector<int> cand, std::vector<int> excl, FaceSet& out) {
    if (cand.empty()) {
        if (excl.empty()) out.push_back(r);
        return;
    }
    while (!cand.empty()) {
        int v = cand.front();
        Face next = r.with(v);
        std::vector<int> c2, x2;
        for (std::size_t i = 1; i < cand.size(); ++i)
            if (c.extends(next, cand[i])) c2.push_back(cand[i]);
        for (int w : excl)
            if (c.extends(next, w)) x2.push_back(w);
        maximal_faces(c, next, std::move(c2), std::move(x2), out);
        cand.erase(cand.begin());
        excl.push_back(v);
    }
}

}  // namespace

const FaceSet& HypercliqueComplex::facets() const {
    std::call_once(cache_->facets_once, [&] {
        std::vector<int> all;
        for (int v = 1; v <= n_; ++v) all.push_back(v);
        FaceSet out;
        maximal_faces(*this, Face{}, all, {}, out);
        normalize(out);
        cache_->facets = std::move(out);
    });
    return cache_->facets;
}

FaceSet HypercliqueComplex::star(Face v) const {
    FaceSet out;
    for (Face f : s_k_)
        if (f.contains(v)) out.push_back(f);
    return out;
}

HypercliqueComplex build_complex(int n, int k, FaceSet generators) {
    return HypercliqueComplex(n, k, std::move(generators));
}

HypercliqueComplex star_delete(const HypercliqueComplex& c, Face v) {
    return star_delete(c, std::span<const Face>(&v, 1));
}

HypercliqueComplex star_delete(const HypercliqueComplex& c, std::span<const Face> vs) {
    for (Face v : vs)
        if (v.size() != c.k() - 1) throw Error("star_delete expects a (k-1)-set, got {" + v.to_string() + "}");
    FaceSet kept;
    for (Face f : c.generators())
        if (std::none_of(vs.begin(), vs.end(), [&](Face v) { return f.contains(v); })) kept.push_back(f);
    return HypercliqueComplex(c.n(), c.k(), std::move(kept));
}

FaceSet facets_brute(const HypercliqueComplex& c) {
    if (c.n() > 16) throw GuardExceeded("facets_brute limited to n <= 16");
    std::vector<std::uint64_t> faces;
    std::uint64_t limit = std::uint64_t{1} << c.n();
    for (std::uint64_t m = 1; m < limit; ++m)
        if (c.is_face(Face(m))) faces.push_back(m);
    std::unordered_set<std::uint64_t> is_face(faces.begin(), faces.end());
    FaceSet out;
    for (auto m : faces) {
        bool maximal = true;
        for (int v = 1; v <= c.n() && maximal; ++v) {
            std::uint64_t bit = std::uint64_t{1} << (v - 1);
            if (!(m & bit) && is_face.contains(m | bit)) maximal = false;
        }
        if (maximal) out.push_back(Face(m));
    }
    normalize(out);
    return out;
}

}  // namespace simatroid
