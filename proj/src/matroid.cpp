#include "simatroid/matroid.hpp"

#include <algorithm>
#include <set>

#include "simatroid/error.hpp"

namespace simatroid {

SimplicialMatroid::SimplicialMatroid(HypercliqueComplex complex, FieldSpec field)
    : complex_(std::move(complex)), field_(field) {
    const FaceSet& g = complex_.generators();
    for (Face f : g)
        for (int v : f.vertices()) rows_.push_back(f.without(v));
    normalize(rows_);
    std::unordered_map<Face, std::size_t> row_of;
    for (std::size_t i = 0; i < rows_.size(); ++i) row_of.emplace(rows_[i], i);
    compact_ = ExactMatrix(field_, rows_.size(), g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        index_.emplace(g[j], j);
        for (int v : g[j].vertices()) {
            Face sub = g[j].without(v);
            compact_.set(row_of.at(sub), j, static_cast<long>(incidence(sub, g[j])));
        }
    }
    rank_ = simatroid::rank(compact_);
}

std::optional<std::size_t> SimplicialMatroid::index_of(Face f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> SimplicialMatroid::indices_of(std::span<const Face> faces) const {
    std::vector<std::size_t> out;
    out.reserve(faces.size());
    for (Face f : faces) {
        auto i = index_of(f);
        if (!i) throw Error("{" + f.to_string() + "} is not in the ground set");
        out.push_back(*i);
    }
    return out;
}

FaceSet SimplicialMatroid::faces_of(std::span<const std::size_t> indices) const {
    FaceSet out;
    for (auto i : indices) out.push_back(ground().at(i));
    return out;
}

std::size_t SimplicialMatroid::rank_of_indices(std::span<const std::size_t> indices) const {
    if (indices.empty()) return 0;
    return simatroid::rank(compact_.select_columns(indices));
}

std::size_t rank_of(const SimplicialMatroid& m, std::span<const Face> subset) {
    auto idx = m.indices_of(subset);
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return m.rank_of_indices(idx);
}

bool is_independent(const SimplicialMatroid& m, std::span<const Face> subset) {
    FaceSet s(subset.begin(), subset.end());
    normalize(s);
    return rank_of(m, s) == s.size();
}

namespace {

std::vector<bool> members(const SimplicialMatroid& m, std::span<const std::size_t> idx) {
    std::vector<bool> in(m.size(), false);
    for (auto i : idx) in[i] = true;
    return in;
}

}  // namespace

FaceSet closure(const SimplicialMatroid& m, std::span<const Face> subset) {
    auto idx = m.indices_of(subset);
    auto spanned = span_membership(m.compact_matrix(), idx);
    FaceSet out;
    for (std::size_t e = 0; e < m.size(); ++e)
        if (spanned[e]) out.push_back(m.ground()[e]);
    return out;
}

bool is_flat(const SimplicialMatroid& m, std::span<const Face> subset) {
    auto idx = m.indices_of(subset);
    auto in = members(m, idx);
    auto spanned = span_membership(m.compact_matrix(), idx);
    for (std::size_t e = 0; e < m.size(); ++e)
        if (spanned[e] && !in[e]) return false;
    return true;
}

bool is_hyperplane(const SimplicialMatroid& m, std::span<const Face> subset) {
    if (m.rank() == 0) return false;
    auto idx = m.indices_of(subset);
    auto in = members(m, idx);
    std::size_t r = 0;
    auto spanned = span_membership(m.compact_matrix(), idx, &r);
    if (r + 1 != m.rank()) return false;
    for (std::size_t e = 0; e < m.size(); ++e)
        if (spanned[e] && !in[e]) return false;
    return true;
}

std::vector<SmallCircuit> small_circuits(const SimplicialMatroid& m) {
    std::vector<SmallCircuit> out;
    const auto& c = m.complex();
    for (Face apex : c.upper_skeleton()) {
        SmallCircuit sc{apex, {}, boundary(c, apex, m.field())};
        sc.members = sc.vector.support();
        out.push_back(std::move(sc));
    }
    return out;
}

namespace {

void require_brute(const SimplicialMatroid& m, const Guards& guards) {
    if (m.size() > guards.max_brute)
        throw GuardExceeded("ground set has " + std::to_string(m.size()) + " elements; brute-force limit is " +
                            std::to_string(guards.max_brute));
}

}  // namespace

std::vector<FaceSet> circuits_brute(const SimplicialMatroid& m, std::size_t max_size, const Guards& guards,
                                    CircuitRoute route) {
    require_brute(m, guards);
    std::vector<FaceSet> out;
    for (const auto& idx : column_circuits(m.compact_matrix(), max_size, route, guards.max_enumeration))
        out.push_back(m.faces_of(idx));
    return out;
}

std::vector<FaceSet> cocircuits_brute(const SimplicialMatroid& m, const Guards& guards) {
    require_brute(m, guards);
    auto kernel = nullspace_basis(m.compact_matrix());
    ExactMatrix k = ExactMatrix::from_vectors(m.field(), m.size(), kernel);
    std::vector<FaceSet> out;
    if (kernel.empty()) {
        // Every element is a coloop; the cocircuits are the singletons.
        for (Face f : m.ground()) out.push_back({f});
        return out;
    }
    for (const auto& idx : column_circuits(k, m.size(), CircuitRoute::automatic, guards.max_enumeration))
        out.push_back(m.faces_of(idx));
    return out;
}

ChainVector circuit_vector(const SimplicialMatroid& m, const FaceSet& circuit) {
    auto idx = m.indices_of(circuit);
    auto kernel = nullspace_basis(m.compact_matrix().select_columns(idx));
    if (kernel.size() != 1) throw Error("not a circuit: kernel dimension " + std::to_string(kernel.size()));
    const auto& x = kernel.front();
    if (std::any_of(x.begin(), x.end(), [](const ExactScalar& s) { return s.is_zero(); }))
        throw Error("not a circuit: dependency does not use every element");
    ChainVector v(m.field());
    auto scale = x.front().inverse();
    for (std::size_t i = 0; i < idx.size(); ++i) v.set(circuit[i], x[i] * scale);
    return v;
}

std::vector<ChainVector> circuit_space_basis(const SimplicialMatroid& m) {
    std::vector<ChainVector> out;
    for (const auto& x : nullspace_basis(m.compact_matrix()))
        out.push_back(ChainVector::from_dense(m.field(), m.ground(), x));
    return out;
}

bool in_circuit_space(const SimplicialMatroid& m, const ChainVector& v) {
    if (v.field() != m.field()) throw FieldMismatch("chain and matroid over different fields");
    for (Face f : v.support())
        if (!m.index_of(f)) return false;
    auto image = multiply(m.compact_matrix(), v.to_dense(m.ground()));
    return std::all_of(image.begin(), image.end(), [](const ExactScalar& s) { return s.is_zero(); });
}

CocircuitBasis cocircuit_space_basis(const SimplicialMatroid& m) {
    CocircuitBasis out;
    // Pivot columns of the transpose pick the lexicographically first
    // maximal independent set of rows.
    auto t = m.compact_matrix().transpose();
    auto pivots = t.visit([](const auto& ops, auto dense) { return detail::rref(ops, dense); });
    for (auto p : pivots) {
        Face v = m.compact_rows()[p];
        out.generators.push_back(v);
        out.vectors.push_back(coboundary(m.complex(), v, m.field()));
    }
    return out;
}

bool in_cocircuit_space(const SimplicialMatroid& m, const ChainVector& v) {
    if (v.field() != m.field()) throw FieldMismatch("chain and matroid over different fields");
    for (Face f : v.support())
        if (!m.index_of(f)) return false;
    return in_row_space(m.compact_matrix(), v.to_dense(m.ground()));
}

bool is_cocircuit(const SimplicialMatroid& m, std::span<const Face> candidate) {
    if (candidate.empty()) return false;
    auto idx = m.indices_of(candidate);
    auto in = members(m, idx);
    std::vector<std::size_t> rest;
    for (std::size_t e = 0; e < m.size(); ++e)
        if (!in[e]) rest.push_back(e);
    std::size_t r = 0;
    auto spanned = span_membership(m.compact_matrix(), rest, &r);
    if (r + 1 != m.rank()) return false;
    return std::none_of(idx.begin(), idx.end(), [&](std::size_t e) { return spanned[e]; });
}

bool verify_full_duality(int n, int k, FieldSpec field, const Guards& guards) {
    if (k < 2 || n - k < 2)
        throw Error("full duality check needs 2 <= k <= n-2 (both sides must be simplicial matroids with k >= 2)");
    if (n > guards.max_duality_n)
        throw GuardExceeded("full duality check limited to n <= " + std::to_string(guards.max_duality_n));
    Guards local = guards;
    local.max_brute = std::max<std::size_t>(binomial(n, k), binomial(n, n - k));
    SimplicialMatroid primal(HypercliqueComplex(n, k, all_subsets(n, k)), field);
    SimplicialMatroid dual(HypercliqueComplex(n, n - k, all_subsets(n, n - k)), field);
    Face all = Face::range(n);
    std::set<FaceSet> mapped;
    for (const auto& circuit : circuits_brute(dual, dual.size(), local)) {
        FaceSet image;
        for (Face x : circuit) image.push_back(all.minus(x));
        normalize(image);
        mapped.insert(std::move(image));
    }
    auto cocircuits = cocircuits_brute(primal, local);
    std::set<FaceSet> target(cocircuits.begin(), cocircuits.end());
    return mapped == target;
}

}  // namespace simatroid
