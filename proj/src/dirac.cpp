#include "simatroid/dirac.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "simatroid/error.hpp"

namespace simatroid {

std::vector<Face> DPerfectCertificate::sequence() const {
    std::vector<Face> out;
    for (const auto& s : steps) out.push_back(s.v);
    return out;
}

std::vector<FaceSet> SuperdenseCertificate::chain(const FaceSet& ground) const {
    std::vector<FaceSet> out{ground};
    FaceSet x = ground;
    for (const auto& s : steps) {
        FaceSet next;
        std::set_difference(x.begin(), x.end(), s.peeled.begin(), s.peeled.end(), std::back_inserter(next));
        x = std::move(next);
        out.push_back(x);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

void require_ridge(const HypercliqueComplex& c, Face v) {
    if (v.size() != c.k() - 1)
        throw Error("expected a (k-1)-set, got {" + v.to_string() + "} with k=" + std::to_string(c.k()));
}

/// (k-1)-sets lying in at least one generator, lexicographic.
FaceSet ridges(const HypercliqueComplex& c) {
    FaceSet out;
    for (Face f : c.generators())
        for (int v : f.vertices()) out.push_back(f.without(v));
    normalize(out);
    return out;
}

FaceSet set_minus(const FaceSet& a, const FaceSet& b) {
    FaceSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Bitset over the original ground indices, used as a memo key.
using Key = std::vector<std::uint64_t>;

Key key_of(const FaceSet& residual, const std::unordered_map<Face, std::size_t>& index, std::size_t m) {
    Key k((m + 63) / 64, 0);
    for (Face f : residual) {
        auto i = index.at(f);
        k[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return k;
}

}  // namespace

bool is_simplicial_face(const HypercliqueComplex& c, Face v) {
    require_ridge(c, v);
    auto star = c.star(v);
    if (star.empty()) return false;  // v is itself a facet
    return c.is_face(vertex_union(star));
}

bool is_simplicial_face_by_facets(const HypercliqueComplex& c, Face v) {
    require_ridge(c, v);
    int count = 0;
    for (Face f : c.facets())
        if (f != v && f.contains(v)) ++count;
    return count == 1;
}

FaceSet simplicial_faces(const HypercliqueComplex& c) {
    FaceSet out;
    for (Face v : ridges(c))
        if (is_simplicial_face(c, v)) out.push_back(v);
    return out;
}

bool check_basic_linear_sequence(const HypercliqueComplex& c, FieldSpec field, std::span<const Face> seq) {
    for (Face v : seq) require_ridge(c, v);
    SimplicialMatroid start(c, field);
    if (seq.size() != start.rank()) return false;
    HypercliqueComplex residual = c;
    for (Face v : seq) {
        SimplicialMatroid m(residual, field);
        auto peel = residual.star(v);
        if (!is_cocircuit(m, peel)) return false;
        residual = star_delete(residual, v);
    }
    return true;
}

std::vector<ChainVector> cocircuit_space_basis_from_sequence(const HypercliqueComplex& c, FieldSpec field,
                                                             std::span<const Face> seq) {
    if (!check_basic_linear_sequence(c, field, seq)) throw Error("sequence is not a basic linear sequence");
    SimplicialMatroid m(c, field);
    std::vector<ChainVector> out;
    std::vector<Vector> dense;
    for (Face v : seq) {
        out.push_back(coboundary(c, v, field));
        if (!in_cocircuit_space(m, out.back())) throw Error("coboundary outside the cocircuit space");
        dense.push_back(out.back().to_dense(m.ground()));
    }
    if (rank(ExactMatrix::from_vectors(field, m.size(), dense)) != out.size())
        throw Error("coboundaries of the sequence are linearly dependent");
    return out;
}

namespace {

class PeelSearch {
public:
    PeelSearch(const HypercliqueComplex& c, bool backtrack) : c_(c), backtrack_(backtrack) {
        for (std::size_t i = 0; i < c.generators().size(); ++i) index_.emplace(c.generators()[i], i);
    }

    std::optional<std::vector<PeelStep>> run() {
        std::vector<PeelStep> path;
        if (search(c_.generators(), path)) return path;
        return std::nullopt;
    }

private:
    bool search(const FaceSet& residual, std::vector<PeelStep>& path) {
        if (residual.empty()) return true;
        Key key = key_of(residual, index_, c_.generators().size());
        if (dead_.contains(key)) return false;
        HypercliqueComplex here(c_.n(), c_.k(), residual);
        for (Face v : ridges(here)) {
            if (!is_simplicial_face(here, v)) continue;
            auto peel = here.star(v);
            path.push_back({v, peel});
            if (search(set_minus(residual, peel), path)) return true;
            path.pop_back();
            if (!backtrack_) break;
        }
        dead_.insert(std::move(key));
        return false;
    }

    const HypercliqueComplex& c_;
    bool backtrack_;
    std::unordered_map<Face, std::size_t> index_;
    std::set<Key> dead_;
};

}  // namespace

std::optional<DPerfectCertificate> find_dperfect_sequence(const HypercliqueComplex& c, FieldSpec field,
                                                          Strategy strategy) {
    PeelSearch search(c, strategy == Strategy::backtracking);
    auto steps = search.run();
    if (!steps) return std::nullopt;
    DPerfectCertificate cert{std::move(*steps)};
    if (auto v = verify_dperfect(c, field, cert); !v)
        throw Error("internal: simplicial peeling produced an invalid certificate: " + v.reason);
    return cert;
}

DPerfectCertificate certificate_from_sequence(const HypercliqueComplex& c, std::span<const Face> seq) {
    DPerfectCertificate cert;
    HypercliqueComplex residual = c;
    for (Face v : seq) {
        require_ridge(c, v);
        cert.steps.push_back({v, residual.star(v)});
        residual = star_delete(residual, v);
    }
    return cert;
}

Verdict verify_dperfect(const HypercliqueComplex& c, FieldSpec field, const DPerfectCertificate& cert) {
    SimplicialMatroid start(c, field);
    if (cert.steps.size() != start.rank())
        return Verdict::fail("sequence has " + std::to_string(cert.steps.size()) + " entries but the rank is " +
                             std::to_string(start.rank()));
    HypercliqueComplex residual = c;
    std::size_t expected_rank = start.rank();
    for (std::size_t j = 0; j < cert.steps.size(); ++j) {
        const auto& step = cert.steps[j];
        std::string at = "step " + std::to_string(j + 1) + " ({" + step.v.to_string() + "}): ";
        if (step.v.size() != c.k() - 1) return Verdict::fail(at + "not a (k-1)-set");
        if (!is_simplicial_face_by_facets(residual, step.v)) return Verdict::fail(at + "not simplicial");
        auto star = residual.star(step.v);
        if (star != step.peeled) return Verdict::fail(at + "peeled set differs from the star");
        SimplicialMatroid m(residual, field);
        if (m.rank() != expected_rank) return Verdict::fail(at + "rank did not drop by one");
        if (!is_cocircuit(m, star)) return Verdict::fail(at + "peeled set is not a cocircuit");
        residual = star_delete(residual, step.v);
        --expected_rank;
    }
    if (!residual.generators().empty()) return Verdict::fail("peels do not exhaust the k-skeleton");
    return Verdict::pass();
}

bool check_chordal_graph(int n, std::span<const Face> edges) {
    std::vector<std::uint64_t> adj(n + 1, 0);
    for (Face e : edges) {
        auto vs = e.vertices();
        if (vs.size() != 2 || vs[1] > n) throw Error("check_chordal_graph: invalid edge {" + e.to_string() + "}");
        adj[vs[0]] |= std::uint64_t{1} << vs[1];
        adj[vs[1]] |= std::uint64_t{1} << vs[0];
    }
    std::uint64_t alive = 0;
    for (int v = 1; v <= n; ++v) alive |= std::uint64_t{1} << v;
    auto is_clique = [&](std::uint64_t set) {
        for (std::uint64_t s = set; s; s &= s - 1) {
            int u = std::countr_zero(s);
            if ((set & ~(std::uint64_t{1} << u) & ~adj[u]) != 0) return false;
        }
        return true;
    };
    while (alive) {
        bool removed = false;
        for (std::uint64_t s = alive; s; s &= s - 1) {
            int v = std::countr_zero(s);
            if (is_clique(adj[v] & alive)) {
                alive &= ~(std::uint64_t{1} << v);
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

bool is_dense_hyperplane(const SimplicialMatroid& m, std::span<const Face> h) {
    FaceSet hs(h.begin(), h.end());
    normalize(hs);
    if (!is_hyperplane(m, hs)) return false;
    FaceSet complement = set_minus(m.ground(), hs);
    if (complement.empty()) return false;
    bool found = false;
    for_each_subset(complement.front(), m.complex().k() - 1, [&](Face v) {
        if (found) return;
        if (m.complex().star(v) == complement && is_simplicial_face_by_facets(m.complex(), v)) found = true;
    });
    return found;
}

namespace {

class DenseChainSearch {
public:
    DenseChainSearch(const SimplicialMatroid& m) : m_(m) {
        for (std::size_t i = 0; i < m.size(); ++i) index_.emplace(m.ground()[i], i);
    }

    std::optional<std::vector<PeelStep>> run() {
        std::vector<PeelStep> path;
        if (search(m_.ground(), path)) return path;
        return std::nullopt;
    }

private:
    bool search(const FaceSet& x, std::vector<PeelStep>& path) {
        if (x.empty()) return true;
        Key key = key_of(x, index_, m_.size());
        if (dead_.contains(key)) return false;
        // The flat X is regenerated as a hyperclique complex for the
        // simpliciality test.
        SimplicialMatroid here(HypercliqueComplex(m_.complex().n(), m_.complex().k(), x), m_.field());
        for (Face v : ridges(here.complex())) {
            if (!is_simplicial_face_by_facets(here.complex(), v)) continue;
            auto star = here.complex().star(v);
            auto h = set_minus(x, star);
            if (!is_hyperplane(here, h)) continue;
            path.push_back({v, star});
            if (search(h, path)) return true;
            path.pop_back();
        }
        dead_.insert(std::move(key));
        return false;
    }

    const SimplicialMatroid& m_;
    std::unordered_map<Face, std::size_t> index_;
    std::set<Key> dead_;
};

}  // namespace

std::optional<SuperdenseCertificate> check_superdense(const SimplicialMatroid& m) {
    auto steps = DenseChainSearch(m).run();
    if (!steps) return std::nullopt;
    SuperdenseCertificate cert{std::move(*steps)};
    if (auto v = verify_superdense(m, cert); !v) throw Error("internal: invalid superdense chain: " + v.reason);
    return cert;
}

Verdict verify_superdense(const SimplicialMatroid& m, const SuperdenseCertificate& cert) {
    if (cert.steps.size() != m.rank())
        return Verdict::fail("chain has " + std::to_string(cert.steps.size()) + " steps but the rank is " +
                             std::to_string(m.rank()));
    FaceSet x = m.ground();
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& step = cert.steps[i];
        std::string at = "step " + std::to_string(i + 1) + " ({" + step.v.to_string() + "}): ";
        if (step.v.size() != m.complex().k() - 1) return Verdict::fail(at + "witness is not a (k-1)-set");
        if (!std::includes(x.begin(), x.end(), step.peeled.begin(), step.peeled.end()))
            return Verdict::fail(at + "peeled set is not inside the current flat");
        SimplicialMatroid here(HypercliqueComplex(m.complex().n(), m.complex().k(), x), m.field());
        if (here.rank() + i != m.rank()) return Verdict::fail(at + "rank is not one below the previous flat");
        if (here.complex().star(step.v) != step.peeled) return Verdict::fail(at + "peeled set differs from the star");
        auto h = set_minus(x, step.peeled);
        if (!is_dense_hyperplane(here, h)) return Verdict::fail(at + "not a dense hyperplane");
        x = std::move(h);
    }
    if (!x.empty()) return Verdict::fail("chain does not end at the empty flat");
    return Verdict::pass();
}

bool supersolvable_by_rank(const SimplicialMatroid& m) {
    if (m.complex().k() <= 2) throw Error("the rank test for supersolvability needs k > 2");
    return m.rank() == m.size();
}

bool supersolvable_by_modular_chain(const SimplicialMatroid& m, const Guards& guards) {
    if (m.size() > guards.max_modular_ground)
        throw GuardExceeded("modular-chain search limited to " + std::to_string(guards.max_modular_ground) +
                            " elements");
    if (m.size() > 63) throw GuardExceeded("modular-chain search needs fewer than 64 elements");
    using Mask = std::uint64_t;
    auto indices = [&](Mask s) {
        std::vector<std::size_t> out;
        for (; s; s &= s - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        return out;
    };
    std::unordered_map<Mask, std::size_t> rank_cache;
    auto rank_of_mask = [&](Mask s) {
        auto it = rank_cache.find(s);
        if (it != rank_cache.end()) return it->second;
        auto r = m.rank_of_indices(indices(s));
        rank_cache.emplace(s, r);
        return r;
    };
    auto close = [&](Mask s) {
        auto idx = indices(s);
        auto spanned = span_membership(m.compact_matrix(), idx);
        Mask out = 0;
        for (std::size_t e = 0; e < m.size(); ++e)
            if (spanned[e]) out |= Mask{1} << e;
        return out;
    };

    // Flats level by level: covers of F are the closures of F + e.
    std::vector<std::vector<Mask>> levels{{close(0)}};
    std::size_t total = 1;
    for (std::size_t r = 0; r < m.rank(); ++r) {
        std::set<Mask> next;
        for (Mask f : levels[r])
            for (std::size_t e = 0; e < m.size(); ++e)
                if (!(f & (Mask{1} << e))) next.insert(close(f | (Mask{1} << e)));
        total += next.size();
        if (total > guards.max_flats)
            throw GuardExceeded("modular-chain search limited to " + std::to_string(guards.max_flats) + " flats");
        levels.emplace_back(next.begin(), next.end());
    }
    std::vector<std::pair<Mask, std::size_t>> flats;
    for (std::size_t r = 0; r < levels.size(); ++r)
        for (Mask f : levels[r]) flats.emplace_back(f, r);

    auto modular = [&](Mask x, std::size_t rx) {
        for (auto [y, ry] : flats)
            if (rx + ry != rank_of_mask(x | y) + rank_of_mask(x & y)) return false;
        return true;
    };

    std::set<Mask> reachable{levels[0].front()};
    for (std::size_t r = 1; r < levels.size(); ++r) {
        std::set<Mask> next;
        for (Mask f : levels[r]) {
            bool below = std::any_of(reachable.begin(), reachable.end(), [&](Mask g) { return (g & ~f) == 0; });
            if (below && modular(f, r)) next.insert(f);
        }
        reachable = std::move(next);
        if (reachable.empty()) return false;
    }
    return true;
}

Decision check_supersolvable(const SimplicialMatroid& m, const Guards& guards) {
    if (m.complex().k() > 2) return decided(supersolvable_by_rank(m));
    try {
        return decided(supersolvable_by_modular_chain(m, guards));
    } catch (const GuardExceeded&) {
        return Decision::inconclusive;
    }
}

}  // namespace simatroid
