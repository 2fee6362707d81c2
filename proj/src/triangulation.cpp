#include "simatroid/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "simatroid/error.hpp"

namespace simatroid {

ExactMatrix small_circuit_matrix(const SimplicialMatroid& m) {
    const auto& apexes = m.complex().upper_skeleton();
    ExactMatrix out(m.field(), m.size(), apexes.size());
    for (std::size_t j = 0; j < apexes.size(); ++j) {
        auto v = boundary(m.complex(), apexes[j], m.field());
        for (const auto& [face, coef] : v.coefficients()) out.set(*m.index_of(face), j, coef);
    }
    return out;
}

bool is_triangulable(const SimplicialMatroid& m) {
    std::size_t nullity = m.size() - m.rank();
    return rank(small_circuit_matrix(m)) == nullity;
}

TriangulationCertificate strong_decompose(const SimplicialMatroid& m, const ChainVector& target,
                                          const DPerfectCertificate& cert) {
    const auto& c = m.complex();
    if (target.field() != m.field()) throw FieldMismatch("target vector and matroid over different fields");
    if (target.is_zero()) throw Error("strong_decompose needs a nonzero vector");
    if (!in_circuit_space(m, target)) throw Error("target is not in the circuit space");
    // The loop below only needs each peel to be the star of V_j in the
    // residual complex; its own invariants catch anything else.
    {
        HypercliqueComplex residual = c;
        for (const auto& step : cert.steps) {
            if (step.v.size() != c.k() - 1 || residual.star(step.v) != step.peeled || step.peeled.empty())
                throw Error("invalid D-perfect certificate at {" + step.v.to_string() + "}");
            residual = star_delete(residual, step.v);
        }
        if (!residual.generators().empty()) throw Error("invalid D-perfect certificate: peels leave generators");
    }

    TriangulationCertificate out{target, {}, 0};
    ChainVector current = target;
    std::size_t floor = 0;  // no member of the current support contains V_j for j < floor
    while (!current.is_zero()) {
        auto support = current.support();
        std::size_t i = floor;
        auto meets = [&](std::size_t j) {
            return std::any_of(support.begin(), support.end(), [&](Face f) { return f.contains(cert.steps[j].v); });
        };
        while (i < cert.steps.size() && !meets(i)) ++i;
        if (i == cert.steps.size()) throw Error("internal: support avoids every sequence entry");
        const auto& step = cert.steps[i];

        FaceSet through;  // D meet C*_i
        for (Face f : support)
            if (f.contains(step.v)) through.push_back(f);
        if (!std::includes(step.peeled.begin(), step.peeled.end(), through.begin(), through.end()))
            throw Error("internal: support left the residual complex");
        if (through.size() < 2) throw Error("internal: support meets a cocircuit in one element");

        Face first = through.front();
        for (std::size_t s = 1; s < through.size(); ++s) {
            Face apex = first | through[s];
            if (apex.size() != c.k() + 1 || !c.is_face(apex))
                throw Error("internal: {" + apex.to_string() + "} is not a (k+1)-face");
            auto small = boundary(c, apex, m.field());
            auto b = -(current[through[s]] / small[through[s]]);
            current.add_scaled(b, small);
            out.terms.push_back({-b, apex});
        }
        if (!current[first].is_zero()) throw Error("internal: orthogonality violated at {" + step.v.to_string() + "}");
        ++out.rounds;
        floor = i + 1;
    }
    return out;
}

Verdict verify_decomposition(const HypercliqueComplex& c, FieldSpec field, const TriangulationCertificate& cert) {
    if (cert.target.field() != field) return Verdict::fail("target is over a different field");
    if (cert.target.is_zero()) return Verdict::fail("target is zero");
    for (Face f : cert.target.support())
        if (!c.has_generator(f)) return Verdict::fail("target support {" + f.to_string() + "} is not a generator");
    ChainVector sum(field);
    std::set<Face> seen;
    Face apex_union;
    for (const auto& t : cert.terms) {
        if (t.scale.field() != field) return Verdict::fail("term scalar over a different field");
        if (t.scale.is_zero()) return Verdict::fail("zero scalar on {" + t.apex.to_string() + "}");
        if (t.apex.size() != c.k() + 1 || !c.is_face(t.apex))
            return Verdict::fail("{" + t.apex.to_string() + "} is not a (k+1)-face");
        if (!seen.insert(t.apex).second) return Verdict::fail("apex {" + t.apex.to_string() + "} repeated");
        sum.add_scaled(t.scale, boundary(c, t.apex, field));
        apex_union = apex_union | t.apex;
    }
    if (sum != cert.target) return Verdict::fail("terms do not sum to the target");
    auto support = cert.target.support();
    if (vertex_union(support) != apex_union) return Verdict::fail("vertex union of apexes differs from the target's");
    return Verdict::pass();
}

namespace {

enum class Found { yes, no, unknown };

/// Is there a combination of the boundaries of `cands` equal to `vec`
/// whose nonzero terms have apexes covering `cover`? A combination with
/// support T is exactly a decomposition over the generator set T.
Found decomposes(const SimplicialMatroid& m, const ChainVector& vec, const std::vector<Face>& cands, Face cover,
                 const Guards& guards) {
    if (cands.empty()) return Found::no;
    const auto& c = m.complex();
    auto field = m.field();
    ExactMatrix a(field, m.size(), cands.size());
    for (std::size_t j = 0; j < cands.size(); ++j) {
        auto d = boundary(c, cands[j], field);
        for (const auto& [face, coef] : d.coefficients()) a.set(*m.index_of(face), j, coef);
    }
    auto x0 = solve(a, vec.to_dense(m.ground()));
    if (!x0) return Found::no;
    auto kernel = nullspace_basis(a);

    auto covers = [&](const Vector& x) {
        Face u;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!x[j].is_zero()) u = u | cands[j];
        return u == cover;
    };
    // Coordinates that vanish on the whole solution set can never be used.
    Face reachable;
    for (std::size_t j = 0; j < cands.size(); ++j) {
        bool pinned = (*x0)[j].is_zero();
        for (const auto& z : kernel) pinned = pinned && z[j].is_zero();
        if (!pinned) reachable = reachable | cands[j];
    }
    if (reachable != cover) return Found::no;
    // Over Q a generic solution is nonzero on every unpinned coordinate.
    // Over GF(p) each vertex of the cover is missed on a proper affine
    // subspace, at most p^(d-1) points, so p > |cover| leaves a good point.
    if (field.is_rational() || field.characteristic() > static_cast<std::uint32_t>(cover.size()) || kernel.empty())
        return Found::yes;
    double points = std::pow(static_cast<double>(field.characteristic()), static_cast<double>(kernel.size()));
    if (points > guards.max_solution_points) return Found::unknown;
    // Walk the solution set as an odometer: each digit change adds its
    // kernel vector once, and p additions wrap around.
    Vector x = *x0;
    std::vector<std::uint32_t> digits(kernel.size(), 0);
    for (;;) {
        if (covers(x)) return Found::yes;
        std::size_t t = 0;
        for (; t < digits.size(); ++t) {
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += kernel[t][i];
            if (++digits[t] < field.characteristic()) break;
            digits[t] = 0;
        }
        if (t == digits.size()) return Found::no;
    }
}

}  // namespace

Decision is_strongly_triangulable_brute(const SimplicialMatroid& m, const Guards& guards) {
    std::vector<FaceSet> circuits;
    bool complete = true;
    try {
        circuits = circuits_brute(m, m.size(), guards);
    } catch (const GuardExceeded&) {
        // Past the guard only a failing circuit can settle the question, so
        // look among the circuits small enough to enumerate within budget.
        complete = false;
        const auto& a = m.compact_matrix();
        std::size_t s = m.rank() + 1;
        auto route = CircuitRoute::automatic;
        while (s > 0 && circuit_enumeration_cost(a, s, route) > guards.max_enumeration) {
            route = CircuitRoute::primal;
            --s;
        }
        for (const auto& idx : column_circuits(a, s, route)) circuits.push_back(m.faces_of(idx));
    }
    // Enlarging the generator family never breaks a decomposition, so the
    // family of all small circuits is the one to test.
    const auto& apexes = m.complex().upper_skeleton();
    bool unknown = false;
    for (const auto& circuit : circuits) {
        Face cover = vertex_union(circuit);
        std::vector<Face> cands;
        for (Face a : apexes)
            if (cover.contains(a)) cands.push_back(a);
        switch (decomposes(m, circuit_vector(m, circuit), cands, cover, guards)) {
            case Found::no: return Decision::no;
            case Found::unknown: unknown = true; break;
            case Found::yes: break;
        }
    }
    return unknown || !complete ? Decision::inconclusive : Decision::yes;
}

HypercliqueComplex gen_projective_plane() {
    FaceSet faces;
    for (auto tri : std::vector<std::vector<int>>{{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 6, 5},
                                                 {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}})
        faces.push_back(Face::of(tri));
    return HypercliqueComplex(6, 3, std::move(faces));
}

HypercliqueComplex gen_prop54(int n, int k) {
    if (k < 2 || n - 3 < k) throw Error("gen_prop54 requires 2 <= k <= n - 3");
    if (n > kMaxVertices) throw Error("gen_prop54 requires n <= 64");
    Face a = Face::range(k + 1);          // 1 .. k+1
    Face b = Face::range(k + 2).without(1);  // 2 .. k+2
    Face ridge = a & b;                   // 2 .. k+1
    Face hub = Face().with(n);

    FaceSet faces;
    auto add_all = [&](Face f) { for_each_subset(f, k, [&](Face s) { faces.push_back(s); }); };
    add_all(a);
    add_all(b);
    for (int i : a.vertices()) add_all(a.without(i) | hub);
    for (int j : b.vertices()) add_all(b.without(j) | hub);
    normalize(faces);
    faces.erase(std::remove(faces.begin(), faces.end(), ridge), faces.end());
    HypercliqueComplex c(n, k, faces);

    // The small circuits are the cones over the faces of each simplex that
    // avoid the removed ridge.
    FaceSet expected;
    for (int i : ridge.vertices()) {
        expected.push_back(a.without(i) | hub);
        expected.push_back(b.without(i) | hub);
    }
    normalize(expected);
    if (c.upper_skeleton() != expected) throw Error("internal: unexpected (k+1)-faces in gen_prop54");

    FaceSet glued;
    for_each_subset(a, k, [&](Face s) { glued.push_back(s); });
    for_each_subset(b, k, [&](Face s) { glued.push_back(s); });
    normalize(glued);
    glued.erase(std::remove(glued.begin(), glued.end(), ridge), glued.end());

    std::set<Face> symdiff;
    for (Face apex : expected)
        for_each_subset(apex, k, [&](Face s) {
            if (!symdiff.erase(s)) symdiff.insert(s);
        });
    if (FaceSet(symdiff.begin(), symdiff.end()) != glued)
        throw Error("internal: glued circuit is not the symmetric difference of the small circuits");
    SimplicialMatroid binary(c, FieldSpec::prime(2));
    circuit_vector(binary, glued);  // throws unless it is a circuit over GF(2)
    return c;
}

}  // namespace simatroid
