#include "doctest.h"
#include "simatroid/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const FaceSet kExampleSequence = {F("45"), F("67"), F("89"), F("15"), F("14"),
                                F("16"), F("17"), F("28"), F("29"), F("12")};

/// Chordality by brute force: every cycle of length >= 4 has a chord,
/// checked as "no induced cycle of length >= 4" over all vertex subsets.
bool chordal_brute(int n, const FaceSet& edges) {
    auto adj = [&](int a, int b) { return std::binary_search(edges.begin(), edges.end(), Face::of({a, b})); };
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        int size = std::popcount(s);
        if (size < 4) continue;
        std::vector<int> vs;
        for (int v = 1; v <= n; ++v)
            if (s >> (v - 1) & 1) vs.push_back(v);
        // an induced cycle: connected, every vertex of degree two
        bool all_two = true;
        for (int a : vs) {
            int deg = 0;
            for (int b : vs) deg += a != b && adj(a, b);
            all_two = all_two && deg == 2;
        }
        if (!all_two) continue;
        std::vector<int> stack{vs[0]};
        std::uint32_t seen = 1U << (vs[0] - 1);
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : vs)
                if (!(seen >> (b - 1) & 1) && adj(a, b)) {
                    seen |= 1U << (b - 1);
                    stack.push_back(b);
                }
        }
        if (seen == s) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("simplicial faces") {
    auto c = example3();
    CHECK(is_simplicial_face(c, F("45")));
    CHECK(is_simplicial_face_by_facets(c, F("45")));
    auto pp = gen_projective_plane();
    CHECK(simplicial_faces(pp).empty());
    for (Face v : all_subsets(6, 2)) CHECK_FALSE(is_simplicial_face_by_facets(pp, v));
    auto one = HypercliqueComplex(3, 2, all_subsets(3, 2));
    CHECK(is_simplicial_face(one, F("1")));
    CHECK_THROWS_AS(is_simplicial_face(c, F("4")), Error);
}

TEST_CASE("basic linear sequences") {
    auto c = example3();
    for (FieldSpec field : {GF2, QQ}) CHECK(check_basic_linear_sequence(c, field, kExampleSequence));
    CHECK(check_basic_linear_sequence(HypercliqueComplex(5, 3, {}), QQ, FaceSet{}));

    // The same ten entries with 12 moved to the front.
    FaceSet reordered = kExampleSequence;
    std::rotate(reordered.begin(), reordered.end() - 1, reordered.end());
    CHECK(reordered.front() == F("12"));
    CHECK_FALSE(is_simplicial_face(c, F("12")));
    CHECK_FALSE(check_basic_linear_sequence(c, QQ, reordered));
    CHECK_FALSE(check_basic_linear_sequence(c, GF2, reordered));

    auto basis = cocircuit_space_basis_from_sequence(c, QQ, kExampleSequence);
    CHECK(basis.size() == 10);
    CHECK_THROWS_AS(cocircuit_space_basis_from_sequence(c, QQ, reordered), Error);

    auto tri = HypercliqueComplex(3, 2, all_subsets(3, 2));
    FaceSet seq{F("1"), F("2")};
    CHECK(cocircuit_space_basis_from_sequence(tri, QQ, seq).size() == 2);
    CHECK(cocircuit_space_basis_from_sequence(HypercliqueComplex(4, 3, {}), QQ, FaceSet{}).empty());
}

TEST_CASE("D-perfect examples") {
    auto c = example3();
    for (FieldSpec field : {GF2, QQ}) {
        auto cert = find_dperfect_sequence(c, field);
        REQUIRE(cert.has_value());
        CHECK(cert->steps.size() == 10);
        CHECK(verify_dperfect(c, field, *cert));
        CHECK(verify_dperfect(c, field, certificate_from_sequence(c, kExampleSequence)));
    }
    CHECK_FALSE(find_dperfect_sequence(gen_projective_plane(), GF2).has_value());
    CHECK_FALSE(find_dperfect_sequence(gen_projective_plane(), QQ).has_value());
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {7, 2}, {7, 3}, {7, 4}}) {
        auto p = gen_prop54(n, k);
        CHECK(simplicial_faces(p).empty());
        CHECK_FALSE(find_dperfect_sequence(p, GF2).has_value());
    }
}

TEST_CASE("D-perfect verification rejects broken certificates") {
    auto c = example3();
    auto cert = certificate_from_sequence(c, kExampleSequence);
    auto shorter = cert;
    shorter.steps.pop_back();
    CHECK_FALSE(verify_dperfect(c, GF2, shorter));
    auto wrong_peel = cert;
    wrong_peel.steps[0].peeled.pop_back();
    CHECK_FALSE(verify_dperfect(c, GF2, wrong_peel));
    auto swapped = cert;
    std::swap(swapped.steps[0], swapped.steps[9]);
    CHECK_FALSE(verify_dperfect(c, GF2, swapped));
}

TEST_CASE("chordal graphs") {
    CHECK_FALSE(check_chordal_graph(4, Fs({"12", "23", "34", "14"})));
    CHECK(check_chordal_graph(5, Fs({"12", "13", "24", "25"})));
    CHECK(check_chordal_graph(4, Fs({"12", "23", "34", "14", "13"})));
    CHECK(check_chordal_graph(3, FaceSet{}));
}

TEST_CASE("chordality matches D-perfect existence and a brute-force oracle") {
    for (const auto& inst : corpus(2, 3, 7, 150, 9000)) {
        auto c = inst.complex();
        bool chordal = check_chordal_graph(inst.n, inst.faces);
        CAPTURE(inst.id);
        CHECK(chordal == chordal_brute(inst.n, inst.faces));
        CHECK(chordal == find_dperfect_sequence(c, GF2).has_value());
        // greedy never gets stuck on graphs
        CHECK(find_dperfect_sequence(c, GF2, Strategy::greedy_lex).has_value() == chordal);
    }
}

TEST_CASE("dense hyperplanes") {
    SimplicialMatroid m(example3(), GF2);
    FaceSet h;
    for (Face f : m.ground())
        if (f != F("145") && f != F("245")) h.push_back(f);
    CHECK(is_dense_hyperplane(m, h));
    CHECK(is_hyperplane(m, h));
    CHECK_FALSE(is_dense_hyperplane(m, m.ground()));
    SimplicialMatroid p(gen_projective_plane(), QQ);
    for (Face drop : p.ground()) {
        FaceSet hp;
        for (Face f : p.ground())
            if (f != drop) hp.push_back(f);
        CHECK_FALSE(is_dense_hyperplane(p, hp));
    }
}

TEST_CASE("superdense examples") {
    SimplicialMatroid m(example3(), GF2);
    auto cert = check_superdense(m);
    REQUIRE(cert.has_value());
    CHECK(cert->steps.size() == 10);
    CHECK(verify_superdense(m, *cert));
    auto chain = cert->chain(m.ground());
    CHECK(chain.size() == 11);
    CHECK(chain.front().empty());
    CHECK(chain.back() == m.ground());
    CHECK_FALSE(check_superdense(SimplicialMatroid(gen_projective_plane(), QQ)).has_value());
    auto empty = check_superdense(SimplicialMatroid(HypercliqueComplex(5, 3, {}), QQ));
    REQUIRE(empty.has_value());
    CHECK(empty->steps.empty());
}

TEST_CASE("supersolvable examples") {
    CHECK(check_supersolvable(SimplicialMatroid(gen_projective_plane(), QQ)) == Decision::yes);
    CHECK(check_supersolvable(SimplicialMatroid(example3(), QQ)) == Decision::no);
    SimplicialMatroid tri(HypercliqueComplex(3, 2, all_subsets(3, 2)), QQ);
    CHECK(check_supersolvable(tri) == Decision::yes);
    CHECK(supersolvable_by_modular_chain(tri));
    // the 4-cycle is not supersolvable as a graphic matroid; the 4-cycle with a chord is
    CHECK(check_supersolvable(SimplicialMatroid(HypercliqueComplex(4, 2, Fs({"12", "23", "34", "14"})), GF2)) ==
          Decision::no);
    CHECK(check_supersolvable(SimplicialMatroid(HypercliqueComplex(4, 2, Fs({"12", "23", "34", "14", "13"})), GF2)) ==
          Decision::yes);
    CHECK_THROWS_AS(supersolvable_by_rank(tri), Error);
}

TEST_CASE("rank test agrees with the modular-chain search for k = 3") {
    for (FieldSpec field : {GF2, QQ})
        for (const auto& inst : corpus(3, 4, 6, 40, 555)) {
            SimplicialMatroid m(inst.complex(), field);
            if (m.size() > 12) continue;
            CAPTURE(inst.id);
            Guards roomy;
            roomy.max_flats = 1 << 16;
            CHECK(supersolvable_by_rank(m) == supersolvable_by_modular_chain(m, roomy));
        }
}

TEST_CASE("graphic supersolvability matches chordality") {
    for (const auto& inst : corpus(2, 3, 6, 60, 31337)) {
        SimplicialMatroid m(inst.complex(), GF2);
        if (m.size() > 12) continue;
        CAPTURE(inst.id);
        CHECK(supersolvable_by_modular_chain(m) == check_chordal_graph(inst.n, inst.faces));
    }
}

TEST_CASE("D-perfect and superdense agree, and simplicial stars are cocircuits") {
    std::size_t greedy_disagreements = 0;
    for (int k = 2; k <= 3; ++k)
        for (const auto& inst : corpus(k, k + 1, 7, 60, 2024 + k)) {
            auto c = inst.complex();
            for (FieldSpec field : {GF2, QQ}) {
                SimplicialMatroid m(c, field);
                auto dp = find_dperfect_sequence(c, field);
                auto sd = check_superdense(m);
                CAPTURE(inst.id);
                CHECK(dp.has_value() == sd.has_value());
                if (dp) CHECK(verify_dperfect(c, field, *dp));
                if (sd) CHECK(verify_superdense(m, *sd));
                if (find_dperfect_sequence(c, field, Strategy::greedy_lex).has_value() != dp.has_value())
                    ++greedy_disagreements;
                for (Face v : simplicial_faces(c)) {
                    CHECK(is_simplicial_face_by_facets(c, v));
                    CHECK(is_cocircuit(m, c.star(v)));
                }
                if (dp) CHECK(check_basic_linear_sequence(c, field, dp->sequence()));
            }
        }
    MESSAGE("greedy/backtracking disagreements on the k <= 3 corpus: " << greedy_disagreements);
}

TEST_CASE("simpliciality: union test matches facet count") {
    for (int k = 2; k <= 4; ++k)
        for (const auto& inst : corpus(k, k + 1, 8, 30, 77 * k)) {
            auto c = inst.complex();
            for (Face v : all_subsets(c.n(), k - 1)) CHECK(is_simplicial_face(c, v) == is_simplicial_face_by_facets(c, v));
        }
}
