#include "doctest.h"
#include "simatroid/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ExactMatrix random_matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::uint64_t& x) {
    ExactMatrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            x = x * 6364136223846793005ULL + 1442695040888963407ULL;
            long v = static_cast<long>((x >> 33) % 5) - 2;  // entries in [-2, 2], zero-heavy enough
            m.set(r, c, v);
        }
    return m;
}

std::vector<std::vector<mpq_class>> as_rationals(const ExactMatrix& m) {
    std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            auto s = m.at(r, c);
            out[r][c] = m.field().is_prime() ? mpq_class(s.residue()) : s.rational();
        }
    return out;
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const ExactScalar& s) { return s.is_zero(); });
}

}  // namespace

TEST_CASE("rank examples") {
    CHECK(rank(ExactMatrix(QQ, 3, 3)) == 0);
    CHECK(rank(ExactMatrix::identity(GF2, 4)) == 4);
    auto bm = boundary_matrix(example3(), QQ);
    CHECK(rank(bm.matrix) == 10);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace_basis(ExactMatrix::identity(QQ, 3)).empty());
    auto parity = ExactMatrix::from_rows(GF2, {{1, 1}});
    auto ns = nullspace_basis(parity);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == Vector{ExactScalar(GF2, 1), ExactScalar(GF2, 1)});

    auto pp = boundary_matrix(gen_projective_plane(), GF2);
    auto k = nullspace_basis(pp.matrix);
    REQUIRE(k.size() == 1);
    // the ten triangle boundaries cancel mod 2
    CHECK(std::all_of(k[0].begin(), k[0].end(), [](const ExactScalar& s) { return s.is_one(); }));
}

TEST_CASE("row space membership examples") {
    auto id = ExactMatrix::identity(QQ, 2);
    CHECK(in_row_space(id, {ExactScalar(QQ, 0), ExactScalar(QQ, 0)}));
    CHECK(in_row_space(id, {ExactScalar(QQ, 3), ExactScalar(QQ, 5)}));
    auto parity = ExactMatrix::from_rows(GF2, {{1, 1}});
    CHECK_FALSE(in_row_space(parity, {ExactScalar(GF2, 1), ExactScalar(GF2, 0)}));
    CHECK(in_row_space(parity, {ExactScalar(GF2, 0), ExactScalar(GF2, 0)}));
    CHECK_THROWS_AS(in_row_space(parity, {ExactScalar(GF2, 1)}), Error);
    CHECK_THROWS_AS(in_row_space(parity, {ExactScalar(QQ, 1), ExactScalar(QQ, 1)}), FieldMismatch);
}

TEST_CASE("rank properties on random matrices") {
    std::uint64_t x = 12345;
    for (FieldSpec field : {GF2, GF3, GF5, QQ}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rows = 1 + trial % 6, cols = 1 + (trial * 7) % 8;
            auto m = random_matrix(field, rows, cols, x);
            auto r = rank(m);
            CAPTURE(field.name());
            CHECK(r == reference_rank(as_rationals(m), field.characteristic()));
            CHECK(r == rank(m.transpose()));
            auto ns = nullspace_basis(m);
            CHECK(r + ns.size() == cols);
            for (const auto& z : ns) CHECK(is_zero_vector(multiply(m, z)));
            if (!ns.empty()) CHECK(rank(ExactMatrix::from_vectors(field, cols, ns)) == ns.size());
            // rows lie in the row space, and solve() recovers a right-hand side in the image
            for (std::size_t i = 0; i < rows; ++i) CHECK(in_row_space(m, m.row(i)));
            Vector xs(cols);
            for (std::size_t c = 0; c < cols; ++c) xs[c] = ExactScalar(field, static_cast<long>(c + 1));
            auto b = multiply(m, xs);
            auto sol = solve(m, b);
            REQUIRE(sol.has_value());
            CHECK(multiply(m, *sol) == b);
        }
    }
}

TEST_CASE("column circuits agree across routes and with a subset scan") {
    std::uint64_t x = 777;
    for (FieldSpec field : {GF2, GF3, QQ}) {
        for (int trial = 0; trial < 30; ++trial) {
            auto m = random_matrix(field, 1 + trial % 4, 2 + trial % 7, x);
            auto primal = column_circuits(m, m.cols(), CircuitRoute::primal);
            auto dual = column_circuits(m, m.cols(), CircuitRoute::dual);
            CHECK(primal == dual);
            // reference: minimal subsets whose columns have rank < size
            std::vector<std::vector<std::size_t>> ref;
            std::vector<std::uint32_t> found;
            for (std::size_t size = 1; size <= m.cols(); ++size)
                for (std::uint32_t s = 1; s < (1U << m.cols()); ++s) {
                    if (static_cast<std::size_t>(std::popcount(s)) != size) continue;
                    if (std::any_of(found.begin(), found.end(), [&](auto c) { return (c & s) == c; })) continue;
                    std::vector<std::size_t> idx;
                    for (std::size_t i = 0; i < m.cols(); ++i)
                        if (s >> i & 1) idx.push_back(i);
                    if (reference_rank(as_rationals(m.select_columns(idx)), field.characteristic()) < size) {
                        found.push_back(s);
                        ref.push_back(idx);
                    }
                }
            auto sorted = primal;
            std::sort(sorted.begin(), sorted.end());
            std::sort(ref.begin(), ref.end());
            CHECK(sorted == ref);
        }
    }
}

TEST_CASE("circuit enumeration respects its work guard") {
    auto m = ExactMatrix(GF2, 1, 30);
    for (std::size_t c = 0; c < 30; ++c) m.set(0, c, 1);
    CHECK_THROWS_AS(column_circuits(m, 30, CircuitRoute::primal, 10), GuardExceeded);
    CHECK(column_circuits(m, 2, CircuitRoute::primal).size() == 435);  // every pair of equal columns
}

TEST_CASE("span membership") {
    auto m = ExactMatrix::from_rows(QQ, {{1, 0, 1, 0}, {0, 1, 1, 0}});
    std::vector<std::size_t> basis{0};
    std::size_t r = 0;
    auto in = span_membership(m, basis, &r);
    CHECK(r == 1);
    CHECK(in == std::vector<bool>{true, false, false, true});
    basis = {0, 1};
    in = span_membership(m, basis, &r);
    CHECK(r == 2);
    CHECK(in == std::vector<bool>{true, true, true, true});
}
