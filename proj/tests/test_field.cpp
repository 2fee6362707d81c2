#include "doctest.h"
#include "simatroid/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("field spec parsing and naming") {
    CHECK(FieldSpec{} == GF2);
    CHECK(FieldSpec::parse("q").is_rational());
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::parse("7").characteristic() == 7);
    CHECK(FieldSpec::parse("7").name() == "GF(7)");
    CHECK(QQ.name() == "Q");
    CHECK(QQ.directive() == "q");
    CHECK(GF3.directive() == "3");
    CHECK_THROWS_AS(FieldSpec::parse("4"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("1"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("x"), Error);
    CHECK_THROWS_AS(FieldSpec::parse(""), Error);
    CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t{1} << 31), Error);
    CHECK(FieldSpec::prime(2147483647).characteristic() == 2147483647U);
}

TEST_CASE("primality") {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 0; i < 50; ++i)
        if (is_prime(i)) primes.push_back(i);
    CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
}

TEST_CASE("prime field arithmetic") {
    ExactScalar a(GF5, 3), b(GF5, 4);
    CHECK((a + b).residue() == 2);
    CHECK((a - b).residue() == 4);
    CHECK((a * b).residue() == 2);
    CHECK((a / b).residue() == 2);  // 3 * 4^{-1} = 3 * 4 = 12 = 2
    CHECK((-a).residue() == 2);
    CHECK(ExactScalar(GF5, -1).residue() == 4);
    CHECK(ExactScalar(GF5, mpq_class(1, 2)).residue() == 3);
    CHECK_THROWS_AS(ExactScalar(GF5, mpq_class(1, 5)), Error);
    CHECK_THROWS_AS(ExactScalar::zero(GF5).inverse(), Error);
    for (long x = 1; x < 5; ++x) CHECK((ExactScalar(GF5, x) * ExactScalar(GF5, x).inverse()).is_one());
}

TEST_CASE("rational arithmetic") {
    auto half = ExactScalar::parse(QQ, "1/2");
    auto third = ExactScalar::parse(QQ, "-2/6");
    CHECK((half + third).to_string() == "1/6");
    CHECK((half / third).to_string() == "-3/2");
    CHECK(ExactScalar::parse(QQ, "4/2").to_string() == "2");
    CHECK(ExactScalar::parse(GF3, "1/2").residue() == 2);
    CHECK_THROWS_AS(ExactScalar::parse(QQ, "abc"), Error);
}

TEST_CASE("mixing fields throws") {
    ExactScalar a(GF3, 1), b(GF5, 1), q(QQ, 1);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(a * q, FieldMismatch);
    CHECK_FALSE(a == b);
}

TEST_CASE("field axioms hold on GF(7) exhaustively") {
    auto F7 = FieldSpec::prime(7);
    for (long x = 0; x < 7; ++x)
        for (long y = 0; y < 7; ++y)
            for (long z = 0; z < 7; ++z) {
                ExactScalar a(F7, x), b(F7, y), c(F7, z);
                CHECK(a * (b + c) == a * b + a * c);
                CHECK((a + b) - b == a);
                if (!b.is_zero()) CHECK((a / b) * b == a);
            }
}
