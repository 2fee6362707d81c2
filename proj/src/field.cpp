#include "simatroid/field.hpp"

#include <charconv>

#include "simatroid/detail/field_ops.hpp"
#include "simatroid/error.hpp"

namespace simatroid {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw Error("field characteristic too large: " + std::to_string(p));
    if (!simatroid::is_prime(p)) throw Error("field characteristic is not prime: " + std::to_string(p));
    return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q" || text == "rationals") return rationals();
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw Error("invalid field '" + std::string(text) + "' (expected a prime or q)");
    return prime(p);
}

std::string FieldSpec::name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

std::string FieldSpec::directive() const {
    return is_rational() ? "q" : std::to_string(p_);
}

namespace {

std::uint32_t reduce(long value, std::uint32_t p) {
    long r = value % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

ExactScalar::ExactScalar(FieldSpec field, long value) : field_(field) {
    if (field.is_rational())
        value_ = mpq_class(value);
    else
        value_ = reduce(value, field.characteristic());
}

ExactScalar::ExactScalar(FieldSpec field, const mpq_class& value) : field_(field) {
    if (field.is_rational()) {
        mpq_class v = value;
        v.canonicalize();
        value_ = std::move(v);
        return;
    }
    // num * den^{-1} mod p
    std::uint32_t p = field.characteristic();
    mpz_class num = value.get_num() % p, den = value.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw Error("denominator divisible by field characteristic");
    detail::PrimeOps ops{p};
    value_ = ops.div(static_cast<std::uint32_t>(num.get_ui()), static_cast<std::uint32_t>(den.get_ui()));
}

ExactScalar ExactScalar::from_residue(FieldSpec field, std::uint32_t residue) {
    if (!field.is_prime()) throw Error("residue given for a rational field");
    ExactScalar s;
    s.field_ = field;
    s.value_ = residue % field.characteristic();
    return s;
}

ExactScalar ExactScalar::parse(FieldSpec field, std::string_view text) {
    try {
        mpq_class q(std::string(text), 10);
        q.canonicalize();
        return ExactScalar(field, q);
    } catch (const std::invalid_argument&) {
        throw Error("invalid scalar '" + std::string(text) + "'");
    }
}

bool ExactScalar::is_zero() const {
    if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool ExactScalar::is_one() const {
    if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint32_t ExactScalar::residue() const {
    if (auto r = std::get_if<std::uint32_t>(&value_)) return *r;
    throw Error("residue() on a rational scalar");
}

const mpq_class& ExactScalar::rational() const {
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw Error("rational() on a prime-field scalar");
}

void ExactScalar::require_same_field(const ExactScalar& other) const {
    if (field_ != other.field_)
        throw FieldMismatch("scalar field mismatch: " + field_.name() + " vs " + other.field_.name());
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    ExactScalar out = *this;
    if (field_.is_prime())
        out.value_ = detail::PrimeOps{field_.characteristic()}.inv(residue());
    else
        out.value_ = mpq_class(1 / rational());
    return out;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar out = *this;
    if (field_.is_prime())
        out.value_ = detail::PrimeOps{field_.characteristic()}.neg(residue());
    else
        out.value_ = mpq_class(-rational());
    return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
    require_same_field(rhs);
    if (field_.is_prime())
        value_ = detail::PrimeOps{field_.characteristic()}.add(residue(), rhs.residue());
    else
        std::get<mpq_class>(value_) += rhs.rational();
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
    require_same_field(rhs);
    if (field_.is_prime())
        value_ = detail::PrimeOps{field_.characteristic()}.sub(residue(), rhs.residue());
    else
        std::get<mpq_class>(value_) -= rhs.rational();
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
    require_same_field(rhs);
    if (field_.is_prime())
        value_ = detail::PrimeOps{field_.characteristic()}.mul(residue(), rhs.residue());
    else
        std::get<mpq_class>(value_) *= rhs.rational();
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const ExactScalar& a, const ExactScalar& b) {
    if (a.field_ != b.field_) return false;
    if (a.field_.is_prime()) return a.residue() == b.residue();
    return a.rational() == b.rational();
}

std::string ExactScalar::to_string() const {
    if (field_.is_prime()) return std::to_string(residue());
    return rational().get_str();
}

}  // namespace simatroid
