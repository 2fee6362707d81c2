#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace simatroid {

/// The coefficient field: a prime field GF(p) or the rationals.
class FieldSpec {
public:
    /// GF(2); the default field for instances without a directive.
    FieldSpec() = default;

    /// Throws Error unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() { return FieldSpec(0); }

    /// Accepts "q"/"Q"/"rationals" or a decimal prime.
    static FieldSpec parse(std::string_view text);

    bool is_rational() const noexcept { return p_ == 0; }
    bool is_prime() const noexcept { return p_ != 0; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }

    /// "GF(p)" or "Q".
    std::string name() const;
    /// The token used by instance files and the CLI: "p" or "q".
    std::string directive() const;

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}

    std::uint32_t p_ = 2;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of a FieldSpec'd field. Residues are kept in [0, p);
/// rationals are kept canonical (reduced, positive denominator).
class ExactScalar {
public:
    ExactScalar() = default;  // zero of GF(2)
    ExactScalar(FieldSpec field, long value);
    ExactScalar(FieldSpec field, const mpq_class& value);

    static ExactScalar zero(FieldSpec field) { return {field, 0L}; }
    static ExactScalar one(FieldSpec field) { return {field, 1L}; }
    /// Parses "a", "-a" or (rationals only) "a/b".
    static ExactScalar parse(FieldSpec field, std::string_view text);
    static ExactScalar from_residue(FieldSpec field, std::uint32_t residue);

    FieldSpec field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue of a prime-field element (throws for rationals).
    std::uint32_t residue() const;
    /// Value of a rational element (throws for prime fields).
    const mpq_class& rational() const;

    ExactScalar inverse() const;  // throws Error on zero
    ExactScalar operator-() const;

    ExactScalar& operator+=(const ExactScalar& rhs);
    ExactScalar& operator-=(const ExactScalar& rhs);
    ExactScalar& operator*=(const ExactScalar& rhs);
    ExactScalar& operator/=(const ExactScalar& rhs);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b);

    std::string to_string() const;

private:
    void require_same_field(const ExactScalar& other) const;

    FieldSpec field_;
    std::variant<std::uint32_t, mpq_class> value_{std::uint32_t{0}};
};

}  // namespace simatroid
