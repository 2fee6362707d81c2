#pragma once

// Typed arithmetic used by the elimination kernels. ExactScalar is the
// public value type; these keep hot loops free of variant dispatch.

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace simatroid::detail {

struct PrimeOps {
    using value_type = std::uint32_t;

    std::uint32_t p;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(value_type a) const { return a == 0; }
    value_type add(value_type a, value_type b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= p ? s - p : s);
    }
    value_type sub(value_type a, value_type b) const {
        return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p - b);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(std::uint64_t{a} * b % p);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    /// a - f*b
    value_type sub_mul(value_type a, value_type f, value_type b) const { return sub(a, mul(f, b)); }
};

struct RationalOps {
    using value_type = mpq_class;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (sgn(a) == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    value_type div(const value_type& a, const value_type& b) const { return a / b; }
    value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) const {
        return a - f * b;
    }
};

}  // namespace simatroid::detail
