#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "simatroid/detail/elimination.hpp"
#include "simatroid/detail/field_ops.hpp"
#include "simatroid/field.hpp"

namespace simatroid {

using Vector = std::vector<ExactScalar>;

/// Dense matrix over a single exact field. Entries are stored in the
/// field's native representation, so every entry shares the field.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(FieldSpec field, std::size_t n);
    /// Integer entries are mapped into the field.
    static ExactMatrix from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows);
    /// Rows given as vectors; all must share `cols` entries and the field.
    static ExactMatrix from_vectors(FieldSpec field, std::size_t cols, std::span<const Vector> rows);

    FieldSpec field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    ExactScalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const ExactScalar& value);
    void set(std::size_t r, std::size_t c, long value);

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    ExactMatrix transpose() const;
    ExactMatrix select_columns(std::span<const std::size_t> cols) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    /// Calls fn(ops, dense) with the typed kernel view of this matrix.
    template <class Fn>
    decltype(auto) visit(Fn&& fn) const {
        if (field_.is_prime()) {
            detail::PrimeOps ops{field_.characteristic()};
            detail::Dense<detail::PrimeOps> d{rows_, cols_, std::get<0>(data_)};
            return fn(ops, d);
        }
        detail::RationalOps ops;
        detail::Dense<detail::RationalOps> d{rows_, cols_, std::get<1>(data_)};
        return fn(ops, d);
    }

private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>> data_;
};

std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel {x : M x = 0}; its size is cols - rank.
std::vector<Vector> nullspace_basis(const ExactMatrix& m);

/// True iff v is a linear combination of the rows of m. Throws
/// FieldMismatch or Error on a field or length mismatch.
bool in_row_space(const ExactMatrix& m, const Vector& v);

/// Some x with M x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

Vector multiply(const ExactMatrix& m, const Vector& x);

enum class CircuitRoute {
    automatic,  ///< cheaper of the two by subset-count estimate
    primal,     ///< depth-first over independent column sets
    dual,       ///< hyperplanes of the matroid of a kernel basis
};

/// Subset-count estimate of the enumeration work for column_circuits,
/// scaled by 32 over the rationals.
double circuit_enumeration_cost(const ExactMatrix& m, std::size_t max_size, CircuitRoute route);

/// All minimal dependent column sets of size <= max_size, as increasing
/// index lists, ordered by size and then lexicographically. Both routes
/// return the same list. Throws GuardExceeded when max_work is positive
/// and the estimated work of the chosen route exceeds it.
std::vector<std::vector<std::size_t>> column_circuits(const ExactMatrix& m, std::size_t max_size,
                                                      CircuitRoute route = CircuitRoute::automatic,
                                                      double max_work = 0);

/// For every column, whether it lies in the span of the columns `basis`.
/// Also reports the rank of those columns.
std::vector<bool> span_membership(const ExactMatrix& m, std::span<const std::size_t> basis,
                                  std::size_t* basis_rank = nullptr);

}  // namespace simatroid
