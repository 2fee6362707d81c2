#include "simatroid/matrix.hpp"

#include <algorithm>
#include <set>

#include "simatroid/error.hpp"

namespace simatroid {

namespace {

template <class T>
T native(const ExactScalar& s);

template <>
std::uint32_t native<std::uint32_t>(const ExactScalar& s) { return s.residue(); }

template <>
mpq_class native<mpq_class>(const ExactScalar& s) { return s.rational(); }

ExactScalar wrap(FieldSpec f, std::uint32_t v) { return ExactScalar::from_residue(f, v); }
ExactScalar wrap(FieldSpec f, const mpq_class& v) { return ExactScalar(f, v); }

template <class Ops>
Vector wrap_all(FieldSpec f, const std::vector<typename Ops::value_type>& xs) {
    Vector out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(wrap(f, x));
    return out;
}

void require_field(FieldSpec expected, const Vector& v) {
    for (const auto& s : v)
        if (s.field() != expected)
            throw FieldMismatch("vector over " + s.field().name() + " used with matrix over " + expected.name());
}

}  // namespace

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
    if (field.is_prime())
        data_ = std::vector<std::uint32_t>(rows * cols, 0);
    else
        data_ = std::vector<mpq_class>(rows * cols);
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1L);
    return m;
}

ExactMatrix ExactMatrix::from_rows(FieldSpec field, const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_vectors(FieldSpec field, std::size_t cols, std::span<const Vector> rows) {
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("vector length does not match column count");
        require_field(field, rows[r]);
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

ExactScalar ExactMatrix::at(std::size_t r, std::size_t c) const {
    if (field_.is_prime()) return ExactScalar::from_residue(field_, std::get<0>(data_)[r * cols_ + c]);
    return ExactScalar(field_, std::get<1>(data_)[r * cols_ + c]);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const ExactScalar& value) {
    if (value.field() != field_)
        throw FieldMismatch("entry over " + value.field().name() + " in matrix over " + field_.name());
    if (field_.is_prime())
        std::get<0>(data_)[r * cols_ + c] = value.residue();
    else
        std::get<1>(data_)[r * cols_ + c] = value.rational();
}

void ExactMatrix::set(std::size_t r, std::size_t c, long value) { set(r, c, ExactScalar(field_, value)); }

Vector ExactMatrix::row(std::size_t r) const {
    Vector out;
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

Vector ExactMatrix::column(std::size_t c) const {
    Vector out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    std::visit(
        [&](const auto& src) {
            auto& dst = std::get<std::decay_t<decltype(src)>>(t.data_);
            for (std::size_t r = 0; r < rows_; ++r)
                for (std::size_t c = 0; c < cols_; ++c) dst[c * rows_ + r] = src[r * cols_ + c];
        },
        data_);
    return t;
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> cols) const {
    ExactMatrix out(field_, rows_, cols.size());
    std::visit(
        [&](const auto& src) {
            auto& dst = std::get<std::decay_t<decltype(src)>>(out.data_);
            for (std::size_t r = 0; r < rows_; ++r)
                for (std::size_t j = 0; j < cols.size(); ++j) dst[r * cols.size() + j] = src[r * cols_ + cols[j]];
        },
        data_);
    return out;
}

std::size_t rank(const ExactMatrix& m) {
    return m.visit([](const auto& ops, auto dense) { return detail::rank_of(ops, std::move(dense)); });
}

std::vector<Vector> nullspace_basis(const ExactMatrix& m) {
    return m.visit([&](const auto& ops, auto dense) {
        using Ops = std::decay_t<decltype(ops)>;
        std::vector<Vector> out;
        for (auto& x : detail::nullspace(ops, std::move(dense))) out.push_back(wrap_all<Ops>(m.field(), x));
        return out;
    });
}

bool in_row_space(const ExactMatrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw Error("in_row_space: vector length does not match column count");
    require_field(m.field(), v);
    return m.visit([&](const auto& ops, auto dense) {
        using T = typename std::decay_t<decltype(ops)>::value_type;
        auto base = detail::rank_of(ops, dense);
        for (const auto& s : v) dense.data.push_back(native<T>(s));
        ++dense.rows;
        return detail::rank_of(ops, std::move(dense)) == base;
    });
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw Error("solve: right-hand side length does not match row count");
    require_field(m.field(), b);
    return m.visit([&](const auto& ops, const auto& dense) -> std::optional<Vector> {
        using Ops = std::decay_t<decltype(ops)>;
        using T = typename Ops::value_type;
        detail::Dense<Ops> aug{m.rows(), m.cols() + 1, {}};
        aug.data.reserve(aug.rows * aug.cols);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) aug.data.push_back(dense.at(r, c));
            aug.data.push_back(native<T>(b[r]));
        }
        auto pivots = detail::rref(ops, aug);
        if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
        std::vector<T> x(m.cols(), ops.zero());
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
        return wrap_all<Ops>(m.field(), x);
    });
}

Vector multiply(const ExactMatrix& m, const Vector& x) {
    if (x.size() != m.cols()) throw Error("multiply: vector length does not match column count");
    require_field(m.field(), x);
    return m.visit([&](const auto& ops, const auto& dense) {
        using Ops = std::decay_t<decltype(ops)>;
        using T = typename Ops::value_type;
        std::vector<T> xs;
        for (const auto& s : x) xs.push_back(native<T>(s));
        std::vector<T> y(m.rows(), ops.zero());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!ops.is_zero(dense.at(r, c))) y[r] = ops.add(y[r], ops.mul(dense.at(r, c), xs[c]));
        return wrap_all<Ops>(m.field(), y);
    });
}

// ---------------------------------------------------------------------------
// Circuit enumeration

namespace {

/// Depth-first walk over independent column sets in increasing index
/// order. Each node keeps every column reduced against the span of the
/// chosen set, plus (optionally) the combination that produced it, so
/// children cost one pivot step instead of a fresh elimination.
template <class Ops>
class IndependentWalker {
public:
    using T = typename Ops::value_type;

    struct Node {
        std::vector<std::vector<T>> reduced;
        std::vector<std::vector<T>> combo;
    };

    IndependentWalker(const Ops& ops, const detail::Dense<Ops>& cols_as_matrix, bool track_combo)
        : ops_(ops), m_(cols_as_matrix.cols), track_(track_combo) {
        root_.reduced.assign(m_, std::vector<T>(cols_as_matrix.rows, ops.zero()));
        for (std::size_t e = 0; e < m_; ++e)
            for (std::size_t r = 0; r < cols_as_matrix.rows; ++r) root_.reduced[e][r] = cols_as_matrix.at(r, e);
        if (track_) {
            root_.combo.assign(m_, std::vector<T>(m_, ops.zero()));
            for (std::size_t e = 0; e < m_; ++e) root_.combo[e][e] = ops.one();
        }
    }

    bool nonzero(const std::vector<T>& v) const {
        return std::any_of(v.begin(), v.end(), [&](const T& x) { return !ops_.is_zero(x); });
    }

    /// visit(chosen, node) returns whether to descend below the node.
    template <class Visit>
    void run(Visit&& visit) {
        std::vector<std::size_t> chosen;
        walk(root_, chosen, visit);
    }

private:
    template <class Visit>
    void walk(const Node& node, std::vector<std::size_t>& chosen, Visit& visit) {
        if (!visit(chosen, node)) return;
        std::size_t start = chosen.empty() ? 0 : chosen.back() + 1;
        for (std::size_t e = start; e < m_; ++e) {
            if (!nonzero(node.reduced[e])) continue;
            Node child = pivot(node, e);
            chosen.push_back(e);
            walk(child, chosen, visit);
            chosen.pop_back();
        }
    }

    Node pivot(const Node& node, std::size_t e) const {
        Node child = node;
        const auto& pv = node.reduced[e];
        std::size_t row = 0;
        while (ops_.is_zero(pv[row])) ++row;
        auto inv = ops_.inv(pv[row]);
        for (std::size_t f = 0; f < m_; ++f) {
            if (f == e || ops_.is_zero(child.reduced[f][row])) continue;
            auto factor = ops_.mul(child.reduced[f][row], inv);
            auto& rf = child.reduced[f];
            for (std::size_t r = 0; r < rf.size(); ++r)
                if (!ops_.is_zero(pv[r])) rf[r] = ops_.sub_mul(rf[r], factor, pv[r]);
            if (track_) {
                auto& cf = child.combo[f];
                const auto& ce = node.combo[e];
                for (std::size_t j = 0; j < m_; ++j)
                    if (!ops_.is_zero(ce[j])) cf[j] = ops_.sub_mul(cf[j], factor, ce[j]);
            }
        }
        // e now lies in the span of the chosen set
        std::fill(child.reduced[e].begin(), child.reduced[e].end(), ops_.zero());
        return child;
    }

    const Ops& ops_;
    std::size_t m_;
    bool track_;
    Node root_;
};

double subsets_up_to(std::size_t m, std::size_t s) {
    double total = 0, term = 1;
    for (std::size_t i = 0; i <= std::min(s, m); ++i) {
        total += term;
        term = term * static_cast<double>(m - i) / static_cast<double>(i + 1);
    }
    return total;
}

template <class Ops>
std::set<std::vector<std::size_t>> primal_circuits(const Ops& ops, const detail::Dense<Ops>& a,
                                                   std::size_t max_size) {
    std::set<std::vector<std::size_t>> found;
    if (max_size == 0) return found;
    IndependentWalker<Ops> walker(ops, a, true);
    walker.run([&](const std::vector<std::size_t>& chosen, const auto& node) {
        std::size_t start = chosen.empty() ? 0 : chosen.back() + 1;
        for (std::size_t f = start; f < a.cols; ++f) {
            if (walker.nonzero(node.reduced[f])) continue;
            const auto& combo = node.combo[f];
            bool minimal = std::all_of(chosen.begin(), chosen.end(),
                                       [&](std::size_t i) { return !ops.is_zero(combo[i]); });
            if (!minimal) continue;
            auto c = chosen;
            c.push_back(f);
            found.insert(std::move(c));
        }
        return chosen.size() + 2 <= max_size;
    });
    return found;
}

template <class Ops>
std::set<std::vector<std::size_t>> dual_circuits(const Ops& ops, const detail::Dense<Ops>& a) {
    std::set<std::vector<std::size_t>> found;
    auto kernel = detail::nullspace(ops, a);
    std::size_t d = kernel.size();
    if (d == 0) return found;
    detail::Dense<Ops> k{d, a.cols, {}};
    for (const auto& row : kernel) k.data.insert(k.data.end(), row.begin(), row.end());
    // Circuits of the column matroid are the complements of hyperplanes of
    // the matroid represented by the kernel basis.
    IndependentWalker<Ops> walker(ops, k, false);
    walker.run([&](const std::vector<std::size_t>& chosen, const auto& node) {
        if (chosen.size() + 1 < d) return true;
        std::vector<std::size_t> c;
        for (std::size_t e = 0; e < a.cols; ++e)
            if (walker.nonzero(node.reduced[e])) c.push_back(e);
        found.insert(std::move(c));
        return false;
    });
    return found;
}

}  // namespace

namespace {

std::pair<CircuitRoute, double> plan(const ExactMatrix& m, std::size_t max_size, CircuitRoute route) {
    std::size_t r = rank(m);
    std::size_t d = m.cols() - r;
    double primal = subsets_up_to(m.cols(), std::min(r, max_size == 0 ? 0 : max_size - 1));
    double dual = d == 0 ? 0 : subsets_up_to(m.cols(), d - 1);
    if (route == CircuitRoute::automatic) route = dual < primal ? CircuitRoute::dual : CircuitRoute::primal;
    // a rational node costs dozens of prime-field ones
    double weight = m.field().is_rational() ? 32 : 1;
    return {route, weight * (route == CircuitRoute::dual ? dual : primal)};
}

}  // namespace

double circuit_enumeration_cost(const ExactMatrix& m, std::size_t max_size, CircuitRoute route) {
    return plan(m, max_size, route).second;
}

std::vector<std::vector<std::size_t>> column_circuits(const ExactMatrix& m, std::size_t max_size,
                                                      CircuitRoute route, double max_work) {
    auto [chosen, cost] = plan(m, max_size, route);
    if (max_work > 0 && cost > max_work)
        throw GuardExceeded("circuit enumeration would visit about " + std::to_string(static_cast<long long>(cost)) +
                            " subsets (limit " + std::to_string(static_cast<long long>(max_work)) + ")");
    auto found = m.visit([&, chosen = chosen](const auto& ops, const auto& dense) {
        return chosen == CircuitRoute::dual ? dual_circuits(ops, dense) : primal_circuits(ops, dense, max_size);
    });
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : found)
        if (c.size() <= max_size) out.push_back(c);
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return out;
}

std::vector<bool> span_membership(const ExactMatrix& m, std::span<const std::size_t> basis,
                                  std::size_t* basis_rank) {
    return m.visit([&](const auto& ops, const auto& dense) {
        using Ops = std::decay_t<decltype(ops)>;
        // [basis | all columns]: after elimination the span of the first block
        // is exactly the vectors vanishing below its rank.
        detail::Dense<Ops> aug{m.rows(), basis.size() + m.cols(), {}};
        aug.data.reserve(aug.rows * aug.cols);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (auto b : basis) aug.data.push_back(dense.at(r, b));
            for (std::size_t c = 0; c < m.cols(); ++c) aug.data.push_back(dense.at(r, c));
        }
        auto pivots = detail::rref(ops, aug);
        std::size_t rb = 0;
        while (rb < pivots.size() && pivots[rb] < basis.size()) ++rb;
        if (basis_rank) *basis_rank = rb;
        std::vector<bool> out(m.cols(), true);
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (std::size_t r = rb; r < m.rows() && out[c]; ++r)
                if (!ops.is_zero(aug.at(r, basis.size() + c))) out[c] = false;
        return out;
    });
}

}  // namespace simatroid
