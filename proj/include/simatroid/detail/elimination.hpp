#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace simatroid::detail {

/// Row-major dense storage handed to the kernels.
template <class Ops>
struct Dense {
    using T = typename Ops::value_type;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    T& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// In-place Gauss-Jordan elimination. Pivots are taken column by column,
/// choosing the first nonzero entry at or below the current row, so the
/// result is reproducible. Returns the pivot columns in increasing order.
template <class Ops>
std::vector<std::size_t> rref(const Ops& ops, Dense<Ops>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && ops.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row) {
            for (std::size_t c = col; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        }
        auto inv = ops.inv(m.at(row, col));
        for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = ops.mul(m.at(row, c), inv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || ops.is_zero(m.at(r, col))) continue;
            auto f = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = ops.sub_mul(m.at(r, c), f, m.at(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Ops>
std::size_t rank_of(const Ops& ops, Dense<Ops> m) {
    return rref(ops, m).size();
}

/// Basis of {x : m x = 0}, one vector per free column, in column order.
template <class Ops>
std::vector<std::vector<typename Ops::value_type>> nullspace(const Ops& ops, Dense<Ops> m) {
    auto pivots = rref(ops, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename Ops::value_type>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename Ops::value_type> x(m.cols, ops.zero());
        x[free] = ops.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = ops.neg(m.at(i, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace simatroid::detail
