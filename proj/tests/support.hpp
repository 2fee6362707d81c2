#pragma once

// Shared helpers for the test binaries: compact face literals, small
// random corpora and independent reference computations that do not go
// through the library's elimination code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "simatroid/commands.hpp"

namespace testing {

using namespace simatroid;

/// "1245" -> {1,2,4,5}; vertices are single digits.
inline Face F(std::string_view digits) {
    std::vector<int> vs;
    for (char ch : digits) vs.push_back(ch - '0');
    return Face::of(vs);
}

inline FaceSet Fs(std::initializer_list<std::string_view> items) {
    FaceSet out;
    for (auto s : items) out.push_back(F(s));
    normalize(out);
    return out;
}

inline HypercliqueComplex example3() { return gen_example3().complex(); }

inline const FieldSpec GF2 = FieldSpec::prime(2);
inline const FieldSpec GF3 = FieldSpec::prime(3);
inline const FieldSpec GF5 = FieldSpec::prime(5);
inline const FieldSpec QQ = FieldSpec::rationals();

/// Rank by textbook elimination on rationals, reducing mod p at the end of
/// every operation when p > 0.
inline std::size_t reference_rank(std::vector<std::vector<mpq_class>> a, std::uint32_t p) {
    auto reduce = [p](mpq_class& x) {
        if (p == 0) return;
        mpz_class num = x.get_num(), den = x.get_den(), pp = p;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
        mpz_class r = (num * inv) % pp;
        if (r < 0) r += pp;
        x = r;
    };
    for (auto& row : a)
        for (auto& x : row) reduce(x);
    std::size_t rank = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) {
                a[r][j] -= f * a[rank][j];
                reduce(a[r][j]);
            }
        }
        ++rank;
    }
    return rank;
}

/// Boundary columns of `faces` written out from the sign rule, as rows
/// indexed by all (k-1)-subsets of [n].
inline std::vector<std::vector<mpq_class>> reference_boundary(int n, int k, const FaceSet& faces) {
    FaceSet rows;
    for_each_subset(Face::range(n), k - 1, [&](Face f) { rows.push_back(f); });
    std::vector<std::vector<mpq_class>> a(rows.size(), std::vector<mpq_class>(faces.size(), 0));
    for (std::size_t j = 0; j < faces.size(); ++j) {
        auto vs = faces[j].vertices();
        for (std::size_t pos = 0; pos < vs.size(); ++pos) {
            Face sub = faces[j].without(vs[pos]);
            auto r = std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin();
            a[r][j] = (pos % 2 == 0) ? -1 : 1;  // (-1)^(pos+1)
        }
    }
    return a;
}

inline std::size_t reference_rank_of(int n, int k, const FaceSet& faces, FieldSpec field) {
    return reference_rank(reference_boundary(n, k, faces), field.characteristic());
}

/// Circuits as minimal dependent subsets, by scanning subsets in order of
/// size and rejecting supersets of circuits already found.
inline std::vector<FaceSet> reference_circuits(int n, int k, const FaceSet& ground, FieldSpec field) {
    std::vector<FaceSet> out;
    std::vector<std::uint32_t> found;
    std::size_t m = ground.size();
    for (std::size_t size = 1; size <= m; ++size) {
        for (std::uint32_t s = 0; s < (1U << m); ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) != size) continue;
            if (std::any_of(found.begin(), found.end(), [&](std::uint32_t c) { return (c & s) == c; })) continue;
            FaceSet sub;
            for (std::size_t i = 0; i < m; ++i)
                if (s >> i & 1) sub.push_back(ground[i]);
            if (reference_rank_of(n, k, sub, field) < sub.size()) {
                found.push_back(s);
                out.push_back(sub);
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

/// Seeded random instances; densities cycle through a few values so the
/// corpus mixes sparse and dense families.
inline std::vector<Instance> corpus(int k, int n_min, int n_max, std::size_t count, std::uint64_t seed0) {
    const Density densities[] = {{1, 3}, {1, 2}, {2, 3}, {4, 5}};
    std::vector<Instance> out;
    for (std::size_t i = 0; out.size() < count; ++i) {
        int n = n_min + static_cast<int>(i % static_cast<std::size_t>(n_max - n_min + 1));
        out.push_back(gen_random(n, k, densities[i % 4], seed0 + i));
    }
    return out;
}

}  // namespace testing
