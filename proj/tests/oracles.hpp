#pragma once

// Test-only oracles, deliberately independent of the kernel's elimination
// paths: cofactor determinants, plain rational Gaussian rank, and the
// minor-gcd route to invariant factors.

#include <random>
#include <vector>

#include "max4pc/exact_linalg.hpp"

namespace oracles {

using max4pc::BigInt;
using max4pc::BigIntMatrix;
using max4pc::Rational;

inline BigInt cofactor_det(const BigIntMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    BigInt det = 0;
    for (int k = 0; k < n; ++k) {
        if (sgn(m(0, k)) == 0) continue;
        BigIntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                minor.at(i - 1, jj++) = m(i, j);
            }
        }
        BigInt term = m(0, k) * cofactor_det(minor);
        if (k % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// Textbook Gaussian elimination over the rationals, first-nonzero pivots.
inline int rational_rank(const BigIntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = Rational(m(i, j));

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (sgn(a[i][col]) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            if (sgn(a[i][col]) == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace detail {

inline void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace detail

// d_k = D_k / D_{k-1} where D_k is the gcd of all k x k minors. Exponential;
// keep the input at 6x6 or below.
inline std::vector<BigInt> minor_gcd_invariant_factors(const BigIntMatrix& m) {
    const int steps = std::min(m.rows(), m.cols());
    std::vector<BigInt> factors;
    BigInt prev_gcd = 1;
    for (int k = 1; k <= steps; ++k) {
        std::vector<std::vector<int>> row_sets, col_sets;
        detail::combinations(m.rows(), k, row_sets);
        detail::combinations(m.cols(), k, col_sets);
        BigInt g = 0;
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) {
                BigIntMatrix sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.at(i, j) = m(rs[i], cs[j]);
                BigInt d = cofactor_det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
                if (g == 1) break;
            }
        if (sgn(g) == 0) {
            for (int t = k; t <= steps; ++t) factors.emplace_back(0);
            return factors;
        }
        factors.push_back(g / prev_gcd);
        prev_gcd = g;
    }
    return factors;
}

inline BigIntMatrix random_matrix(int rows, int cols, int lo, int hi, std::mt19937_64& rng) {
    BigIntMatrix m(rows, cols);
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<long>(lo + static_cast<long long>(rng() % span));
    return m;
}

inline BigIntMatrix random_symmetric(int n, int lo, int hi, std::mt19937_64& rng) {
    BigIntMatrix m(n, n);
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long v = static_cast<long>(lo + static_cast<long long>(rng() % span));
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

}  // namespace oracles
