#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <vector>

#include "max4pc/errors.hpp"
#include "max4pc/pair_matrix.hpp"

namespace max4pc {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense matrix of arbitrary-precision integers. Everything in this module is
// exact; no floating point anywhere.
class BigIntMatrix {
public:
    BigIntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}
    BigIntMatrix(std::initializer_list<std::initializer_list<long long>> values);

    static BigIntMatrix identity(int n);
    static BigIntMatrix from_pair_matrix(const PairMatrix& m);
    static BigIntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    const BigInt& operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }
    BigInt& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    BigIntMatrix transpose() const;
    friend BigIntMatrix operator*(const BigIntMatrix& a, const BigIntMatrix& b);
    friend bool operator==(const BigIntMatrix&, const BigIntMatrix&) = default;

private:
    int rows_, cols_;
    std::vector<BigInt> entries_;
};

// Invariant factors over the integers. `invariant_factors` keeps the
// computation's natural order: the nonzero divisibility chain d1 | d2 | ...
// first, zeros last. Reports print zeros first; use zeros_first() there.
struct SnfResult {
    std::vector<BigInt> invariant_factors;
    // Unimodular transforms with left * input * right = diag(factors); only
    // populated when requested.
    std::optional<BigIntMatrix> left;
    std::optional<BigIntMatrix> right;

    int rank() const;
    std::vector<BigInt> zeros_first() const;
};

struct Inertia {
    int n_zero = 0;
    int n_plus = 0;
    int n_minus = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Monic characteristic polynomial, coefficients in descending powers:
// coefficients[0] = 1 is the x^dim term, coefficients[dim] the constant.
struct CharPoly {
    std::vector<BigInt> coefficients;
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// Fraction-free (Bareiss) elimination; pivots on the first nonzero entry in
// the column, row swaps tracked by sign. Throws NotSquare.
BigInt bareiss_det(const BigIntMatrix& m);

// Rank over the rationals by fraction-free reduction with a full search for
// a minimal-magnitude nonzero pivot in the remaining submatrix.
int exact_rank(const BigIntMatrix& m);

// Integer row/column reduction with minimal-|entry| pivots, then a post-pass
// that enforces the divisibility chain.
SnfResult smith_normal_form(const BigIntMatrix& m, bool track_transforms = false);

// Exact inertia through congruence steps over the rationals: largest
// |diagonal| pivots, 2x2 anti-diagonal pivots (contributing one +1 and one
// -1) when the live diagonal is all zero. Throws NotSymmetric.
Inertia symmetric_inertia(const BigIntMatrix& m);

// Faddeev-LeVerrier recurrence; every division is exact. Stops early once
// the shifted iterate vanishes (all later coefficients are zero).
CharPoly char_poly(const BigIntMatrix& m);

// Descartes' rule on the nonzero coefficient signs. Exact root counts for
// real-rooted input (multiplicity included), which symmetric matrices give.
int descartes_positive_roots(const CharPoly& p);
int descartes_negative_roots(const CharPoly& p);
// Multiplicity of the root 0, i.e. trailing zero coefficients.
int zero_root_multiplicity(const CharPoly& p);

}  // namespace max4pc
