#include "max4pc/exact_linalg.hpp"

#include <algorithm>
#include <cassert>

namespace max4pc {

BigIntMatrix::BigIntMatrix(std::initializer_list<std::initializer_list<long long>> values)
    : rows_(static_cast<int>(values.size())),
      cols_(values.size() ? static_cast<int>(values.begin()->size()) : 0) {
    entries_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : values) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("BigIntMatrix: ragged initializer");
        for (long long v : row) entries_.emplace_back(static_cast<long>(v));
    }
}

BigIntMatrix BigIntMatrix::identity(int n) {
    BigIntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigIntMatrix BigIntMatrix::from_pair_matrix(const PairMatrix& p) {
    BigIntMatrix m(p.size(), p.size());
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) m.at(i, j) = static_cast<long>(p(i, j));
    return m;
}

BigIntMatrix BigIntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    BigIntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("BigIntMatrix: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

bool BigIntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool BigIntMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (sgn(e) != 0) return false;
    return true;
}

BigIntMatrix BigIntMatrix::transpose() const {
    BigIntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
    return t;
}

BigIntMatrix operator*(const BigIntMatrix& a, const BigIntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    BigIntMatrix c(a.rows(), b.cols());
    // i-k-j order with mpz_addmul keeps b and c accesses row-contiguous.
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                mpz_addmul(c.at(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

BigInt bareiss_det(const BigIntMatrix& input) {
    if (!input.is_square()) throw NotSquare("bareiss_det: matrix is not square");
    const int n = input.rows();
    if (n == 0) return 1;
    BigIntMatrix m = input;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(m(i, k)) != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            for (int j = 0; j < n; ++j) swap(m.at(k, j), m.at(r, j));
            sign = -sign;
        }
        const BigInt pivot = m(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt v = m(i, j) * pivot - m(i, k) * m(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? m(n - 1, n - 1) : BigInt(-m(n - 1, n - 1));
}

int exact_rank(const BigIntMatrix& input) {
    BigIntMatrix m = input;
    const int rows = m.rows(), cols = m.cols();
    const int steps = std::min(rows, cols);
    BigInt prev = 1;
    int rank = 0;
    for (int k = 0; k < steps; ++k) {
        // Full pivot search: minimal nonzero magnitude in the live block.
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (sgn(m(i, j)) != 0 &&
                    (pi < 0 || mpz_cmpabs(m(i, j).get_mpz_t(), m(pi, pj).get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != k)
            for (int j = 0; j < cols; ++j) swap(m.at(k, j), m.at(pi, j));
        if (pj != k)
            for (int i = 0; i < rows; ++i) swap(m.at(i, k), m.at(i, pj));
        ++rank;
        const BigInt pivot = m(k, k);
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j) {
                BigInt v = m(i, j) * pivot - m(i, k) * m(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = pivot;
    }
    return rank;
}

int SnfResult::rank() const {
    int r = 0;
    for (const auto& d : invariant_factors)
        if (sgn(d) != 0) ++r;
    return r;
}

std::vector<BigInt> SnfResult::zeros_first() const {
    std::vector<BigInt> out;
    out.reserve(invariant_factors.size());
    for (const auto& d : invariant_factors)
        if (sgn(d) == 0) out.push_back(d);
    for (const auto& d : invariant_factors)
        if (sgn(d) != 0) out.push_back(d);
    return out;
}

namespace {

// Row/column operation helpers that mirror every move into the optional
// transform accumulators, so left * input * right = work stays invariant.
struct SnfWork {
    BigIntMatrix a;
    std::optional<BigIntMatrix> left;   // rows x rows
    std::optional<BigIntMatrix> right;  // cols x cols

    void swap_rows(int r, int s) {
        if (r == s) return;
        for (int j = 0; j < a.cols(); ++j) swap(a.at(r, j), a.at(s, j));
        if (left)
            for (int j = 0; j < left->cols(); ++j) swap(left->at(r, j), left->at(s, j));
    }
    void swap_cols(int r, int s) {
        if (r == s) return;
        for (int i = 0; i < a.rows(); ++i) swap(a.at(i, r), a.at(i, s));
        if (right)
            for (int i = 0; i < right->rows(); ++i) swap(right->at(i, r), right->at(i, s));
    }
    // row r += f * row s
    void add_row(int r, int s, const BigInt& f) {
        for (int j = 0; j < a.cols(); ++j)
            mpz_addmul(a.at(r, j).get_mpz_t(), f.get_mpz_t(), a(s, j).get_mpz_t());
        if (left)
            for (int j = 0; j < left->cols(); ++j)
                mpz_addmul(left->at(r, j).get_mpz_t(), f.get_mpz_t(), (*left)(s, j).get_mpz_t());
    }
    // col r += f * col s
    void add_col(int r, int s, const BigInt& f) {
        for (int i = 0; i < a.rows(); ++i)
            mpz_addmul(a.at(i, r).get_mpz_t(), f.get_mpz_t(), a(i, s).get_mpz_t());
        if (right)
            for (int i = 0; i < right->rows(); ++i)
                mpz_addmul(right->at(i, r).get_mpz_t(), f.get_mpz_t(), (*right)(i, s).get_mpz_t());
    }
    void negate_row(int r) {
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) = -a(r, j);
        if (left)
            for (int j = 0; j < left->cols(); ++j) left->at(r, j) = -(*left)(r, j);
    }
};

}  // namespace

SnfResult smith_normal_form(const BigIntMatrix& input, bool track_transforms) {
    SnfWork w{input, std::nullopt, std::nullopt};
    if (track_transforms) {
        w.left = BigIntMatrix::identity(input.rows());
        w.right = BigIntMatrix::identity(input.cols());
    }
    const int rows = input.rows(), cols = input.cols();
    const int steps = std::min(rows, cols);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Minimal nonzero |entry| in the live block becomes the pivot.
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (sgn(w.a(i, j)) != 0 &&
                        (pi < 0 ||
                         mpz_cmpabs(w.a(i, j).get_mpz_t(), w.a(pi, pj).get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                t = steps;  // live block is zero; remaining factors stay 0
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            // Euclidean clearing of the pivot row and column. Any nonzero
            // remainder is strictly smaller than the pivot, so re-picking
            // terminates.
            bool cleared = true;
            for (int i = t + 1; i < rows; ++i) {
                if (sgn(w.a(i, t)) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), w.a(i, t).get_mpz_t(), w.a(t, t).get_mpz_t());
                if (sgn(q) != 0) w.add_row(i, t, BigInt(-q));
                if (sgn(w.a(i, t)) != 0) cleared = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (sgn(w.a(t, j)) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), w.a(t, j).get_mpz_t(), w.a(t, t).get_mpz_t());
                if (sgn(q) != 0) w.add_col(j, t, BigInt(-q));
                if (sgn(w.a(t, j)) != 0) cleared = false;
            }
            if (!cleared) continue;

            // Fold any interior entry the pivot misses into the pivot row;
            // the next round shrinks the pivot toward the gcd. This is what
            // makes each factor divide the next.
            bool divides_all = true;
            for (int i = t + 1; i < rows && divides_all; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(w.a(i, j).get_mpz_t(), w.a(t, t).get_mpz_t())) {
                        w.add_row(t, i, BigInt(1));
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (t >= steps) break;
        if (sgn(w.a(t, t)) < 0) w.negate_row(t);
    }

    SnfResult result;
    result.invariant_factors.reserve(steps);
    for (int t = 0; t < steps; ++t) result.invariant_factors.push_back(w.a(t, t));

    // The pivot loop already guarantees d_t | d_{t+1}; treat a violation as
    // a kernel bug rather than silently repairing it.
    for (size_t i = 0; i + 1 < result.invariant_factors.size(); ++i) {
        const BigInt& d = result.invariant_factors[i];
        const BigInt& e = result.invariant_factors[i + 1];
        if (sgn(d) != 0 && !mpz_divisible_p(e.get_mpz_t(), d.get_mpz_t()))
            throw std::logic_error("smith_normal_form: divisibility chain violated");
        if (sgn(d) == 0 && sgn(e) != 0)
            throw std::logic_error("smith_normal_form: zero factor precedes a nonzero one");
    }

    result.left = std::move(w.left);
    result.right = std::move(w.right);
    return result;
}

namespace {

class RationalMatrix {
public:
    explicit RationalMatrix(const BigIntMatrix& m)
        : n_(m.rows()), q_(static_cast<size_t>(n_) * n_) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) q_[idx(i, j)] = Rational(m(i, j));
    }
    int n() const { return n_; }
    Rational& at(int i, int j) { return q_[idx(i, j)]; }
    const Rational& operator()(int i, int j) const { return q_[idx(i, j)]; }

    void symmetric_swap(int r, int s) {
        if (r == s) return;
        for (int j = 0; j < n_; ++j) swap(at(r, j), at(s, j));
        for (int i = 0; i < n_; ++i) swap(at(i, r), at(i, s));
    }

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
    int n_;
    std::vector<Rational> q_;
};

}  // namespace

Inertia symmetric_inertia(const BigIntMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetric("symmetric_inertia: matrix is not symmetric");
    RationalMatrix q(m);
    const int n = q.n();
    Inertia inertia;
    int k = 0;
    while (k < n) {
        // Largest |diagonal| pivot first.
        int best = -1;
        for (int i = k; i < n; ++i)
            if (sgn(q(i, i)) != 0 && (best < 0 || abs(q(i, i)) > abs(q(best, best)))) best = i;

        if (best >= 0) {
            q.symmetric_swap(k, best);
            const Rational pivot = q(k, k);
            (sgn(pivot) > 0 ? inertia.n_plus : inertia.n_minus) += 1;
            std::vector<Rational> col(n);
            for (int i = k + 1; i < n; ++i) col[i] = q(i, k);
            for (int i = k + 1; i < n; ++i) {
                if (sgn(col[i]) == 0) continue;
                for (int j = i; j < n; ++j) {
                    if (sgn(col[j]) == 0) continue;
                    Rational delta = col[i] * col[j] / pivot;
                    q.at(i, j) -= delta;
                    if (i != j) q.at(j, i) = q(i, j);
                }
            }
            ++k;
            continue;
        }

        // Zero trailing diagonal: either the block is zero, or a 2x2
        // anti-diagonal pivot [[0,a],[a,0]] contributes one +1 and one -1.
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (sgn(q(i, j)) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) {
            inertia.n_zero += n - k;
            break;
        }
        q.symmetric_swap(k, pi);
        q.symmetric_swap(k + 1, pj);
        const Rational a = q(k, k + 1);
        inertia.n_plus += 1;
        inertia.n_minus += 1;
        std::vector<Rational> u(n), v(n);
        for (int i = k + 2; i < n; ++i) {
            u[i] = q(i, k);
            v[i] = q(i, k + 1);
        }
        for (int i = k + 2; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rational delta = (u[i] * v[j] + v[i] * u[j]) / a;
                if (sgn(delta) == 0) continue;
                q.at(i, j) -= delta;
                if (i != j) q.at(j, i) = q(i, j);
            }
        k += 2;
    }
    return inertia;
}

CharPoly char_poly(const BigIntMatrix& input) {
    if (!input.is_square()) throw NotSquare("char_poly: matrix is not square");
    const int n = input.rows();
    CharPoly p;
    p.coefficients.assign(static_cast<size_t>(n) + 1, BigInt(0));
    p.coefficients[0] = 1;
    if (n == 0) return p;

    auto trace = [n](const BigIntMatrix& m) {
        BigInt t = 0;
        for (int i = 0; i < n; ++i) t += m(i, i);
        return t;
    };

    // shifted = M_k + c_k I; once it vanishes every later term is zero.
    BigIntMatrix shifted = input;
    p.coefficients[1] = -trace(input);
    for (int i = 0; i < n; ++i) shifted.at(i, i) += p.coefficients[1];

    for (int k = 2; k <= n; ++k) {
        if (shifted.is_zero()) break;
        BigIntMatrix mk = input * shifted;
        BigInt t = -trace(mk);
        assert(mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(k)));
        mpz_divexact_ui(p.coefficients[k].get_mpz_t(), t.get_mpz_t(),
                        static_cast<unsigned long>(k));
        shifted = std::move(mk);
        for (int i = 0; i < n; ++i) shifted.at(i, i) += p.coefficients[k];
    }
    return p;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
    int variations = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace

int descartes_positive_roots(const CharPoly& p) {
    std::vector<int> signs;
    signs.reserve(p.coefficients.size());
    for (const auto& c : p.coefficients) signs.push_back(sgn(c));
    return sign_variations(signs);
}

int descartes_negative_roots(const CharPoly& p) {
    // Signs of p(-x): coefficient of x^e flips when e is odd.
    std::vector<int> signs;
    const int deg = p.degree();
    signs.reserve(p.coefficients.size());
    for (size_t k = 0; k < p.coefficients.size(); ++k) {
        const int exponent = deg - static_cast<int>(k);
        int s = sgn(p.coefficients[k]);
        if (exponent % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return sign_variations(signs);
}

int zero_root_multiplicity(const CharPoly& p) {
    int count = 0;
    for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
        if (sgn(*it) != 0) break;
        ++count;
    }
    return count;
}

}  // namespace max4pc
