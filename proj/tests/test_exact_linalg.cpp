#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "max4pc/basis.hpp"
#include "max4pc/exact_linalg.hpp"
#include "oracles.hpp"

using namespace max4pc;

namespace {

const char* kP3 = "3\n1 2\n2 3\n";
const char* kP4 = "4\n1 2\n2 3\n3 4\n";
const char* kS4 = "4\n1 2\n1 3\n1 4\n";

BigIntMatrix max4pc_big(const char* doc) {
    return BigIntMatrix::from_pair_matrix(build_matrix(parse_tree(doc), MatrixKind::Max4PC));
}

std::vector<long long> as_longs(const std::vector<BigInt>& v) {
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

}  // namespace

TEST_CASE("bareiss determinant on pinned matrices") {
    CHECK(bareiss_det(BigIntMatrix{{2, 3}, {3, 4}}) == -1);
    CHECK(bareiss_det(BigIntMatrix::identity(5)) == 1);
    CHECK(bareiss_det(BigIntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(bareiss_det(BigIntMatrix{{0, 1}, {1, 0}}) == -1);  // needs the row swap
    CHECK_THROWS_AS(bareiss_det(BigIntMatrix(2, 3)), NotSquare);
}

TEST_CASE("basis submatrix of the four-vertex path has determinant 4") {
    const Tree t = parse_tree(kP4);
    const BasisSet b = build_basis(t, 0, ChoicePolicy::deterministic_min());
    const PairMatrix m = build_matrix(t, MatrixKind::Max4PC);
    const BigIntMatrix sub = BigIntMatrix::from_rows(m.submatrix(b.pairs, b.pairs));
    // Frozen from cofactor expansion by hand; equals (-1)^2 * 2^2.
    CHECK(oracles::cofactor_det(sub) == 4);
    CHECK(bareiss_det(sub) == 4);
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const BigIntMatrix m = oracles::random_matrix(n, n, -9, 9, rng);
        REQUIRE(bareiss_det(m) == oracles::cofactor_det(m));
    }
}

TEST_CASE("exact rank on pinned matrices") {
    CHECK(exact_rank(max4pc_big(kP3)) == 2);
    CHECK(exact_rank(BigIntMatrix(4, 4)) == 0);
    const BigIntMatrix p4 = max4pc_big(kP4);
    CHECK(exact_rank(p4) == 4);
    CHECK(oracles::rational_rank(p4) == 4);
}

TEST_CASE("exact rank agrees with rational elimination on random matrices") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 6);
        const int cols = 1 + static_cast<int>(rng() % 6);
        const BigIntMatrix m = oracles::random_matrix(rows, cols, -4, 4, rng);
        REQUIRE(exact_rank(m) == oracles::rational_rank(m));
    }
}

TEST_CASE("smith normal form of pinned matrices") {
    CHECK(as_longs(smith_normal_form(BigIntMatrix{{2, 0}, {0, 3}}).invariant_factors) ==
          (std::vector<long long>{1, 6}));
    // Path on three vertices: factors (1,1,0), i.e. zeros-first (0,1,1).
    CHECK(as_longs(smith_normal_form(max4pc_big(kP3)).zeros_first()) ==
          (std::vector<long long>{0, 1, 1}));
    CHECK(as_longs(smith_normal_form(max4pc_big(kP4)).zeros_first()) ==
          (std::vector<long long>{0, 0, 1, 1, 2, 2}));
}

TEST_CASE("smith normal form matches the minor-gcd oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 5);
        const int cols = 1 + static_cast<int>(rng() % 5);
        const BigIntMatrix m = oracles::random_matrix(rows, cols, -6, 6, rng);
        REQUIRE(smith_normal_form(m).invariant_factors ==
                oracles::minor_gcd_invariant_factors(m));
    }
}

TEST_CASE("smith normal form transforms reconstruct the diagonal") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 5);
        const int cols = 1 + static_cast<int>(rng() % 5);
        const BigIntMatrix m = oracles::random_matrix(rows, cols, -9, 9, rng);
        const SnfResult snf = smith_normal_form(m, true);
        REQUIRE(snf.left.has_value());
        REQUIRE(snf.right.has_value());
        const BigIntMatrix product = *snf.left * m * *snf.right;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                REQUIRE(product(i, j) ==
                        (i == j && i < static_cast<int>(snf.invariant_factors.size())
                             ? snf.invariant_factors[i]
                             : BigInt(0)));
        const BigInt ldet = bareiss_det(*snf.left), rdet = bareiss_det(*snf.right);
        REQUIRE((ldet == 1 || ldet == -1));
        REQUIRE((rdet == 1 || rdet == -1));
    }
}

TEST_CASE("rank equals the number of nonzero invariant factors") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const BigIntMatrix m = oracles::random_matrix(n, n, -3, 3, rng);
        REQUIRE(exact_rank(m) == smith_normal_form(m).rank());
    }
}

TEST_CASE("inertia of pinned matrices") {
    CHECK(symmetric_inertia(BigIntMatrix{{5, 0, 0}, {0, -2, 0}, {0, 0, 0}}) ==
          (Inertia{1, 1, 1}));
    CHECK(symmetric_inertia(BigIntMatrix{{0, 2}, {2, 0}}) == (Inertia{0, 1, 1}));
    CHECK(symmetric_inertia(max4pc_big(kP4)) == (Inertia{2, 2, 2}));
    // Zero diagonal throughout: the 2x2 anti-diagonal pivot must also update
    // the trailing block. Hand check via the sign pattern of
    // x^3 - 38x - 60: one positive root, two negative.
    CHECK(symmetric_inertia(BigIntMatrix{{0, 2, 3}, {2, 0, 5}, {3, 5, 0}}) ==
          (Inertia{0, 1, 2}));
    CHECK_THROWS_AS(symmetric_inertia(BigIntMatrix{{1, 2}, {3, 4}}), NotSymmetric);
}

TEST_CASE("inertia is invariant under integer congruence") {
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const BigIntMatrix a = oracles::random_symmetric(n, -5, 5, rng);
        const Inertia base = symmetric_inertia(a);
        REQUIRE(base.n_zero + base.n_plus + base.n_minus == n);
        for (int rep = 0; rep < 5; ++rep) {
            BigIntMatrix q(n, n);
            do {
                q = oracles::random_matrix(n, n, -2, 2, rng);
            } while (sgn(bareiss_det(q)) == 0);
            REQUIRE(symmetric_inertia(q * a * q.transpose()) == base);
        }
    }
}

TEST_CASE("characteristic polynomial of pinned matrices") {
    // Star on four vertices: x^6 - 18x^5 - 9x^4.
    CHECK(char_poly(max4pc_big(kS4)).coefficients ==
          (std::vector<BigInt>{1, -18, -9, 0, 0, 0, 0}));
    CHECK(char_poly(BigIntMatrix::identity(2)).coefficients == (std::vector<BigInt>{1, -2, 1}));
    // Path on three vertices, expanded by hand: x^3 - 8x^2 - 2x.
    CHECK(char_poly(max4pc_big(kP3)).coefficients == (std::vector<BigInt>{1, -8, -2, 0}));
    CHECK_THROWS_AS(char_poly(BigIntMatrix(2, 3)), NotSquare);
}

TEST_CASE("characteristic polynomial constant term is the signed determinant") {
    std::mt19937_64 rng(10101);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const BigIntMatrix m = oracles::random_matrix(n, n, -4, 4, rng);
        const CharPoly p = char_poly(m);
        REQUIRE(p.degree() == n);
        REQUIRE(p.coefficients[0] == 1);
        const BigInt det = bareiss_det(m);
        REQUIRE(p.coefficients[n] == (n % 2 == 0 ? det : BigInt(-det)));
    }
}

TEST_CASE("descartes root counts") {
    CharPoly quad;
    quad.coefficients = {1, -18, -9};  // x^2 - 18x - 9
    CHECK(descartes_positive_roots(quad) == 1);
    CHECK(descartes_negative_roots(quad) == 1);

    CharPoly cube;
    cube.coefficients = {1, 0, 0, 0};  // x^3
    CHECK(descartes_positive_roots(cube) == 0);
    CHECK(descartes_negative_roots(cube) == 0);
    CHECK(zero_root_multiplicity(cube) == 3);

    const CharPoly p4 = char_poly(max4pc_big(kP4));
    CHECK(descartes_positive_roots(p4) == 2);
    CHECK(descartes_negative_roots(p4) == 2);
    CHECK(zero_root_multiplicity(p4) == 2);
}

TEST_CASE("descartes agrees with congruence inertia on symmetric matrices") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const BigIntMatrix a = oracles::random_symmetric(n, -4, 4, rng);
        const Inertia inertia = symmetric_inertia(a);
        const CharPoly p = char_poly(a);
        REQUIRE(descartes_positive_roots(p) == inertia.n_plus);
        REQUIRE(descartes_negative_roots(p) == inertia.n_minus);
        REQUIRE(zero_root_multiplicity(p) == inertia.n_zero);
    }
}
