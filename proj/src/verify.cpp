#include "max4pc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace max4pc {

std::string to_string(CheckId id) {
    switch (id) {
        case CheckId::T1Rank: return "T1-rank";
        case CheckId::T2T4dDet: return "T2/T4d-det";
        case CheckId::T3Snf: return "T3-snf";
        case CheckId::T4aUnique: return "T4a-unique";
        case CheckId::T4bSize: return "T4b-size";
        case CheckId::T4cSpan: return "T4c-span";
        case CheckId::T5Inertia: return "T5-inertia";
        case CheckId::L1PendantRow: return "L1-pendant-row";
        case CheckId::L2ComponentSplit: return "L2-component-split";
        case CheckId::C1SiblingLeaf: return "C1-sibling-leaf";
        case CheckId::StarDet: return "STAR-det";
        case CheckId::StarEigen: return "STAR-eigen";
        case CheckId::FpcMax2: return "FPC-max2";
        case CheckId::ParitySteiner: return "PARITY-steiner";
    }
    return "?";
}

std::optional<CheckId> parse_check_id(const std::string& s) {
    for (CheckId id : kAllCheckIds)
        if (to_string(id) == s) return id;
    return std::nullopt;
}

std::set<CheckId> all_checks() {
    return std::set<CheckId>(kAllCheckIds.begin(), kAllCheckIds.end());
}

Witness make_witness(const Tree& t, std::string detail, std::string expected,
                     std::string computed) {
    Witness w;
    w.n = t.n();
    if (t.n() >= 2)
        for (int v : prufer_encode(t)) w.prufer.push_back(v + 1);
    w.detail = std::move(detail);
    w.expected = std::move(expected);
    w.computed = std::move(computed);
    return w;
}

namespace {

std::string pair_str(VertexPair p) {
    return "{" + std::to_string(p.a + 1) + "," + std::to_string(p.b + 1) + "}";
}

std::string inertia_str(const Inertia& i) {
    return "(" + std::to_string(i.n_zero) + "," + std::to_string(i.n_plus) + "," +
           std::to_string(i.n_minus) + ")";
}

std::string factors_str(const std::vector<BigInt>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + "]";
}

long long pairs_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

// Lazily built per-tree artifacts shared by the checkers.
struct TreeContext {
    const Tree& tree;
    const VerifyOptions& opts;
    LeafProfile profile;
    bool star;

    std::optional<PairMatrix> max_m, min_m, steiner_m;
    std::optional<BigIntMatrix> max_big;
    std::optional<std::vector<BasisSet>> family_;

    TreeContext(const Tree& t, const VerifyOptions& o)
        : tree(t), opts(o), profile(leaf_profile(t)), star(t.star_center() >= 0) {}

    int n() const { return tree.n(); }
    int np() const { return tree.n() - profile.p; }

    const PairMatrix& max4pc() {
        if (!max_m) max_m = build_matrix(tree, MatrixKind::Max4PC);
        return *max_m;
    }
    const PairMatrix& min4pc() {
        if (!min_m) min_m = build_matrix(tree, MatrixKind::Min4PC);
        return *min_m;
    }
    const PairMatrix& steiner2() {
        if (!steiner_m) steiner_m = build_matrix(tree, MatrixKind::Steiner2);
        return *steiner_m;
    }
    const BigIntMatrix& max_bigint() {
        if (!max_big) max_big = BigIntMatrix::from_pair_matrix(max4pc());
        return *max_big;
    }
    const std::vector<BasisSet>& family() {
        if (!family_)
            family_ = enumerate_family(tree, profile.p + opts.extra_random_runs,
                                       opts.family_seed);
        return *family_;
    }

    BigIntMatrix basis_square(const BasisSet& b) {
        return BigIntMatrix::from_rows(max4pc().submatrix(b.pairs, b.pairs));
    }
    BigIntMatrix basis_rows(const BasisSet& b) {
        return BigIntMatrix::from_rows(max4pc().submatrix(b.pairs, max4pc().index().pairs()));
    }
};

TheoremCheck fail(CheckId id, TreeContext& ctx, std::string detail, std::string expected,
                  std::string computed) {
    TheoremCheck check{id, false, std::nullopt, 0.0};
    check.witness = make_witness(ctx.tree, std::move(detail), std::move(expected),
                                 std::move(computed));
    return check;
}

TheoremCheck pass(CheckId id) { return TheoremCheck{id, true, std::nullopt, 0.0}; }

BigInt det_formula(int n, int p) {
    BigInt magnitude;
    mpz_ui_pow_ui(magnitude.get_mpz_t(), 2, static_cast<unsigned long>(2 * (n - p - 1)));
    return (n - p) % 2 == 0 ? magnitude : BigInt(-magnitude);
}

std::vector<double> float_eigenvalues(const PairMatrix& m) {
    const int size = m.size();
    Eigen::MatrixXd a(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) a(i, j) = static_cast<double>(m(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + size);
    return ev;  // ascending
}

TheoremCheck check_t1_rank(TreeContext& ctx) {
    const int computed = exact_rank(ctx.max_bigint());
    const int expected = 2 * ctx.np();
    if (computed != expected)
        return fail(CheckId::T1Rank, ctx, "rank(Max4PC)", std::to_string(expected),
                    std::to_string(computed));
    return pass(CheckId::T1Rank);
}

TheoremCheck check_t2_t4d_det(TreeContext& ctx) {
    const BigInt expected = det_formula(ctx.n(), ctx.profile.p);
    for (const BasisSet& b : ctx.family()) {
        const BigInt det = bareiss_det(ctx.basis_square(b));
        if (det != expected)
            return fail(CheckId::T2T4dDet, ctx,
                        "det Max4PC[B,B], start leaf " + std::to_string(b.start_leaf + 1),
                        expected.get_str(), det.get_str());
    }
    return pass(CheckId::T2T4dDet);
}

std::vector<BigInt> snf_formula_zeros_first(int n, int p) {
    std::vector<BigInt> out;
    for (long long i = 0; i < pairs_count(n) - 2 * (n - p); ++i) out.emplace_back(0);
    out.emplace_back(1);
    out.emplace_back(1);
    for (int i = 0; i < 2 * (n - p - 1); ++i) out.emplace_back(2);
    return out;
}

TheoremCheck check_t3_snf(TreeContext& ctx) {
    const SnfResult snf = smith_normal_form(ctx.max_bigint());
    const std::vector<BigInt> computed = snf.zeros_first();
    const std::vector<BigInt> expected = snf_formula_zeros_first(ctx.n(), ctx.profile.p);
    if (computed != expected)
        return fail(CheckId::T3Snf, ctx, "invariant factors (zeros first)",
                    factors_str(expected), factors_str(computed));
    return pass(CheckId::T3Snf);
}

TheoremCheck check_t4a_unique(TreeContext& ctx) {
    for (const BasisSet& b : ctx.family()) {
        const std::set<VertexPair> in_basis(b.pairs.begin(), b.pairs.end());
        int count = 0;
        std::string triples;
        for (int u = 0; u < ctx.n(); ++u) {
            if (!ctx.tree.is_leaf(u)) continue;
            const int v = ctx.tree.neighbors(u)[0];
            if (!in_basis.count(VertexPair(u, v))) continue;
            for (int w : ctx.tree.neighbors(v)) {
                if (w == u || ctx.tree.degree(w) <= 1) continue;
                if (!in_basis.count(VertexPair(u, w))) continue;
                ++count;
                triples += " (u,v,w)=(" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                           "," + std::to_string(w + 1) + ")";
            }
        }
        if (count != 1)
            return fail(CheckId::T4aUnique, ctx,
                        "unique (u,v,w) triple, start leaf " + std::to_string(b.start_leaf + 1) +
                            ";" + triples,
                        "1", std::to_string(count));
    }
    return pass(CheckId::T4aUnique);
}

TheoremCheck check_t4b_size(TreeContext& ctx) {
    const size_t expected = static_cast<size_t>(2 * ctx.np());
    for (const BasisSet& b : ctx.family()) {
        std::set<VertexPair> distinct(b.pairs.begin(), b.pairs.end());
        if (b.pairs.size() != expected || distinct.size() != b.pairs.size())
            return fail(CheckId::T4bSize, ctx,
                        "|B|, start leaf " + std::to_string(b.start_leaf + 1),
                        std::to_string(expected), std::to_string(b.pairs.size()));
    }
    return pass(CheckId::T4bSize);
}

TheoremCheck check_t4c_span(TreeContext& ctx) {
    const int expected = 2 * ctx.np();
    for (const BasisSet& b : ctx.family()) {
        const int computed = exact_rank(ctx.basis_rows(b));
        if (computed != expected)
            return fail(CheckId::T4cSpan, ctx,
                        "rank of rows indexed by B, start leaf " +
                            std::to_string(b.start_leaf + 1),
                        std::to_string(expected), std::to_string(computed));
    }
    return pass(CheckId::T4cSpan);
}

TheoremCheck check_t5_inertia(TreeContext& ctx) {
    const int np = ctx.np();
    const Inertia expected{static_cast<int>(pairs_count(ctx.n())) - 2 * np, np, np};
    const Inertia computed = symmetric_inertia(ctx.max_bigint());
    if (computed != expected)
        return fail(CheckId::T5Inertia, ctx, "inertia(Max4PC)", inertia_str(expected),
                    inertia_str(computed));

    // Second exact route on the nonsingular block: Descartes on the
    // characteristic polynomial, plus the congruence inertia of Max4PC[B,B].
    for (const BasisSet& b : ctx.family()) {
        const BigIntMatrix block = ctx.basis_square(b);
        const CharPoly poly = char_poly(block);
        const int pos = descartes_positive_roots(poly);
        const int neg = descartes_negative_roots(poly);
        if (pos != np || neg != np)
            return fail(CheckId::T5Inertia, ctx,
                        "Descartes counts on char_poly(Max4PC[B,B]), start leaf " +
                            std::to_string(b.start_leaf + 1),
                        "(+" + std::to_string(np) + ",-" + std::to_string(np) + ")",
                        "(+" + std::to_string(pos) + ",-" + std::to_string(neg) + ")");
        const Inertia block_inertia = symmetric_inertia(block);
        if (block_inertia != Inertia{0, np, np})
            return fail(CheckId::T5Inertia, ctx,
                        "inertia(Max4PC[B,B]), start leaf " + std::to_string(b.start_leaf + 1),
                        inertia_str(Inertia{0, np, np}), inertia_str(block_inertia));
    }

    if (ctx.opts.float_cross_checks && ctx.max4pc().size() <= ctx.opts.float_max_dim) {
        Inertia counted;
        for (double ev : float_eigenvalues(ctx.max4pc())) {
            if (ev > ctx.opts.float_zero_threshold)
                ++counted.n_plus;
            else if (ev < -ctx.opts.float_zero_threshold)
                ++counted.n_minus;
            else
                ++counted.n_zero;
        }
        if (counted != expected)
            return fail(CheckId::T5Inertia, ctx, "floating eigenvalue sign counts",
                        inertia_str(expected), inertia_str(counted));
    }
    return pass(CheckId::T5Inertia);
}

TheoremCheck check_l1_pendant_row(TreeContext& ctx) {
    const PairMatrix& m = ctx.max4pc();
    for (int leaf : ctx.profile.pendants) {
        const int q = ctx.tree.neighbors(leaf)[0];
        for (int u = 0; u < ctx.n(); ++u) {
            if (u == leaf || u == q) continue;
            const int r1 = m.index().index_of(VertexPair(u, leaf));
            const int r2 = m.index().index_of(VertexPair(u, q));
            for (int c = 0; c < m.size(); ++c)
                if (m(r1, c) != m(r2, c) + 1)
                    return fail(CheckId::L1PendantRow, ctx,
                                "row" + pair_str(VertexPair(u, leaf)) + " vs row" +
                                    pair_str(VertexPair(u, q)) + " at column " +
                                    pair_str(m.index().pair_at(c)),
                                std::to_string(m(r2, c) + 1), std::to_string(m(r1, c)));
        }
    }
    return pass(CheckId::L1PendantRow);
}

TheoremCheck check_l2_component_split(TreeContext& ctx) {
    const PairMatrix& m = ctx.max4pc();
    for (int pd : ctx.profile.pendants) {
        const int q = ctx.tree.neighbors(pd)[0];
        for (int u : ctx.tree.neighbors(q)) {
            if (u == pd) continue;
            // Component of T - q containing u.
            std::vector<char> in_bu(ctx.n(), 0);
            std::vector<int> stack{u};
            in_bu[u] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : ctx.tree.neighbors(v))
                    if (w != q && !in_bu[w]) {
                        in_bu[w] = 1;
                        stack.push_back(w);
                    }
            }
            const int rp = m.index().index_of(VertexPair(pd, q));
            const int ru = m.index().index_of(VertexPair(u, q));
            for (int c = 0; c < m.size(); ++c) {
                const VertexPair ij = m.index().pair_at(c);
                const long long shift = (in_bu[ij.a] && in_bu[ij.b]) ? 2 : 0;
                if (m(rp, c) != m(ru, c) + shift)
                    return fail(CheckId::L2ComponentSplit, ctx,
                                "entry" + pair_str(VertexPair(pd, q)) + " vs entry" +
                                    pair_str(VertexPair(u, q)) + " at column " + pair_str(ij),
                                std::to_string(m(ru, c) + shift), std::to_string(m(rp, c)));
            }
        }
    }
    return pass(CheckId::L2ComponentSplit);
}

TheoremCheck check_c1_sibling_leaf(TreeContext& ctx) {
    const int base_rank = exact_rank(ctx.max_bigint());
    for (int u : ctx.profile.pendants) {
        const int q = ctx.tree.neighbors(u)[0];
        bool has_sibling = false;
        for (int w : ctx.tree.neighbors(q))
            if (w != u && ctx.tree.is_leaf(w)) has_sibling = true;
        if (!has_sibling) continue;

        // T - u with labels compressed to 0..n-2.
        std::vector<int> relabel(ctx.n(), -1);
        int next = 0;
        for (int v = 0; v < ctx.n(); ++v)
            if (v != u) relabel[v] = next++;
        std::vector<VertexPair> edges;
        for (VertexPair e : ctx.tree.edges())
            if (!e.contains(u)) edges.emplace_back(relabel[e.a], relabel[e.b]);
        const Tree reduced = Tree::from_edges(ctx.n() - 1, edges);
        const int reduced_rank =
            exact_rank(BigIntMatrix::from_pair_matrix(build_matrix(reduced, MatrixKind::Max4PC)));
        if (reduced_rank != base_rank)
            return fail(CheckId::C1SiblingLeaf, ctx,
                        "rank after deleting sibling leaf " + std::to_string(u + 1),
                        std::to_string(base_rank), std::to_string(reduced_rank));
    }
    return pass(CheckId::C1SiblingLeaf);
}

TheoremCheck check_star_det(TreeContext& ctx) {
    const int c = ctx.tree.star_center();
    const PairMatrix& m = ctx.max4pc();
    for (int i = 0; i < ctx.n(); ++i) {
        if (i == c) continue;
        for (int j = i; j < ctx.n(); ++j) {
            if (j == c) continue;
            for (int k = j + 1; k < ctx.n(); ++k) {
                if (k == c) continue;
                const BasisSet b = star_basis(ctx.tree, i, j, k);
                const BigInt det = bareiss_det(ctx.basis_square(b));
                if (det != -1)
                    return fail(CheckId::StarDet, ctx,
                                "det over " + pair_str(b.pairs[0]) + "," + pair_str(b.pairs[1]),
                                "-1", det.get_str());
            }
        }
    }
    return pass(CheckId::StarDet);
}

CharPoly star_poly_formula(int n) {
    const long long m = pairs_count(n);
    CharPoly p;
    p.coefficients.assign(static_cast<size_t>(m) + 1, BigInt(0));
    p.coefficients[0] = 1;
    const BigInt nm1(n - 1);
    p.coefficients[1] = BigInt(-2) * nm1 * nm1;  // -2(n-1)^2
    p.coefficients[2] =
        -nm1 * BigInt(static_cast<long>(pairs_count(n - 1)));  // -(n-1) C(n-1,2)
    return p;
}

TheoremCheck check_star_eigen(TreeContext& ctx) {
    const int n = ctx.n();
    const CharPoly computed = char_poly(ctx.max_bigint());
    const CharPoly expected = star_poly_formula(n);
    if (!(computed == expected)) {
        // Both sides are zero past the x^(m-2) coefficient.
        auto head = [](const CharPoly& p) {
            std::string s;
            for (size_t i = 0; i < p.coefficients.size() && i < 4; ++i)
                s += (i ? "," : "") + p.coefficients[i].get_str();
            return s + ",...";
        };
        return fail(CheckId::StarEigen, ctx, "char_poly(Max4PC(S_n)) coefficients",
                    head(expected), head(computed));
    }

    if (ctx.opts.float_cross_checks) {
        const double a = static_cast<double>(n - 1) * (n - 1);
        const double q = static_cast<double>(n - 1) * static_cast<double>(pairs_count(n - 1));
        const double disc = std::sqrt(a * a + q);
        const double root_hi = a + disc, root_lo = a - disc;
        const std::vector<double> ev = float_eigenvalues(ctx.max4pc());
        const double lo = ev.front(), hi = ev.back();
        auto rel_ok = [&](double got, double want) {
            return std::abs(got - want) <= ctx.opts.float_zero_threshold *
                                               std::max(1.0, std::abs(want));
        };
        if (!rel_ok(hi, root_hi) || !rel_ok(lo, root_lo))
            return fail(CheckId::StarEigen, ctx, "extreme eigenvalues vs quadratic roots",
                        std::to_string(root_lo) + ".." + std::to_string(root_hi),
                        std::to_string(lo) + ".." + std::to_string(hi));
    }
    return pass(CheckId::StarEigen);
}

TheoremCheck check_fpc_max2(TreeContext& ctx) {
    const DistanceTable d = all_pairs_distances(ctx.tree);
    const int n = ctx.n();
    auto verify_quad = [&](int w, int x, int y, int z) {
        return check_four_point(d, w, x, y, z);
    };
    if (n <= 7) {
        for (int w = 0; w < n; ++w)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z)
                        if (!verify_quad(w, x, y, z))
                            return fail(CheckId::FpcMax2, ctx,
                                        "quadruple (" + std::to_string(w + 1) + "," +
                                            std::to_string(x + 1) + "," + std::to_string(y + 1) +
                                            "," + std::to_string(z + 1) + ")",
                                        "max attained twice", "max attained once");
    } else {
        std::mt19937_64 rng(ctx.opts.family_seed);
        for (int s = 0; s < ctx.opts.fpc_sample_quadruples; ++s) {
            const int w = static_cast<int>(rng() % n), x = static_cast<int>(rng() % n);
            const int y = static_cast<int>(rng() % n), z = static_cast<int>(rng() % n);
            if (!verify_quad(w, x, y, z))
                return fail(CheckId::FpcMax2, ctx,
                            "quadruple (" + std::to_string(w + 1) + "," + std::to_string(x + 1) +
                                "," + std::to_string(y + 1) + "," + std::to_string(z + 1) + ")",
                            "max attained twice", "max attained once");
        }
    }
    return pass(CheckId::FpcMax2);
}

TheoremCheck check_parity_steiner(TreeContext& ctx) {
    const PairMatrix& hi = ctx.max4pc();
    const PairMatrix& lo = ctx.min4pc();
    const PairMatrix& st = ctx.steiner2();
    for (int r = 0; r < hi.size(); ++r)
        for (int c = 0; c < hi.size(); ++c) {
            if ((hi(r, c) - lo(r, c)) % 2 != 0)
                return fail(CheckId::ParitySteiner, ctx,
                            "parity at " + pair_str(hi.index().pair_at(r)) + "," +
                                pair_str(hi.index().pair_at(c)),
                            "equal parity", std::to_string(hi(r, c)) + " vs " +
                                                std::to_string(lo(r, c)));
            if (hi(r, c) + lo(r, c) != 2 * st(r, c))
                return fail(CheckId::ParitySteiner, ctx,
                            "averaging identity at " + pair_str(hi.index().pair_at(r)) + "," +
                                pair_str(hi.index().pair_at(c)),
                            std::to_string(2 * st(r, c)),
                            std::to_string(hi(r, c) + lo(r, c)));
        }
    return pass(CheckId::ParitySteiner);
}

bool applies(CheckId id, const TreeContext& ctx) {
    const int n = ctx.n();
    switch (id) {
        case CheckId::T1Rank:
        case CheckId::T2T4dDet:
        case CheckId::T3Snf:
        case CheckId::T4bSize:
        case CheckId::T4cSpan:
        case CheckId::T5Inertia:
        case CheckId::L1PendantRow:
        case CheckId::L2ComponentSplit: return n >= 3;
        case CheckId::T4aUnique: return n >= 3 && !ctx.star;
        case CheckId::C1SiblingLeaf: return n >= 4;
        case CheckId::StarDet:
        case CheckId::StarEigen: return n >= 3 && ctx.star;
        case CheckId::FpcMax2:
        case CheckId::ParitySteiner: return n >= 2;
    }
    return false;
}

TheoremCheck run_check(CheckId id, TreeContext& ctx) {
    switch (id) {
        case CheckId::T1Rank: return check_t1_rank(ctx);
        case CheckId::T2T4dDet: return check_t2_t4d_det(ctx);
        case CheckId::T3Snf: return check_t3_snf(ctx);
        case CheckId::T4aUnique: return check_t4a_unique(ctx);
        case CheckId::T4bSize: return check_t4b_size(ctx);
        case CheckId::T4cSpan: return check_t4c_span(ctx);
        case CheckId::T5Inertia: return check_t5_inertia(ctx);
        case CheckId::L1PendantRow: return check_l1_pendant_row(ctx);
        case CheckId::L2ComponentSplit: return check_l2_component_split(ctx);
        case CheckId::C1SiblingLeaf: return check_c1_sibling_leaf(ctx);
        case CheckId::StarDet: return check_star_det(ctx);
        case CheckId::StarEigen: return check_star_eigen(ctx);
        case CheckId::FpcMax2: return check_fpc_max2(ctx);
        case CheckId::ParitySteiner: return check_parity_steiner(ctx);
    }
    throw std::logic_error("unknown check id");
}

}  // namespace

std::vector<TheoremCheck> verify_tree(const Tree& t, const std::set<CheckId>& checks,
                                      const VerifyOptions& opts) {
    if (t.n() < 2) throw std::invalid_argument("verify_tree: need n >= 2");
    TreeContext ctx(t, opts);
    std::vector<TheoremCheck> out;
    for (CheckId id : kAllCheckIds) {
        if (!checks.count(id) || !applies(id, ctx)) continue;
        const auto start = std::chrono::steady_clock::now();
        TheoremCheck check = run_check(id, ctx);
        check.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        out.push_back(std::move(check));
    }
    return out;
}

TheoremCheck verify_star_eigen(int n, const VerifyOptions& opts) {
    if (n < 3) throw std::invalid_argument("verify_star_eigen: need n >= 3");
    std::vector<VertexPair> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    const Tree star = Tree::from_edges(n, edges);
    TreeContext ctx(star, opts);
    return check_star_eigen(ctx);
}

long long VerifyReport::total_failures() const {
    long long total = 0;
    for (const auto& tally : checks) total += tally.fail;
    return total;
}

namespace {

nlohmann::json witness_json(const Witness& w) {
    return nlohmann::json{{"n", w.n},
                          {"prufer", w.prufer},
                          {"detail", w.detail},
                          {"expected", w.expected},
                          {"computed", w.computed}};
}

}  // namespace

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    auto& corpus = j["corpus"];
    corpus["exhaustive_max_n"] = exhaustive_max_n;
    corpus["samples"] = nlohmann::json::array();
    for (const auto& s : samples)
        corpus["samples"].push_back({{"n", s.n}, {"count", s.count}, {"seed", s.seed}});
    corpus["sampled_prufer"] = sampled_prufer;
    corpus["trees_checked"] = trees_checked;

    j["checks"] = nlohmann::json::array();
    for (const auto& tally : checks) {
        nlohmann::json e{{"id", to_string(tally.id)},
                         {"pass", tally.pass},
                         {"fail", tally.fail},
                         {"witnesses", nlohmann::json::array()}};
        for (const auto& w : tally.witnesses) e["witnesses"].push_back(witness_json(w));
        if (tally.witnesses_truncated) e["witnesses_truncated"] = true;
        j["checks"].push_back(std::move(e));
    }

    auto& timing = j["timing_ms"] = nlohmann::json::object();
    for (const auto& [id, ms] : timing_ms) timing[id] = ms;
    return j.dump(2) + "\n";
}

VerifyReport sweep(int max_exhaustive_n, const std::vector<SampleSpec>& samples,
                   const std::set<CheckId>& checks, int jobs, const VerifyOptions& opts) {
    struct CorpusItem {
        std::vector<int> prufer;  // 0-based
        bool sampled = false;
    };
    std::vector<CorpusItem> corpus;

    for (int n = 3; n <= max_exhaustive_n; ++n) {
        std::vector<int> seq(n - 2, 0);
        for (;;) {
            corpus.push_back({seq, false});
            int pos = n - 3;
            while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
            if (pos < 0) break;
            ++seq[pos];
        }
    }
    for (const auto& spec : samples) {
        if (spec.n < 2) throw std::invalid_argument("sweep: sampled n must be >= 2");
        std::mt19937_64 rng(spec.seed);
        for (int i = 0; i < spec.count; ++i) {
            std::vector<int> seq(spec.n - 2);
            for (int& v : seq) v = static_cast<int>(rng() % static_cast<std::uint64_t>(spec.n));
            corpus.push_back({std::move(seq), true});
        }
    }

    std::vector<std::vector<TheoremCheck>> results(corpus.size());
    const int workers = std::max(1, jobs);
    std::atomic<size_t> cursor{0};
    auto work = [&] {
        for (size_t i = cursor.fetch_add(1); i < corpus.size(); i = cursor.fetch_add(1)) {
            const Tree t = prufer_decode(corpus[i].prufer);
            results[i] = verify_tree(t, checks, opts);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    constexpr size_t kWitnessCap = 25;
    VerifyReport report;
    report.exhaustive_max_n = max_exhaustive_n;
    report.samples = samples;
    report.trees_checked = static_cast<long long>(corpus.size());
    for (const auto& item : corpus)
        if (item.sampled) {
            std::vector<int> one_based;
            for (int v : item.prufer) one_based.push_back(v + 1);
            report.sampled_prufer.push_back(std::move(one_based));
        }

    std::vector<double> elapsed(kAllCheckIds.size(), 0.0);
    for (CheckId id : kAllCheckIds)
        if (checks.count(id)) report.checks.push_back(CheckTally{id});
    for (const auto& tree_result : results)
        for (const auto& check : tree_result) {
            auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                   [&](const CheckTally& t) { return t.id == check.id; });
            if (check.pass) {
                ++it->pass;
            } else {
                ++it->fail;
                if (it->witnesses.size() < kWitnessCap)
                    it->witnesses.push_back(*check.witness);
                else
                    it->witnesses_truncated = true;
            }
            elapsed[static_cast<size_t>(check.id)] += check.elapsed_ms;
        }
    for (CheckId id : kAllCheckIds)
        if (checks.count(id))
            report.timing_ms.emplace_back(to_string(id), elapsed[static_cast<size_t>(id)]);
    return report;
}

}  // namespace max4pc
