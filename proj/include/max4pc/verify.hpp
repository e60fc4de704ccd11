#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "max4pc/basis.hpp"
#include "max4pc/exact_linalg.hpp"
#include "max4pc/pair_matrix.hpp"
#include "max4pc/tree.hpp"

namespace max4pc {

// One checker per closed-form result; each pairs the formula with an
// independently computed quantity.
enum class CheckId {
    T1Rank,
    T2T4dDet,
    T3Snf,
    T4aUnique,
    T4bSize,
    T4cSpan,
    T5Inertia,
    L1PendantRow,
    L2ComponentSplit,
    C1SiblingLeaf,
    StarDet,
    StarEigen,
    FpcMax2,
    ParitySteiner,
};

inline constexpr std::array<CheckId, 14> kAllCheckIds = {
    CheckId::T1Rank,       CheckId::T2T4dDet,  CheckId::T3Snf,
    CheckId::T4aUnique,    CheckId::T4bSize,   CheckId::T4cSpan,
    CheckId::T5Inertia,    CheckId::L1PendantRow,
    CheckId::L2ComponentSplit, CheckId::C1SiblingLeaf,
    CheckId::StarDet,      CheckId::StarEigen, CheckId::FpcMax2,
    CheckId::ParitySteiner,
};

std::string to_string(CheckId id);
std::optional<CheckId> parse_check_id(const std::string& s);
std::set<CheckId> all_checks();

// Complete reproduction recipe for a failed check.
struct Witness {
    int n = 0;
    std::vector<int> prufer;  // 1-based labels; empty for n <= 2
    std::string detail;
    std::string expected;
    std::string computed;
};

struct TheoremCheck {
    CheckId id;
    bool pass = true;
    std::optional<Witness> witness;
    double elapsed_ms = 0.0;
};

struct VerifyOptions {
    // Basis family per tree: one deterministic-min run per leaf plus this
    // many seeded-random runs.
    int extra_random_runs = 4;
    std::uint64_t family_seed = 0xB10C5EEDull;
    // Floating cross-checks are advisory: they may flag a failure, never
    // substitute for the exact route.
    bool float_cross_checks = true;
    int float_max_dim = 66;
    double float_zero_threshold = 1e-9;
    int fpc_sample_quadruples = 2048;
};

Witness make_witness(const Tree& t, std::string detail, std::string expected,
                     std::string computed);

// Runs the requested checks that apply to t (by size and star/non-star
// shape); inapplicable checks are omitted. Failures are data, not errors.
std::vector<TheoremCheck> verify_tree(const Tree& t, const std::set<CheckId>& checks,
                                      const VerifyOptions& opts = {});

// Star char-poly identity for S_n, exact plus floating root cross-check.
TheoremCheck verify_star_eigen(int n, const VerifyOptions& opts = {});

struct SampleSpec {
    int n = 0;
    int count = 0;
    std::uint64_t seed = 0;
};

struct CheckTally {
    CheckId id;
    long long pass = 0;
    long long fail = 0;
    std::vector<Witness> witnesses;
    bool witnesses_truncated = false;
};

struct VerifyReport {
    int exhaustive_max_n = 0;
    std::vector<SampleSpec> samples;
    // 1-based Pruefer sequences of the sampled trees, in corpus order.
    std::vector<std::vector<int>> sampled_prufer;
    long long trees_checked = 0;
    std::vector<CheckTally> checks;
    std::vector<std::pair<std::string, double>> timing_ms;  // per check id

    long long total_failures() const;
    // Canonical JSON: deterministic for a fixed corpus except timing_ms.
    std::string to_json() const;
};

// Exhaustive Pruefer enumeration for 3 <= n <= max_exhaustive_n, then the
// sampled specs; trees are distributed over `jobs` workers and merged back
// in corpus order.
VerifyReport sweep(int max_exhaustive_n, const std::vector<SampleSpec>& samples,
                   const std::set<CheckId>& checks, int jobs = 1,
                   const VerifyOptions& opts = {});

}  // namespace max4pc
