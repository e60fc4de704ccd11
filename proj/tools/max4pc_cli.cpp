// Command-line frontend: build pair matrices, run exact analyses, generate
// trees, and drive the theorem verifier over corpora.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "max4pc/basis.hpp"
#include "max4pc/exact_linalg.hpp"
#include "max4pc/pair_matrix.hpp"
#include "max4pc/tree.hpp"
#include "max4pc/verify.hpp"

namespace {

using namespace max4pc;

struct TreeInput {
    std::string path;   // file path, or "-" for stdin
    std::string edges;  // inline "1-2,2-3"

    void attach(CLI::App* cmd) {
        auto* in = cmd->add_option("--input,-i", path, "edge-list file ('-' for stdin)");
        auto* ed = cmd->add_option("--edges", edges, "inline edge list, e.g. \"1-2,2-3\"");
        in->excludes(ed);
    }

    Tree load() const {
        if (!edges.empty()) return parse_inline(edges);
        if (path.empty()) throw CLI::ValidationError("input", "provide --input or --edges");
        if (path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            return parse_tree(buf.str());
        }
        std::ifstream file(path);
        if (!file) throw MalformedInput("cannot open \"" + path + "\"");
        std::ostringstream buf;
        buf << file.rdbuf();
        return parse_tree(buf.str());
    }

    static Tree parse_inline(const std::string& text) {
        std::vector<VertexPair> pairs;
        int n = 1;
        std::stringstream ss(text);
        std::string token;
        while (std::getline(ss, token, ',')) {
            auto dash = token.find('-');
            int u = 0, v = 0;
            try {
                if (dash == std::string::npos) throw std::invalid_argument(token);
                u = std::stoi(token.substr(0, dash));
                v = std::stoi(token.substr(dash + 1));
            } catch (const std::exception&) {
                throw MalformedInput("inline edge \"" + token + "\" is not \"u-v\"");
            }
            if (u < 1 || v < 1) throw LabelOutOfRange("inline labels start at 1");
            n = std::max({n, u, v});
            pairs.emplace_back(u - 1, v - 1);
        }
        return Tree::from_edges(n, pairs);
    }
};

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + output_path + "\"");
    out << text;
}

nlohmann::json json_factor(const BigInt& v) {
    // Factors beyond 64 bits travel as decimal strings.
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

std::set<CheckId> parse_checks(const std::string& csv) {
    if (csv.empty()) return all_checks();
    std::set<CheckId> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto id = parse_check_id(token);
        if (!id) throw CLI::ValidationError("--checks", "unknown check id \"" + token + "\"");
        out.insert(*id);
    }
    return out;
}

ChoicePolicy parse_policy(const std::string& name, std::uint64_t seed) {
    if (name == "min") return ChoicePolicy::deterministic_min();
    if (name == "max") return ChoicePolicy::deterministic_max();
    if (name == "random") return ChoicePolicy::seeded_random(seed);
    throw CLI::ValidationError("--policy", "policy must be min, max or random");
}

// Star trees bypass the traversal: pick the smallest admissible (i, j, k)
// containing the requested leaf. i = j = leaf works whenever a larger leaf
// exists; for the largest leaf the pair {smallest, leaf} carries it instead.
BasisSet star_basis_for_leaf(const Tree& t, int leaf) {
    const int c = t.star_center();
    if (leaf < 0 || leaf >= t.n() || leaf == c)
        throw NotALeaf("--start-leaf must be a pendant vertex");
    for (int k = leaf + 1; k < t.n(); ++k)
        if (k != c) return star_basis(t, leaf, leaf, k);
    const int smallest = (c == 0) ? 1 : 0;
    return star_basis(t, smallest, smallest, leaf);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Max4PC / Min4PC / 2-Steiner pair-matrix toolkit for trees"};
    app.require_subcommand(1);

    std::string output;
    app.add_option("--output,-o", output, "write the artifact to a file instead of stdout");

    TreeInput tree_in;
    std::string kind_name = "max4pc";
    std::string format = "json";
    std::string policy_name = "min";
    std::string basis_path;
    std::string checks_csv;
    std::vector<std::string> sample_specs;
    int start_leaf = 1;
    int exhaustive_n = 0;
    int jobs = 1;
    int gen_n = 2;
    std::uint64_t seed = 0;

    auto* matrix = app.add_subcommand("matrix", "emit a pair matrix");
    tree_in.attach(matrix);
    matrix->add_option("--kind", kind_name, "max4pc | min4pc | steiner2")
        ->check(CLI::IsMember({"max4pc", "min4pc", "steiner2"}));
    matrix->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    auto* rank = app.add_subcommand("rank", "exact rank of a pair matrix");
    tree_in.attach(rank);
    rank->add_option("--kind", kind_name)->check(CLI::IsMember({"max4pc", "min4pc", "steiner2"}));

    auto* snf = app.add_subcommand("snf", "invariant factors of a pair matrix");
    tree_in.attach(snf);
    snf->add_option("--kind", kind_name)->check(CLI::IsMember({"max4pc", "min4pc", "steiner2"}));

    auto* inertia_cmd = app.add_subcommand("inertia", "exact inertia of a pair matrix");
    tree_in.attach(inertia_cmd);
    inertia_cmd->add_option("--kind", kind_name)
        ->check(CLI::IsMember({"max4pc", "min4pc", "steiner2"}));

    auto* basis = app.add_subcommand("basis", "run the block-traversal basis construction");
    tree_in.attach(basis);
    basis->add_option("--start-leaf", start_leaf, "1-based pendant vertex to start from");
    basis->add_option("--policy", policy_name, "min | max | random");
    basis->add_option("--seed", seed, "seed for --policy random");

    auto* det = app.add_subcommand("det", "determinant of Max4PC[B,B] for a basis file");
    tree_in.attach(det);
    det->add_option("--basis", basis_path, "BasisSet JSON file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the theorem checkers on one tree");
    tree_in.attach(verify_cmd);
    verify_cmd->add_option("--checks", checks_csv, "comma-separated check ids (default: all)");

    auto* sweep_cmd = app.add_subcommand("sweep", "verify a whole corpus of trees");
    sweep_cmd->add_option("--exhaustive", exhaustive_n, "run all labeled trees for 3 <= n <= N");
    sweep_cmd->add_option("--sample", sample_specs,
                          "sampled corpus \"n:count:seed\" (repeatable)");
    sweep_cmd->add_option("--checks", checks_csv, "comma-separated check ids (default: all)");
    sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "emit a uniform random tree in edge-list format");
    gen->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "RNG seed");

    // Let global flags like --output appear after the subcommand too.
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (matrix->parsed()) {
            const PairMatrix m = build_matrix(tree_in.load(), matrix_kind_from_string(kind_name));
            emit(format == "csv" ? m.to_csv() : m.to_json() + "\n", output);
            return 0;
        }

        if (rank->parsed() || snf->parsed() || inertia_cmd->parsed()) {
            const PairMatrix m = build_matrix(tree_in.load(), matrix_kind_from_string(kind_name));
            const BigIntMatrix big = BigIntMatrix::from_pair_matrix(m);
            nlohmann::json j;
            if (rank->parsed()) {
                j["rank"] = exact_rank(big);
            } else if (snf->parsed()) {
                auto& factors = j["invariant_factors"] = nlohmann::json::array();
                for (const BigInt& d : smith_normal_form(big).zeros_first())
                    factors.push_back(json_factor(d));
            } else {
                const Inertia inertia = symmetric_inertia(big);
                j["n_zero"] = inertia.n_zero;
                j["n_plus"] = inertia.n_plus;
                j["n_minus"] = inertia.n_minus;
            }
            emit(j.dump() + "\n", output);
            return 0;
        }

        if (basis->parsed()) {
            const Tree t = tree_in.load();
            const BasisSet b = t.star_center() >= 0
                                   ? star_basis_for_leaf(t, start_leaf - 1)
                                   : build_basis(t, start_leaf - 1,
                                                 parse_policy(policy_name, seed));
            emit(to_json(b), output);
            return 0;
        }

        if (det->parsed()) {
            const Tree t = tree_in.load();
            std::ifstream file(basis_path);
            if (!file) throw std::runtime_error("cannot open \"" + basis_path + "\"");
            std::ostringstream buf;
            buf << file.rdbuf();
            const std::vector<VertexPair> pairs = basis_pairs_from_json(buf.str());
            const PairMatrix m = build_matrix(t, MatrixKind::Max4PC);
            const BigInt d = bareiss_det(BigIntMatrix::from_rows(m.submatrix(pairs, pairs)));
            nlohmann::json j;
            j["det"] = d.get_str();
            emit(j.dump() + "\n", output);
            return 0;
        }

        if (verify_cmd->parsed()) {
            const Tree t = tree_in.load();
            const auto results = verify_tree(t, parse_checks(checks_csv));
            nlohmann::json j;
            j["tree"]["n"] = t.n();
            std::vector<int> prufer;
            if (t.n() >= 2)
                for (int v : prufer_encode(t)) prufer.push_back(v + 1);
            j["tree"]["prufer"] = prufer;
            int failures = 0;
            auto& checks = j["checks"] = nlohmann::json::array();
            for (const auto& check : results) {
                nlohmann::json e{{"id", to_string(check.id)}, {"pass", check.pass}};
                if (check.witness)
                    e["witness"] = {{"detail", check.witness->detail},
                                    {"expected", check.witness->expected},
                                    {"computed", check.witness->computed}};
                if (!check.pass) ++failures;
                checks.push_back(std::move(e));
            }
            j["failures"] = failures;
            emit(j.dump(2) + "\n", output);
            return failures > 0 ? 1 : 0;
        }

        if (sweep_cmd->parsed()) {
            std::vector<SampleSpec> samples;
            for (const std::string& spec : sample_specs) {
                SampleSpec s;
                unsigned long long raw_seed = 0;
                if (std::sscanf(spec.c_str(), "%d:%d:%llu", &s.n, &s.count, &raw_seed) != 3)
                    throw CLI::ValidationError("--sample", "expected \"n:count:seed\"");
                s.seed = raw_seed;
                samples.push_back(s);
            }
            const VerifyReport report =
                sweep(exhaustive_n, samples, parse_checks(checks_csv), jobs);
            emit(report.to_json(), output);
            return report.total_failures() > 0 ? 1 : 0;
        }

        if (gen->parsed()) {
            emit(format_tree(random_tree(gen_n, seed)), output);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
