// End-to-end exercises of the CLI surface: formats, exit codes, round trips.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string tmp_path(const std::string& name) {
    return std::string("cli_scratch_") + name;
}

RunResult run(const std::string& args) {
    const std::string out_file = tmp_path("stdout.txt");
    const std::string cmd =
        std::string(MAX4PC_CLI_PATH) + " " + args + " > " + out_file + " 2> " +
        tmp_path("stderr.txt");
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

const char* kExample1Edges = "1-2,2-3,2-4,4-5,4-8,5-6,5-10,6-7,8-9";

}  // namespace

TEST_CASE("matrix --format csv emits the pinned path matrix") {
    write_file(tmp_path("p3.txt"), "# path\n3\n1 2\n2 3\n");
    const RunResult r = run("matrix --kind max4pc --format csv --input " + tmp_path("p3.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "pair,1-2,1-3,2-3\n"
          "1-2,2,3,2\n"
          "1-3,3,4,3\n"
          "2-3,2,3,2\n");
}

TEST_CASE("inline edges and file input agree") {
    write_file(tmp_path("p4.txt"), "4\n1 2\n2 3\n3 4\n");
    const RunResult file = run("matrix --format csv --input " + tmp_path("p4.txt"));
    const RunResult inline_edges = run("matrix --format csv --edges 1-2,2-3,3-4");
    CHECK(file.exit_code == 0);
    CHECK(file.out == inline_edges.out);
}

TEST_CASE("snf emits the invariant factor list zeros-first") {
    const RunResult r = run("snf --edges 1-2,2-3,3-4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"invariant_factors\":[0,0,1,1,2,2]}\n");
}

TEST_CASE("rank and inertia emit exact values") {
    CHECK(run("rank --edges 1-2,2-3").out == "{\"rank\":2}\n");
    const auto j = nlohmann::json::parse(run("inertia --edges 1-2,2-3,3-4").out);
    CHECK(j["n_zero"] == 2);
    CHECK(j["n_plus"] == 2);
    CHECK(j["n_minus"] == 2);
}

TEST_CASE("basis under the max policy reproduces the reference set") {
    const RunResult r = run(std::string("basis --start-leaf 1 --policy max --edges ") +
                            kExample1Edges);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const nlohmann::json expected = {{1, 2}, {1, 4}, {2, 4}, {2, 8}, {4, 8},
                                     {8, 9}, {4, 5}, {4, 6}, {5, 6}, {6, 7}};
    CHECK(j["pairs"] == expected);
}

TEST_CASE("det consumes a basis artifact") {
    const std::string basis_file = tmp_path("basis.json");
    REQUIRE(run(std::string("basis --start-leaf 1 --policy max --edges ") + kExample1Edges +
                " --output " + basis_file)
                .exit_code == 0);
    const RunResult det = run(std::string("det --basis ") + basis_file + " --edges " +
                              kExample1Edges);
    CHECK(det.exit_code == 0);
    CHECK(det.out == "{\"det\":\"-256\"}\n");
}

TEST_CASE("star bases have determinant -1 through the CLI") {
    const std::string basis_file = tmp_path("star_basis.json");
    // Every leaf works as a start, including the largest label.
    for (const char* leaf : {"2", "3", "4"}) {
        REQUIRE(run(std::string("basis --start-leaf ") + leaf +
                    " --edges 1-2,1-3,1-4 --output " + basis_file)
                    .exit_code == 0);
        const RunResult det = run("det --basis " + basis_file + " --edges 1-2,1-3,1-4");
        CHECK(det.out == "{\"det\":\"-1\"}\n");
    }
    CHECK(run("basis --start-leaf 1 --edges 1-2,1-3,1-4").exit_code == 2);  // the center
}

TEST_CASE("gen output feeds every other subcommand") {
    const std::string tree_file = tmp_path("gen.txt");
    const RunResult gen = run("gen --n 9 --seed 42 --output " + tree_file);
    CHECK(gen.exit_code == 0);
    CHECK(run("rank --input " + tree_file).exit_code == 0);
    CHECK(run("matrix --kind steiner2 --input " + tree_file).exit_code == 0);
    CHECK(run("snf --input " + tree_file).exit_code == 0);
    CHECK(run("inertia --input " + tree_file).exit_code == 0);
    const std::string basis_file = tmp_path("gen_basis.json");
    CHECK(run("basis --start-leaf 1 --input " + tree_file + " --output " + basis_file)
              .exit_code == 0);
    CHECK(run("det --basis " + basis_file + " --input " + tree_file).exit_code == 0);
    CHECK(run("verify --input " + tree_file).exit_code == 0);
    // Determinism across runs.
    const RunResult again = run("gen --n 9 --seed 42");
    std::ifstream in(tree_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(again.out == buf.str());
}

TEST_CASE("verify reports pass with exit 0 and structured JSON") {
    const RunResult r = run("verify --edges 1-2,2-3,3-4 --checks T1-rank,T5-inertia");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["failures"] == 0);
    CHECK(j["checks"].size() == 2);
    CHECK(j["tree"]["prufer"] == (nlohmann::json{2, 3}));
}

TEST_CASE("sweep reports a clean exhaustive corpus") {
    const RunResult r = run("sweep --exhaustive 4 --jobs 2");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["corpus"]["trees_checked"] == 19);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("matrix --kind nonsense --edges 1-2").exit_code == 2);
    CHECK(run("rank").exit_code == 2);                       // no input
    CHECK(run("verify --checks bogus --edges 1-2").exit_code == 2);
    CHECK(run("rank --input does_not_exist.txt").exit_code == 2);
    CHECK(run("basis --start-leaf 2 --edges 1-2,2-3,3-4").exit_code == 2);  // not a leaf
}
