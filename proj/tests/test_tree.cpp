#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "max4pc/tree.hpp"

using namespace max4pc;

namespace {

const char* kP3 = "3\n1 2\n2 3\n";
const char* kP4 = "4\n1 2\n2 3\n3 4\n";
const char* kS4 = "4\n1 2\n1 3\n1 4\n";
// 10-vertex reference tree: leaves 1, 3, 7, 9, 10.
const char* kExample1 = "10\n1 2\n2 3\n2 4\n4 5\n4 8\n5 6\n5 10\n6 7\n8 9\n";

std::set<VertexPair> edge_set(const Tree& t) {
    return {t.edges().begin(), t.edges().end()};
}

}  // namespace

TEST_CASE("parse_tree accepts the path on three vertices") {
    const Tree t = parse_tree(kP3);
    CHECK(t.n() == 3);
    CHECK(t.has_edge(0, 1));
    CHECK(t.has_edge(1, 2));
    CHECK_FALSE(t.has_edge(0, 2));
}

TEST_CASE("parse_tree accepts the single vertex") {
    const Tree t = parse_tree("1\n");
    CHECK(t.n() == 1);
    CHECK(t.edges().empty());
}

TEST_CASE("parse_tree skips comments and blank lines") {
    const Tree t = parse_tree("# a path\n3\n\n1 2  # first edge\n2 3\n");
    CHECK(t.n() == 3);
    CHECK(edge_set(t) == edge_set(parse_tree(kP3)));
}

TEST_CASE("parse_tree rejects bad input") {
    CHECK_THROWS_AS(parse_tree(""), MalformedInput);
    CHECK_THROWS_AS(parse_tree("x\n"), MalformedInput);
    CHECK_THROWS_AS(parse_tree("3\n1 2 junk\n2 3\n"), MalformedInput);
    CHECK_THROWS_AS(parse_tree("3\n1 2\n1 2\n"), NotATree);   // duplicate edge
    CHECK_THROWS_AS(parse_tree("3\n1 2\n"), NotATree);        // wrong edge count
    CHECK_THROWS_AS(parse_tree("4\n1 2\n3 4\n1 2\n"), NotATree);
    CHECK_THROWS_AS(parse_tree("3\n1 2\n2 2\n"), NotATree);   // self-loop
    CHECK_THROWS_AS(parse_tree("3\n1 2\n2 4\n"), LabelOutOfRange);
}

TEST_CASE("format_tree round-trips through parse_tree") {
    for (const char* doc : {kP3, kP4, kS4, kExample1}) {
        const Tree t = parse_tree(doc);
        const Tree again = parse_tree(format_tree(t));
        CHECK(edge_set(t) == edge_set(again));
    }
}

TEST_CASE("all_pairs_distances on small trees") {
    const DistanceTable p3 = all_pairs_distances(parse_tree(kP3));
    CHECK(p3(0, 1) == 1);
    CHECK(p3(1, 2) == 1);
    CHECK(p3(0, 2) == 2);

    const DistanceTable s4 = all_pairs_distances(parse_tree(kS4));
    for (int leaf : {1, 2, 3}) CHECK(s4(0, leaf) == 1);
    CHECK(s4(1, 2) == 2);
    CHECK(s4(1, 3) == 2);
    CHECK(s4(2, 3) == 2);

    const DistanceTable p5 = all_pairs_distances(parse_tree("5\n1 2\n2 3\n3 4\n4 5\n"));
    CHECK(p5(0, 4) == 4);
}

TEST_CASE("distance table is symmetric with zero diagonal") {
    const Tree t = random_tree(12, 3);
    const DistanceTable d = all_pairs_distances(t);
    for (int i = 0; i < t.n(); ++i) {
        CHECK(d(i, i) == 0);
        for (int j = 0; j < t.n(); ++j) CHECK(d(i, j) == d(j, i));
    }
}

TEST_CASE("check_four_point on hand-enumerated quadruples") {
    const DistanceTable d = all_pairs_distances(parse_tree(kP3));
    // (1,2,1,3): sums are {3,1,3}.
    CHECK(check_four_point(d, 0, 1, 0, 2));
    // Fully repeated vertex: sums are {0,0,0}.
    CHECK(check_four_point(d, 1, 1, 1, 1));
}

TEST_CASE("four point condition holds for every quadruple of random trees") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const Tree t = random_tree(7, seed);
        const DistanceTable d = all_pairs_distances(t);
        for (int w = 0; w < 7; ++w)
            for (int x = 0; x < 7; ++x)
                for (int y = 0; y < 7; ++y)
                    for (int z = 0; z < 7; ++z) REQUIRE(check_four_point(d, w, x, y, z));
    }
}

TEST_CASE("steiner_size on hand-checked sets") {
    const Tree p3 = parse_tree(kP3);
    CHECK(steiner_size(p3, {0, 1, 0, 2}) == 2);  // whole path
    CHECK(steiner_size(p3, {1}) == 0);
    const Tree s4 = parse_tree(kS4);
    CHECK(steiner_size(s4, {1, 2, 3}) == 3);  // all three spokes
}

TEST_CASE("steiner_size of a pair equals the distance") {
    const Tree t = random_tree(10, 11);
    const DistanceTable d = all_pairs_distances(t);
    for (int u = 0; u < t.n(); ++u)
        for (int v = u + 1; v < t.n(); ++v) CHECK(steiner_size(t, {u, v}) == d(u, v));
}

TEST_CASE("prufer decoding of hand-run sequences") {
    // Sequence (2) on three vertices: the path 1-2-3.
    CHECK(edge_set(prufer_decode({1})) == edge_set(parse_tree(kP3)));
    // Empty sequence: the single edge 1-2.
    CHECK(edge_set(prufer_decode({})) == edge_set(parse_tree("2\n1 2\n")));
    CHECK_THROWS_AS(prufer_decode({5}), LabelOutOfRange);
}

TEST_CASE("prufer encode/decode are mutually inverse") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Tree t = random_tree(9, seed);
        const Tree back = prufer_decode(prufer_encode(t));
        REQUIRE(edge_set(back) == edge_set(t));
    }
}

TEST_CASE("prufer encode of the star is all centers") {
    const std::vector<int> seq = prufer_encode(parse_tree(kS4));
    CHECK(seq == (std::vector<int>{0, 0}));
}

TEST_CASE("random_tree determinism and tiny cases") {
    CHECK(random_tree(1, 7).n() == 1);
    CHECK(edge_set(random_tree(2, 7)) == edge_set(parse_tree("2\n1 2\n")));
    CHECK(edge_set(random_tree(9, 42)) == edge_set(random_tree(9, 42)));
}

TEST_CASE("leaf_profile on the named trees") {
    const LeafProfile p3 = leaf_profile(parse_tree(kP3));
    CHECK(p3.p == 2);
    CHECK(p3.pendants == (std::vector<int>{0, 2}));
    CHECK(p3.quasi_pendants == std::vector<int>{1});

    CHECK(leaf_profile(parse_tree(kS4)).p == 3);

    const LeafProfile ex1 = leaf_profile(parse_tree(kExample1));
    CHECK(ex1.p == 5);
    CHECK(ex1.pendants == (std::vector<int>{0, 2, 6, 8, 9}));
}

TEST_CASE("degree sum and pendant count invariants") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Tree t = random_tree(8, seed ^ 0xabcdef);
        int degree_sum = 0, ones = 0;
        for (int v = 0; v < t.n(); ++v) {
            degree_sum += t.degree(v);
            if (t.degree(v) == 1) ++ones;
        }
        CHECK(degree_sum == 2 * (t.n() - 1));
        CHECK(leaf_profile(t).p == ones);
    }
}
