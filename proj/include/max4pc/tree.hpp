#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "max4pc/errors.hpp"

namespace max4pc {

// Unordered vertex pair, normalized so first < second. Vertices are 0-based
// in memory; every external surface (files, CLI, JSON) is 1-based.
struct VertexPair {
    int a = 0;
    int b = 0;

    VertexPair() = default;
    VertexPair(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

    bool contains(int v) const { return v == a || v == b; }
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Labeled tree on vertices {0, ..., n-1}: adjacency lists plus the edge list.
// Immutable after construction; safe to share across threads.
class Tree {
public:
    // Edges are 0-based here. Validates edge count, label range, simplicity,
    // connectivity and acyclicity.
    static Tree from_edges(int n, const std::vector<VertexPair>& edges);

    int n() const { return n_; }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool is_leaf(int v) const { return degree(v) == 1; }
    // A star has one vertex adjacent to all others (n >= 3); returns the
    // center, or -1 when the tree is not a star.
    int star_center() const;

    // BFS tables from `root`: hop distance and predecessor (-1 at the root).
    void bfs(int root, std::vector<int>& dist, std::vector<int>& parent) const;

    friend bool operator==(const Tree&, const Tree&) = default;

private:
    Tree(int n, std::vector<VertexPair> edges, std::vector<std::vector<int>> adj)
        : n_(n), edges_(std::move(edges)), adj_(std::move(adj)) {}

    int n_ = 1;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> adj_;
};

// Dense n x n hop-count table. Symmetric, zero diagonal.
class DistanceTable {
public:
    explicit DistanceTable(int n) : n_(n), d_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }
    int operator()(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
    int& at(int i, int j) { return d_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<int> d_;
};

struct LeafProfile {
    int p = 0;                       // number of pendant (degree-1) vertices
    std::vector<int> pendants;       // sorted
    std::vector<int> quasi_pendants; // sorted, vertices adjacent to >= 1 pendant
};

// Edge-list document: first non-comment line is n, then n-1 lines "u v" with
// 1-based labels. '#' starts a comment. Throws MalformedInput / NotATree /
// LabelOutOfRange.
Tree parse_tree(std::string_view text);

// Inverse of parse_tree; 1-based labels, LF endings.
std::string format_tree(const Tree& t);

// One BFS per vertex, O(n^2) total.
DistanceTable all_pairs_distances(const Tree& t);

// Buneman's condition for one quadruple (vertices may repeat): among the
// three pairwise sums the maximum is attained at least twice.
bool check_four_point(const DistanceTable& d, int w, int x, int y, int z);

// Edge count of the minimal subtree containing `s` (union of all pairwise
// paths). `s` must be nonempty with at most 4 valid vertices.
int steiner_size(const Tree& t, const std::vector<int>& s);

// Standard Pruefer bijection, 0-based labels. decode takes n-2 labels in
// [0, n) with n >= 2; encode requires n >= 2.
Tree prufer_decode(const std::vector<int>& seq);
std::vector<int> prufer_encode(const Tree& t);

// Uniform labeled tree from a seeded Pruefer draw; deterministic in (n, seed).
Tree random_tree(int n, std::uint64_t seed);

LeafProfile leaf_profile(const Tree& t);

}  // namespace max4pc
