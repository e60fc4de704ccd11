#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "max4pc/tree.hpp"

namespace max4pc {

// Block structure of the line graph LG(T): one block per internal vertex v
// of T (the clique of edges through v), cut vertices = edges whose endpoints
// are both internal. Built straight from T; LG(T) is never materialized.
struct BlockTree {
    // blocks[i] = all tree edges incident to internal_vertices[i], sorted.
    std::vector<int> internal_vertices;
    std::vector<std::vector<VertexPair>> blocks;
    // Tree edges with both endpoints internal, sorted.
    std::vector<VertexPair> lg_cut_vertices;
    // block_adjacency[i] = indices of blocks whose internal vertices are
    // tree-adjacent to internal_vertices[i].
    std::vector<std::vector<int>> block_adjacency;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int block_of(int internal_vertex) const;  // -1 if the vertex is pendant
};

// Throws TooSmall for n < 3.
BlockTree block_tree(const Tree& t);

struct ChoicePolicy {
    enum class Mode { Min, Max, Random };
    Mode mode = Mode::Min;
    std::uint64_t seed = 0;

    static ChoicePolicy deterministic_min() { return {Mode::Min, 0}; }
    static ChoicePolicy deterministic_max() { return {Mode::Max, 0}; }
    static ChoicePolicy seeded_random(std::uint64_t seed) { return {Mode::Random, seed}; }
};

std::string to_string(ChoicePolicy::Mode mode);  // "min" / "max" / "random"

struct BlockContribution {
    int internal_vertex = -1;         // the star center in the star case
    std::string step;                 // "2c", "3b", or "star"
    std::vector<VertexPair> pairs;    // the two pairs this block added
};

struct BasisSet {
    std::vector<VertexPair> pairs;    // in insertion order
    std::vector<BlockContribution> provenance;
    int start_leaf = -1;
    ChoicePolicy policy;

    // Set-equality key: the pairs, sorted.
    std::vector<VertexPair> sorted_pairs() const;
};

// Star-tree basis {{c,i},{j,k}} with center c, leaves i <= j < k (i may
// equal j). Throws NotAStar.
BasisSet star_basis(const Tree& t, int i, int j, int k);

// The block-traversal run: depth-first over blocks of LG(T), two pairs per
// block (starting vertex + symmetric difference with the chosen cut vertex
// in step 2c, starting vertex + chosen vertex verbatim in step 3b). Throws
// NotALeaf / IsAStar / TooSmall.
BasisSet build_basis(const Tree& t, int start_leaf, ChoicePolicy policy);

// One deterministic-min run per pendant start leaf plus seeded-random runs
// until max_runs runs were attempted; duplicate pair sets removed. Stars
// enumerate the {{c,i},{j,k}} family in lexicographic (i,j,k) order instead.
std::vector<BasisSet> enumerate_family(const Tree& t, int max_runs, std::uint64_t seed);

// {start_leaf, policy, seed, pairs: [[i,j]...], provenance: [...]} with
// 1-based labels throughout.
std::string to_json(const BasisSet& b);
// Reads the `pairs` array (1-based) back from a BasisSet JSON document.
std::vector<VertexPair> basis_pairs_from_json(const std::string& text);

}  // namespace max4pc
