#include "max4pc/basis.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

namespace max4pc {

int BlockTree::block_of(int internal_vertex) const {
    auto it = std::lower_bound(internal_vertices.begin(), internal_vertices.end(),
                               internal_vertex);
    if (it == internal_vertices.end() || *it != internal_vertex) return -1;
    return static_cast<int>(it - internal_vertices.begin());
}

BlockTree block_tree(const Tree& t) {
    if (t.n() < 3) throw TooSmall("block_tree: need n >= 3");
    BlockTree bt;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) >= 2) bt.internal_vertices.push_back(v);

    bt.blocks.resize(bt.internal_vertices.size());
    bt.block_adjacency.resize(bt.internal_vertices.size());
    for (size_t b = 0; b < bt.internal_vertices.size(); ++b) {
        const int v = bt.internal_vertices[b];
        for (int w : t.neighbors(v)) {
            bt.blocks[b].emplace_back(v, w);
            if (t.degree(w) >= 2) {
                int nb = bt.block_of(w);
                bt.block_adjacency[b].push_back(nb);
                if (v < w) bt.lg_cut_vertices.emplace_back(v, w);
            }
        }
        std::sort(bt.blocks[b].begin(), bt.blocks[b].end());
        std::sort(bt.block_adjacency[b].begin(), bt.block_adjacency[b].end());
    }
    std::sort(bt.lg_cut_vertices.begin(), bt.lg_cut_vertices.end());
    return bt;
}

std::string to_string(ChoicePolicy::Mode mode) {
    switch (mode) {
        case ChoicePolicy::Mode::Min: return "min";
        case ChoicePolicy::Mode::Max: return "max";
        case ChoicePolicy::Mode::Random: return "random";
    }
    return "?";
}

std::vector<VertexPair> BasisSet::sorted_pairs() const {
    std::vector<VertexPair> out = pairs;
    std::sort(out.begin(), out.end());
    return out;
}

BasisSet star_basis(const Tree& t, int i, int j, int k) {
    const int c = t.star_center();
    if (c < 0) throw NotAStar("star_basis: tree is not a star");
    auto leaf_ok = [&](int v) { return v >= 0 && v < t.n() && v != c; };
    if (!leaf_ok(i) || !leaf_ok(j) || !leaf_ok(k) || !(j < k) || !(i <= j))
        throw std::invalid_argument("star_basis: need leaves with i <= j < k");
    BasisSet basis;
    basis.pairs = {VertexPair(c, i), VertexPair(j, k)};
    basis.provenance.push_back({c, "star", basis.pairs});
    basis.start_leaf = i;
    basis.policy = ChoicePolicy::deterministic_min();
    return basis;
}

namespace {

// Traversal state over the block structure: a block is live until consumed;
// an LG cut vertex {u,v} is live while both b(u) and b(v) are unconsumed.
struct Traversal {
    const Tree& tree;
    const BlockTree& bt;
    std::vector<char> consumed;
    std::mt19937_64 rng;

    bool live_cut(VertexPair e) const {
        if (tree.degree(e.a) < 2 || tree.degree(e.b) < 2) return false;
        return !consumed[bt.block_of(e.a)] && !consumed[bt.block_of(e.b)];
    }

    // Picks from a sorted, nonempty candidate list according to the policy.
    VertexPair choose(const std::vector<VertexPair>& sorted, ChoicePolicy::Mode mode) {
        switch (mode) {
            case ChoicePolicy::Mode::Min: return sorted.front();
            case ChoicePolicy::Mode::Max: return sorted.back();
            case ChoicePolicy::Mode::Random:
                return sorted[static_cast<size_t>(rng() % sorted.size())];
        }
        return sorted.front();
    }
};

VertexPair symmetric_difference(VertexPair a, VertexPair b) {
    // Valid only when the pairs share exactly one vertex.
    if (a.a == b.a) return VertexPair(a.b, b.b);
    if (a.a == b.b) return VertexPair(a.b, b.a);
    if (a.b == b.a) return VertexPair(a.a, b.b);
    if (a.b == b.b) return VertexPair(a.a, b.a);
    throw std::logic_error("symmetric difference of disjoint LG vertices");
}

}  // namespace

BasisSet build_basis(const Tree& t, int start_leaf, ChoicePolicy policy) {
    if (t.n() < 3) throw TooSmall("build_basis: need n >= 3");
    if (t.star_center() >= 0) throw IsAStar("build_basis: star trees use star_basis");
    if (start_leaf < 0 || start_leaf >= t.n() || !t.is_leaf(start_leaf))
        throw NotALeaf("build_basis: start vertex " + std::to_string(start_leaf + 1) +
                       " is not a pendant vertex");

    const BlockTree bt = block_tree(t);
    Traversal tr{t, bt, std::vector<char>(bt.blocks.size(), 0),
                 std::mt19937_64(policy.seed)};

    BasisSet basis;
    basis.start_leaf = start_leaf;
    basis.policy = policy;

    // A pendant has one neighbor, so the seed LG vertex is determined.
    VertexPair start(start_leaf, t.neighbors(start_leaf)[0]);
    std::vector<VertexPair> next_starts;  // LIFO

    for (;;) {
        // Step 1: the starting vertex is never a live cut vertex, so exactly
        // one unconsumed block contains it.
        int current = -1;
        for (int v : {start.a, start.b}) {
            int b = bt.block_of(v);
            if (b >= 0 && !tr.consumed[b]) {
                if (current >= 0)
                    throw std::logic_error("starting vertex is a live cut vertex");
                current = b;
            }
        }
        if (current < 0) throw std::logic_error("starting vertex has no live block");

        std::vector<VertexPair> cuts;
        for (VertexPair member : bt.blocks[current])
            if (member != start && tr.live_cut(member)) cuts.push_back(member);

        if (!cuts.empty()) {
            // Step 2: descend through a chosen cut vertex; the rest are
            // queued as future starting vertices.
            VertexPair chosen = tr.choose(cuts, policy.mode);
            for (VertexPair cut : cuts)
                if (cut != chosen) next_starts.push_back(cut);
            VertexPair folded = symmetric_difference(start, chosen);
            basis.pairs.push_back(start);
            basis.pairs.push_back(folded);
            basis.provenance.push_back(
                {bt.internal_vertices[current], "2c", {start, folded}});
            tr.consumed[current] = 1;
            start = chosen;
            continue;
        }

        // Step 3: leaf block; both contributions are taken verbatim.
        std::vector<VertexPair> others;
        for (VertexPair member : bt.blocks[current])
            if (member != start) others.push_back(member);
        assert(!others.empty());
        VertexPair chosen = tr.choose(others, policy.mode);
        basis.pairs.push_back(start);
        basis.pairs.push_back(chosen);
        basis.provenance.push_back({bt.internal_vertices[current], "3b", {start, chosen}});
        tr.consumed[current] = 1;

        if (next_starts.empty()) break;
        start = next_starts.back();
        next_starts.pop_back();
    }

    assert(std::all_of(tr.consumed.begin(), tr.consumed.end(), [](char c) { return c; }));
    assert(basis.pairs.size() == 2 * bt.blocks.size());
    return basis;
}

std::vector<BasisSet> enumerate_family(const Tree& t, int max_runs, std::uint64_t seed) {
    if (t.n() < 3) throw TooSmall("enumerate_family: need n >= 3");
    std::vector<BasisSet> family;
    std::set<std::vector<VertexPair>> seen;
    auto keep = [&](BasisSet b) {
        if (seen.insert(b.sorted_pairs()).second) family.push_back(std::move(b));
    };

    const int center = t.star_center();
    if (center >= 0) {
        int runs = 0;
        for (int i = 0; i < t.n() && runs < max_runs; ++i) {
            if (i == center) continue;
            for (int j = i; j < t.n() && runs < max_runs; ++j) {
                if (j == center) continue;
                for (int k = j + 1; k < t.n() && runs < max_runs; ++k) {
                    if (k == center) continue;
                    keep(star_basis(t, i, j, k));
                    ++runs;
                }
            }
        }
        return family;
    }

    int runs = 0;
    for (int leaf = 0; leaf < t.n() && runs < max_runs; ++leaf)
        if (t.is_leaf(leaf)) {
            keep(build_basis(t, leaf, ChoicePolicy::deterministic_min()));
            ++runs;
        }

    const LeafProfile profile = leaf_profile(t);
    std::mt19937_64 rng(seed);
    while (runs < max_runs) {
        int leaf = profile.pendants[static_cast<size_t>(rng() % profile.pendants.size())];
        keep(build_basis(t, leaf, ChoicePolicy::seeded_random(rng())));
        ++runs;
    }
    return family;
}

std::string to_json(const BasisSet& b) {
    nlohmann::json j;
    j["start_leaf"] = b.start_leaf + 1;
    j["policy"] = to_string(b.policy.mode);
    if (b.policy.mode == ChoicePolicy::Mode::Random) j["seed"] = b.policy.seed;
    auto& pairs = j["pairs"] = nlohmann::json::array();
    for (VertexPair p : b.pairs) pairs.push_back({p.a + 1, p.b + 1});
    auto& prov = j["provenance"] = nlohmann::json::array();
    for (const auto& contribution : b.provenance) {
        nlohmann::json e;
        e["block_internal_vertex"] = contribution.internal_vertex + 1;
        e["step"] = contribution.step;
        e["pairs"] = nlohmann::json::array();
        for (VertexPair p : contribution.pairs) e["pairs"].push_back({p.a + 1, p.b + 1});
        prov.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::vector<VertexPair> basis_pairs_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("pairs") || !j["pairs"].is_array())
        throw std::invalid_argument("basis JSON: missing \"pairs\" array");
    std::vector<VertexPair> out;
    for (const auto& entry : j["pairs"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("basis JSON: each pair must be [i, j]");
        out.emplace_back(entry[0].get<int>() - 1, entry[1].get<int>() - 1);
    }
    return out;
}

}  // namespace max4pc
