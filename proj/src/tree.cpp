#include "max4pc/tree.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace max4pc {

Tree Tree::from_edges(int n, const std::vector<VertexPair>& edges) {
    if (n < 1) throw MalformedInput("vertex count must be >= 1, got " + std::to_string(n));
    if (static_cast<int>(edges.size()) != n - 1)
        throw NotATree("expected " + std::to_string(n - 1) + " edges, got " +
                       std::to_string(edges.size()));

    std::vector<std::vector<int>> adj(n);
    std::set<VertexPair> seen;
    for (const auto& e : edges) {
        if (e.a < 0 || e.b >= n)
            throw LabelOutOfRange("edge label outside 1.." + std::to_string(n));
        if (e.a == e.b) throw NotATree("self-loop at vertex " + std::to_string(e.a + 1));
        if (!seen.insert(e).second)
            throw NotATree("duplicate edge " + std::to_string(e.a + 1) + "-" +
                           std::to_string(e.b + 1));
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

    // n-1 simple edges + connected => acyclic.
    std::vector<char> visited(n, 0);
    std::deque<int> queue{0};
    visited[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    if (reached != n) throw NotATree("graph is disconnected");

    return Tree(n, edges, std::move(adj));
}

bool Tree::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Tree::star_center() const {
    if (n_ < 3) return -1;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == n_ - 1) return v;
    return -1;
}

void Tree::bfs(int root, std::vector<int>& dist, std::vector<int>& parent) const {
    dist.assign(n_, -1);
    parent.assign(n_, -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
    }
}

namespace {

// Strips a '#' comment and surrounding whitespace; empty result means the
// line carries nothing.
std::string strip_line(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = line.find_last_not_of(" \t\r");
    return std::string(line.substr(b, e - b + 1));
}

bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

}  // namespace

Tree parse_tree(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        while (std::getline(in, raw)) {
            std::string s = strip_line(raw);
            if (!s.empty()) lines.push_back(std::move(s));
        }
    }
    if (lines.empty()) throw MalformedInput("empty input");

    long long n = 0;
    if (!parse_int(lines[0], n))
        throw MalformedInput("first line must be the vertex count, got \"" + lines[0] + "\"");
    if (n < 1) throw MalformedInput("vertex count must be >= 1, got " + std::to_string(n));

    std::vector<VertexPair> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        std::string tu, tv, extra;
        ls >> tu >> tv;
        if (ls >> extra)
            throw MalformedInput("edge line " + std::to_string(i + 1) + " has trailing content");
        long long u = 0, v = 0;
        if (!parse_int(tu, u) || !parse_int(tv, v))
            throw MalformedInput("edge line " + std::to_string(i + 1) + " is not \"u v\"");
        if (u < 1 || u > n || v < 1 || v > n)
            throw LabelOutOfRange("edge label outside 1.." + std::to_string(n) + " on line " +
                                  std::to_string(i + 1));
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return Tree::from_edges(static_cast<int>(n), edges);
}

std::string format_tree(const Tree& t) {
    std::ostringstream out;
    out << t.n() << "\n";
    for (const auto& e : t.edges()) out << e.a + 1 << " " << e.b + 1 << "\n";
    return out.str();
}

DistanceTable all_pairs_distances(const Tree& t) {
    DistanceTable table(t.n());
    std::vector<int> dist, parent;
    for (int root = 0; root < t.n(); ++root) {
        t.bfs(root, dist, parent);
        for (int v = 0; v < t.n(); ++v) table.at(root, v) = dist[v];
    }
    return table;
}

bool check_four_point(const DistanceTable& d, int w, int x, int y, int z) {
    const long long s1 = d(w, x) + d(y, z);
    const long long s2 = d(w, y) + d(x, z);
    const long long s3 = d(w, z) + d(x, y);
    const long long top = std::max({s1, s2, s3});
    int hits = (s1 == top) + (s2 == top) + (s3 == top);
    return hits >= 2;
}

int steiner_size(const Tree& t, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("steiner_size: empty vertex set");
    if (s.size() > 4) throw std::invalid_argument("steiner_size: more than 4 vertices");
    std::vector<int> terminals(s);
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    for (int v : terminals)
        if (v < 0 || v >= t.n()) throw LabelOutOfRange("steiner_size: vertex out of range");
    if (terminals.size() == 1) return 0;

    // Union of all pairwise paths, as a set of normalized edges.
    std::set<VertexPair> union_edges;
    std::vector<int> dist, parent;
    for (size_t i = 0; i + 1 < terminals.size(); ++i) {
        t.bfs(terminals[i], dist, parent);
        for (size_t j = i + 1; j < terminals.size(); ++j) {
            for (int v = terminals[j]; v != terminals[i]; v = parent[v])
                union_edges.emplace(v, parent[v]);
        }
    }
    return static_cast<int>(union_edges.size());
}

Tree prufer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    for (int v : seq)
        if (v < 0 || v >= n) throw LabelOutOfRange("pruefer label outside 1.." + std::to_string(n));

    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];

    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);

    std::vector<VertexPair> edges;
    edges.reserve(n - 1);
    for (int v : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.push(v);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    edges.emplace_back(u, v);
    return Tree::from_edges(n, edges);
}

std::vector<int> prufer_encode(const Tree& t) {
    const int n = t.n();
    if (n < 2) throw std::invalid_argument("prufer_encode: need n >= 2");
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = t.degree(v);

    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);

    std::vector<char> removed(n, 0);
    std::vector<int> seq;
    seq.reserve(n - 2);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = leaves.top();
        leaves.pop();
        removed[leaf] = 1;
        int nbr = -1;
        for (int w : t.neighbors(leaf))
            if (!removed[w]) {
                nbr = w;
                break;
            }
        seq.push_back(nbr);
        if (--degree[nbr] == 1) leaves.push(nbr);
    }
    return seq;
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
    if (n == 1) return Tree::from_edges(1, {});
    if (n == 2) return Tree::from_edges(2, {VertexPair(0, 1)});
    std::mt19937_64 rng(seed);
    std::vector<int> seq(n - 2);
    // Modulo mapping keeps draws reproducible across standard libraries;
    // the bias is ~n/2^64.
    for (int& v : seq) v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return prufer_decode(seq);
}

LeafProfile leaf_profile(const Tree& t) {
    if (t.n() < 2) throw std::invalid_argument("leaf_profile: need n >= 2");
    LeafProfile profile;
    std::set<int> quasi;
    for (int v = 0; v < t.n(); ++v)
        if (t.is_leaf(v)) {
            profile.pendants.push_back(v);
            quasi.insert(t.neighbors(v)[0]);
        }
    profile.p = static_cast<int>(profile.pendants.size());
    profile.quasi_pendants.assign(quasi.begin(), quasi.end());
    return profile;
}

}  // namespace max4pc
