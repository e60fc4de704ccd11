#include "max4pc/pair_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace max4pc {

std::string to_string(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::Max4PC: return "max4pc";
        case MatrixKind::Min4PC: return "min4pc";
        case MatrixKind::Steiner2: return "steiner2";
    }
    return "?";
}

MatrixKind matrix_kind_from_string(const std::string& s) {
    if (s == "max4pc") return MatrixKind::Max4PC;
    if (s == "min4pc") return MatrixKind::Min4PC;
    if (s == "steiner2") return MatrixKind::Steiner2;
    throw std::invalid_argument("unknown matrix kind \"" + s + "\"");
}

PairIndex::PairIndex(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("PairIndex: need n >= 2");
    pairs_.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
}

int PairIndex::index_of(VertexPair p) const {
    if (p.a < 0 || p.b >= n_ || p.a == p.b)
        throw UnknownPair("pair {" + std::to_string(p.a + 1) + "," + std::to_string(p.b + 1) +
                          "} is not a valid vertex pair for n=" + std::to_string(n_));
    // Lexicographic rank of (a, b) with 0 <= a < b < n.
    long long head = static_cast<long long>(p.a) * (2 * n_ - p.a - 1) / 2;
    return static_cast<int>(head + (p.b - p.a - 1));
}

namespace {

struct ThreeSums {
    long long s1, s2, s3;
};

// The three pairing sums for row {w,x}, column {y,z}.
ThreeSums pairing_sums(const DistanceTable& d, VertexPair wx, VertexPair yz) {
    const int w = wx.a, x = wx.b, y = yz.a, z = yz.b;
    return {static_cast<long long>(d(w, x)) + d(y, z),
            static_cast<long long>(d(w, y)) + d(x, z),
            static_cast<long long>(d(w, z)) + d(x, y)};
}

}  // namespace

long long max4pc_entry(const DistanceTable& d, VertexPair wx, VertexPair yz) {
    auto [s1, s2, s3] = pairing_sums(d, wx, yz);
    return std::max({s1, s2, s3});
}

long long min4pc_entry(const DistanceTable& d, VertexPair wx, VertexPair yz) {
    auto [s1, s2, s3] = pairing_sums(d, wx, yz);
    return std::min({s1, s2, s3});
}

PairMatrix::PairMatrix(MatrixKind kind, PairIndex index)
    : kind_(kind),
      index_(std::move(index)),
      size_(index_.size()),
      entries_(static_cast<size_t>(size_) * size_, 0) {}

std::vector<long long> PairMatrix::row_of(VertexPair row) const {
    const int r = index_.index_of(row);
    std::vector<long long> out(size_);
    for (int c = 0; c < size_; ++c) out[c] = (*this)(r, c);
    return out;
}

std::vector<std::vector<long long>> PairMatrix::submatrix(
    const std::vector<VertexPair>& rows, const std::vector<VertexPair>& cols) const {
    std::vector<int> ri, ci;
    ri.reserve(rows.size());
    ci.reserve(cols.size());
    for (auto p : rows) ri.push_back(index_.index_of(p));
    for (auto p : cols) ci.push_back(index_.index_of(p));
    std::vector<std::vector<long long>> out(rows.size(), std::vector<long long>(cols.size()));
    for (size_t i = 0; i < ri.size(); ++i)
        for (size_t j = 0; j < ci.size(); ++j) out[i][j] = (*this)(ri[i], ci[j]);
    return out;
}

std::string PairMatrix::to_csv() const {
    std::ostringstream out;
    out << "pair";
    for (auto p : index_.pairs()) out << "," << p.a + 1 << "-" << p.b + 1;
    out << "\n";
    for (int r = 0; r < size_; ++r) {
        auto p = index_.pair_at(r);
        out << p.a + 1 << "-" << p.b + 1;
        for (int c = 0; c < size_; ++c) out << "," << (*this)(r, c);
        out << "\n";
    }
    return out.str();
}

std::string PairMatrix::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind_);
    j["n"] = n();
    auto& pairs = j["pairs"] = nlohmann::json::array();
    for (auto p : index_.pairs()) pairs.push_back({p.a + 1, p.b + 1});
    auto& entries = j["entries"] = nlohmann::json::array();
    for (int r = 0; r < size_; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < size_; ++c) row.push_back((*this)(r, c));
        entries.push_back(std::move(row));
    }
    return j.dump();
}

PairMatrix build_matrix(const Tree& t, MatrixKind kind) {
    if (t.n() < 2) throw std::invalid_argument("build_matrix: need n >= 2");
    const DistanceTable d = all_pairs_distances(t);
    PairIndex index(t.n());
    PairMatrix m(kind, index);
    const int size = m.size();

    // Entries are bounded by 2*diameter < 2n; the guard is unreachable for
    // any n this process can hold in memory.
    if (2LL * t.n() > std::numeric_limits<long long>::max() / 2)
        throw OverflowGuard("entry bound exceeds the machine-integer range");

    auto fill_row = [&](int r) {
        const VertexPair row = index.pair_at(r);
        for (int c = r; c < size; ++c) {
            const VertexPair col = index.pair_at(c);
            long long value = 0;
            switch (kind) {
                case MatrixKind::Max4PC: value = max4pc_entry(d, row, col); break;
                case MatrixKind::Min4PC: value = min4pc_entry(d, row, col); break;
                case MatrixKind::Steiner2:
                    value = steiner_size(t, {row.a, row.b, col.a, col.b});
                    break;
            }
            m.at(r, c) = value;
            m.at(c, r) = value;
        }
    };

    // Rows are independent; split across a few workers when the matrix is
    // big enough to matter. Writes are disjoint, so the result is
    // deterministic either way.
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (size >= 128 && hw > 1) {
        std::vector<std::thread> workers;
        std::atomic<int> next{0};
        for (unsigned w = 0; w < hw; ++w)
            workers.emplace_back([&] {
                for (int r = next.fetch_add(1); r < size; r = next.fetch_add(1)) fill_row(r);
            });
        for (auto& th : workers) th.join();
    } else {
        for (int r = 0; r < size; ++r) fill_row(r);
    }
    return m;
}

}  // namespace max4pc
