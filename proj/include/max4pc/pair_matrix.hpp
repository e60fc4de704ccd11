#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "max4pc/tree.hpp"

namespace max4pc {

enum class MatrixKind { Max4PC, Min4PC, Steiner2 };

std::string to_string(MatrixKind kind);          // "max4pc" / "min4pc" / "steiner2"
MatrixKind matrix_kind_from_string(const std::string& s);

// Bijection between {(i,j) : 0 <= i < j < n} and 0..C(n,2)-1, lexicographic
// on (i, j): (0,1), (0,2), ..., (0,n-1), (1,2), ...
class PairIndex {
public:
    explicit PairIndex(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    const std::vector<VertexPair>& pairs() const { return pairs_; }

    // Throws UnknownPair for degenerate or out-of-range pairs.
    int index_of(VertexPair p) const;
    VertexPair pair_at(int k) const { return pairs_[k]; }

private:
    int n_;
    std::vector<VertexPair> pairs_;
};

long long max4pc_entry(const DistanceTable& d, VertexPair wx, VertexPair yz);
long long min4pc_entry(const DistanceTable& d, VertexPair wx, VertexPair yz);

// Dense symmetric C(n,2) x C(n,2) integer matrix over unordered vertex pairs.
class PairMatrix {
public:
    PairMatrix(MatrixKind kind, PairIndex index);

    MatrixKind kind() const { return kind_; }
    int n() const { return index_.n(); }
    int size() const { return index_.size(); }
    const PairIndex& index() const { return index_; }

    long long operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * size_ + c]; }
    long long& at(int r, int c) { return entries_[static_cast<size_t>(r) * size_ + c]; }
    long long entry(VertexPair row, VertexPair col) const {
        return (*this)(index_.index_of(row), index_.index_of(col));
    }

    std::vector<long long> row_of(VertexPair row) const;
    std::vector<std::vector<long long>> submatrix(const std::vector<VertexPair>& rows,
                                                  const std::vector<VertexPair>& cols) const;

    // CSV with a header row of 1-based "i-j" pair labels; LF endings.
    std::string to_csv() const;
    // {kind, n, pairs: [[i,j]...], entries: [[...]...]} with 1-based pairs.
    std::string to_json() const;

private:
    MatrixKind kind_;
    PairIndex index_;
    int size_;
    std::vector<long long> entries_;

    friend PairMatrix build_matrix(const Tree&, MatrixKind);
};

// Builds the full matrix; Steiner2 comes from the union-of-paths subtree
// size, not from the (Max+Min)/2 identity — that identity stays a cross-check.
PairMatrix build_matrix(const Tree& t, MatrixKind kind);

}  // namespace max4pc
