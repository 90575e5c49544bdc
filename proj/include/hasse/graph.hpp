#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hasse {

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// the constructor sorts adjacency lists and the edge list (u < v) and drops
// loops and duplicates, so representations are canonical.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Square bit matrix; row-major packed words. Used for reachability closures.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), stride_((n + 63) / 64), words_(std::size_t(n) * stride_, 0) {}

    int size() const { return n_; }
    bool test(int r, int c) const {
        return (words_[std::size_t(r) * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(int r, int c) { words_[std::size_t(r) * stride_ + c / 64] |= std::uint64_t(1) << (c % 64); }

    // row(r) |= row(s)
    void or_row(int r, int s) {
        std::uint64_t* a = &words_[std::size_t(r) * stride_];
        const std::uint64_t* b = &words_[std::size_t(s) * stride_];
        for (int w = 0; w < stride_; ++w) a[w] |= b[w];
    }

    // Visits every set column of row r.
    template <typename F>
    void for_each_in_row(int r, F&& f) const {
        const std::uint64_t* a = &words_[std::size_t(r) * stride_];
        for (int w = 0; w < stride_; ++w) {
            std::uint64_t bits = a[w];
            while (bits) {
                int c = w * 64 + __builtin_ctzll(bits);
                f(c);
                bits &= bits - 1;
            }
        }
    }

private:
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hasse
