#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "swapopt/permutation.hpp"

namespace swapopt {

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The graph of all n! orderings of n labels, with an edge between orderings
/// that differ by one swap of adjacent elements. Immutable after construction.
class Permutohedron {
public:
    static constexpr int kDefaultMaxN = 5;

    explicit Permutohedron(int n, int n_cap = kDefaultMaxN) : n_(n) {
        if (n < 2 || n > n_cap)
            throw CapacityError("permutohedron order must be in [2, " + std::to_string(n_cap) + "]");
        enumerate_vertices();
        build_adjacency();
        compute_distances();
    }

    int n() const { return n_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int diameter() const { return n_ * (n_ - 1) / 2; }

    const std::vector<Permutation>& vertices() const { return vertices_; }
    const Permutation& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }

    int dist(int i, int j) const {
        return dist_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    /// Canonical index of a permutation (lexicographic enumeration order).
    int vertex_index(const Permutation& p) const {
        if (p.size() != n_)
            throw std::invalid_argument("vertex_index: permutation length mismatch");
        auto it = index_.find(p.labels());
        if (it == index_.end())
            throw std::invalid_argument("vertex_index: permutation not found");
        return it->second;
    }

    /// Canonical vertex indices listed around the hexagon (n = 3 only),
    /// starting from the identity order and walking the 6-cycle. With the
    /// alphabet "SOV" the result is SOV, SVO, VSO, VOS, OVS, OSV.
    std::vector<int> hexagon_order() const {
        if (n_ != 3) throw std::logic_error("hexagon_order requires n = 3");
        std::vector<int> order;
        std::vector<int> cur = {0, 1, 2};
        for (int step = 0; step < 6; ++step) {
            order.push_back(index_.at(cur));
            // alternate adjacent swaps walk the 6-cycle
            if (step % 2 == 0) std::swap(cur[1], cur[2]);
            else std::swap(cur[0], cur[1]);
        }
        return order;
    }

private:
    void enumerate_vertices() {
        std::vector<int> cur(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) cur[static_cast<std::size_t>(i)] = i;
        do {
            index_[cur] = static_cast<int>(vertices_.size());
            vertices_.push_back(Permutation(cur));
        } while (std::next_permutation(cur.begin(), cur.end()));
    }

    void build_adjacency() {
        const int N = num_vertices();
        adj_.assign(static_cast<std::size_t>(N), {});
        for (int v = 0; v < N; ++v) {
            std::vector<int> labels = vertices_[static_cast<std::size_t>(v)].labels();
            for (int k = 0; k + 1 < n_; ++k) {
                std::swap(labels[static_cast<std::size_t>(k)], labels[static_cast<std::size_t>(k + 1)]);
                adj_[static_cast<std::size_t>(v)].push_back(index_.at(labels));
                std::swap(labels[static_cast<std::size_t>(k)], labels[static_cast<std::size_t>(k + 1)]);
            }
            std::sort(adj_[static_cast<std::size_t>(v)].begin(), adj_[static_cast<std::size_t>(v)].end());
        }
    }

    void compute_distances() {
        const int N = num_vertices();
        dist_.assign(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N), -1));
        for (int s = 0; s < N; ++s) {
            auto& row = dist_[static_cast<std::size_t>(s)];
            row[static_cast<std::size_t>(s)] = 0;
            std::deque<int> queue{s};
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : adj_[static_cast<std::size_t>(u)]) {
                    if (row[static_cast<std::size_t>(w)] < 0) {
                        row[static_cast<std::size_t>(w)] = row[static_cast<std::size_t>(u)] + 1;
                        queue.push_back(w);
                    }
                }
            }
            // BFS must agree with inversion counting; a mismatch means the
            // enumeration or the edge set is broken.
            for (int t = 0; t < N; ++t) {
                if (row[static_cast<std::size_t>(t)] !=
                    swap_distance(vertices_[static_cast<std::size_t>(s)], vertices_[static_cast<std::size_t>(t)]))
                    throw std::logic_error("permutohedron distance cross-check failed");
            }
        }
    }

    int n_;
    std::vector<Permutation> vertices_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> dist_;
};

inline Permutohedron build_permutohedron(int n, int n_cap = Permutohedron::kDefaultMaxN) {
    return Permutohedron(n, n_cap);
}

}  // namespace swapopt
