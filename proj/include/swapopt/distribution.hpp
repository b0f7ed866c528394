#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swapopt/permutohedron.hpp"
#include "swapopt/rational.hpp"

namespace swapopt {

/// Probabilities sorted non-increasing, with the vertex -> rank mapping and
/// the tie structure (maximal runs of equal values).
struct RankedProbs {
    std::vector<Rational> pi;        // pi[0] >= pi[1] >= ...
    std::vector<int> vertex_of_rank; // rank -> canonical vertex index
    std::vector<int> rank_of_vertex; // vertex -> rank
    std::vector<std::vector<int>> tie_groups; // ranks grouped by equal value
};

/// A probability distribution over the N = n! vertices of a permutohedron,
/// held as exact rationals; optionally backed by integer counts.
class OrderDistribution {
public:
    OrderDistribution(int n, std::vector<Rational> probs)
        : n_(n), probs_(std::move(probs)) {
        validate();
    }

    /// Build from per-order counts keyed by canonical vertex index.
    /// Unlisted vertices get count zero.
    static OrderDistribution from_counts(const Permutohedron& p,
                                         const std::map<int, long long>& counts) {
        const int N = p.num_vertices();
        std::vector<long long> c(static_cast<std::size_t>(N), 0);
        long long total = 0;
        for (const auto& [v, k] : counts) {
            if (v < 0 || v >= N)
                throw std::invalid_argument("from_counts: vertex index out of range");
            if (k < 0)
                throw std::invalid_argument("from_counts: negative count");
            c[static_cast<std::size_t>(v)] = k;
            total += k;
        }
        if (total == 0)
            throw std::invalid_argument("from_counts: all counts are zero");
        std::vector<Rational> probs(static_cast<std::size_t>(N));
        for (int v = 0; v < N; ++v)
            probs[static_cast<std::size_t>(v)] = Rational(c[static_cast<std::size_t>(v)], total);
        OrderDistribution d(p.n(), std::move(probs));
        d.counts_ = std::move(c);
        d.total_frequency_ = total;
        return d;
    }

    /// Build from order labels ("SOV" etc.) to counts.
    static OrderDistribution from_labeled_counts(const Permutohedron& p,
                                                 const std::map<std::string, long long>& counts,
                                                 const std::string& alphabet) {
        std::map<int, long long> by_index;
        for (const auto& [label, k] : counts) {
            int v = p.vertex_index(Permutation::from_label(label, alphabet));
            if (!by_index.emplace(v, k).second)
                throw std::invalid_argument("duplicate order label '" + label + "'");
        }
        return from_counts(p, by_index);
    }

    static OrderDistribution uniform(const Permutohedron& p) {
        const int N = p.num_vertices();
        return OrderDistribution(p.n(), std::vector<Rational>(static_cast<std::size_t>(N), Rational(1, N)));
    }

    static OrderDistribution point_mass(const Permutohedron& p, int vertex) {
        const int N = p.num_vertices();
        std::vector<Rational> probs(static_cast<std::size_t>(N), Rational(0));
        probs.at(static_cast<std::size_t>(vertex)) = 1;
        return OrderDistribution(p.n(), std::move(probs));
    }

    int n() const { return n_; }
    int num_vertices() const { return static_cast<int>(probs_.size()); }
    const std::vector<Rational>& probs() const { return probs_; }
    const Rational& prob(int v) const { return probs_[static_cast<std::size_t>(v)]; }

    const std::optional<std::vector<long long>>& counts() const { return counts_; }
    std::optional<long long> total_frequency() const { return total_frequency_; }

    /// Simpson index S = sum p_i^2.
    Rational simpson() const {
        Rational s = 0;
        for (const auto& p : probs_) s += p * p;
        return s;
    }

    /// Dominance index 1 - S.
    Rational dominance() const { return Rational(1) - simpson(); }

    /// Number of non-zero probability vertices and their indices (ascending).
    std::pair<int, std::vector<int>> nonzero_support() const {
        std::vector<int> idx;
        for (int v = 0; v < num_vertices(); ++v)
            if (probs_[static_cast<std::size_t>(v)] != 0) idx.push_back(v);
        return {static_cast<int>(idx.size()), idx};
    }

    int support_size() const { return nonzero_support().first; }

    bool is_uniform() const {
        const Rational u(1, num_vertices());
        return std::all_of(probs_.begin(), probs_.end(), [&](const Rational& p) { return p == u; });
    }

    /// Stable non-increasing sort (ties keep vertex-index order).
    RankedProbs ranked() const {
        const int N = num_vertices();
        RankedProbs r;
        r.vertex_of_rank.resize(static_cast<std::size_t>(N));
        std::iota(r.vertex_of_rank.begin(), r.vertex_of_rank.end(), 0);
        std::stable_sort(r.vertex_of_rank.begin(), r.vertex_of_rank.end(), [&](int a, int b) {
            return probs_[static_cast<std::size_t>(a)] > probs_[static_cast<std::size_t>(b)];
        });
        r.pi.reserve(static_cast<std::size_t>(N));
        r.rank_of_vertex.resize(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) {
            int v = r.vertex_of_rank[static_cast<std::size_t>(k)];
            r.pi.push_back(probs_[static_cast<std::size_t>(v)]);
            r.rank_of_vertex[static_cast<std::size_t>(v)] = k;
        }
        for (int k = 0; k < N;) {
            int j = k;
            while (j < N && r.pi[static_cast<std::size_t>(j)] == r.pi[static_cast<std::size_t>(k)]) ++j;
            std::vector<int> group;
            for (int t = k; t < j; ++t) group.push_back(t);
            r.tie_groups.push_back(std::move(group));
            k = j;
        }
        return r;
    }

private:
    void validate() const {
        if (n_ < 2) throw std::invalid_argument("distribution: n must be at least 2");
        std::size_t expect = 1;
        for (int k = 2; k <= n_; ++k) expect *= static_cast<std::size_t>(k);
        if (probs_.size() != expect)
            throw std::invalid_argument("distribution: probability vector must have n! entries");
        Rational sum = 0;
        for (const auto& p : probs_) {
            if (p < 0) throw std::invalid_argument("distribution: negative probability");
            sum += p;
        }
        if (sum != 1) throw std::invalid_argument("distribution: probabilities must sum to 1");
    }

    int n_;
    std::vector<Rational> probs_;
    std::optional<std::vector<long long>> counts_;
    std::optional<long long> total_frequency_;
};

}  // namespace swapopt
