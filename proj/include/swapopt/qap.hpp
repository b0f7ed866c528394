#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swapopt/permutohedron.hpp"
#include "swapopt/rational.hpp"

namespace swapopt {

constexpr int kDefaultQapSizeCap = 8;

/// A Koopmans-Beckmann instance: minimize sum_ij w_ij d_{sigma(i) sigma(j)}.
struct QapInstance {
    std::vector<std::vector<Rational>> flows;      // W
    std::vector<std::vector<Rational>> distances;  // D, zero diagonal

    int size() const { return static_cast<int>(flows.size()); }

    void validate() const {
        const std::size_t n = flows.size();
        if (n == 0 || distances.size() != n)
            throw std::invalid_argument("qap: flow and distance matrices must be square and equal-sized");
        for (const auto& row : flows)
            if (row.size() != n) throw std::invalid_argument("qap: flow matrix is not square");
        for (std::size_t i = 0; i < n; ++i) {
            if (distances[i].size() != n)
                throw std::invalid_argument("qap: distance matrix is not square");
            if (distances[i][i] != 0)
                throw std::invalid_argument("qap: distance matrix must have a zero diagonal");
        }
    }
};

struct QapSolution {
    static constexpr std::size_t kWitnessCap = 1024;

    Rational value;
    long long witness_count = 0;
    std::vector<std::vector<int>> witnesses;  // permutations sigma, capped
};

/// Exact minimum by enumeration over all N! assignments.
inline QapSolution qap_min(const QapInstance& inst, int size_cap = kDefaultQapSizeCap) {
    inst.validate();
    const int N = inst.size();
    if (N > size_cap)
        throw CapacityError("qap_min: instance exceeds enumeration cap");

    std::vector<int> sigma(static_cast<std::size_t>(N));
    std::iota(sigma.begin(), sigma.end(), 0);
    QapSolution result;
    bool have_best = false;
    do {
        Rational val = 0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                const Rational& w = inst.flows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (w == 0) continue;
                val += w * inst.distances[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]
                                         [static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])];
            }
        if (!have_best || val < result.value) {
            result.value = val;
            result.witness_count = 0;
            result.witnesses.clear();
            have_best = true;
        }
        if (val == result.value) {
            ++result.witness_count;
            if (result.witnesses.size() < QapSolution::kWitnessCap)
                result.witnesses.push_back(sigma);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return result;
}

/// An undirected simple graph by vertex count and edge list.
struct GraphInstance {
    int N = 0;
    std::vector<std::pair<int, int>> edges;

    void validate() const {
        std::vector<std::pair<int, int>> seen;
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= N || b >= N)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (a == b) throw std::invalid_argument("graph: self-loop");
            auto e = std::minmax(a, b);
            std::pair<int, int> key{e.first, e.second};
            if (std::find(seen.begin(), seen.end(), key) != seen.end())
                throw std::invalid_argument("graph: duplicate edge");
            seen.push_back(key);
        }
    }
};

struct MlaSolution {
    Rational value;
    std::vector<int> witness;  // one optimal layout
};

/// Minimum linear arrangement: (1/2) min_sigma sum a_ij |sigma(i) - sigma(j)|.
inline MlaSolution mla_min(const GraphInstance& g, int size_cap = kDefaultQapSizeCap) {
    g.validate();
    if (g.N > size_cap)
        throw CapacityError("mla_min: instance exceeds enumeration cap");
    std::vector<int> sigma(static_cast<std::size_t>(g.N));
    std::iota(sigma.begin(), sigma.end(), 0);
    MlaSolution result;
    bool have_best = false;
    do {
        long long total = 0;
        for (auto [a, b] : g.edges)
            total += std::abs(sigma[static_cast<std::size_t>(a)] - sigma[static_cast<std::size_t>(b)]);
        if (!have_best || Rational(total) < result.value) {
            result.value = total;
            result.witness = sigma;
            have_best = true;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return result;
}

/// Expected sum of edge lengths over a uniformly random layout: m (N+1)/3.
inline Rational mla_random(const GraphInstance& g) {
    g.validate();
    return Rational(static_cast<long long>(g.edges.size()) * (g.N + 1), 3);
}

/// Probabilities paired with a prescribed multiset of magnitudes.
struct CodingInstance {
    std::vector<Rational> probs;
    std::vector<Rational> magnitudes;

    void validate() const {
        if (probs.size() != magnitudes.size() || probs.empty())
            throw std::invalid_argument("coding: probability and magnitude vectors must match");
        Rational sum = 0;
        for (const auto& q : probs) {
            if (q < 0) throw std::invalid_argument("coding: negative probability");
            sum += q;
        }
        if (sum != 1) throw std::invalid_argument("coding: probabilities must sum to 1");
        for (const auto& l : magnitudes)
            if (l <= 0) throw std::invalid_argument("coding: magnitudes must be positive");
    }
};

/// Minimum average magnitude: probabilities sorted descending dotted with
/// magnitudes sorted ascending (rearrangement inequality).
inline Rational compression_min(const CodingInstance& inst) {
    inst.validate();
    std::vector<Rational> p = inst.probs;
    std::vector<Rational> l = inst.magnitudes;
    std::sort(p.begin(), p.end(), std::greater<>());
    std::sort(l.begin(), l.end());
    Rational sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * l[i];
    return sum;
}

/// Unweighted mean of the magnitudes (the random-assignment baseline).
inline Rational compression_random(const CodingInstance& inst) {
    inst.validate();
    Rational sum = 0;
    for (const auto& l : inst.magnitudes) sum += l;
    return sum / static_cast<long long>(inst.magnitudes.size());
}

/// (ascending . descending, ascending . ascending) dot products of two vectors.
inline std::pair<Rational, Rational> rearrangement_bounds(std::vector<Rational> a,
                                                          std::vector<Rational> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("rearrangement_bounds: length mismatch");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    Rational lo = 0, hi = 0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        lo += a[i] * b[n - 1 - i];
        hi += a[i] * b[i];
    }
    return {lo, hi};
}

}  // namespace swapopt
