#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "swapopt/distribution.hpp"
#include "swapopt/permutohedron.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    const char* dir = std::getenv("SWAPOPT_TEST_DATA");
    return (dir ? std::string(dir) : std::string("tests/data")) + "/" + name;
}

/// Random distribution over the vertices of `p` with `m` non-zero entries.
/// Counts are drawn in [1, 100]; `distinct` forces the non-zero probabilities
/// to be pairwise different (tie-free).
inline swapopt::OrderDistribution random_distribution(const swapopt::Permutohedron& p, int m,
                                                      std::mt19937& rng, bool distinct = false) {
    const int N = p.num_vertices();
    std::vector<int> vertices(static_cast<std::size_t>(N));
    std::iota(vertices.begin(), vertices.end(), 0);
    std::shuffle(vertices.begin(), vertices.end(), rng);

    std::uniform_int_distribution<long long> pick(1, 100);
    std::vector<long long> counts;
    if (distinct) {
        std::set<long long> chosen;
        while (static_cast<int>(chosen.size()) < m) chosen.insert(pick(rng));
        counts.assign(chosen.begin(), chosen.end());
        std::shuffle(counts.begin(), counts.end(), rng);
    } else {
        for (int k = 0; k < m; ++k) counts.push_back(pick(rng));
    }
    std::map<int, long long> by_vertex;
    for (int k = 0; k < m; ++k) by_vertex[vertices[static_cast<std::size_t>(k)]] = counts[static_cast<std::size_t>(k)];
    return swapopt::OrderDistribution::from_counts(p, by_vertex);
}

inline swapopt::OrderDistribution random_distribution(const swapopt::Permutohedron& p,
                                                      std::mt19937& rng, bool distinct = false) {
    std::uniform_int_distribution<int> msize(1, p.num_vertices());
    return random_distribution(p, msize(rng), rng, distinct);
}

/// All N! arrangements of the probability multiset of `d`, as distributions.
/// Caller must keep N small.
inline std::vector<swapopt::OrderDistribution> all_shufflings(const swapopt::Permutohedron& p,
                                                              const swapopt::OrderDistribution& d) {
    const int N = p.num_vertices();
    std::vector<int> sigma(static_cast<std::size_t>(N));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<swapopt::OrderDistribution> out;
    do {
        std::vector<swapopt::Rational> probs(static_cast<std::size_t>(N));
        for (int v = 0; v < N; ++v)
            probs[static_cast<std::size_t>(v)] = d.prob(sigma[static_cast<std::size_t>(v)]);
        out.emplace_back(p.n(), std::move(probs));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace testutil
