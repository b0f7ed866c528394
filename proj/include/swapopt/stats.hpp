#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swapopt/distribution.hpp"
#include "swapopt/optimality.hpp"
#include "swapopt/permutohedron.hpp"
#include "swapopt/rational.hpp"

namespace swapopt {

/// Probability that a random shuffling is optimal given m non-zero
/// probabilities, assuming no ties among them (n = 3): (6-m)!/60, or 1 at m=1.
inline Rational p_optimal_given_m(int m) {
    if (m < 1 || m > 6) throw std::invalid_argument("p_optimal_given_m: m must be in [1, 6]");
    if (m == 1) return 1;
    return Rational(factorial(static_cast<unsigned>(6 - m)), 60);
}

/// Probability that m non-zero probabilities land on a path of the hexagon
/// by chance: m!(6-m)!/120, or 1 at m in {0, 6}.
inline Rational p_contiguous_given_m(int m) {
    if (m < 0 || m > 6) throw std::invalid_argument("p_contiguous_given_m: m must be in [0, 6]");
    if (m == 0 || m == 6) return 1;
    return Rational(factorial(static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(6 - m)), 120);
}

/// Exact fraction of the N! shufflings achieving <d> = <d>_min. Equals
/// p_optimal_given_m(m) when the non-zero probabilities are tie-free.
inline Rational pi_optimal_numeric(const Permutohedron& p, const OrderDistribution& d,
                                   long long enumeration_cap = kDefaultEnumerationCap) {
    MinimizerSet min = min_bruteforce(p, d, enumeration_cap);
    return Rational(min.witness_count, factorial(static_cast<unsigned>(p.num_vertices())));
}

/// Right tail P(X >= k) of a Poisson binomial distribution, by exact
/// dynamic-programming convolution of the Bernoulli terms.
inline Rational poisson_binomial_right_tail(const std::vector<Rational>& probs, int k) {
    const int T = static_cast<int>(probs.size());
    if (k < 0 || k > T)
        throw std::invalid_argument("poisson_binomial_right_tail: k out of range");
    for (const auto& q : probs)
        if (q < 0 || q > 1)
            throw std::invalid_argument("poisson_binomial_right_tail: probability outside [0, 1]");
    // pmf[j] = P(X = j) over the first t terms
    std::vector<Rational> pmf(static_cast<std::size_t>(T) + 1, Rational(0));
    pmf[0] = 1;
    for (int t = 0; t < T; ++t) {
        const Rational& q = probs[static_cast<std::size_t>(t)];
        for (int j = t + 1; j >= 1; --j)
            pmf[static_cast<std::size_t>(j)] =
                pmf[static_cast<std::size_t>(j)] * (1 - q) + pmf[static_cast<std::size_t>(j - 1)] * q;
        pmf[0] *= (1 - q);
    }
    Rational tail = 0;
    for (int j = k; j <= T; ++j) tail += pmf[static_cast<std::size_t>(j)];
    return tail;
}

struct WilcoxonResult {
    Rational V;  // sum of ranks of positive differences (halves possible under ties)
    Rational p;  // exact one-sided p-value, P(V_null <= V_obs)
    int effective_pairs = 0;  // pairs remaining after dropping zero differences
};

/// Exact one-sided Wilcoxon signed-rank test on differences first - second.
/// Zero differences are dropped; tied absolute differences get average ranks;
/// the p-value enumerates all sign assignments. Returns no value when every
/// difference is zero.
inline std::optional<WilcoxonResult> wilcoxon_signed_rank(
    const std::vector<std::pair<Rational, Rational>>& pairs) {
    if (pairs.empty())
        throw std::invalid_argument("wilcoxon_signed_rank: at least one pair required");
    std::vector<Rational> diffs;
    for (const auto& [a, b] : pairs) {
        Rational diff = a - b;
        if (diff != 0) diffs.push_back(diff);
    }
    const int T = static_cast<int>(diffs.size());
    if (T == 0) return std::nullopt;
    if (T > 20)
        throw CapacityError("wilcoxon_signed_rank: exact enumeration limited to 20 non-zero pairs");

    // Rank |diffs| ascending, average ranks on ties; keep ranks doubled so
    // they stay integral.
    std::vector<int> order(static_cast<std::size_t>(T));
    for (int i = 0; i < T; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return abs(diffs[static_cast<std::size_t>(a)]) < abs(diffs[static_cast<std::size_t>(b)]);
    });
    std::vector<long long> rank2(static_cast<std::size_t>(T), 0);
    for (int i = 0; i < T;) {
        int j = i;
        while (j < T && abs(diffs[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]) ==
                            abs(diffs[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]))
            ++j;
        long long avg2 = (i + 1) + j;  // 2 * average of ranks i+1 .. j
        for (int t = i; t < j; ++t) rank2[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = avg2;
        i = j;
    }

    long long v2_obs = 0;
    for (int i = 0; i < T; ++i)
        if (diffs[static_cast<std::size_t>(i)] > 0) v2_obs += rank2[static_cast<std::size_t>(i)];

    // Count sign assignments with doubled rank sum <= v2_obs via subset-sum DP.
    long long max_sum = 0;
    for (long long r : rank2) max_sum += r;
    std::vector<BigInt> count(static_cast<std::size_t>(max_sum) + 1, BigInt(0));
    count[0] = 1;
    for (long long r : rank2)
        for (long long s = max_sum; s >= r; --s)
            count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - r)];
    BigInt at_most = 0;
    for (long long s = 0; s <= std::min(v2_obs, max_sum); ++s)
        at_most += count[static_cast<std::size_t>(s)];

    WilcoxonResult r;
    r.V = Rational(v2_obs, 2);
    r.p = Rational(at_most, BigInt(1) << T);
    r.effective_pairs = T;
    return r;
}

/// Per-trial inputs for ensemble-level chance tests.
struct TrialRecord {
    std::string label;
    int m = 0;
    Rational pi_o;       // exact probability a random shuffling is optimal
    bool is_optimal = false;
    bool is_contiguous = false;
    Rational avg_d;
    Rational avg_d_random;
};

struct EnsembleResult {
    int T = 0;
    int B = 0;  // optimal trials
    int C = 0;  // contiguous trials
    Rational p_optimal;
    Rational p_contiguous;
    std::optional<WilcoxonResult> wilcoxon;
    std::map<int, int> T_of_m;
};

inline EnsembleResult run_ensemble(const std::vector<TrialRecord>& trials) {
    if (trials.empty())
        throw std::invalid_argument("run_ensemble: at least one trial required");
    EnsembleResult r;
    r.T = static_cast<int>(trials.size());
    std::vector<Rational> optimal_probs, contiguous_probs;
    std::vector<std::pair<Rational, Rational>> pairs;
    for (const auto& t : trials) {
        r.B += t.is_optimal ? 1 : 0;
        r.C += t.is_contiguous ? 1 : 0;
        ++r.T_of_m[t.m];
        optimal_probs.push_back(t.pi_o);
        contiguous_probs.push_back(p_contiguous_given_m(t.m));
        pairs.emplace_back(t.avg_d, t.avg_d_random);
    }
    r.p_optimal = poisson_binomial_right_tail(optimal_probs, r.B);
    if (r.C == r.T) {
        r.p_contiguous = 1;
        for (const auto& q : contiguous_probs) r.p_contiguous *= q;
    } else {
        r.p_contiguous = poisson_binomial_right_tail(contiguous_probs, r.C);
    }
    r.wilcoxon = wilcoxon_signed_rank(pairs);
    return r;
}

}  // namespace swapopt
