#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swapopt/distribution.hpp"
#include "swapopt/permutohedron.hpp"
#include "swapopt/rational.hpp"

namespace swapopt {

constexpr long long kDefaultEnumerationCap = 40320;  // 8!

/// Average swap distance <d> = sum_ij d_ij p_i p_j (exact).
inline Rational average_swap_distance(const Permutohedron& p, const OrderDistribution& d) {
    if (d.n() != p.n())
        throw std::invalid_argument("average_swap_distance: dimension mismatch");
    const int N = p.num_vertices();
    Rational sum = 0;
    for (int i = 0; i < N; ++i) {
        if (d.prob(i) == 0) continue;
        for (int j = i + 1; j < N; ++j) {
            if (d.prob(j) == 0) continue;
            sum += Rational(2 * p.dist(i, j)) * d.prob(i) * d.prob(j);
        }
    }
    return sum;
}

/// <d>_i = sum_j p_j d_ij, the average swap distance seen from vertex i.
inline Rational local_average_swap_distance(const Permutohedron& p, const OrderDistribution& d, int i) {
    if (i < 0 || i >= p.num_vertices())
        throw std::out_of_range("local_average_swap_distance: vertex index out of range");
    Rational sum = 0;
    for (int j = 0; j < p.num_vertices(); ++j)
        sum += Rational(p.dist(i, j)) * d.prob(j);
    return sum;
}

/// Range of <d>_i over all shufflings of the probability multiset:
/// sorted probabilities dotted with the ascending / descending distance
/// multiset from vertex i (rearrangement inequality).
inline std::pair<Rational, Rational> local_bounds(const Permutohedron& p, const OrderDistribution& d, int i) {
    if (i < 0 || i >= p.num_vertices())
        throw std::out_of_range("local_bounds: vertex index out of range");
    const int N = p.num_vertices();
    std::vector<int> dists(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) dists[static_cast<std::size_t>(j)] = p.dist(i, j);
    std::sort(dists.begin(), dists.end());
    const RankedProbs r = d.ranked();
    Rational lo = 0, hi = 0;
    for (int k = 0; k < N; ++k) {
        lo += r.pi[static_cast<std::size_t>(k)] * dists[static_cast<std::size_t>(k)];
        hi += r.pi[static_cast<std::size_t>(k)] * dists[static_cast<std::size_t>(N - 1 - k)];
    }
    return {lo, hi};
}

/// P(0..d_max): probability mass of each swap distance. Sums to 1; P(0) = S.
inline std::vector<Rational> distance_mass(const Permutohedron& p, const OrderDistribution& d) {
    if (d.n() != p.n())
        throw std::invalid_argument("distance_mass: dimension mismatch");
    std::vector<Rational> mass(static_cast<std::size_t>(p.diameter() + 1), Rational(0));
    const int N = p.num_vertices();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            mass[static_cast<std::size_t>(p.dist(i, j))] += d.prob(i) * d.prob(j);
    return mass;
}

/// Expected <d> under a uniformly random shuffling of the probabilities:
/// <d>_r = (1 - S) * N/(N-1) * n(n-1)/4.
inline Rational expected_random_shuffle(const OrderDistribution& d) {
    const int N = d.num_vertices();
    const int n = d.n();
    return d.dominance() * Rational(N, N - 1) * Rational(n * (n - 1), 4);
}

/// Expected <d> when the p_i are relative frequencies of F fair die rolls:
/// ((F-1)/F) * <d>_max.
inline Rational expected_die_roll(int n, long long F) {
    if (F < 2) throw std::invalid_argument("expected_die_roll: F must be at least 2");
    return Rational(F - 1, F) * Rational(n * (n - 1), 4);
}

/// The minimum (or maximum) of <d> over all N! shufflings of a probability
/// multiset, with the achieving arrangements.
struct MinimizerSet {
    static constexpr std::size_t kWitnessCap = 1024;

    Rational value;
    // Number of the N! shufflings achieving `value` (tied values make several
    // shufflings produce the same arrangement; all are counted).
    BigInt witness_count = 0;
    // Distinct arrangements achieving `value`, as probability-by-vertex
    // vectors. At most kWitnessCap stored.
    std::vector<std::vector<Rational>> witnesses;
};

namespace detail {

// Common-denominator integer weights: probs[v] = weights[v] / scale.
struct IntegerWeights {
    std::vector<BigInt> weights;
    BigInt scale;
};

inline IntegerWeights to_integer_weights(const OrderDistribution& d) {
    BigInt l = 1;
    for (const auto& p : d.probs()) l = boost::multiprecision::lcm(l, denominator(p));
    IntegerWeights w;
    w.scale = l;
    w.weights.reserve(d.probs().size());
    for (const auto& p : d.probs()) w.weights.push_back(numerator(p) * (l / denominator(p)));
    return w;
}

// sum_{i<j} 2 d_ij w_i w_j over the pairs with both weights non-zero.
inline BigInt weighted_pair_sum(const Permutohedron& p, const std::vector<BigInt>& w) {
    const int N = p.num_vertices();
    BigInt sum = 0;
    for (int i = 0; i < N; ++i) {
        if (w[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = i + 1; j < N; ++j) {
            if (w[static_cast<std::size_t>(j)] == 0) continue;
            sum += 2 * p.dist(i, j) * w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];
        }
    }
    return sum;
}

enum class Extremum { Min, Max };

// Enumerates the distinct placements of the non-zero values only: choose m of
// the N vertices, then walk the multiset permutations of the values. Each
// distinct arrangement corresponds to (N-m)! * prod(tie multiplicity!)
// shufflings, all with the same <d>.
inline MinimizerSet extremum_bruteforce(const Permutohedron& p, const OrderDistribution& d,
                                        Extremum which, long long enumeration_cap) {
    if (d.n() != p.n())
        throw std::invalid_argument("extremum_bruteforce: dimension mismatch");
    const int N = p.num_vertices();
    const IntegerWeights iw = to_integer_weights(d);

    std::vector<BigInt> values;  // non-zero integer weights, ascending
    for (const auto& w : iw.weights)
        if (w != 0) values.push_back(w);
    std::sort(values.begin(), values.end());
    const int m = static_cast<int>(values.size());

    // shufflings per distinct arrangement, and the number of arrangements
    BigInt per_arrangement = factorial(static_cast<unsigned>(N - m));
    BigInt multiset_perms = factorial(static_cast<unsigned>(m));
    for (int i = 0; i < m;) {
        int j = i;
        while (j < m && values[static_cast<std::size_t>(j)] == values[static_cast<std::size_t>(i)]) ++j;
        BigInt ties = factorial(static_cast<unsigned>(j - i));
        per_arrangement *= ties;
        multiset_perms /= ties;
        i = j;
    }
    BigInt choices = 1;  // C(N, m)
    for (int k = 0; k < m; ++k) choices = choices * (N - k) / (k + 1);
    if (choices * multiset_perms > enumeration_cap)
        throw CapacityError("shuffle enumeration exceeds cap");

    std::vector<int> slots(static_cast<std::size_t>(m));  // chosen vertices, ascending
    std::iota(slots.begin(), slots.end(), 0);
    std::optional<BigInt> best;
    BigInt distinct_optimal = 0;
    MinimizerSet result;

    auto evaluate = [&](const std::vector<BigInt>& vals) {
        BigInt val = 0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                val += 2 * p.dist(slots[static_cast<std::size_t>(a)], slots[static_cast<std::size_t>(b)]) *
                       vals[static_cast<std::size_t>(a)] * vals[static_cast<std::size_t>(b)];
        bool better = !best || (which == Extremum::Min ? val < *best : val > *best);
        if (better) {
            best = val;
            distinct_optimal = 0;
            result.witnesses.clear();
        }
        if (val == *best) {
            ++distinct_optimal;
            if (result.witnesses.size() < MinimizerSet::kWitnessCap) {
                std::vector<Rational> arrangement(static_cast<std::size_t>(N), Rational(0));
                for (int a = 0; a < m; ++a)
                    arrangement[static_cast<std::size_t>(slots[static_cast<std::size_t>(a)])] =
                        Rational(vals[static_cast<std::size_t>(a)], iw.scale);
                result.witnesses.push_back(std::move(arrangement));
            }
        }
    };

    while (true) {
        std::vector<BigInt> vals = values;
        do {
            evaluate(vals);
        } while (std::next_permutation(vals.begin(), vals.end()));

        // next combination of m vertices out of N
        int k = m - 1;
        while (k >= 0 && slots[static_cast<std::size_t>(k)] == N - m + k) --k;
        if (k < 0) break;
        ++slots[static_cast<std::size_t>(k)];
        for (int t = k + 1; t < m; ++t)
            slots[static_cast<std::size_t>(t)] = slots[static_cast<std::size_t>(t - 1)] + 1;
    }

    result.value = Rational(*best) / Rational(iw.scale * iw.scale);
    result.witness_count = distinct_optimal * per_arrangement;
    return result;
}

}  // namespace detail

/// Exact minimum of <d> over all N! shufflings (brute force).
inline MinimizerSet min_bruteforce(const Permutohedron& p, const OrderDistribution& d,
                                   long long enumeration_cap = kDefaultEnumerationCap) {
    return detail::extremum_bruteforce(p, d, detail::Extremum::Min, enumeration_cap);
}

/// Exact maximum of <d> over all N! shufflings (brute force).
inline Rational max_bruteforce(const Permutohedron& p, const OrderDistribution& d,
                               long long enumeration_cap = kDefaultEnumerationCap) {
    return detail::extremum_bruteforce(p, d, detail::Extremum::Max, enumeration_cap).value;
}

/// Closed form of <d>_min for n = 3 in terms of the sorted probabilities.
inline Rational min_closed_form_n3(const OrderDistribution& d) {
    if (d.n() != 3) throw std::invalid_argument("min_closed_form_n3: requires n = 3");
    const auto& pi = d.ranked().pi;
    auto g = [&](int i) { return pi[static_cast<std::size_t>(i - 1)]; };
    Rational inner = g(1) * (2 * g(2) + g(4)) + g(2) * (2 * g(4) + g(6)) +
                     g(3) * (2 * g(1) + g(2)) + g(4) * (2 * g(6) + g(5)) +
                     g(5) * (2 * g(3) + g(1)) + g(6) * (2 * g(5) + g(3));
    return 3 * d.dominance() - 2 * inner;
}

namespace detail {

// Hexagon positions (1-based) visited in non-increasing probability order
// for the two minimizing total orders.
inline const std::vector<int>& hexagon_fill_order(int scheme) {
    static const std::vector<int> a = {1, 2, 6, 3, 5, 4};
    static const std::vector<int> b = {1, 6, 2, 5, 3, 4};
    return scheme == 0 ? a : b;
}

}  // namespace detail

/// <d>_min for n = 3 by placing the sorted probabilities around the hexagon
/// per the two minimizing schemes. Returns the value and both arrangements.
inline MinimizerSet min_by_sorted_assignment(const Permutohedron& p, const OrderDistribution& d) {
    if (p.n() != 3 || d.n() != 3)
        throw std::invalid_argument("min_by_sorted_assignment: requires n = 3");
    const std::vector<int> hex = p.hexagon_order();
    const auto& pi = d.ranked().pi;
    MinimizerSet result;
    std::optional<Rational> value;
    for (int scheme = 0; scheme < 2; ++scheme) {
        const auto& fill = detail::hexagon_fill_order(scheme);
        std::vector<Rational> arrangement(6);
        for (int rank = 0; rank < 6; ++rank) {
            int vertex = hex[static_cast<std::size_t>(fill[static_cast<std::size_t>(rank)] - 1)];
            arrangement[static_cast<std::size_t>(vertex)] = pi[static_cast<std::size_t>(rank)];
        }
        Rational v = average_swap_distance(p, OrderDistribution(3, arrangement));
        if (value && *value != v)
            throw std::logic_error("the two sorted-assignment schemes disagree");
        value = v;
        result.witnesses.push_back(std::move(arrangement));
    }
    result.value = *value;
    result.witness_count = 2;
    return result;
}

/// Why omega has no value for a distribution.
enum class OmegaUndefined { SingleOrder, UniformOrders };

struct OmegaResult {
    std::optional<Rational> value;
    std::optional<OmegaUndefined> undefined_reason;

    bool defined() const { return value.has_value(); }
};

/// Omega = (<d>_r - <d>) / (<d>_r - <d>_min); undefined when m = 1 or the
/// distribution is uniform over all orders.
inline OmegaResult omega(const Rational& avg_d, const Rational& avg_d_random,
                         const Rational& avg_d_min, int m, bool uniform) {
    OmegaResult r;
    if (m == 1) {
        r.undefined_reason = OmegaUndefined::SingleOrder;
        return r;
    }
    if (uniform) {
        r.undefined_reason = OmegaUndefined::UniformOrders;
        return r;
    }
    Rational denom = avg_d_random - avg_d_min;
    if (denom == 0)
        throw std::logic_error("omega: zero denominator outside the documented undefined cases");
    r.value = (avg_d_random - avg_d) / denom;
    return r;
}

/// Analytic bounds on <d> as functions of the dominance index.
inline std::pair<Rational, Rational> bounds(const OrderDistribution& d) {
    const Rational sbar = d.dominance();
    if (d.n() == 3) {
        Rational lo = std::max(sbar, Rational(2 * sbar - Rational(2, 3)));
        Rational up = std::min({Rational(sbar + 1), Rational(2 * sbar + Rational(1, 2)), Rational(3, 2)});
        return {lo, up};
    }
    const int n = d.n();
    const Rational avg_max(n * (n - 1), 4);
    const Rational dmax(n * (n - 1), 2);
    return {sbar, std::min(avg_max, Rational(dmax * sbar))};
}

/// Tight lower bound of Omega when m = 2: ((c - 2) d_max) / (c d_max - 2)
/// with c = N/(N-1), attained by antipodal placement for any pi_1.
inline Rational omega_min_m2(int n) {
    if (n < 3) throw std::invalid_argument("omega_min_m2: requires n >= 3");
    BigInt N = factorial(static_cast<unsigned>(n));
    Rational c = Rational(N) / Rational(N - 1);
    Rational dmax(n * (n - 1), 2);
    return ((c - 2) * dmax) / (c * dmax - 2);
}

/// How <d>_max_global was obtained.
enum class MaxGlobalProvenance {
    ProvenN3,       // d_max/2, proven for n = 3
    UnverifiedLargeN  // d_max/2, from the n >= 7 claim plus the two known maximizers
};

/// The full per-distribution scorecard.
struct SwapReport {
    int n = 0;
    int m = 0;
    int d_max = 0;
    Rational S;
    Rational S_bar;
    Rational avg_d;
    Rational avg_d_random;
    Rational avg_d_min;
    Rational avg_d_max_global;
    MaxGlobalProvenance max_global_provenance = MaxGlobalProvenance::ProvenN3;
    OmegaResult omega;
    std::vector<Rational> dist_mass;  // P(0..d_max)
    std::optional<Rational> Z;        // pi1*pi6 + pi2*pi5 + pi3*pi4, n = 3 only
    std::pair<Rational, Rational> d_bounds;
    bool optimal = false;             // <d> == <d>_min exactly
};

struct AnalyzeOptions {
    long long enumeration_cap = kDefaultEnumerationCap;
    bool verify_bruteforce = true;  // cross-check closed form vs brute force (n = 3)
};

inline SwapReport analyze(const Permutohedron& p, const OrderDistribution& d,
                          const AnalyzeOptions& opts = {}) {
    if (d.n() != p.n())
        throw std::invalid_argument("analyze: dimension mismatch");
    SwapReport r;
    r.n = p.n();
    r.d_max = p.diameter();
    r.m = d.support_size();
    r.S = d.simpson();
    r.S_bar = Rational(1) - r.S;
    r.avg_d = average_swap_distance(p, d);
    r.avg_d_random = expected_random_shuffle(d);
    r.dist_mass = distance_mass(p, d);
    r.d_bounds = bounds(d);

    if (p.n() == 3) {
        r.avg_d_min = min_closed_form_n3(d);
        if (opts.verify_bruteforce) {
            Rational bf = min_bruteforce(p, d, opts.enumeration_cap).value;
            if (bf != r.avg_d_min)
                throw std::logic_error("analyze: closed-form <d>_min disagrees with brute force");
        }
        r.avg_d_max_global = Rational(3, 2);
        r.max_global_provenance = MaxGlobalProvenance::ProvenN3;
        const auto& pi = d.ranked().pi;
        r.Z = pi[0] * pi[5] + pi[1] * pi[4] + pi[2] * pi[3];
    } else {
        r.avg_d_min = min_bruteforce(p, d, opts.enumeration_cap).value;
        // d_max/2 is realized by the uniform distribution and by an antipodal
        // half/half pair; proven maximal only for n = 3 and n >= 7.
        r.avg_d_max_global = Rational(r.d_max, 2);
        r.max_global_provenance = MaxGlobalProvenance::UnverifiedLargeN;
    }
    r.omega = omega(r.avg_d, r.avg_d_random, r.avg_d_min, r.m, d.is_uniform());
    r.optimal = (r.avg_d == r.avg_d_min);
    return r;
}

}  // namespace swapopt
