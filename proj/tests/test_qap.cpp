#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "swapopt/optimality.hpp"
#include "swapopt/qap.hpp"

using namespace swapopt;

namespace {

QapInstance outer_product_instance(const Permutohedron& p, const OrderDistribution& d) {
    const int N = p.num_vertices();
    QapInstance inst;
    inst.flows.assign(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N)));
    inst.distances.assign(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N)));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            inst.flows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d.prob(i) * d.prob(j);
            inst.distances[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.dist(i, j);
        }
    return inst;
}

}  // namespace

TEST_CASE("qap_min with outer-product flows reproduces the minimum average distance") {
    Permutohedron p(3);
    std::mt19937 rng(73);
    for (int t = 0; t < 10; ++t) {
        auto d = testutil::random_distribution(p, rng);
        QapSolution s = qap_min(outer_product_instance(p, d));
        CHECK(s.value == min_bruteforce(p, d).value);
        for (const auto& sigma : s.witnesses) {
            Rational val = 0;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j)
                    val += d.prob(i) * d.prob(j) *
                           p.dist(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
            CHECK(val == s.value);
        }
    }
}

TEST_CASE("qap validation and capacity") {
    QapInstance bad;
    bad.flows = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    bad.distances = {{Rational(1), Rational(1)}, {Rational(1), Rational(0)}};  // non-zero diagonal
    CHECK_THROWS_AS(qap_min(bad), std::invalid_argument);
    QapInstance big;
    big.flows.assign(9, std::vector<Rational>(9, Rational(0)));
    big.distances.assign(9, std::vector<Rational>(9, Rational(0)));
    CHECK_THROWS_AS(qap_min(big), CapacityError);
}

TEST_CASE("minimum linear arrangement oracles") {
    GraphInstance path3{3, {{0, 1}, {1, 2}}};
    CHECK(mla_min(path3).value == 2);

    GraphInstance star{4, {{0, 1}, {0, 2}, {0, 3}}};
    CHECK(mla_min(star).value == 4);  // center second-from-end: lengths 1, 1, 2

    GraphInstance k3{3, {{0, 1}, {1, 2}, {0, 2}}};
    CHECK(mla_min(k3).value == 4);  // 1 + 1 + 2 whatever the layout

    CHECK_THROWS_AS(mla_min(GraphInstance{3, {{0, 0}}}).value, std::invalid_argument);
    CHECK_THROWS_AS(mla_min(GraphInstance{2, {{0, 1}, {1, 0}}}).value, std::invalid_argument);
    CHECK_THROWS_AS(mla_min(GraphInstance{9, {}}), CapacityError);
}

TEST_CASE("random-layout baseline is the exact average over layouts") {
    std::mt19937 rng(79);
    for (int t = 0; t < 10; ++t) {
        int N = 3 + t % 4;
        GraphInstance g{N, {}};
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (rng() % 2) g.edges.emplace_back(a, b);
        if (g.edges.empty()) g.edges.emplace_back(0, 1);

        std::vector<int> sigma(static_cast<std::size_t>(N));
        std::iota(sigma.begin(), sigma.end(), 0);
        Rational total = 0;
        long long layouts = 0;
        do {
            for (auto [a, b] : g.edges)
                total += std::abs(sigma[static_cast<std::size_t>(a)] - sigma[static_cast<std::size_t>(b)]);
            ++layouts;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(mla_random(g) == total / layouts);
    }
}

TEST_CASE("qap_min reproduces mla_min through 0/1 adjacency flows") {
    std::mt19937 rng(83);
    for (int t = 0; t < 10; ++t) {
        int N = 3 + t % 3;
        GraphInstance g{N, {}};
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (rng() % 2) g.edges.emplace_back(a, b);
        if (g.edges.empty()) g.edges.emplace_back(0, 1);

        QapInstance inst;
        inst.flows.assign(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N), Rational(0)));
        inst.distances.assign(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N)));
        for (auto [a, b] : g.edges) {
            inst.flows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
            inst.flows[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
        }
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                inst.distances[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::abs(i - j);
        // the symmetric flow matrix counts every edge twice
        CHECK(qap_min(inst).value == 2 * mla_min(g).value);
    }
}

TEST_CASE("compression with prescribed magnitudes") {
    CodingInstance inst{{Rational(1, 2), Rational(1, 3), Rational(1, 6)},
                        {Rational(3), Rational(1), Rational(2)}};
    CHECK(compression_min(inst) == Rational(1, 2) * 1 + Rational(1, 3) * 2 + Rational(1, 6) * 3);
    CHECK(compression_random(inst) == 2);
    CHECK(compression_min(inst) <= compression_random(inst));

    CodingInstance bad{{Rational(1, 2), Rational(1, 3)}, {Rational(1), Rational(2)}};
    CHECK_THROWS_AS(compression_min(bad), std::invalid_argument);  // sums to 5/6
}

TEST_CASE("compression minimum matches enumeration and the qap embedding") {
    std::mt19937 rng(89);
    std::uniform_int_distribution<long long> num(1, 9);
    for (int t = 0; t < 10; ++t) {
        int N = 2 + t % 4;
        std::vector<Rational> probs;
        long long total = 0;
        std::vector<long long> counts;
        for (int i = 0; i < N; ++i) {
            counts.push_back(num(rng));
            total += counts.back();
        }
        for (long long c : counts) probs.emplace_back(c, total);
        std::vector<Rational> lens;
        for (int i = 0; i < N; ++i) lens.emplace_back(num(rng));
        CodingInstance inst{probs, lens};

        // full enumeration over pairings
        std::vector<int> sigma(static_cast<std::size_t>(N));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::optional<Rational> best;
        do {
            Rational v = 0;
            for (int i = 0; i < N; ++i)
                v += probs[static_cast<std::size_t>(i)] * lens[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
            if (!best || v < *best) best = v;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(compression_min(inst) == *best);

        // Koopmans-Beckmann embedding: flow p_i from i to its successor, and
        // every inter-location distance out of a equal to l_a
        QapInstance q;
        q.flows.assign(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N), Rational(0)));
        q.distances.assign(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N), Rational(0)));
        for (int i = 0; i < N; ++i) {
            q.flows[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % N)] = probs[static_cast<std::size_t>(i)];
            for (int j = 0; j < N; ++j)
                if (i != j) q.distances[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lens[static_cast<std::size_t>(i)];
        }
        if (N >= 2) CHECK(qap_min(q).value == compression_min(inst));
    }
}

TEST_CASE("rearrangement bounds bracket every pairing") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<long long> num(1, 9);
    for (int t = 0; t < 10; ++t) {
        int N = 2 + t % 4;
        std::vector<Rational> a, b;
        for (int i = 0; i < N; ++i) {
            a.emplace_back(num(rng));
            b.emplace_back(num(rng));
        }
        auto [lo, hi] = rearrangement_bounds(a, b);
        std::vector<int> sigma(static_cast<std::size_t>(N));
        std::iota(sigma.begin(), sigma.end(), 0);
        bool hit_lo = false, hit_hi = false;
        do {
            Rational v = 0;
            for (int i = 0; i < N; ++i)
                v += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
            CHECK(lo <= v);
            CHECK(v <= hi);
            hit_lo = hit_lo || v == lo;
            hit_hi = hit_hi || v == hi;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(hit_lo);
        CHECK(hit_hi);
    }
    CHECK_THROWS_AS(rearrangement_bounds({Rational(1)}, {}), std::invalid_argument);
}
