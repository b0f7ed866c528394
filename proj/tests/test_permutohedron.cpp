#include <catch2/catch_amalgamated.hpp>

#include "swapopt/permutohedron.hpp"

using namespace swapopt;

TEST_CASE("swap distance counts inversions") {
    Permutation abc({0, 1, 2});
    Permutation cba({2, 1, 0});
    Permutation bac({1, 0, 2});
    CHECK(swap_distance(abc, abc) == 0);
    CHECK(swap_distance(abc, bac) == 1);
    CHECK(swap_distance(abc, cba) == 3);
    CHECK(swap_distance(cba, abc) == 3);
    // reversal is the farthest order for any n
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> fwd, rev;
        for (int i = 0; i < n; ++i) fwd.push_back(i);
        rev.assign(fwd.rbegin(), fwd.rend());
        CHECK(swap_distance(Permutation(fwd), Permutation(rev)) == n * (n - 1) / 2);
    }
    CHECK_THROWS_AS(swap_distance(abc, Permutation({0, 1, 2, 3})), std::invalid_argument);
}

TEST_CASE("order labels round-trip") {
    Permutation p = Permutation::from_label("SVO", "SOV");
    CHECK(p.labels() == std::vector<int>{0, 2, 1});
    CHECK(p.to_label("SOV") == "SVO");
    CHECK_THROWS_AS(Permutation::from_label("SSV", "SOV"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_label("SOX", "SOV"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_label("SO", "SOV"), std::invalid_argument);
}

TEST_CASE("permutohedron shape for small n") {
    for (int n = 2; n <= 5; ++n) {
        Permutohedron p(n);
        int N = 1;
        for (int k = 2; k <= n; ++k) N *= k;
        REQUIRE(p.num_vertices() == N);
        CHECK(p.diameter() == n * (n - 1) / 2);
        int max_seen = 0;
        for (int v = 0; v < N; ++v) {
            // (n-1)-regular: one edge per adjacent transposition
            CHECK(static_cast<int>(p.neighbors(v).size()) == n - 1);
            for (int u : p.neighbors(v)) CHECK(p.dist(v, u) == 1);
            for (int u = 0; u < N; ++u) {
                CHECK(p.dist(v, u) == p.dist(u, v));
                max_seen = std::max(max_seen, p.dist(v, u));
            }
            CHECK(p.vertex_index(p.vertex(v)) == v);
        }
        CHECK(max_seen == p.diameter());
    }
}

TEST_CASE("graph distance equals inversion distance exhaustively") {
    for (int n = 2; n <= 4; ++n) {
        Permutohedron p(n);
        for (int i = 0; i < p.num_vertices(); ++i)
            for (int j = 0; j < p.num_vertices(); ++j)
                REQUIRE(p.dist(i, j) == swap_distance(p.vertex(i), p.vertex(j)));
    }
}

TEST_CASE("hexagon walk visits the 6-cycle in order") {
    Permutohedron p(3);
    std::vector<int> hex = p.hexagon_order();
    REQUIRE(hex.size() == 6);
    std::vector<std::string> labels;
    for (int v : hex) labels.push_back(p.vertex(v).to_label("SOV"));
    CHECK(labels == std::vector<std::string>{"SOV", "SVO", "VSO", "VOS", "OVS", "OSV"});
    for (int k = 0; k < 6; ++k)
        CHECK(p.dist(hex[static_cast<std::size_t>(k)], hex[static_cast<std::size_t>((k + 1) % 6)]) == 1);
}

TEST_CASE("construction cap") {
    CHECK_THROWS_AS(Permutohedron(6), CapacityError);
    CHECK_THROWS_AS(Permutohedron(1), CapacityError);
    CHECK_NOTHROW(build_permutohedron(5));
}
