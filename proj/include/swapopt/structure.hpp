#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swapopt/distribution.hpp"
#include "swapopt/permutohedron.hpp"
#include "swapopt/rational.hpp"

namespace swapopt {

namespace detail {

// True iff the induced subgraph on `support` is a path (single vertex counts).
inline bool induces_path(const Permutohedron& p, const std::vector<int>& support) {
    const std::size_t m = support.size();
    if (m <= 1) return true;
    std::vector<int> degree(m, 0);
    std::size_t edges = 0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (p.dist(support[a], support[b]) == 1) {
                ++degree[a];
                ++degree[b];
                ++edges;
            }
    if (edges != m - 1) return false;
    int endpoints = 0;
    for (int deg : degree) {
        if (deg > 2) return false;
        if (deg == 1) ++endpoints;
    }
    // m - 1 edges with max degree 2 and two endpoints: connected path.
    return endpoints == 2;
}

}  // namespace detail

/// True iff the non-zero probability vertices lie contiguously on the
/// permutohedron. For n = 3, m = 6 (the whole hexagon) counts as contiguous;
/// otherwise the support must induce a path.
inline bool detect_contiguity(const Permutohedron& p, const OrderDistribution& d) {
    auto [m, support] = d.nonzero_support();
    if (m == p.num_vertices() && p.n() == 3) return true;
    return detail::induces_path(p, support);
}

/// True iff some vertex carrying pi_1 is adjacent to some vertex carrying
/// pi_2 (tie-tolerant). Requires m >= 2; returns no value otherwise.
inline std::optional<bool> detect_adjacency_top2(const Permutohedron& p, const OrderDistribution& d) {
    if (d.support_size() < 2) return std::nullopt;
    const auto& pi = d.ranked().pi;
    const Rational& pi1 = pi[0];
    const Rational& pi2 = pi[1];
    for (int u = 0; u < p.num_vertices(); ++u) {
        if (d.prob(u) != pi1) continue;
        for (int v : p.neighbors(u))
            if (d.prob(v) == pi2) return true;
    }
    return false;
}

/// Radiation from a most likely vertex u: under the hexagon relabeling that
/// puts u at position 1, the partial order p1 >= p2, p1 >= p6, p2 >= p3,
/// p6 >= p5, p3 >= p4, p5 >= p4 holds (comparisons run along each arc, the
/// two arcs are not cross-compared). True iff some maximal-probability
/// vertex satisfies it.
inline bool detect_radiation(const Permutohedron& p, const OrderDistribution& d) {
    if (p.n() != 3)
        throw std::invalid_argument("detect_radiation: requires n = 3");
    const std::vector<int> hex = p.hexagon_order();
    const Rational pi1 = d.ranked().pi[0];
    for (int start = 0; start < 6; ++start) {
        // walk the hexagon in both senses; the partial order is mirror-symmetric,
        // so one sense suffices
        std::array<Rational, 6> q;
        for (int k = 0; k < 6; ++k)
            q[static_cast<std::size_t>(k)] = d.prob(hex[static_cast<std::size_t>((start + k) % 6)]);
        if (q[0] != pi1) continue;
        if (q[0] >= q[1] && q[0] >= q[5] && q[1] >= q[2] && q[5] >= q[4] &&
            q[2] >= q[3] && q[4] >= q[3])
            return true;
    }
    return false;
}

/// All hexagon edges whose two endpoints both carry probability >= pi_2.
inline std::vector<std::pair<int, int>> detect_slash(const Permutohedron& p, const OrderDistribution& d) {
    if (p.n() != 3)
        throw std::invalid_argument("detect_slash: requires n = 3");
    const Rational pi2 = d.ranked().pi[1];
    const std::vector<int> hex = p.hexagon_order();
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < 6; ++k) {
        int u = hex[static_cast<std::size_t>(k)];
        int v = hex[static_cast<std::size_t>((k + 1) % 6)];
        if (d.prob(u) >= pi2 && d.prob(v) >= pi2)
            pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

/// All consecutive hexagon triples (t, u, v) with min probability >= pi_3
/// and the middle vertex at least as likely as both ends.
inline std::vector<std::array<int, 3>> detect_wedge(const Permutohedron& p, const OrderDistribution& d) {
    if (p.n() != 3)
        throw std::invalid_argument("detect_wedge: requires n = 3");
    const Rational pi3 = d.ranked().pi[2];
    const std::vector<int> hex = p.hexagon_order();
    std::vector<std::array<int, 3>> triples;
    for (int k = 0; k < 6; ++k) {
        int t = hex[static_cast<std::size_t>(k)];
        int u = hex[static_cast<std::size_t>((k + 1) % 6)];
        int v = hex[static_cast<std::size_t>((k + 2) % 6)];
        const Rational& pt = d.prob(t);
        const Rational& pu = d.prob(u);
        const Rational& pv = d.prob(v);
        if (std::min({pt, pu, pv}) >= pi3 && pu >= pt && pu >= pv)
            triples.push_back({t, u, v});
    }
    return triples;
}

struct StructureFlags {
    bool contiguous = false;
    std::optional<bool> adjacency_top2;
    bool radiation = false;
    std::vector<std::pair<int, int>> slash_pairs;
    std::vector<std::array<int, 3>> wedge_triples;
};

inline StructureFlags detect_structures(const Permutohedron& p, const OrderDistribution& d) {
    StructureFlags f;
    f.contiguous = detect_contiguity(p, d);
    f.adjacency_top2 = detect_adjacency_top2(p, d);
    if (p.n() == 3) {
        f.radiation = detect_radiation(p, d);
        f.slash_pairs = detect_slash(p, d);
        f.wedge_triples = detect_wedge(p, d);
    }
    return f;
}

/// Transitive reduction of the value order restricted to permutohedron
/// edges. Vertices with equal values along a tie path form a tie group;
/// arcs connect tie groups.
struct HasseDiagram {
    std::vector<Rational> values;             // per vertex
    std::vector<std::vector<int>> tie_groups; // vertices with equal values, size >= 1
    std::vector<int> group_of_vertex;
    std::vector<std::pair<int, int>> arcs;    // directed group -> group, reduced
};

inline HasseDiagram hasse(const std::vector<Rational>& values, const Permutohedron& p) {
    const int N = p.num_vertices();
    if (static_cast<int>(values.size()) != N)
        throw std::invalid_argument("hasse: one value per vertex required");

    HasseDiagram h;
    h.values = values;
    h.group_of_vertex.assign(static_cast<std::size_t>(N), -1);

    // Tie groups: connected components of equal-value permutohedron edges.
    for (int v = 0; v < N; ++v) {
        if (h.group_of_vertex[static_cast<std::size_t>(v)] >= 0) continue;
        int g = static_cast<int>(h.tie_groups.size());
        std::vector<int> stack{v};
        std::vector<int> members;
        h.group_of_vertex[static_cast<std::size_t>(v)] = g;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w : p.neighbors(u)) {
                if (h.group_of_vertex[static_cast<std::size_t>(w)] < 0 &&
                    values[static_cast<std::size_t>(w)] == values[static_cast<std::size_t>(u)]) {
                    h.group_of_vertex[static_cast<std::size_t>(w)] = g;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        h.tie_groups.push_back(std::move(members));
    }

    const int G = static_cast<int>(h.tie_groups.size());
    std::vector<std::vector<bool>> direct(static_cast<std::size_t>(G),
                                          std::vector<bool>(static_cast<std::size_t>(G), false));
    for (int u = 0; u < N; ++u)
        for (int w : p.neighbors(u)) {
            int gu = h.group_of_vertex[static_cast<std::size_t>(u)];
            int gw = h.group_of_vertex[static_cast<std::size_t>(w)];
            if (gu != gw && values[static_cast<std::size_t>(u)] >= values[static_cast<std::size_t>(w)])
                direct[static_cast<std::size_t>(gu)][static_cast<std::size_t>(gw)] = true;
        }

    // Reachability, then drop arcs implied through an intermediate group.
    auto reach = direct;
    for (int k = 0; k < G; ++k)
        for (int i = 0; i < G; ++i)
            if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                for (int j = 0; j < G; ++j)
                    if (reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                        reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    for (int i = 0; i < G; ++i)
        for (int j = 0; j < G; ++j) {
            if (!direct[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
            bool implied = false;
            for (int k = 0; k < G && !implied; ++k)
                if (k != i && k != j && reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    implied = true;
            if (!implied) h.arcs.emplace_back(i, j);
        }
    std::sort(h.arcs.begin(), h.arcs.end());
    return h;
}

/// The two probability rankings predicted when `most_likely` is the source
/// order (n = 3): the hexagon is rotated so the source sits at position 1
/// and the two minimizing total orders are instantiated.
inline std::pair<std::vector<std::string>, std::vector<std::string>>
predicted_rankings(const std::string& most_likely, const std::string& alphabet = "SOV") {
    Permutohedron p(3);
    const int source = p.vertex_index(Permutation::from_label(most_likely, alphabet));
    const std::vector<int> hex = p.hexagon_order();
    int start = -1;
    for (int k = 0; k < 6; ++k)
        if (hex[static_cast<std::size_t>(k)] == source) start = k;

    auto chain = [&](const std::vector<int>& fill) {
        std::vector<std::string> labels;
        for (int pos : fill) {
            int vertex = hex[static_cast<std::size_t>((start + pos - 1) % 6)];
            labels.push_back(p.vertex(vertex).to_label(alphabet));
        }
        return labels;
    };
    // positions visited in non-increasing probability order (and its mirror)
    static const std::vector<int> scheme_a = {1, 2, 6, 3, 5, 4};
    static const std::vector<int> scheme_b = {1, 6, 2, 5, 3, 4};
    return {chain(scheme_a), chain(scheme_b)};
}

}  // namespace swapopt
