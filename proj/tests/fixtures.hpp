#pragma once

#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "dzext/metric.hpp"

// Shared test metrics. Builders return freshly validated instances so a test
// can never observe another test's state.
namespace dzext::fx {

// Symmetric metric from unit-length graph distances.
inline DirectedMetric graph_metric(std::vector<std::string> names,
                                   const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(names.size());
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<Rational> table(n * n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> d(n, -1);
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    q.push(v);
                }
        }
        for (int t = 0; t < n; ++t) table[s * n + t] = d[t];
    }
    return DirectedMetric::validate(std::move(names), std::move(table));
}

// Directed star: arms[i] = (to_center, from_center) for leaf i; leaf-to-leaf
// distances go through the center.
inline DirectedMetric star_metric(const std::string& center,
                                  const std::vector<std::string>& leaves,
                                  const std::vector<std::pair<Rational, Rational>>& arms) {
    const int n = 1 + static_cast<int>(leaves.size());
    std::vector<std::string> names{center};
    names.insert(names.end(), leaves.begin(), leaves.end());
    std::vector<Rational> table(n * n);
    auto at = [&](int x, int y) -> Rational& { return table[x * n + y]; };
    for (int i = 0; i < n - 1; ++i) {
        at(i + 1, 0) = arms[i].first;
        at(0, i + 1) = arms[i].second;
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            if (i != j) at(i, j) = at(i, 0) + at(0, j);
    return DirectedMetric::validate(std::move(names), std::move(table));
}

// Two terminals, one direction free: minimum s-t cut.
inline DirectedMetric m_cut() {
    return DirectedMetric::validate({"s", "t"}, {0, 1, 0, 0});
}

// Unit triangle: the 3-terminal cut metric.
inline DirectedMetric m_k3() {
    return DirectedMetric::validate({"s0", "s1", "s2"},
                                    {0, 1, 1, 1, 0, 1, 1, 1, 0});
}

// Symmetric 4-cycle p-q-r-s.
inline DirectedMetric m_c4() {
    return graph_metric({"p", "q", "r", "s"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// Modular directed 4-cycle whose opposite-side length differences all equal 1.
inline DirectedMetric m_ov4() {
    return DirectedMetric::validate({"p", "q", "r", "s"},
                                    {0, 2, 3, 2,
                                     1, 0, 1, 3,
                                     3, 2, 0, 2,
                                     1, 3, 1, 0});
}

// Star whose arms all have ratio 2 toward the center: every leaf pair is
// biased, every leaf triple is non-collinear.
inline DirectedMetric m_star3b() {
    return star_metric("r", {"a", "b", "c"}, {{2, 1}, {2, 1}, {2, 1}});
}

// Unit star on the same shape.
inline DirectedMetric m_star3u() {
    return star_metric("r", {"a", "b", "c"}, {{1, 1}, {1, 1}, {1, 1}});
}

// Two-leaf star with the second arm doubled; the underlying graph is a path,
// recognized as a chain lattice.
inline DirectedMetric m_star2() {
    return star_metric("r", {"x1", "x2"}, {{1, 1}, {2, 2}});
}

// Four-leaf star splitting into two compatibility classes of two: x-arms are
// unit, y-arms have mirrored lengths (1,2) and (2,1).
inline DirectedMetric m_star22() {
    return star_metric("r", {"x1", "x2", "y1", "y2"},
                       {{1, 1}, {1, 1}, {2, 1}, {1, 2}});
}

// Four-leaf unit star: one compatibility class of four.
inline DirectedMetric m_star4() {
    return star_metric("r", {"x1", "x2", "y1", "y2"},
                       {{1, 1}, {1, 1}, {1, 1}, {1, 1}});
}

// 3-cube graph distances; the covering graph of the rank-3 Boolean lattice.
inline DirectedMetric m_q3() {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v) {
        names.push_back(std::string() + char('0' + ((v >> 2) & 1)) +
                        char('0' + ((v >> 1) & 1)) + char('0' + (v & 1)));
        for (int b = 0; b < 3; ++b)
            if (!(v & (1 << b))) edges.push_back({v, v | (1 << b)});
    }
    return graph_metric(std::move(names), edges);
}

// Complete bipartite 3+3 graph distances: modular but not orientable.
inline DirectedMetric m_k33() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) edges.push_back({i, 3 + j});
    return graph_metric({"a0", "a1", "a2", "b0", "b1", "b2"}, edges);
}

// Symmetric 5-cycle: not modular.
inline DirectedMetric m_c5() {
    return graph_metric({"v0", "v1", "v2", "v3", "v4"},
                        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// Star with one subdivided arm: passes every hardness check but is neither a
// lattice covering graph nor a star, so the classifier gives up.
inline DirectedMetric m_tree5() {
    return graph_metric({"r", "a", "b", "c1", "c2"}, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
}

}  // namespace dzext::fx
