#include "dzext/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace dzext {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

UnderlyingGraph UnderlyingGraph::build(const DirectedMetric& m) {
    UnderlyingGraph g;
    const int n = m.size();
    g.n_ = n;
    g.names_ = m.points();
    g.adj_.assign(n, std::vector<bool>(n, false));
    g.neighbors_.assign(n, {});

    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool fwd = true, bwd = true;
            for (int z = 0; z < n && (fwd || bwd); ++z) {
                if (z == x || z == y) continue;
                if (m.dist(x, y) >= m.dist(x, z) + m.dist(z, y)) fwd = false;
                if (m.dist(y, x) >= m.dist(y, z) + m.dist(z, x)) bwd = false;
            }
            if (fwd || bwd) {
                g.adj_[x][y] = g.adj_[y][x] = true;
                g.neighbors_[x].push_back(y);
                g.neighbors_[y].push_back(x);
                g.edges_.emplace_back(x, y);
            }
        }

    g.dist_.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::deque<int> queue{s};
        g.dist_[s][s] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors_[u])
                if (g.dist_[s][v] < 0) {
                    g.dist_[s][v] = g.dist_[s][u] + 1;
                    queue.push_back(v);
                }
        }
        for (int v = 0; v < n; ++v)
            if (g.dist_[s][v] < 0)
                throw Error(Errc::DisconnectedUnderlyingGraph,
                            g.names_[s] + " and " + g.names_[v] + " are not connected");
    }

    for (int p = 0; p < n; ++p)
        for (size_t a = 0; a < g.neighbors_[p].size(); ++a)
            for (size_t b = a + 1; b < g.neighbors_[p].size(); ++b) {
                int q = g.neighbors_[p][a], s = g.neighbors_[p][b];
                if (q < p || s < p) continue;
                for (int r = p + 1; r < n; ++r)
                    if (r != q && r != s && g.adj_[q][r] && g.adj_[s][r])
                        g.cycles_.push_back({p, q, r, s});
            }

    auto arc_id = [n](int u, int v) { return u * n + v; };
    UnionFind uf(n * n);
    for (const auto& c : g.cycles_) {
        int p = c[0], q = c[1], r = c[2], s = c[3];
        uf.join(arc_id(p, q), arc_id(s, r));
        uf.join(arc_id(q, r), arc_id(p, s));
        uf.join(arc_id(r, s), arc_id(q, p));
        uf.join(arc_id(s, p), arc_id(r, q));
    }
    std::map<int, std::vector<Arc>> groups;
    for (auto [u, v] : g.edges_) {
        groups[uf.find(arc_id(u, v))].emplace_back(u, v);
        groups[uf.find(arc_id(v, u))].emplace_back(v, u);
    }
    std::vector<std::vector<Arc>> orbit_arcs;
    for (auto& [root, arcs] : groups) {
        std::sort(arcs.begin(), arcs.end());
        orbit_arcs.push_back(std::move(arcs));
    }
    std::sort(orbit_arcs.begin(), orbit_arcs.end());
    g.orbit_id_.assign(n, std::vector<int>(n, -1));
    for (size_t i = 0; i < orbit_arcs.size(); ++i) {
        DirectedOrbit orbit;
        orbit.id = static_cast<int>(i);
        orbit.arcs = std::move(orbit_arcs[i]);
        for (auto [u, v] : orbit.arcs) g.orbit_id_[u][v] = orbit.id;
        g.orbits_.push_back(std::move(orbit));
    }
    return g;
}

int UnderlyingGraph::orbit_of(int from, int to) const {
    int id = orbit_id_[from][to];
    if (id < 0)
        throw Error(Errc::NotAPath, names_[from] + " -> " + names_[to] + " is not an edge");
    return id;
}

std::optional<GraphModularityWitness> graph_modularity_witness(const UnderlyingGraph& g) {
    const int n = g.size();
    std::vector<int> color(n, -1);
    color[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u))
            if (color[v] < 0) {
                color[v] = color[u] ^ 1;
                queue.push_back(v);
            }
    }
    for (auto [u, v] : g.edges())
        if (color[u] == color[v])
            return GraphModularityWitness{GraphModularityWitness::Kind::NotBipartite, {u, v}};

    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            int d = g.hop_distance(p, q);
            if (d < 2) continue;
            const auto& nb = g.neighbors(p);
            for (size_t a = 0; a < nb.size(); ++a)
                for (size_t b = a + 1; b < nb.size(); ++b) {
                    int p1 = nb[a], p2 = nb[b];
                    if (g.hop_distance(p1, q) != d - 1 || g.hop_distance(p2, q) != d - 1)
                        continue;
                    bool found = false;
                    for (int w = 0; w < n && !found; ++w)
                        if (g.adjacent(w, p1) && g.adjacent(w, p2) && g.hop_distance(w, q) == d - 2)
                            found = true;
                    if (!found)
                        return GraphModularityWitness{
                            GraphModularityWitness::Kind::QuadrangleFails, {p, q, p1, p2}};
                }
        }
    return std::nullopt;
}

bool is_modular_graph(const UnderlyingGraph& g) { return !graph_modularity_witness(g); }

std::optional<std::pair<int, int>> nonorientable_edge(const UnderlyingGraph& g) {
    for (const auto& orbit : g.orbits())
        for (auto [u, v] : orbit.arcs)
            if (u < v && g.orbit_of(v, u) == orbit.id) return std::make_pair(u, v);
    return std::nullopt;
}

bool is_orientable(const UnderlyingGraph& g) { return !nonorientable_edge(g); }

std::vector<Arc> extract_orientation(const UnderlyingGraph& g) {
    if (!is_orientable(g))
        throw Error(Errc::HypothesesNotMet, "graph is not orientable");
    std::vector<Arc> out;
    for (const auto& orbit : g.orbits()) {
        auto [u, v] = orbit.arcs.front();
        int reverse_id = g.orbit_of(v, u);
        if (orbit.arcs.front() < g.orbits()[reverse_id].arcs.front())
            out.insert(out.end(), orbit.arcs.begin(), orbit.arcs.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<OrbitInvarianceWitness> orbit_invariance_witness(const DirectedMetric& m,
                                                               const UnderlyingGraph& g) {
    for (const auto& orbit : g.orbits()) {
        const Arc& first = orbit.arcs.front();
        for (const Arc& arc : orbit.arcs)
            if (m.dist(arc.first, arc.second) != m.dist(first.first, first.second))
                return OrbitInvarianceWitness{first, arc};
    }
    return std::nullopt;
}

bool is_orbit_invariant(const DirectedMetric& m, const UnderlyingGraph& g) {
    return !orbit_invariance_witness(m, g);
}

std::optional<OrbitVaryingCycle> find_orbit_varying_cycle(const DirectedMetric& m,
                                                          const UnderlyingGraph& g) {
    for (const auto& c : g.four_cycles()) {
        int p = c[0], q = c[1], r = c[2], s = c[3];
        Rational k = m.dist(p, q) - m.dist(s, r);
        if (k == 0) continue;
        if (m.dist(r, s) - m.dist(q, p) != k) continue;
        if (m.dist(p, s) - m.dist(q, r) != k) continue;
        if (m.dist(r, q) - m.dist(s, p) != k) continue;
        return OrbitVaryingCycle{{p, q, r, s}, k};
    }
    return std::nullopt;
}

std::optional<int> gate(const UnderlyingGraph& g, const std::vector<int>& X, int p) {
    if (X.empty()) throw Error(Errc::EmptySet, "gate of an empty set");
    std::optional<int> found;
    for (int x : X) {
        bool ok = true;
        for (int q : X)
            if (g.hop_distance(p, q) != g.hop_distance(p, x) + g.hop_distance(x, q)) {
                ok = false;
                break;
            }
        if (ok) {
            if (found) throw std::logic_error("gate is not unique");
            found = x;
        }
    }
    return found;
}

CorrespondenceReport check_shortest_correspondence(const DirectedMetric& m,
                                                   const UnderlyingGraph& g,
                                                   Correspondence direction, int max_points) {
    if (direction == Correspondence::Forward) {
        if (!is_modular(m))
            throw Error(Errc::HypothesesNotMet, "metric is not modular");
    } else {
        if (!is_orbit_invariant(m, g))
            throw Error(Errc::HypothesesNotMet, "metric is not orbit-invariant");
        if (!is_modular_graph(g))
            throw Error(Errc::HypothesesNotMet, "underlying graph is not modular");
    }
    CorrespondenceReport report;
    const int n = m.size();
    for (int len = 1; len <= max_points; ++len) {
        std::vector<int> seq(len, 0);
        while (true) {
            ++report.sequences_checked;
            Rational mu_total = 0;
            int hop_total = 0;
            for (int i = 0; i + 1 < len; ++i) {
                mu_total += m.dist(seq[i], seq[i + 1]);
                hop_total += g.hop_distance(seq[i], seq[i + 1]);
            }
            bool mu_shortest = mu_total == m.dist(seq.front(), seq.back());
            bool hop_shortest = hop_total == g.hop_distance(seq.front(), seq.back());
            bool bad = direction == Correspondence::Forward ? (mu_shortest && !hop_shortest)
                                                            : (hop_shortest && !mu_shortest);
            if (bad) {
                report.counterexample = seq;
                return report;
            }
            int i = len - 1;
            while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
            if (i < 0) break;
            ++seq[i];
        }
    }
    return report;
}

int orbit_count_on_path(const UnderlyingGraph& g, const std::vector<int>& path, int orbit) {
    int count = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (g.orbit_of(path[i], path[i + 1]) == orbit) ++count;
    return count;
}

}  // namespace dzext
