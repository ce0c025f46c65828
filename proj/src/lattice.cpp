#include "dzext/lattice.hpp"

#include <algorithm>
#include <deque>

namespace dzext {

namespace {

// Attempts to read the graph as the covering diagram of a modular lattice
// with the given bottom. Levels come from BFS; every edge must step one
// level, joins and meets must exist, and ranks must obey the modular law.
std::optional<ModularLattice> try_bottom(const UnderlyingGraph& g, int bottom) {
    const int n = g.size();
    std::vector<int> level(n);
    for (int v = 0; v < n; ++v) level[v] = g.hop_distance(bottom, v);
    for (auto [u, v] : g.edges())
        if (level[u] == level[v]) return std::nullopt;

    // leq by reachability along rising edges, filled level by level.
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return level[a] != level[b] ? level[a] < level[b] : a < b;
    });
    for (int v : order) {
        leq[v][v] = true;
        for (int u : g.neighbors(v))
            if (level[u] == level[v] - 1)
                for (int w = 0; w < n; ++w)
                    if (leq[w][u]) leq[w][v] = true;
    }

    ModularLattice l;
    l.names = g.names();
    l.bottom = bottom;
    l.rank = level;
    l.join.assign(n, std::vector<int>(n, -1));
    l.meet.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int join = -1, meet = -1;
            for (int c = 0; c < n; ++c) {
                if (leq[a][c] && leq[b][c] && (join < 0 || leq[c][join])) join = c;
                if (leq[c][a] && leq[c][b] && (meet < 0 || leq[meet][c])) meet = c;
            }
            if (join < 0 || meet < 0) return std::nullopt;
            // The candidates found are minimal/maximal only if they compare
            // with every other common bound; re-scan to confirm.
            for (int c = 0; c < n; ++c) {
                if (leq[a][c] && leq[b][c] && !leq[join][c]) return std::nullopt;
                if (leq[c][a] && leq[c][b] && !leq[c][meet]) return std::nullopt;
            }
            l.join[a][b] = join;
            l.meet[a][b] = meet;
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (level[a] + level[b] != level[l.join[a][b]] + level[l.meet[a][b]])
                return std::nullopt;
    l.top = l.join[0][0];
    for (int v = 0; v < n; ++v) l.top = l.join[l.top][v];
    for (auto [u, v] : g.edges()) {
        if (level[u] > level[v]) std::swap(u, v);
        l.covers.emplace_back(u, v);
    }
    std::sort(l.covers.begin(), l.covers.end());
    return l;
}

}  // namespace

std::optional<ModularLattice> recognize_modular_lattice(const UnderlyingGraph& g) {
    for (int bottom = 0; bottom < g.size(); ++bottom)
        if (auto l = try_bottom(g, bottom)) return l;
    return std::nullopt;
}

ModularLattice product_lattice(const ModularLattice& a, const ModularLattice& b) {
    ModularLattice p;
    const int nb = b.size();
    auto id = [nb](int i, int j) { return i * nb + j; };
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < nb; ++j) p.names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
    const int n = a.size() * nb;
    p.bottom = id(a.bottom, b.bottom);
    p.top = id(a.top, b.top);
    p.join.assign(n, std::vector<int>(n, 0));
    p.meet.assign(n, std::vector<int>(n, 0));
    p.rank.assign(n, 0);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < nb; ++j) {
            p.rank[id(i, j)] = a.rank[i] + b.rank[j];
            for (int k = 0; k < a.size(); ++k)
                for (int m = 0; m < nb; ++m) {
                    p.join[id(i, j)][id(k, m)] = id(a.join[i][k], b.join[j][m]);
                    p.meet[id(i, j)][id(k, m)] = id(a.meet[i][k], b.meet[j][m]);
                }
        }
    for (auto [u, v] : a.covers)
        for (int j = 0; j < nb; ++j) p.covers.emplace_back(id(u, j), id(v, j));
    for (auto [u, v] : b.covers)
        for (int i = 0; i < a.size(); ++i) p.covers.emplace_back(id(i, u), id(i, v));
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

std::vector<std::pair<int, int>> two_covered_pairs(const ModularLattice& l) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < l.size(); ++a)
        for (int b = a + 1; b < l.size(); ++b) {
            int j = l.join[a][b];
            if (l.rank[j] == l.rank[a] + 1 && l.rank[j] == l.rank[b] + 1) out.emplace_back(a, b);
        }
    return out;
}

SubmodularityReport verify_submodular(const ModularLattice& l,
                                      const std::function<Rational(int)>& f) {
    SubmodularityReport report;
    std::vector<Rational> values(l.size());
    for (int i = 0; i < l.size(); ++i) values[i] = f(i);
    for (int a = 0; a < l.size() && report.full_ok; ++a)
        for (int b = a + 1; b < l.size(); ++b)
            if (values[a] + values[b] < values[l.join[a][b]] + values[l.meet[a][b]]) {
                report.full_ok = false;
                report.full_witness = {a, b};
                break;
            }
    for (auto [a, b] : two_covered_pairs(l))
        if (values[a] + values[b] < values[l.join[a][b]] + values[l.meet[a][b]]) {
            report.two_covered_ok = false;
            report.two_covered_witness = {a, b};
            break;
        }
    return report;
}

LatticeDistanceReport verify_lattice_distance_submodular(const DirectedMetric& m,
                                                         const UnderlyingGraph& g,
                                                         const ModularLattice& l) {
    if (l.size() != m.size() || l.names != m.points())
        throw Error(Errc::HypothesesNotMet, "lattice elements differ from metric points");
    std::vector<std::pair<int, int>> lattice_edges;
    for (auto [u, v] : l.covers)
        lattice_edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(lattice_edges.begin(), lattice_edges.end());
    if (lattice_edges != g.edges())
        throw Error(Errc::HypothesesNotMet, "lattice covering graph differs from underlying graph");
    if (!is_orbit_invariant(m, g))
        throw Error(Errc::HypothesesNotMet, "metric is not orbit-invariant");

    ModularLattice square = product_lattice(l, l);
    const int n = l.size();
    LatticeDistanceReport report;
    report.submodularity = verify_submodular(
        square, [&](int e) { return m.dist(e / n, e % n); });
    report.ok = report.submodularity.full_ok && report.submodularity.two_covered_ok;
    return report;
}

}  // namespace dzext
