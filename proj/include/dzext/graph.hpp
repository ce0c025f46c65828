#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "dzext/metric.hpp"

namespace dzext {

/// Oriented edge (from, to) of the underlying graph.
using Arc = std::pair<int, int>;

struct DirectedOrbit {
    int id = 0;
    std::vector<Arc> arcs;  // sorted lexicographically
};

struct GraphModularityWitness {
    enum class Kind { NotBipartite, QuadrangleFails } kind;
    // NotBipartite: {u, v} is an edge inside one BFS color class.
    // QuadrangleFails: {p, q, p1, p2} with d(p,q) = 1 + d(p1,q) = 1 + d(p2,q)
    // and no common neighbor of p1, p2 at distance d(p,q) - 2 from q.
    std::vector<int> vertices;
};

struct OrbitInvarianceWitness {
    Arc a, b;  // same orbit, different lengths
};

struct OrbitVaryingCycle {
    std::array<int, 4> cycle;  // (p, q, r, s), traversal order
    Rational k;                // common nonzero difference of opposite lengths
};

/// Underlying graph of a directed metric: points are vertices, and {x,y} is an
/// edge when one of the two directions has no strictly shorter two-leg detour
/// through any third point. All derived data (hop distances, four-cycles,
/// directed orbits) is computed eagerly; instances are immutable.
class UnderlyingGraph {
public:
    /// Throws DisconnectedUnderlyingGraph when the edge set does not connect
    /// all points.
    static UnderlyingGraph build(const DirectedMetric& m);

    int size() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }
    bool adjacent(int u, int v) const { return adj_[u][v]; }
    const std::vector<int>& neighbors(int u) const { return neighbors_[u]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int hop_distance(int u, int v) const { return dist_[u][v]; }

    /// Four-cycles (p,q,r,s) listed canonically: p minimal, q < s, r the
    /// vertex opposite p.
    const std::vector<std::array<int, 4>>& four_cycles() const { return cycles_; }

    const std::vector<DirectedOrbit>& orbits() const { return orbits_; }
    int orbit_of(int from, int to) const;  // throws NotAPath when not an edge

private:
    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> dist_;
    std::vector<std::array<int, 4>> cycles_;
    std::vector<DirectedOrbit> orbits_;
    std::vector<std::vector<int>> orbit_id_;  // -1 when not an edge
};

/// Bipartiteness plus the quadrangle condition; together they characterize
/// modular graphs.
std::optional<GraphModularityWitness> graph_modularity_witness(const UnderlyingGraph& g);
bool is_modular_graph(const UnderlyingGraph& g);

/// True when no directed orbit contains both orientations of an edge.
bool is_orientable(const UnderlyingGraph& g);
std::optional<std::pair<int, int>> nonorientable_edge(const UnderlyingGraph& g);

/// For an orientable graph: one orientation per edge, constant on orbits.
/// Orbits pair up with their reverses; the one holding the lexicographically
/// smaller arc wins. Throws HypothesesNotMet when the graph is not orientable.
std::vector<Arc> extract_orientation(const UnderlyingGraph& g);

/// mu constant on every directed orbit.
bool is_orbit_invariant(const DirectedMetric& m, const UnderlyingGraph& g);
std::optional<OrbitInvarianceWitness> orbit_invariance_witness(const DirectedMetric& m,
                                                               const UnderlyingGraph& g);

/// First four-cycle (canonical order) whose four opposite-length differences
/// agree and are nonzero.
std::optional<OrbitVaryingCycle> find_orbit_varying_cycle(const DirectedMetric& m,
                                                          const UnderlyingGraph& g);

/// The gate of p in X: a point of X lying on a shortest path from p to every
/// member of X. Unique whenever it exists. Throws EmptySet when X is empty.
std::optional<int> gate(const UnderlyingGraph& g, const std::vector<int>& X, int p);

enum class Correspondence { Forward, Converse };

struct CorrespondenceReport {
    long long sequences_checked = 0;
    std::optional<std::vector<int>> counterexample;
    bool ok() const { return !counterexample; }
};

/// Forward: every mu-shortest sequence is hop-shortest (needs mu modular).
/// Converse: every hop-shortest sequence is mu-shortest (needs mu
/// orbit-invariant and the graph modular). Sequences of up to max_points
/// points are enumerated exhaustively. Throws HypothesesNotMet when the
/// requested direction's hypotheses fail.
CorrespondenceReport check_shortest_correspondence(const DirectedMetric& m,
                                                   const UnderlyingGraph& g,
                                                   Correspondence direction, int max_points);

/// Number of arcs of the given path that lie in the orbit. Throws NotAPath on
/// non-adjacent consecutive vertices; an empty or single-vertex path has
/// count 0.
int orbit_count_on_path(const UnderlyingGraph& g, const std::vector<int>& path, int orbit);

}  // namespace dzext
