#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dzext/graph.hpp"

namespace dzext {

/// A finite modular lattice given by complete join/meet tables. rank is the
/// common length of maximal chains from the bottom (the lattices produced
/// here are graded). Element order follows the originating vertex order.
struct ModularLattice {
    std::vector<std::string> names;
    int bottom = 0;
    int top = 0;
    std::vector<std::vector<int>> join;
    std::vector<std::vector<int>> meet;
    std::vector<int> rank;
    std::vector<std::pair<int, int>> covers;  // (lower, upper)

    int size() const { return static_cast<int>(names.size()); }
    bool leq(int a, int b) const { return join[a][b] == b; }
};

/// Tries every vertex as bottom (in vertex order): BFS levels orient the
/// edges, joins/meets must exist uniquely, and ranks must satisfy
/// r(a) + r(b) = r(a join b) + r(a meet b). Returns the first success; the
/// graph is then exactly the covering graph of the result.
std::optional<ModularLattice> recognize_modular_lattice(const UnderlyingGraph& g);

/// Direct product with componentwise order. Element (i,j) of the product is
/// at index i * b.size() + j and is named "(ni,nj)".
ModularLattice product_lattice(const ModularLattice& a, const ModularLattice& b);

/// Unordered pairs (a, b), a < b, both covered by their join.
std::vector<std::pair<int, int>> two_covered_pairs(const ModularLattice& l);

struct SubmodularityReport {
    bool full_ok = true;
    bool two_covered_ok = true;
    std::optional<std::pair<int, int>> full_witness;
    std::optional<std::pair<int, int>> two_covered_witness;
    bool modes_agree() const { return full_ok == two_covered_ok; }
};

/// Checks f(a) + f(b) >= f(a join b) + f(a meet b) over all unordered pairs
/// and over 2-covered pairs only. On modular lattices the two modes agree.
SubmodularityReport verify_submodular(const ModularLattice& l,
                                      const std::function<Rational(int)>& f);

struct LatticeDistanceReport {
    bool ok = false;
    SubmodularityReport submodularity;
};

/// Views mu as a function on l x l and checks submodularity both ways.
/// Hypotheses: the lattice elements are the metric points (same order) with
/// the covering graph equal to the underlying graph, and mu is
/// orbit-invariant. Throws HypothesesNotMet otherwise.
LatticeDistanceReport verify_lattice_distance_submodular(const DirectedMetric& m,
                                                         const UnderlyingGraph& g,
                                                         const ModularLattice& l);

}  // namespace dzext
