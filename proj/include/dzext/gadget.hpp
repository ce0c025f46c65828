#pragma once

#include <array>
#include <string>
#include <vector>

#include "dzext/instance.hpp"
#include "dzext/metric.hpp"
#include "dzext/rational.hpp"

namespace dzext {

// Hardness gadgets: small instances whose fixed-label optimal values
// violate submodularity in one of two patterns, enabling a reduction from
// MAX CUT. A pair gadget separates two distinguished variables x, y:
//
//   (i)   tau(s,x|t,y) = tau(t,x|s,y) = tau*
//   (ii)  tau(s,x|s,y) = tau(t,x|t,y) = tau* + delta,  delta > 0
//   (iii) tau(s',x|t',y) >= tau* + delta for all other pairs (s',t').
//
// A sextuple gadget constrains six variables z0..z5 around a
// non-collinear triple (s0,s1,s2): the 64 fixings with
// gamma(z_j) in {s_{j-1}, s_{j+1}} (triple indices mod 3) all hit tau*,
// and every other sextuple of fixings costs at least tau* + delta.

// One priority level of a layered cost function. Layers are combined as
// sum_l M_l * layer_l with multipliers chosen so that optimizing the sum
// optimizes the layers lexicographically, most dominant last.
struct CostLayer {
    std::vector<NamedCost> entries;
};

// Multipliers for the given layers (ascending dominance; layers[0] gets
// multiplier 1). Each further multiplier exceeds, scaled by the layer's
// value granularity, the largest total the lower layers can reach, which
// makes the combination lexicographic. `doubling` scales every non-base
// multiplier by 2^doubling; any doubling preserves the property, which is
// what the stability checks exercise.
std::vector<Rational> escalation_multipliers(const DirectedMetric& m,
                                             const std::vector<CostLayer>& layers,
                                             int doubling = 0);

// Flattens layers * multipliers into one cost list.
std::vector<NamedCost> combine_layers(const std::vector<CostLayer>& layers,
                                      const std::vector<Rational>& multipliers);

struct PairGadgetReport {
    Rational tau_star;
    Rational delta;
    // Row-major |T| x |T| table of tau(a,x|b,y).
    std::vector<Rational> table;
    // Fixings attaining tau*, as (terminal of x, terminal of y).
    std::vector<std::pair<int, int>> optimal_fixings;
};

struct PairGadget {
    ZeroExtInstance instance;
    int s = 0;
    int t = 0;
    std::string x;
    std::string y;
    Rational tau_star;
    Rational delta;
    bool verified = false;
    PairGadgetReport report;
    // Construction data kept for rebuilds at other escalation levels.
    std::vector<CostLayer> layers;
    std::vector<Rational> multipliers;
};

struct SextupleGadgetReport {
    Rational tau_star;
    Rational delta;
    // Row-major |T|^6 table indexed by (label of z0, ..., label of z5).
    std::vector<Rational> table;
    std::vector<std::array<int, 6>> optimal_fixings;
};

struct SextupleGadget {
    ZeroExtInstance instance;
    std::array<int, 3> triple{};
    std::array<std::string, 6> z;
    Rational tau_star;
    Rational delta;
    bool verified = false;
    SextupleGadgetReport report;
    std::vector<CostLayer> layers;
    std::vector<Rational> multipliers;
};

// Evaluates the full fixing table by brute force and checks the three
// clauses exactly. Returns the report on success and throws
// ConditionFailed (with the violated clause and witness fixing in the
// message) otherwise. BudgetExceeded propagates from the solver.
PairGadgetReport verify_pair_gadget(const PairGadget& g);

// Same for the sextuple pattern: 64 designated fixings at tau*, the rest
// at least tau* + delta.
SextupleGadgetReport verify_sextuple_gadget(const SextupleGadget& g);

// Builds the sextuple gadget witnessing hardness of a nonmodular metric,
// around its perimeter-minimal medianless triple: unit couplings of z_j to
// the triple corners s_{j-1}, s_{j+1} on the dominant layer, interior
// penalties a_i on the base layer. Verified before return.
// Throws MetricIsModular.
SextupleGadget build_nonmodular_gadget(const DirectedMetric& m);

// Turns a verified sextuple gadget into a pair gadget by adding hexagonal
// ring weights h_{i-1} between consecutive z's as a new base layer; the
// distinguished pair is (s0, s2) on variables (z1, z4). The separation
// delta equals 2 min h_i^2. Throws GadgetNotVerified and DegenerateGadget
// (when some h_i = 0 would force delta = 0).
PairGadget compose_hexagon(const SextupleGadget& g);

// Pair gadget for a modular metric that is not orbit-invariant, built on
// an orbit-varying 4-cycle (rotated so the common length difference k is
// positive) with five cost layers. Throws NoOrbitVaryingCycle.
PairGadget build_orbit_varying_gadget(const DirectedMetric& m);

// Pair gadget for a metric whose underlying graph is not orientable:
// follows a projectivity sequence from an edge to its own reversal and
// couples a ring of 2k auxiliaries to it. Throws GraphOrientable when the
// graph is orientable and NoWitnessSequence if no sequence is found (which
// non-orientability rules out).
PairGadget build_nonorientable_gadget(const DirectedMetric& m);

// Sextuple gadget from a biased non-collinear triple; the base layer's
// direction per z_i follows the bias direction of the pair
// (s_{i-1}, s_{i+1}), with vacuously biased pairs taking the ">" branch.
// Throws NoBiasedTriple, and AmbiguousDirection if a pair unexpectedly
// fails both uniform comparisons.
SextupleGadget build_biased_triple_gadget(const DirectedMetric& m);

// Rebuilds the gadget with every escalation multiplier doubled and
// re-verifies. True when the doubled gadget passes and its optimal fixing
// set is unchanged. Verification failures at the doubled level propagate.
bool pair_gadget_stable_under_doubling(const PairGadget& g);
bool sextuple_gadget_stable_under_doubling(const SextupleGadget& g);

struct MaxCutInstance {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    int threshold = 0;

    // Validates: vertex range, no self-loops, no duplicate edges,
    // 1 <= threshold <= |E|. Edges are stored with smaller endpoint first.
    static MaxCutInstance make(int num_vertices,
                               std::vector<std::pair<int, int>> edges,
                               int threshold);
};

// Exhaustive maximum cut over all bipartitions (oracle for tests and for
// checking reductions on tiny graphs).
int max_cut_value(int num_vertices,
                  const std::vector<std::pair<int, int>>& edges);

struct ReductionResult {
    ZeroExtInstance instance;
    Rational threshold;
    // Names given to the graph vertices inside the instance.
    std::vector<std::string> vertex_names;
};

// Replaces every edge uv by a fresh copy of the gadget, identifying x with
// u and y with v and sharing the terminals; auxiliaries are renamed
// "<name>@e<edgeIndex>". The cut of size >= threshold exists if and only
// if the instance's optimum is at most |E| tau* + (|E|-k) delta.
// Throws GadgetNotVerified.
ReductionResult reduce_maxcut(const MaxCutInstance& mc, const PairGadget& g);

// Optimum of the reduced instance computed by conditioning on the graph
// vertices' labels and reading per-edge optima off the gadget's table.
// Equivalent to brute force on the full instance but exponential only in
// the number of graph vertices.
Rational reduced_optimum_by_decomposition(const MaxCutInstance& mc,
                                          const PairGadget& g);

}  // namespace dzext
