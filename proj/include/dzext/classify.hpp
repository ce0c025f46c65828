#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dzext/lattice.hpp"

namespace dzext {

struct BiasedPairWitness {
    int x = 0, y = 0;
    enum class Direction { Greater, Less, Vacuous } direction = Direction::Vacuous;
    std::vector<int> interior;  // common interval interior, may be empty
};

/// A pair is biased when the ratio chain R(x,z) vs R(z,y) is uniformly strict
/// in one direction over the common interval interior. An empty interior
/// counts as biased (flagged Vacuous).
std::optional<BiasedPairWitness> biased_pair_witness(const DirectedMetric& m, int x, int y);
bool is_biased_pair(const DirectedMetric& m, int x, int y);

/// Triple of distinct points, none inside the two-way interval of the other
/// two. Throws RepeatedPoint on repeated entries.
bool is_non_collinear_triple(const DirectedMetric& m, int s0, int s1, int s2);

struct BiasedTriple {
    std::array<int, 3> triple;
    std::array<BiasedPairWitness, 3> pairs;  // (s0,s1), (s0,s2), (s1,s2)
};

/// First (lexicographic) non-collinear triple whose three pairs are all
/// biased.
std::optional<BiasedTriple> find_biased_non_collinear_triple(const DirectedMetric& m);

/// Center of a star graph (one vertex adjacent to all others, no other
/// edges). For a single edge the first endpoint wins. nullopt when not a star.
std::optional<int> star_center(const UnderlyingGraph& g);

/// Partition of the leaves into the minimum number of unbiased sets, where X
/// is unbiased when R(p,r) = R(r,q) for every ordered pair of distinct
/// p, q in X. Deterministic: minimal part count, then lexicographically first
/// assignment. Parts are sorted, leaves in point order inside each part.
std::vector<std::vector<int>> unbiased_partition(const DirectedMetric& m,
                                                 const UnderlyingGraph& g, int center);

enum class Outcome { Tractable, NPHard, Unknown };
enum class HardnessCondition {
    NotModular,
    NotOrientable,
    NotOrbitInvariant,
    BiasedNonCollinearTriple,
};
enum class TractabilityCertificate { ModularLatticeSubmodular, StarPolymorphism };

struct TraceStep {
    std::string check;
    std::string result;
};

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::optional<HardnessCondition> condition;
    std::optional<TractabilityCertificate> certificate;

    std::optional<std::array<int, 3>> medianless_triple;
    std::optional<std::pair<int, int>> bad_edge;           // NotOrientable
    std::optional<OrbitInvarianceWitness> orbit_witness;   // NotOrbitInvariant
    std::optional<BiasedTriple> biased_triple;             // BiasedNonCollinearTriple
    std::optional<ModularLattice> lattice;                 // ModularLatticeSubmodular
    std::optional<int> center;                             // StarPolymorphism
    std::optional<std::vector<std::vector<int>>> star_partition;

    std::vector<TraceStep> trace;
};

/// Structural classification. The checks run in a fixed order; the first
/// hardness condition found wins, then tractability certificates are tried,
/// and Unknown is returned when neither applies.
Verdict classify(const DirectedMetric& m);

const char* outcome_name(Outcome o);
const char* hardness_condition_name(HardnessCondition c);
const char* certificate_name(TractabilityCertificate c);

}  // namespace dzext
