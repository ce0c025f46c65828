#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dzext/classify.hpp"

namespace dzext {

/// Binary operation on the points of a metric, as a full table.
struct BinaryOperation {
    std::string name;
    std::vector<std::vector<int>> table;

    int apply(int a, int b) const { return table[a][b]; }
};

bool is_idempotent(const BinaryOperation& op);
bool is_commutative(const BinaryOperation& op);
bool is_associative(const BinaryOperation& op);
bool is_semilattice_operation(const BinaryOperation& op);

struct WeightedOperation {
    BinaryOperation op;
    Rational weight;
};

/// Probability distribution over binary operations. Weights are positive and
/// sum to one exactly.
struct FractionalPolymorphism {
    std::vector<WeightedOperation> entries;

    /// Throws BadWeights unless weights are positive and sum to 1.
    void validate(int n) const;
    bool has_semilattice_operation() const;
};

struct PolymorphismViolation {
    enum class Kind { Binary, DistanceToTerminal, DistanceFromTerminal } kind;
    // Binary: arguments (a,b), (c,d). Unary kinds: terminal t, arguments x1, x2.
    int a = 0, b = 0, c = 0, d = 0, t = -1;
    Rational lhs, rhs;
};

/// Checks the averaging inequality sum_w w(op) f(op(u,v)) <= (f(u)+f(v))/2
/// componentwise for f = mu over all argument pairs, and (when check_unary)
/// for the distance-to-terminal and distance-from-terminal functions.
std::optional<PolymorphismViolation> check_polymorphism(const DirectedMetric& m,
                                                        const FractionalPolymorphism& poly,
                                                        bool check_unary = true);

/// Half/half mixture of lattice join and meet.
FractionalPolymorphism lattice_polymorphism(const ModularLattice& l);

/// Star certificate for an unbiased partition with at most two parts, each of
/// size at most two. Throws PartitionTooLarge / NotAStar on misuse. The
/// result always satisfies check_polymorphism (verified before returning).
FractionalPolymorphism star_polymorphism_small(const DirectedMetric& m,
                                               const UnderlyingGraph& g, int center,
                                               const std::vector<std::vector<int>>& parts);

/// Star certificate for a partition whose large part has size >= 3; its arms
/// must be symmetric through the center (throws SymmetryViolated otherwise).
/// Joins range over a weighted family of choice functions on pairs of the
/// large part. Throws BothPartsLarge when two parts have size >= 3.
FractionalPolymorphism star_polymorphism_large(const DirectedMetric& m,
                                               const UnderlyingGraph& g, int center,
                                               const std::vector<std::vector<int>>& parts);

/// Dispatches on the partition shape.
FractionalPolymorphism star_polymorphism(const DirectedMetric& m, const UnderlyingGraph& g,
                                         int center,
                                         const std::vector<std::vector<int>>& parts);

/// Builds the certificate named by a Tractable verdict. Throws
/// NotCertifiedTractable on other verdicts.
FractionalPolymorphism certificate_polymorphism(const DirectedMetric& m, const Verdict& v);

}  // namespace dzext
