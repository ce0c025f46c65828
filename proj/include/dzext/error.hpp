#pragma once

#include <stdexcept>
#include <string>

namespace dzext {

enum class Errc {
    // metric validation / lookups
    ZeroDiagonalViolated,
    TriangleViolated,
    SeparationViolated,
    BadTableShape,
    DuplicatePoint,
    UnknownPoint,
    SamePoint,
    EmptySequence,
    // graph
    DisconnectedUnderlyingGraph,
    NotAPath,
    EmptySet,
    // classifier
    RepeatedPoint,
    // polymorphism
    BadWeights,
    NotAStar,
    PartitionTooLarge,
    SymmetryViolated,
    BothPartsLarge,
    // solver
    BudgetExceeded,
    InvalidFixing,
    InvalidAssignment,
    UnknownVariable,
    NotCertifiedTractable,
    RoundingFailed,
    LpFailure,
    // lattice
    HypothesesNotMet,
    // gadget
    MetricIsModular,
    GraphOrientable,
    NoOrbitVaryingCycle,
    NoWitnessSequence,
    NoBiasedTriple,
    AmbiguousDirection,
    GadgetNotVerified,
    ConditionFailed,
    DegenerateGadget,
    BadReduction,
    NotNPHard,
    // io / cli
    ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace dzext
