#pragma once

#include <map>
#include <string>
#include <vector>

#include "dzext/instance.hpp"
#include "dzext/rational.hpp"

namespace dzext {

struct Verdict;

// Fractional relaxation of a 0-extension instance. Every free variable
// carries a probability distribution over the terminals; every cost pair
// between two free variables carries a joint distribution whose marginals
// match the endpoints. The optimum is exact and never exceeds the integral
// optimum.

struct PairwiseBlock {
    std::string from;
    std::string to;
    // Row-major k x k joint mass, rows indexed by `from`'s terminal.
    std::vector<Rational> joint;
};

struct BlpSolution {
    Rational objective;
    // Distribution over terminals for every unpinned free variable.
    std::map<std::string, std::vector<Rational>> unary;
    std::vector<PairwiseBlock> pairwise;
};

// Solves the relaxation, with optional pins (free variable -> terminal).
// Throws the same fixing errors as brute_force and LpFailure when the
// linear program misbehaves (it is feasible and bounded by construction).
BlpSolution blp_relax(const ZeroExtInstance& inst,
                      const std::map<std::string, std::string>& fixings = {});

// Rounds the relaxation to an integral optimum by pinning one variable at
// a time to the first terminal that keeps the relaxation value unchanged.
// Sound exactly when the metric is classified tractable; the caller's
// verdict is re-checked against a fresh classification. Throws
// NotCertifiedTractable when either disagrees with Tractable and
// RoundingFailed if no terminal preserves the value (which certified
// metrics never trigger).
SolveResult solve_tractable(const ZeroExtInstance& inst,
                            const Verdict& verdict);

}  // namespace dzext
