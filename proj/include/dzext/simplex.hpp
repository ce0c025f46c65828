#pragma once

#include <vector>

#include "dzext/rational.hpp"

namespace dzext {

// Exact-rational linear programming over equality constraints:
//
//   minimize    c^T x
//   subject to  A x = b,  x >= 0.
//
// Dense two-phase tableau simplex. All arithmetic is rational, so the
// reported optimum is exact, not an approximation.

enum class LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;        // meaningful only when status == Optimal
    std::vector<Rational> x;   // primal solution, size = number of columns
};

struct LinearProgram {
    // Row-major constraint matrix, rows.size() x num_cols each.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> cost;

    int num_cols() const { return static_cast<int>(cost.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }
};

// Solves the program. Uses Dantzig pricing and switches to Bland's rule
// after a long degenerate streak so cycling cannot occur.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace dzext
