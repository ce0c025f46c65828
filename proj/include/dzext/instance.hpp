#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dzext/metric.hpp"
#include "dzext/rational.hpp"

namespace dzext {

// One weighted ordered pair of an instance: cost c charged as
// c * mu(label(u), label(v)).
struct CostEntry {
    int u = 0;
    int v = 0;
    Rational c;
};

struct NamedCost {
    std::string from;
    std::string to;
    Rational c;
};

// A minimum 0-extension instance. Variables are the metric's points
// (terminals, pinned to themselves) followed by the free variables.
// Costs are sparse; diagonal and zero-weight entries are dropped and
// duplicate ordered pairs are merged at construction.
class ZeroExtInstance {
  public:
    static ZeroExtInstance make(DirectedMetric metric,
                                const std::vector<std::string>& free_variables,
                                const std::vector<NamedCost>& costs);

    const DirectedMetric& metric() const { return metric_; }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<CostEntry>& costs() const { return costs_; }

    int num_terminals() const { return metric_.size(); }
    int num_variables() const { return static_cast<int>(variables_.size()); }
    int num_free() const { return num_variables() - num_terminals(); }

    const std::string& variable(int i) const { return variables_[i]; }
    // Throws UnknownVariable.
    int index_of(const std::string& name) const;

  private:
    DirectedMetric metric_;
    std::vector<std::string> variables_;
    std::vector<CostEntry> costs_;
};

// labels[i] is the terminal index assigned to variable i. Terminals must
// carry their own index. Throws InvalidAssignment on shape or range errors.
Rational objective_value(const ZeroExtInstance& inst,
                         const std::vector<int>& labels);

// Resolves a name -> terminal-name map into a full label vector, filling
// terminals with themselves. Every free variable must be covered.
std::vector<int> labels_from_names(
    const ZeroExtInstance& inst,
    const std::map<std::string, std::string>& assignment);

struct SolveResult {
    Rational objective;
    std::vector<int> labels;
};

// Default cap on the number of assignments brute force may enumerate,
// overridable through the DIRZEROEXT_BUDGET environment variable or an
// explicit argument.
inline constexpr long long kDefaultBruteForceBudget = 20'000'000;

// Reads DIRZEROEXT_BUDGET, falling back to the default. Throws ParseError
// when the variable is set but not a positive integer.
long long brute_force_budget();

// Exhaustive minimum over all labelings, restricted by `fixings` (free
// variable name -> terminal name). Returns the optimum together with the
// lexicographically first optimal labeling (variable order, then terminal
// order). Throws BudgetExceeded when |T|^free exceeds the budget and
// InvalidFixing / UnknownVariable on bad pins.
SolveResult brute_force(const ZeroExtInstance& inst,
                        const std::map<std::string, std::string>& fixings = {},
                        std::optional<long long> budget = std::nullopt);

}  // namespace dzext
