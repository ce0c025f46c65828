#pragma once

#include <string>

#include "json.hpp"

#include "dzext/blp.hpp"
#include "dzext/classify.hpp"
#include "dzext/gadget.hpp"
#include "dzext/instance.hpp"
#include "dzext/metric.hpp"
#include "dzext/polymorphism.hpp"

namespace dzext {

using Json = nlohmann::json;

// All rationals are serialized as canonical "p" / "p/q" strings, never as
// floats; integers are accepted on input. Documents round-trip exactly.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);  // throws ParseError

// Metric file: {"points": [names], "dist": flat row-major array}.
Json metric_to_json(const DirectedMetric& m);
DirectedMetric metric_from_json(const Json& j);

// Instance file: {"metric": inline object or path string, "variables":
// [all variable names, terminals included], "costs": [{"from","to","c"}]}.
// `base_dir` resolves a relative metric path.
Json instance_to_json(const ZeroExtInstance& inst);
ZeroExtInstance instance_from_json(const Json& j, const std::string& base_dir = "");

// Graph file for reductions: {"vertices": n, "edges": [[u, v], ...]}.
// The cut threshold comes from the caller.
MaxCutInstance maxcut_from_json(const Json& j, int threshold);
Json maxcut_graph_to_json(const MaxCutInstance& mc);

// throws ParseError with file context
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j, bool pretty);
std::string dump_json(const Json& j, bool pretty);

// Report builders. Every report carries {"schema": 1}. These run the
// underlying operations and throw dzext::Error on failure; callers map
// errors to exit codes or exceptions.

// {"outcome", "condition"/"certificate", "witness", "trace"}.
Json classify_report(const DirectedMetric& m, const Verdict& v);

// method is "auto", "brute" or "blp"; see the command help for semantics.
// {"method", "value", "assignment", "lp_value"?, "lp_integral"?, "warning"?}
Json solve_report(const ZeroExtInstance& inst, const std::string& method);

struct BuiltGadget {
    std::string which;  // the case that fired
    std::optional<SextupleGadget> sextuple;
    PairGadget pair;
};

// which is "auto", "nonmodular", "orbitvarying", "nonorientable" or
// "biased". "auto" follows the classifier's hardness condition; throws
// NotNPHard when the metric does not classify NPHard. Sextuple cases are
// composed into a pair gadget through the hexagon ring.
BuiltGadget build_gadget(const DirectedMetric& m, const std::string& which);
Json gadget_report(const DirectedMetric& m, const BuiltGadget& g);

// {"graph", "k", "tau_star", "delta", "threshold", "instance", "check"?}.
Json reduce_report(const MaxCutInstance& mc, const BuiltGadget& g, bool check);

// {"certificate", "operations": [{name, weight, table, semilattice}],
//  "weights_sum", "valid"}. Throws NotCertifiedTractable.
Json polymorphism_report(const DirectedMetric& m);

}  // namespace dzext
