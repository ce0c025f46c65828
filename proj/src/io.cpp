#include "dzext/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace dzext {

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(Errc::ParseError,
                "expected a rational string or integer, got " + j.dump());
}

Json metric_to_json(const DirectedMetric& m) {
    Json j;
    j["points"] = m.points();
    Json dist = Json::array();
    for (const auto& v : m.table()) dist.push_back(rational_to_json(v));
    j["dist"] = dist;
    return j;
}

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw Error(Errc::ParseError, std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::vector<std::string> string_list(const Json& j, const char* name) {
    if (!j.is_array())
        throw Error(Errc::ParseError, std::string(name) + ": expected an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw Error(Errc::ParseError, std::string(name) + ": expected strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

DirectedMetric metric_from_json(const Json& j) {
    std::vector<std::string> points = string_list(field(j, "points"), "points");
    const Json& dist = field(j, "dist");
    if (!dist.is_array()) throw Error(Errc::ParseError, "dist: expected an array");
    std::vector<Rational> table;
    for (const auto& e : dist) {
        if (e.is_array()) {  // nested rows are accepted, flat is canonical
            for (const auto& f : e) table.push_back(rational_from_json(f));
        } else {
            table.push_back(rational_from_json(e));
        }
    }
    if (table.size() != points.size() * points.size())
        throw Error(Errc::ParseError,
                    "dist: expected " + std::to_string(points.size() * points.size()) +
                        " entries, got " + std::to_string(table.size()));
    return DirectedMetric::validate(std::move(points), std::move(table));
}

Json instance_to_json(const ZeroExtInstance& inst) {
    Json j;
    j["metric"] = metric_to_json(inst.metric());
    j["variables"] = inst.variables();
    Json costs = Json::array();
    for (const auto& c : inst.costs()) {
        costs.push_back({{"from", inst.variable(c.u)},
                         {"to", inst.variable(c.v)},
                         {"c", rational_to_json(c.c)}});
    }
    j["costs"] = costs;
    return j;
}

ZeroExtInstance instance_from_json(const Json& j, const std::string& base_dir) {
    const Json& mj = field(j, "metric");
    DirectedMetric metric = [&] {
        if (mj.is_string()) {
            std::filesystem::path p = mj.get<std::string>();
            if (p.is_relative() && !base_dir.empty())
                p = std::filesystem::path(base_dir) / p;
            return metric_from_json(load_json_file(p.string()));
        }
        return metric_from_json(mj);
    }();

    std::vector<std::string> vars = string_list(field(j, "variables"), "variables");
    std::set<std::string> var_set(vars.begin(), vars.end());
    std::set<std::string> terminal_set;
    for (const auto& p : metric.points()) {
        terminal_set.insert(p);
        if (!var_set.count(p))
            throw Error(Errc::ParseError,
                        "variables: terminal \"" + p + "\" is missing");
    }
    std::vector<std::string> free_vars;
    for (const auto& v : vars)
        if (!terminal_set.count(v)) free_vars.push_back(v);

    const Json& cj = field(j, "costs");
    if (!cj.is_array()) throw Error(Errc::ParseError, "costs: expected an array");
    std::vector<NamedCost> costs;
    for (const auto& e : cj) {
        costs.push_back({field(e, "from").get<std::string>(),
                         field(e, "to").get<std::string>(),
                         rational_from_json(field(e, "c"))});
        if (costs.back().c < 0)
            throw Error(Errc::ParseError, "costs: negative weight");
    }
    return ZeroExtInstance::make(std::move(metric), free_vars, costs);
}

MaxCutInstance maxcut_from_json(const Json& j, int threshold) {
    const Json& vj = field(j, "vertices");
    if (!vj.is_number_integer())
        throw Error(Errc::ParseError, "vertices: expected an integer");
    const Json& ej = field(j, "edges");
    if (!ej.is_array()) throw Error(Errc::ParseError, "edges: expected an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : ej) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw Error(Errc::ParseError, "edges: expected pairs of integers");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return MaxCutInstance::make(vj.get<int>(), std::move(edges), threshold);
}

Json maxcut_graph_to_json(const MaxCutInstance& mc) {
    Json j;
    j["vertices"] = mc.num_vertices;
    Json edges = Json::array();
    for (auto [u, v] : mc.edges) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, path + ": cannot read");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j, bool pretty) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, path + ": cannot write");
    out << dump_json(j, pretty) << "\n";
}

std::string dump_json(const Json& j, bool pretty) {
    return pretty ? j.dump(2) : j.dump();
}

namespace {

Json point_names(const DirectedMetric& m, const std::vector<int>& ids) {
    Json out = Json::array();
    for (int i : ids) out.push_back(m.point(i));
    return out;
}

const char* direction_name(BiasedPairWitness::Direction d) {
    switch (d) {
        case BiasedPairWitness::Direction::Greater: return ">";
        case BiasedPairWitness::Direction::Less: return "<";
        case BiasedPairWitness::Direction::Vacuous: return "vacuous";
    }
    return "?";
}

Json biased_pair_json(const DirectedMetric& m, const BiasedPairWitness& w) {
    return {{"x", m.point(w.x)},
            {"y", m.point(w.y)},
            {"direction", direction_name(w.direction)},
            {"interior", point_names(m, w.interior)}};
}

}  // namespace

Json classify_report(const DirectedMetric& m, const Verdict& v) {
    Json j;
    j["schema"] = 1;
    j["points"] = m.points();
    j["outcome"] = outcome_name(v.outcome);
    if (v.condition) j["condition"] = hardness_condition_name(*v.condition);
    if (v.certificate) j["certificate"] = certificate_name(*v.certificate);

    Json w = Json::object();
    if (v.medianless_triple)
        w["medianless_triple"] = point_names(
            m, {(*v.medianless_triple)[0], (*v.medianless_triple)[1],
                (*v.medianless_triple)[2]});
    if (v.bad_edge)
        w["unorientable_edge"] =
            Json::array({m.point(v.bad_edge->first), m.point(v.bad_edge->second)});
    if (v.orbit_witness) {
        const auto& ow = *v.orbit_witness;
        w["orbit_witness"] = {
            {"a", Json::array({m.point(ow.a.first), m.point(ow.a.second)})},
            {"b", Json::array({m.point(ow.b.first), m.point(ow.b.second)})},
            {"lengths",
             Json::array({rational_to_json(m.dist(ow.a.first, ow.a.second)),
                          rational_to_json(m.dist(ow.b.first, ow.b.second))})}};
    }
    if (v.biased_triple) {
        Json pairs = Json::array();
        for (const auto& p : v.biased_triple->pairs)
            pairs.push_back(biased_pair_json(m, p));
        w["biased_triple"] = {
            {"points", point_names(m, {v.biased_triple->triple[0],
                                       v.biased_triple->triple[1],
                                       v.biased_triple->triple[2]})},
            {"pairs", pairs}};
    }
    if (v.lattice) {
        w["lattice"] = {{"bottom", v.lattice->names[v.lattice->bottom]},
                        {"top", v.lattice->names[v.lattice->top]},
                        {"height", v.lattice->rank[v.lattice->top]}};
    }
    if (v.center) w["center"] = m.point(*v.center);
    if (v.star_partition) {
        Json parts = Json::array();
        for (const auto& part : *v.star_partition) parts.push_back(point_names(m, part));
        w["partition"] = parts;
    }
    j["witness"] = w;

    Json trace = Json::array();
    for (const auto& step : v.trace)
        trace.push_back({{"check", step.check}, {"result", step.result}});
    j["trace"] = trace;
    return j;
}

namespace {

Json assignment_json(const ZeroExtInstance& inst, const std::vector<int>& labels) {
    Json a = Json::object();
    for (int i = inst.num_terminals(); i < inst.num_variables(); ++i)
        a[inst.variable(i)] = inst.metric().point(labels[i]);
    return a;
}

bool lp_is_integral(const BlpSolution& s) {
    for (const auto& [name, dist] : s.unary)
        for (const auto& p : dist)
            if (p != 0 && p != 1) return false;
    return true;
}

Json lp_assignment_json(const ZeroExtInstance& inst, const BlpSolution& s) {
    Json a = Json::object();
    for (const auto& [name, dist] : s.unary) {
        for (std::size_t t = 0; t < dist.size(); ++t)
            if (dist[t] == 1) a[name] = inst.metric().point(static_cast<int>(t));
    }
    return a;
}

}  // namespace

Json solve_report(const ZeroExtInstance& inst, const std::string& method) {
    Json j;
    j["schema"] = 1;
    if (method == "brute") {
        SolveResult r = brute_force(inst);
        j["method"] = "brute";
        j["value"] = rational_to_json(r.objective);
        j["assignment"] = assignment_json(inst, r.labels);
        return j;
    }
    if (method == "blp") {
        Verdict v = classify(inst.metric());
        BlpSolution rel = blp_relax(inst);
        j["method"] = "blp";
        j["lp_value"] = rational_to_json(rel.objective);
        j["lp_integral"] = lp_is_integral(rel);
        if (v.outcome == Outcome::Tractable) {
            SolveResult r = solve_tractable(inst, v);
            j["value"] = rational_to_json(r.objective);
            j["assignment"] = assignment_json(inst, r.labels);
        } else if (lp_is_integral(rel)) {
            j["value"] = rational_to_json(rel.objective);
            j["assignment"] = lp_assignment_json(inst, rel);
            j["warning"] = "metric is not certified tractable; the relaxation "
                           "happened to be integral";
        } else {
            j["value"] = rational_to_json(rel.objective);
            j["warning"] = "relaxation is fractional; value is only a lower bound "
                           "and no assignment is reported";
        }
        return j;
    }
    if (method == "auto") {
        Verdict v = classify(inst.metric());
        if (v.outcome == Outcome::Tractable) {
            BlpSolution rel = blp_relax(inst);
            SolveResult r = solve_tractable(inst, v);
            j["method"] = "blp";
            j["lp_value"] = rational_to_json(rel.objective);
            j["value"] = rational_to_json(r.objective);
            j["assignment"] = assignment_json(inst, r.labels);
        } else {
            SolveResult r = brute_force(inst);
            j["method"] = "brute";
            j["value"] = rational_to_json(r.objective);
            j["assignment"] = assignment_json(inst, r.labels);
            j["warning"] = "metric is not certified tractable; solved exhaustively";
        }
        return j;
    }
    throw Error(Errc::ParseError, "unknown method \"" + method + "\"");
}

BuiltGadget build_gadget(const DirectedMetric& m, const std::string& which) {
    std::string w = which;
    if (w == "auto") {
        Verdict v = classify(m);
        if (v.outcome != Outcome::NPHard)
            throw Error(Errc::NotNPHard,
                        std::string("metric classifies ") + outcome_name(v.outcome) +
                            ", no hardness gadget applies");
        switch (*v.condition) {
            case HardnessCondition::NotModular: w = "nonmodular"; break;
            case HardnessCondition::NotOrientable: w = "nonorientable"; break;
            case HardnessCondition::NotOrbitInvariant: w = "orbitvarying"; break;
            case HardnessCondition::BiasedNonCollinearTriple: w = "biased"; break;
        }
    }
    BuiltGadget out;
    out.which = w;
    if (w == "nonmodular") {
        out.sextuple = build_nonmodular_gadget(m);
        out.pair = compose_hexagon(*out.sextuple);
    } else if (w == "biased") {
        out.sextuple = build_biased_triple_gadget(m);
        out.pair = compose_hexagon(*out.sextuple);
    } else if (w == "orbitvarying") {
        out.pair = build_orbit_varying_gadget(m);
    } else if (w == "nonorientable") {
        out.pair = build_nonorientable_gadget(m);
    } else {
        throw Error(Errc::ParseError, "unknown gadget case \"" + which + "\"");
    }
    return out;
}

namespace {

Json pair_gadget_json(const PairGadget& g) {
    const DirectedMetric& m = g.instance.metric();
    Json j;
    j["s"] = m.point(g.s);
    j["t"] = m.point(g.t);
    j["x"] = g.x;
    j["y"] = g.y;
    j["tau_star"] = rational_to_json(g.tau_star);
    j["delta"] = rational_to_json(g.delta);
    Json fixings = Json::array();
    for (auto [a, b] : g.report.optimal_fixings)
        fixings.push_back(Json::array({m.point(a), m.point(b)}));
    j["optimal_fixings"] = fixings;
    j["stable_under_doubling"] = pair_gadget_stable_under_doubling(g);
    j["instance"] = instance_to_json(g.instance);
    return j;
}

Json sextuple_gadget_json(const SextupleGadget& g) {
    const DirectedMetric& m = g.instance.metric();
    Json j;
    j["triple"] = Json::array({m.point(g.triple[0]), m.point(g.triple[1]),
                               m.point(g.triple[2])});
    j["variables"] = std::vector<std::string>(g.z.begin(), g.z.end());
    j["tau_star"] = rational_to_json(g.tau_star);
    j["delta"] = rational_to_json(g.delta);
    j["optimal_fixing_count"] = g.report.optimal_fixings.size();
    j["stable_under_doubling"] = sextuple_gadget_stable_under_doubling(g);
    j["instance"] = instance_to_json(g.instance);
    return j;
}

}  // namespace

Json gadget_report(const DirectedMetric& m, const BuiltGadget& g) {
    Json j;
    j["schema"] = 1;
    j["points"] = m.points();
    j["case"] = g.which;
    if (g.sextuple) j["sextuple"] = sextuple_gadget_json(*g.sextuple);
    j["pair"] = pair_gadget_json(g.pair);
    return j;
}

Json reduce_report(const MaxCutInstance& mc, const BuiltGadget& g, bool check) {
    ReductionResult red = reduce_maxcut(mc, g.pair);
    Json j;
    j["schema"] = 1;
    j["graph"] = maxcut_graph_to_json(mc);
    j["k"] = mc.threshold;
    j["case"] = g.which;
    j["tau_star"] = rational_to_json(g.pair.tau_star);
    j["delta"] = rational_to_json(g.pair.delta);
    j["threshold"] = rational_to_json(red.threshold);
    j["vertex_names"] = red.vertex_names;
    j["instance"] = instance_to_json(red.instance);
    if (check) {
        SolveResult r = brute_force(red.instance);
        int mcut = max_cut_value(mc.num_vertices, mc.edges);
        bool exists = r.objective <= red.threshold;
        j["check"] = {{"optimum", rational_to_json(r.objective)},
                      {"cut_exists", exists},
                      {"maxcut", mcut},
                      {"agrees", exists == (mcut >= mc.threshold)}};
    }
    return j;
}

Json polymorphism_report(const DirectedMetric& m) {
    Verdict v = classify(m);
    FractionalPolymorphism poly = certificate_polymorphism(m, v);
    auto violation = check_polymorphism(m, poly, true);

    Json j;
    j["schema"] = 1;
    j["points"] = m.points();
    j["certificate"] = certificate_name(*v.certificate);
    Json ops = Json::array();
    Rational sum(0);
    bool semilattice = false;
    for (const auto& e : poly.entries) {
        sum += e.weight;
        bool sl = is_semilattice_operation(e.op);
        semilattice = semilattice || sl;
        ops.push_back({{"name", e.op.name},
                       {"weight", rational_to_json(e.weight)},
                       {"table", e.op.table},
                       {"semilattice", sl}});
    }
    j["operations"] = ops;
    j["weights_sum"] = rational_to_json(sum);
    j["has_semilattice_operation"] = semilattice;
    j["valid"] = !violation.has_value();
    return j;
}

}  // namespace dzext
