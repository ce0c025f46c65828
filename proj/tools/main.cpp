#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dzext/io.hpp"

using namespace dzext;

namespace {

void emit(const Json& report, const std::string& out_path, bool pretty) {
    if (out_path.empty())
        std::cout << dump_json(report, pretty) << "\n";
    else
        save_json_file(out_path, report, pretty);
}

int fail(const Error& e) {
    Json j{{"schema", 1},
           {"error", {{"code", errc_name(e.code())}, {"detail", e.what()}}}};
    std::cerr << j.dump() << "\n";
    if (e.code() == Errc::BudgetExceeded)
        std::cerr << "hint: raise the cap with --budget N or DIRZEROEXT_BUDGET=N\n";
    return 1;
}

std::string parent_dir(const std::string& path) {
    return std::filesystem::path(path).parent_path().string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed minimum 0-extension: classify, solve, build hardness gadgets"};
    app.require_subcommand(1);
    app.fallthrough();

    bool pretty = false;
    std::string out_path;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_option("-o,--output", out_path, "write the report to a file instead of stdout");

    long long budget = -1;
    app.add_option("--budget", budget,
                   "cap on brute-force assignments (overrides DIRZEROEXT_BUDGET)");

    std::string metric_path, instance_path, graph_path;
    bool explain = false;
    auto* classify_cmd =
        app.add_subcommand("classify", "structural verdict for a metric file");
    classify_cmd->add_option("metric", metric_path, "metric JSON file")->required();
    classify_cmd->add_flag("--explain", explain, "print the decision tree steps");

    std::string method = "auto";
    auto* solve_cmd = app.add_subcommand("solve", "optimize an instance file");
    solve_cmd->add_option("instance", instance_path, "instance JSON file")->required();
    solve_cmd->add_option("--method", method, "auto | brute | blp")
        ->check(CLI::IsMember({"auto", "brute", "blp"}));

    std::string which = "auto";
    std::string emit_path;
    auto* gadget_cmd =
        app.add_subcommand("gadget", "build and verify a hardness gadget");
    gadget_cmd->add_option("metric", metric_path, "metric JSON file")->required();
    gadget_cmd->add_option("--case", which,
                           "auto | nonmodular | orbitvarying | nonorientable | biased")
        ->check(CLI::IsMember(
            {"auto", "nonmodular", "orbitvarying", "nonorientable", "biased"}));
    gadget_cmd->add_option("--emit-instance", emit_path,
                           "also write the pair gadget instance to this file");

    int k = 1;
    bool check = false;
    std::string reduce_case = "auto";
    auto* reduce_cmd =
        app.add_subcommand("reduce", "compose a max-cut decision instance");
    reduce_cmd->add_option("metric", metric_path, "metric JSON file")->required();
    reduce_cmd->add_option("graph", graph_path, "graph JSON file")->required();
    reduce_cmd->add_option("k", k, "cut size threshold")->required();
    reduce_cmd->add_option("--case", reduce_case, "gadget case, as for `gadget`")
        ->check(CLI::IsMember(
            {"auto", "nonmodular", "orbitvarying", "nonorientable", "biased"}));
    reduce_cmd->add_flag("--check", check,
                         "brute-force the composed instance and report the decision");
    reduce_cmd->add_option("--emit-instance", emit_path,
                           "also write the composed instance to this file");

    auto* verify_cmd = app.add_subcommand(
        "verify-polymorphism", "construct and check the tractability certificate");
    verify_cmd->add_option("metric", metric_path, "metric JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (budget >= 0)
        setenv("DIRZEROEXT_BUDGET", std::to_string(budget).c_str(), 1);

    try {
        if (classify_cmd->parsed()) {
            DirectedMetric m = metric_from_json(load_json_file(metric_path));
            Verdict v = classify(m);
            if (explain)
                for (const auto& step : v.trace)
                    std::cerr << step.check << ": " << step.result << "\n";
            emit(classify_report(m, v), out_path, pretty);
            switch (v.outcome) {
                case Outcome::Tractable: return 0;
                case Outcome::NPHard: return 2;
                case Outcome::Unknown: return 3;
            }
        }
        if (solve_cmd->parsed()) {
            ZeroExtInstance inst = instance_from_json(load_json_file(instance_path),
                                                      parent_dir(instance_path));
            emit(solve_report(inst, method), out_path, pretty);
            return 0;
        }
        if (gadget_cmd->parsed()) {
            DirectedMetric m = metric_from_json(load_json_file(metric_path));
            BuiltGadget g = build_gadget(m, which);
            if (!emit_path.empty())
                save_json_file(emit_path, instance_to_json(g.pair.instance), pretty);
            emit(gadget_report(m, g), out_path, pretty);
            return 0;
        }
        if (reduce_cmd->parsed()) {
            DirectedMetric m = metric_from_json(load_json_file(metric_path));
            MaxCutInstance mc = maxcut_from_json(load_json_file(graph_path), k);
            BuiltGadget g = build_gadget(m, reduce_case);
            Json report = reduce_report(mc, g, check);
            if (!emit_path.empty())
                save_json_file(emit_path, report["instance"], pretty);
            emit(report, out_path, pretty);
            return 0;
        }
        if (verify_cmd->parsed()) {
            DirectedMetric m = metric_from_json(load_json_file(metric_path));
            emit(polymorphism_report(m), out_path, pretty);
            return 0;
        }
    } catch (const Error& e) {
        return fail(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
