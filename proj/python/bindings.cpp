#include <pybind11/pybind11.h>

#include <string>

#include "dzext/io.hpp"

namespace py = pybind11;
using namespace dzext;

namespace {

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

std::string classify_json(const std::string& metric_json) {
    DirectedMetric m = metric_from_json(parse_text(metric_json));
    return dump_json(classify_report(m, classify(m)), false);
}

std::string solve_json(const std::string& instance_json, const std::string& method) {
    ZeroExtInstance inst = instance_from_json(parse_text(instance_json));
    return dump_json(solve_report(inst, method), false);
}

std::string gadget_json(const std::string& metric_json, const std::string& which) {
    DirectedMetric m = metric_from_json(parse_text(metric_json));
    return dump_json(gadget_report(m, build_gadget(m, which)), false);
}

std::string reduce_json(const std::string& metric_json, const std::string& graph_json,
                        int k, bool check) {
    DirectedMetric m = metric_from_json(parse_text(metric_json));
    MaxCutInstance mc = maxcut_from_json(parse_text(graph_json), k);
    return dump_json(reduce_report(mc, build_gadget(m, "auto"), check), false);
}

std::string verify_polymorphism_json(const std::string& metric_json) {
    DirectedMetric m = metric_from_json(parse_text(metric_json));
    return dump_json(polymorphism_report(m), false);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "directed minimum 0-extension core (JSON string interface)";
    py::register_exception<Error>(mod, "Error");

    mod.def("classify_json", &classify_json, py::arg("metric_json"),
            "structural verdict report for a metric document");
    mod.def("solve_json", &solve_json, py::arg("instance_json"),
            py::arg("method") = "auto", "optimize an instance document");
    mod.def("gadget_json", &gadget_json, py::arg("metric_json"),
            py::arg("case") = "auto", "build and verify a hardness gadget");
    mod.def("reduce_json", &reduce_json, py::arg("metric_json"),
            py::arg("graph_json"), py::arg("k"), py::arg("check") = false,
            "compose a max-cut decision instance");
    mod.def("verify_polymorphism_json", &verify_polymorphism_json,
            py::arg("metric_json"),
            "construct and check the tractability certificate");
}
