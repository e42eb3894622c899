#include "ncr/references.hpp"
#include "ncr/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ncr;

namespace {

std::string run(const std::string& config, const std::string& format) {
    RunConfig c = parse_config(config);
    Report r;
    {
        py::gil_scoped_release release;
        r = run_computation(c);
    }
    return emit_report(r, format.empty() ? c.format : format_from_name(format));
}

py::list verify(std::uint64_t seed, std::size_t clifford, std::size_t halfplane, std::size_t contour, std::size_t sphere) {
    OracleCounts n{clifford, halfplane, contour, sphere};
    std::vector<Suite> suites;
    {
        py::gil_scoped_release release;
        suites = run_oracle_suites(n, seed);
    }
    py::list out;
    for (const Suite& s : suites) {
        py::list checks;
        for (const SelfCheck& c : s.checks)
            checks.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed, py::arg("detail") = c.detail));
        out.append(py::dict(py::arg("suite") = s.name, py::arg("passed") = s.passed(), py::arg("checks") = checks));
    }
    return out;
}

py::list references() {
    py::list out;
    for (const Reference& r : reference_table())
        out.append(py::dict(py::arg("id") = r.id, py::arg("anchor") = r.anchor, py::arg("source") = r.source,
                            py::arg("kind") = ref_kind_name(r.kind), py::arg("value") = r.value.str()));
    return out;
}

}  // namespace

PYBIND11_MODULE(_ncresidue, m) {
    m.doc() = "Exact boundary noncommutative residue computations";

    py::register_exception<std::invalid_argument>(m, "UsageError", PyExc_ValueError);

    m.def("run", &run, py::arg("config") = "", py::arg("format") = "",
          "Run the computations described by a key = value config and return the rendered report.");
    m.def("verify", &verify, py::arg("seed") = 1, py::arg("clifford") = OracleCounts{}.clifford,
          py::arg("halfplane") = OracleCounts{}.halfplane, py::arg("contour") = OracleCounts{}.contour,
          py::arg("sphere") = OracleCounts{}.sphere, "Run the oracle suites.");
    m.def("references", &references, "The shipped reference table.");
    m.def("theorems", [] {
        std::vector<std::string> names;
        for (TheoremId t : all_theorems()) names.push_back(theorem_name(t));
        return names;
    });
    m.def("canonical", [](const std::string& text) { return parse_scalar(text).str(); }, py::arg("expr"),
          "Normalize a scalar expression written in the canonical text syntax.");
    m.def("emit", [](const std::string& text, const std::string& format) { return emit(parse_scalar(text), format_from_name(format)); },
          py::arg("expr"), py::arg("format") = "latex");
    m.def("emit_clifford", [](const std::string& json, const std::string& format) {
        return emit(parse_clifford_json(json), format_from_name(format));
    }, py::arg("json"), py::arg("format") = "latex");
    m.def("compare", [](const std::string& text, const std::string& reference_id) {
        Verdict v = compare_with_reference(CliffordExpr(parse_scalar(text)), reference_id);
        return py::dict(py::arg("verdict") = verdict_name(v.kind), py::arg("delta") = v.delta.str());
    }, py::arg("expr"), py::arg("reference_id"));
}
