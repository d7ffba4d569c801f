// Python bindings for the rainbow domination toolkit. Color sets cross the
// boundary as plain lists of ints; everything else mirrors the C++ API.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "rainbowdom/audit.hpp"
#include "rainbowdom/bounds.hpp"
#include "rainbowdom/constructions.hpp"
#include "rainbowdom/errors.hpp"
#include "rainbowdom/graph.hpp"
#include "rainbowdom/rdf.hpp"
#include "rainbowdom/solver.hpp"

namespace py = pybind11;
using namespace rainbowdom;

namespace {

std::vector<std::vector<int>> colors_out(const RainbowAssignment& a) {
    std::vector<std::vector<int>> out;
    out.reserve(a.colors.size());
    for (ColorSet s : a.colors) out.push_back(s.members());
    return out;
}

RainbowAssignment assignment_in(int t, const std::vector<std::vector<int>>& colors) {
    RainbowAssignment a;
    a.t = t;
    a.colors.reserve(colors.size());
    for (const auto& members : colors) a.colors.push_back(ColorSet::from_members(members));
    a.validate();
    return a;
}

SearchBudget make_budget(long long max_nodes, long long max_states, double max_seconds) {
    SearchBudget b;
    b.max_nodes = max_nodes;
    b.max_states = max_states;
    b.max_elapsed = std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000.0));
    return b;
}

constexpr long long kDefaultNodes = SearchBudget{}.max_nodes;
constexpr long long kDefaultStates = SearchBudget{}.max_states;
constexpr double kDefaultSeconds = 600.0;

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "rainbow domination on cubic graphs and generalized Petersen graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    static py::exception<BudgetExhausted> budget_exc(m, "BudgetExhaustedError", PyExc_RuntimeError);
    static py::exception<StateSpaceTooLarge> state_exc(m, "StateSpaceTooLargeError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetExhausted& e) {
            budget_exc(e.what());
        } catch (const StateSpaceTooLarge& e) {
            state_exc(e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n_vertices"))
        .def_property_readonly("n_vertices", &Graph::n_vertices)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("edges", &Graph::edges)
        .def("label", [](const Graph& g, int v) { return g.label(v); })
        .def_property_readonly("labels", [](const Graph& g) { return g.labels(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n_vertices()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<PetersenParams>(m, "PetersenParams")
        .def(py::init<int, int>(), py::arg("n"), py::arg("k"))
        .def_readonly("n", &PetersenParams::n)
        .def_readonly("k", &PetersenParams::k)
        .def("__eq__", [](const PetersenParams& a, const PetersenParams& b) { return a == b; })
        .def("__repr__", [](const PetersenParams& p) {
            return "PetersenParams(" + std::to_string(p.n) + ", " + std::to_string(p.k) + ")";
        });

    py::class_<RainbowAssignment>(m, "RainbowAssignment")
        .def(py::init(&assignment_in), py::arg("t"), py::arg("colors"))
        .def_readonly("t", &RainbowAssignment::t)
        .def_property_readonly("colors", &colors_out)
        .def("__len__", [](const RainbowAssignment& a) { return a.colors.size(); })
        .def("__repr__", [](const RainbowAssignment& a) {
            return "<RainbowAssignment t=" + std::to_string(a.t) + " n=" + std::to_string(a.colors.size()) +
                   " weight=" + std::to_string(weight(a)) + ">";
        });

    py::class_<Violation>(m, "Violation")
        .def_readonly("vertex", &Violation::vertex)
        .def_property_readonly("missing", [](const Violation& v) { return v.missing.members(); });

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_property_readonly("passed", [](const VerifyReport& r) { return r.pass; })
        .def_readonly("violations", &VerifyReport::violations)
        .def("__bool__", [](const VerifyReport& r) { return r.pass; });

    py::class_<Census>(m, "Census")
        .def_readonly("by_size", &Census::by_size)
        .def_readonly("class_size", &Census::class_size)
        .def_property_readonly("weight", &Census::weight);

    py::class_<TriPartition>(m, "TriPartition")
        .def(py::init([](const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c, int t) {
                 return TriPartition(ColorSet::from_members(a), ColorSet::from_members(b),
                                     ColorSet::from_members(c), t);
             }),
             py::arg("a"), py::arg("b"), py::arg("c"), py::arg("t"))
        .def_property_readonly("a", [](const TriPartition& p) { return p.a.members(); })
        .def_property_readonly("b", [](const TriPartition& p) { return p.b.members(); })
        .def_property_readonly("c", [](const TriPartition& p) { return p.c.members(); });

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("lower", &BoundReport::lower)
        .def_readonly("upper", &BoundReport::upper)
        .def_readonly("exact", &BoundReport::exact)
        .def_readonly("sources", &BoundReport::sources)
        .def_property_readonly("mode", [](const BoundReport& r) { return to_string(r.mode); })
        .def_readonly("note", &BoundReport::note)
        .def("__repr__", [](const BoundReport& r) {
            std::string out = "<BoundReport lower=" + std::to_string(r.lower) + " upper=" + std::to_string(r.upper);
            if (r.exact) out += " exact=" + std::to_string(*r.exact);
            return out + ">";
        });

    py::class_<SolveStats>(m, "SolveStats")
        .def_readonly("nodes", &SolveStats::nodes)
        .def_readonly("states", &SolveStats::states);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("optimum", &SolveResult::optimum)
        .def_readonly("witness", &SolveResult::witness)
        .def_property_readonly("method", [](const SolveResult& r) { return to_string(r.method); })
        .def_readonly("stats", &SolveResult::stats)
        .def_property_readonly("elapsed_ms", [](const SolveResult& r) { return r.elapsed.count(); })
        .def("__repr__", [](const SolveResult& r) {
            return "<SolveResult optimum=" + std::to_string(r.optimum) + " method=" + to_string(r.method) + ">";
        });

    py::class_<Certificate>(m, "Certificate")
        .def_property_readonly("kind",
                               [](const Certificate& c) {
                                   return c.kind == CertificateKind::exact ? std::string("exact")
                                                                           : std::string("upper_only");
                               })
        .def_readonly("weight", &Certificate::weight)
        .def_readonly("lower_bound", &Certificate::lower_bound)
        .def_readonly("gap", &Certificate::gap)
        .def_readonly("sources", &Certificate::sources);

    py::class_<AuditCheck>(m, "AuditCheck")
        .def_readonly("name", &AuditCheck::name)
        .def_property_readonly("passed", [](const AuditCheck& c) { return c.pass; })
        .def_readonly("details", &AuditCheck::details);

    py::class_<AuditReport>(m, "AuditReport")
        .def_readonly("checks", &AuditReport::checks)
        .def_readonly("overall", &AuditReport::overall)
        .def("__bool__", [](const AuditReport& r) { return r.overall; });

    py::class_<OuterPatternFinding>(m, "OuterPatternFinding")
        .def_readonly("phase", &OuterPatternFinding::phase)
        .def_readonly("direction", &OuterPatternFinding::direction)
        .def_property_readonly("a", [](const OuterPatternFinding& f) { return f.part_a.members(); })
        .def_property_readonly("b", [](const OuterPatternFinding& f) { return f.part_b.members(); })
        .def_property_readonly("c", [](const OuterPatternFinding& f) { return f.part_c.members(); });

    // graph_core
    m.def("build_generalized_petersen",
          [](int n, int k) { return build_generalized_petersen({n, k}); }, py::arg("n"), py::arg("k"));
    m.def("build_generalized_petersen",
          [](const PetersenParams& p) { return build_generalized_petersen(p); }, py::arg("params"));
    m.def("build_subdivided_k4", &build_subdivided_k4);
    m.def("build_example_graph", &build_example_graph);
    m.def("is_cubic", &is_cubic);
    m.def("bipartition", &bipartition);
    m.def("parse_graph", &parse_graph);
    m.def("serialize_graph", &serialize_graph);
    m.def("export_dot", &export_dot);

    // rdf_core
    m.def("weight", &weight);
    m.def("verify_trdf", &verify_trdf, py::arg("graph"), py::arg("assignment"));
    m.def("is_singleton", &is_singleton);
    m.def("census", &census);
    m.def("canonicalize_colors", &canonicalize_colors);
    m.def("parse_assignment", &parse_assignment);
    m.def("serialize_assignment", &serialize_assignment);

    // constructions
    m.def("default_tripartition", &default_tripartition);
    m.def("extremal_pattern", [](int n, int k, int t) { return extremal_pattern(n, k, t); }, py::arg("n"),
          py::arg("k"), py::arg("t"));
    m.def("extremal_pattern",
          [](int n, int k, int t, const TriPartition& p) { return extremal_pattern(n, k, t, p); }, py::arg("n"),
          py::arg("k"), py::arg("t"), py::arg("partition"));
    m.def("lift", &lift, py::arg("graph"), py::arg("assignment"));
    m.def("example_4rdf", &example_4rdf);

    // bounds_catalog
    m.def("generic_lower_bound", &generic_lower_bound, py::arg("n_vertices"), py::arg("degree"), py::arg("t"));
    m.def("is_characterized_extremal", &is_characterized_extremal, py::arg("n"), py::arg("k"), py::arg("t"));
    m.def("bounds_pckk",
          [](int c, int k, int t, const std::string& mode) {
              return bounds_pckk(c, k, t, table_mode_from_string(mode));
          },
          py::arg("c"), py::arg("k"), py::arg("t"), py::arg("mode") = "corrected");
    m.def("known_exact_pn1", &known_exact_pn1, py::arg("n"), py::arg("t"));
    m.def("characterization_r1", &characterization_r1, py::arg("n"), py::arg("k"));
    m.def("characterization_r2", &characterization_r2, py::arg("c"), py::arg("k"));

    // exact_solver
    m.def("solve_branch_bound",
          [](const Graph& g, int t, long long max_nodes, long long max_states, double max_seconds,
             const std::optional<RainbowAssignment>& warm_start) {
              return solve_branch_bound(g, t, make_budget(max_nodes, max_states, max_seconds), warm_start);
          },
          py::arg("graph"), py::arg("t"), py::arg("max_nodes") = kDefaultNodes,
          py::arg("max_states") = kDefaultStates, py::arg("max_seconds") = kDefaultSeconds,
          py::arg("warm_start") = std::nullopt);
    m.def("solve_profile_dp",
          [](const PetersenParams& p, int t, long long max_nodes, long long max_states, double max_seconds,
             const std::optional<RainbowAssignment>& warm_start) {
              return solve_profile_dp(p, t, make_budget(max_nodes, max_states, max_seconds), warm_start);
          },
          py::arg("params"), py::arg("t"), py::arg("max_nodes") = kDefaultNodes,
          py::arg("max_states") = kDefaultStates, py::arg("max_seconds") = kDefaultSeconds,
          py::arg("warm_start") = std::nullopt);
    m.def("profile_dp_state_estimate", &profile_dp_state_estimate, py::arg("params"), py::arg("t"));
    m.def("solve_auto",
          [](const PetersenParams& p, int t, long long max_nodes, long long max_states, double max_seconds) {
              return solve_auto(p, t, make_budget(max_nodes, max_states, max_seconds));
          },
          py::arg("params"), py::arg("t"), py::arg("max_nodes") = kDefaultNodes,
          py::arg("max_states") = kDefaultStates, py::arg("max_seconds") = kDefaultSeconds);
    m.def("solve_auto",
          [](const Graph& g, int t, long long max_nodes, long long max_states, double max_seconds) {
              return solve_auto(g, t, make_budget(max_nodes, max_states, max_seconds));
          },
          py::arg("graph"), py::arg("t"), py::arg("max_nodes") = kDefaultNodes,
          py::arg("max_states") = kDefaultStates, py::arg("max_seconds") = kDefaultSeconds);
    m.def("certify", [](const Graph& g, int t, const RainbowAssignment& a) { return certify(g, t, a); },
          py::arg("graph"), py::arg("t"), py::arg("candidate"));
    m.def("certify",
          [](const PetersenParams& p, int t, const RainbowAssignment& a) { return certify(p, t, a); },
          py::arg("params"), py::arg("t"), py::arg("candidate"));

    // structure_audit
    m.def("audit_extremal_4", &audit_extremal_4, py::arg("graph"), py::arg("assignment"));
    m.def("audit_extremal_5", &audit_extremal_5, py::arg("graph"), py::arg("assignment"));
    m.def("audit_outer_pattern",
          [](const PetersenParams& p, const RainbowAssignment& a) {
              std::optional<OuterPatternFinding> finding;
              AuditReport report = audit_outer_pattern(p, a, &finding);
              return py::make_tuple(report, finding);
          },
          py::arg("params"), py::arg("assignment"),
          "Returns (report, finding); finding is None when no pattern was detected.");
    m.def("audit_weight_census_bounds", &audit_weight_census_bounds, py::arg("assignment"), py::arg("graph"),
          py::arg("t"));
}
