#include "latgraph/dsl.hpp"
#include "latgraph/pipeline.hpp"
#include "latgraph/steinercs.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace latgraph;

PYBIND11_MODULE(_latgraph, m) {
    m.doc() = "Lattices from graph eigenspaces, tight frames and Steiner sensing matrices";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("normalize", [](const std::string& expr) { return parse_graph(expr).label(); }, py::arg("expr"),
          "Parse a graph expression and return its normalized form.");
    m.def(
        "graph_lattice",
        [](const std::string& expr, std::optional<std::string> eigenvalue, bool identify) {
            PipelineOptions opt;
            if (eigenvalue) opt.eigenvalue = parse_rational(*eigenvalue);
            opt.identify = identify;
            return report_json(run_pipeline(parse_graph(expr), opt));
        },
        py::arg("expr"), py::arg("eigenvalue") = py::none(), py::arg("identify") = true,
        "Run the eigenspace pipeline; returns the JSON report.");
    m.def("table1", [] { return outcomes_json(check_rows(table1_fixture())); });
    m.def("table2", [](std::size_t n_max) { return outcomes_json(check_rows(table2_fixture(n_max))); },
          py::arg("n_max") = 7);
    m.def(
        "frame_report",
        [](const std::string& csv, bool numeric) {
            return frame_report_json(numeric ? analyze_numeric_frame(read_numeric_frame_csv(csv))
                                             : analyze_frame(read_frame_csv(csv)));
        },
        py::arg("csv"), py::arg("numeric") = false);
    m.def("simplex_etf_csv", [](std::size_t k) { return write_frame_csv(simplex_etf(k)); }, py::arg("k"));
    m.def(
        "identify_gram",
        [](const std::string& text) { return lattice_record_json(describe_lattice(Lattice::from_gram(read_gram(text), "gram"))); },
        py::arg("text"));

    m.def("steiner_etf", [](std::size_t v) { return steiner_etf(steiner_triple_system(v)).a; }, py::arg("v"));
    m.def("welch_bound", &welch_bound, py::arg("k"), py::arg("n"));
    m.def("mutual_coherence", &mutual_coherence, py::arg("a"));
    m.def(
        "cs_experiment",
        [](std::size_t v, std::vector<std::size_t> sparsities, std::size_t trials, double noise, std::uint64_t seed) {
            ExperimentConfig cfg;
            cfg.sparsities = std::move(sparsities);
            cfg.trials = trials;
            cfg.noise_norm = noise;
            cfg.seed = seed;
            return experiment_csv(run_experiment(steiner_etf(steiner_triple_system(v)), cfg));
        },
        py::arg("v") = 7, py::arg("sparsities") = std::vector<std::size_t>{1, 2, 3, 4, 5, 6}, py::arg("trials") = 500,
        py::arg("noise") = 0.1, py::arg("seed") = 20240101, "Recovery experiment; returns CSV.");
}
