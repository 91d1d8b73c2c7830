#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "bisectk/errors.hpp"
#include "bisectk/exact_oracle.hpp"
#include "bisectk/generators.hpp"
#include "bisectk/graph.hpp"
#include "bisectk/graph_io.hpp"
#include "bisectk/greedy_bisection.hpp"
#include "bisectk/kernelizer.hpp"
#include "bisectk/matching.hpp"

namespace py = pybind11;
using namespace bisectk;

namespace {

std::vector<std::pair<vertex, vertex>> edge_pairs(const Graph &g) {
	std::vector<std::pair<vertex, vertex>> out;
	out.reserve(g.edge_count());
	for (const Edge &e : g.edges())
		out.emplace_back(e.u, e.v);
	return out;
}

std::vector<std::pair<vertex, vertex>> matching_pairs(const Matching &m) {
	std::vector<std::pair<vertex, vertex>> out;
	for (const Edge &e : m.pairs())
		out.emplace_back(e.u, e.v);
	return out;
}

} // namespace

PYBIND11_MODULE(_core, mod) {
	mod.doc() = "Max bisection above ceil(m/2): greedy bisection, kernelization, exact decisions";

	py::register_exception<input_error>(mod, "InputError", PyExc_ValueError);
	py::register_exception<contract_error>(mod, "ContractError", PyExc_RuntimeError);
	auto limit_error = py::register_exception<oracle_limit_error>(mod, "OracleLimitError", PyExc_RuntimeError);
	py::register_exception<undecided_error>(mod, "UndecidedError", limit_error.ptr());

	py::class_<Graph>(mod, "Graph")
	    .def(py::init([](std::size_t n, const std::vector<std::pair<vertex, vertex>> &edges) {
		         return Graph::from_edges(n, std::span<const std::pair<vertex, vertex>>(edges));
	         }),
	         py::arg("n"), py::arg("edges") = std::vector<std::pair<vertex, vertex>>{})
	    .def_property_readonly("n", &Graph::vertex_count)
	    .def_property_readonly("m", &Graph::edge_count)
	    .def("edges", &edge_pairs)
	    .def("neighbors",
	         [](const Graph &g, vertex v) {
		         if (v >= g.vertex_count())
			         throw py::index_error("vertex out of range");
		         auto span = g.neighbors(v);
		         return std::vector<vertex>(span.begin(), span.end());
	         })
	    .def("degree",
	         [](const Graph &g, vertex v) {
		         if (v >= g.vertex_count())
			         throw py::index_error("vertex out of range");
		         return g.degree(v);
	         })
	    .def("has_edge", &Graph::has_edge)
	    .def("__eq__", [](const Graph &a, const Graph &b) { return a == b; })
	    .def("__repr__", [](const Graph &g) {
		    return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
	    });

	py::class_<Bisection>(mod, "Bisection")
	    .def_static(
	        "from_sides",
	        [](const Graph &g, std::vector<vertex> x, std::vector<vertex> y) {
		        return Bisection::from_sides(g, std::move(x), std::move(y));
	        },
	        py::arg("graph"), py::arg("x"), py::arg("y"))
	    .def_property_readonly("x", &Bisection::side_x)
	    .def_property_readonly("y", &Bisection::side_y)
	    .def_property_readonly("cut", &Bisection::cut_size)
	    .def("__repr__",
	         [](const Bisection &b) { return "Bisection(cut=" + std::to_string(b.cut_size()) + ")"; });

	py::class_<Matching>(mod, "Matching")
	    .def_property_readonly("pairs", &matching_pairs)
	    .def("__len__", &Matching::size)
	    .def("covers", &Matching::covers)
	    .def("is_maximal_in", &Matching::is_maximal_in);

	mod.def("cut_size", py::overload_cast<const Graph &, const Bisection &>(&cut_size), py::arg("graph"),
	        py::arg("bisection"));
	mod.def("half_ceil", &half_ceil, py::arg("m"));

	mod.def("gen_star", &gen_star, py::arg("leaves"));
	mod.def("gen_complete", &gen_complete, py::arg("n"));
	mod.def("gen_path", &gen_path, py::arg("n"));
	mod.def("gen_cycle", &gen_cycle, py::arg("n"));
	mod.def("gen_edgeless", &gen_edgeless, py::arg("n"));
	mod.def("gen_complete_bipartite", &gen_complete_bipartite, py::arg("a"), py::arg("b"));
	mod.def("gen_double_star", &gen_double_star, py::arg("z_leaves"), py::arg("w_leaves"), py::arg("isolates"));
	mod.def("gen_gnp", &gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
	mod.def("gen_gnm", &gen_gnm, py::arg("n"), py::arg("m"), py::arg("seed"));

	mod.def("maximal_matching", &maximal_matching, py::arg("graph"));

	auto seed_of = [](std::vector<vertex> x, std::vector<vertex> y) { return SeedPartition{std::move(x), std::move(y)}; };
	mod.def(
	    "greedy_bisection",
	    [seed_of](const Graph &g, const Matching &m, std::vector<vertex> seed_x, std::vector<vertex> seed_y) {
		    return greedy_bisection(g, m, seed_of(std::move(seed_x), std::move(seed_y)));
	    },
	    py::arg("graph"), py::arg("matching"), py::arg("seed_x") = std::vector<vertex>{},
	    py::arg("seed_y") = std::vector<vertex>{});
	mod.def(
	    "randomized_bisection",
	    [](const Graph &g, const Matching &m, std::uint64_t rng_seed) { return randomized_bisection(g, m, {}, rng_seed); },
	    py::arg("graph"), py::arg("matching"), py::arg("rng_seed"));
	mod.def("matching_guarantee", &matching_guarantee, py::arg("m"), py::arg("matching_size"));

	mod.def(
	    "kernelize",
	    [](const Graph &g, std::int64_t k) -> py::dict {
		    KernelOutcome out = kernelize(g, k);
		    py::dict d;
		    if (auto *early = std::get_if<EarlyYes>(&out)) {
			    d["outcome"] = "early_yes";
			    d["reason"] = to_string(early->reason);
			    d["witness"] = early->witness;
			    d["matching_size"] = early->matching_size;
		    } else {
			    auto &red = std::get<Reduced>(out);
			    d["outcome"] = "reduced";
			    d["kernel"] = red.kernel;
			    d["kernel_to_original"] = red.id_map.kernel_to_original;
			    d["trace"] = py::module_::import("json").attr("loads")(trace_to_json(red.trace));
			    d["cut_gain"] = red.trace.cut_gain();
			    d["matching_size"] = red.matching_size;
		    }
		    return d;
	    },
	    py::arg("graph"), py::arg("k"));
	mod.def("kernel_vertex_bound", &kernel_vertex_bound, py::arg("k"));
	mod.def("kernel_edge_bound", &kernel_edge_bound, py::arg("k"), py::arg("kernel_n"));
	mod.def("twin_classes", &twin_classes, py::arg("graph"));

	py::class_<ExactResult>(mod, "ExactResult")
	    .def_readonly("size", &ExactResult::size)
	    .def_readonly("bisection", &ExactResult::bisection);
	mod.def("max_bisection_exact", &max_bisection_exact, py::arg("graph"),
	        py::arg("vertex_limit") = default_vertex_limit);

	py::class_<DecisionResult>(mod, "DecisionResult")
	    .def_readonly("answer", &DecisionResult::answer)
	    .def_readonly("witness", &DecisionResult::witness)
	    .def_readonly("bound", &DecisionResult::bound_used)
	    .def_property_readonly("path", [](const DecisionResult &d) { return to_string(d.path); })
	    .def_readonly("matching_size", &DecisionResult::matching_size)
	    .def_readonly("kernel_n", &DecisionResult::kernel_n)
	    .def_readonly("kernel_m", &DecisionResult::kernel_m);
	mod.def("decide_atlb", &decide_atlb, py::arg("graph"), py::arg("k"),
	        py::arg("vertex_limit") = default_vertex_limit);
	mod.def("pm_lower_bound", &pm_lower_bound, py::arg("graph"));

	mod.def(
	    "read_edge_list", [](const std::filesystem::path &path) { return read_edge_list(path).graph; }, py::arg("path"));
	mod.def(
	    "parse_edge_list",
	    [](const std::string &text) {
		    std::istringstream in(text);
		    return read_edge_list(in).graph;
	    },
	    py::arg("text"));
	mod.def(
	    "write_edge_list", [](const std::filesystem::path &path, const Graph &g) { write_edge_list(path, g); },
	    py::arg("path"), py::arg("graph"));
}
