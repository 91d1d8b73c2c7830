// bisectk: command-line front end for the max-bisection-above-⌈m/2⌉ toolkit.
//
// Every verb prints one JSON object on stdout. Exit codes: 0 success (for
// `solve`: answer yes), 1 answer no, 2 input error or undecided instance.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bisectk/bench.hpp"
#include "bisectk/errors.hpp"
#include "bisectk/exact_oracle.hpp"
#include "bisectk/generators.hpp"
#include "bisectk/graph_io.hpp"
#include "bisectk/greedy_bisection.hpp"
#include "bisectk/kernelizer.hpp"
#include "bisectk/matching.hpp"

using namespace bisectk;
using nlohmann::json;

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

void emit(const json &doc) {
	std::cout << doc.dump() << '\n';
}

json input_meta(const ParsedGraph &parsed) {
	return {{"n", parsed.graph.vertex_count()}, {"m", parsed.graph.edge_count()}, {"dimacs_input", parsed.dimacs}};
}

int cmd_solve(const std::string &file, std::int64_t k, bool witness, std::size_t limit) {
	ParsedGraph parsed = read_edge_list(file);
	DecisionResult d = decide_atlb(parsed.graph, k, limit);
	json doc = input_meta(parsed);
	doc["answer"] = d.answer;
	doc["k"] = k;
	doc["bound"] = d.bound_used;
	doc["path"] = to_string(d.path);
	doc["cut"] = d.witness ? json(d.witness->cut_size()) : json(nullptr);
	if (d.kernel_n) {
		doc["kernel_n"] = *d.kernel_n;
		doc["kernel_m"] = *d.kernel_m;
	}
	if (witness && d.witness)
		doc["witness_x"] = d.witness->side_x();
	emit(doc);
	return d.answer ? exit_yes : exit_no;
}

int cmd_kernelize(const std::string &file, std::int64_t k, const std::string &out, std::string trace_out) {
	ParsedGraph parsed = read_edge_list(file);
	NormalizedGraph padded = normalize_even(parsed.graph);
	KernelOutcome outcome = kernelize(padded.graph, k);
	json doc = input_meta(parsed);
	doc["k"] = k;
	doc["padded_vertex"] = padded.added_vertex;

	if (auto *early = std::get_if<EarlyYes>(&outcome)) {
		doc["outcome"] = "early_yes";
		doc["reason"] = to_string(early->reason);
		doc["matching_size"] = early->matching_size;
		Bisection w = padded.added_vertex
		                  ? strip_vertex(parsed.graph, early->witness, static_cast<vertex>(parsed.graph.vertex_count()))
		                  : early->witness;
		doc["cut"] = w.cut_size();
		doc["bound"] = half_ceil(parsed.graph.edge_count()) + k;
		doc["witness_x"] = w.side_x();
		emit(doc);
		return exit_yes;
	}

	const auto &reduced = std::get<Reduced>(outcome);
	const std::size_t kn = reduced.kernel.vertex_count();
	doc["outcome"] = "reduced";
	doc["matching_size"] = reduced.matching_size;
	doc["kernel_n"] = kn;
	doc["kernel_m"] = reduced.kernel.edge_count();
	doc["bound_vertices"] = kernel_vertex_bound(k);
	doc["bound_edges"] = kernel_edge_bound(k, kn);
	doc["trace_steps"] = reduced.trace.steps.size();
	doc["kernel_to_original"] = reduced.id_map.kernel_to_original;
	if (!out.empty()) {
		write_edge_list(out, reduced.kernel);
		if (trace_out.empty())
			trace_out = out + ".trace.json";
		doc["kernel_file"] = out;
	}
	if (!trace_out.empty()) {
		std::ofstream t(trace_out);
		if (!t)
			throw input_error("cannot write " + trace_out);
		t << trace_to_json(reduced.trace) << '\n';
		doc["trace_file"] = trace_out;
	}
	emit(doc);
	return exit_yes;
}

int cmd_bisect(const std::string &file) {
	ParsedGraph parsed = read_edge_list(file);
	NormalizedGraph padded = normalize_even(parsed.graph);
	Matching m = maximal_matching(padded.graph);
	Bisection b = greedy_bisection(padded.graph, m);
	const std::int64_t bound = matching_guarantee(parsed.graph.edge_count(), m.size());
	if (static_cast<std::int64_t>(b.cut_size()) < bound) {
		std::cerr << "bisectk: greedy cut " << b.cut_size() << " is below the guarantee " << bound << '\n';
		return exit_error;
	}
	json doc = input_meta(parsed);
	doc["cut"] = b.cut_size();
	doc["bound"] = bound;
	doc["matching_size"] = m.size();
	emit(doc);
	return exit_yes;
}

int cmd_bound(const std::string &file) {
	ParsedGraph parsed = read_edge_list(file);
	json doc = input_meta(parsed);
	doc["half_m_ceil"] = half_ceil(parsed.graph.edge_count());
	doc["pm_ceil"] = pm_lower_bound(parsed.graph);
	emit(doc);
	return exit_yes;
}

int cmd_gen(const std::string &family, std::optional<std::size_t> n, std::optional<std::size_t> leaves,
            std::optional<std::size_t> edges, double p, std::uint64_t seed, const std::string &out) {
	auto need_n = [&]() {
		if (!n)
			throw input_error("family '" + family + "' needs --n");
		return *n;
	};
	Graph g;
	if (family == "star")
		g = leaves ? gen_star(*leaves) : generate_family("star", need_n(), p, seed);
	else if (family == "gnm") {
		if (!edges)
			throw input_error("family 'gnm' needs --m");
		g = gen_gnm(need_n(), *edges, seed);
	} else
		g = generate_family(family, need_n(), p, seed);

	if (out.empty()) {
		write_edge_list(std::cout, g);
	} else {
		write_edge_list(out, g);
		emit({{"family", family}, {"n", g.vertex_count()}, {"m", g.edge_count()}, {"file", out}});
	}
	return exit_yes;
}

int cmd_bench(const std::string &config_file, const std::string &out) {
	std::ifstream in(config_file);
	if (!in)
		throw input_error("cannot open " + config_file);
	BenchConfig config = parse_bench_config(in);
	auto rows = run_bench(config);
	if (out.empty()) {
		write_bench_csv(std::cout, rows);
	} else {
		std::ofstream csv(out);
		if (!csv)
			throw input_error("cannot write " + out);
		write_bench_csv(csv, rows);
		emit({{"rows", rows.size()}, {"file", out}});
	}
	return exit_yes;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"Max bisection above the tight lower bound ceil(m/2): bounds, kernels, exact decisions"};
	app.require_subcommand(1);

	std::string file, out, trace_out, family, config_file;
	std::int64_t k = 1;
	bool witness = false;
	std::size_t limit = default_vertex_limit;
	std::uint64_t seed = 1;
	double p = 0.5;
	std::optional<std::size_t> n, leaves, edges;

	auto *solve = app.add_subcommand("solve", "Decide whether a bisection of size >= ceil(m/2) + k exists");
	solve->add_option("file", file, "Edge-list or DIMACS graph")->required();
	solve->add_option("--k", k, "Parameter above ceil(m/2)")->required();
	solve->add_flag("--witness", witness, "Include the witness side X");
	solve->add_option("--limit", limit, "Exhaustive oracle vertex limit")->capture_default_str();

	auto *kern = app.add_subcommand("kernelize", "Kernelize an instance, or report an early yes");
	kern->add_option("file", file, "Edge-list or DIMACS graph")->required();
	kern->add_option("--k", k, "Parameter above ceil(m/2)")->required();
	kern->add_option("--out", out, "Write the kernel edge list here");
	kern->add_option("--trace", trace_out, "Trace JSON path (default: <out>.trace.json)");

	auto *bisect = app.add_subcommand("bisect", "Greedy bisection meeting ceil(m/2) + floor(|M|/2)");
	bisect->add_option("file", file, "Edge-list or DIMACS graph")->required();

	auto *bound = app.add_subcommand("bound", "Report ceil(m/2) and ceil(pm)");
	bound->add_option("file", file, "Edge-list or DIMACS graph")->required();

	auto *gen = app.add_subcommand("gen", "Generate an instance");
	gen->add_option("family", family, "star | complete | gnp | gnm | path | cycle | edgeless")->required();
	gen->add_option("--n", n, "Vertex count");
	gen->add_option("--leaves", leaves, "Leaf count (star)");
	gen->add_option("--m", edges, "Edge count (gnm)");
	gen->add_option("--p", p, "Edge probability (gnp)")->capture_default_str();
	gen->add_option("--seed", seed, "PRNG seed")->capture_default_str();
	gen->add_option("--out", out, "Output file (default: stdout)");

	auto *bench = app.add_subcommand("bench", "Run an instance grid and write CSV");
	bench->add_option("config", config_file, "Grid config file")->required();
	bench->add_option("--out", out, "CSV output (default: stdout)");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : exit_error;
	}

	try {
		if (*solve)
			return cmd_solve(file, k, witness, limit);
		if (*kern)
			return cmd_kernelize(file, k, out, trace_out);
		if (*bisect)
			return cmd_bisect(file);
		if (*bound)
			return cmd_bound(file);
		if (*gen)
			return cmd_gen(family, n, leaves, edges, p, seed, out);
		if (*bench)
			return cmd_bench(config_file, out);
	} catch (const std::exception &e) {
		std::cerr << "bisectk: " << e.what() << '\n';
		return exit_error;
	}
	return exit_error;
}
