#include "bisectk/bench.hpp"

#include <chrono>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bisectk/errors.hpp"
#include "bisectk/generators.hpp"
#include "bisectk/greedy_bisection.hpp"
#include "bisectk/kernelizer.hpp"
#include "bisectk/matching.hpp"

namespace bisectk {

namespace {

template <typename T>
std::vector<T> parse_values(const std::string &key, std::istringstream &in, std::size_t line_no) {
	std::vector<T> out;
	std::string token;
	while (in >> token) {
		std::istringstream one(token);
		T value{};
		if (!(one >> value) || !one.eof())
			throw input_error("config line " + std::to_string(line_no) + ": bad value '" + token + "' for " + key);
		out.push_back(value);
	}
	return out;
}

std::string format_probability(double p) {
	std::ostringstream s;
	s << p;
	return s.str();
}

bool uses_probability(const std::string &family) {
	return family == "gnp";
}

} // namespace

BenchConfig parse_bench_config(std::istream &in) {
	BenchConfig config;
	std::string line;
	std::size_t line_no = 0;
	while (std::getline(in, line)) {
		++line_no;
		if (auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		if (line.find_first_not_of(" \t\r") == std::string::npos)
			continue;
		auto eq = line.find('=');
		if (eq == std::string::npos)
			throw input_error("config line " + std::to_string(line_no) + ": expected 'key = values'");
		std::istringstream key_stream(line.substr(0, eq));
		std::string key;
		key_stream >> key;
		std::istringstream values(line.substr(eq + 1));

		if (key == "families") {
			config.families = parse_values<std::string>(key, values, line_no);
			for (const auto &f : config.families)
				if (!is_known_family(f))
					throw input_error("config line " + std::to_string(line_no) + ": unknown family '" + f + "'");
		} else if (key == "n") {
			config.sizes = parse_values<std::size_t>(key, values, line_no);
		} else if (key == "p") {
			config.probabilities = parse_values<double>(key, values, line_no);
			for (double p : config.probabilities)
				if (!(p >= 0.0 && p <= 1.0))
					throw input_error("config line " + std::to_string(line_no) + ": p outside [0, 1]");
		} else if (key == "seeds") {
			config.seeds = parse_values<std::uint64_t>(key, values, line_no);
		} else if (key == "k") {
			config.ks = parse_values<std::int64_t>(key, values, line_no);
		} else if (key == "limit") {
			auto limit = parse_values<std::size_t>(key, values, line_no);
			if (limit.size() != 1)
				throw input_error("config line " + std::to_string(line_no) + ": limit takes one value");
			config.vertex_limit = limit.front();
		} else {
			throw input_error("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
		}
	}
	return config;
}

bool is_known_family(const std::string &family) {
	for (const char *known : {"gnp", "star", "complete", "path", "cycle", "edgeless"})
		if (family == known)
			return true;
	return false;
}

Graph generate_family(const std::string &family, std::size_t n, double p, std::uint64_t seed) {
	if (family == "gnp")
		return gen_gnp(n, p, seed);
	if (family == "star") {
		if (n < 2)
			throw input_error("star family needs n >= 2");
		return gen_star(n - 1);
	}
	if (family == "complete")
		return gen_complete(n);
	if (family == "path")
		return gen_path(n);
	if (family == "cycle")
		return gen_cycle(n);
	if (family == "edgeless")
		return gen_edgeless(n);
	throw input_error("unknown family '" + family + "'");
}

std::vector<BenchRow> run_bench(const BenchConfig &config) {
	std::vector<BenchRow> rows;
	for (const auto &family : config.families) {
		const bool random = uses_probability(family);
		const std::vector<double> ps = random ? config.probabilities : std::vector<double>{0.0};
		const std::vector<std::uint64_t> seeds = random ? config.seeds : std::vector<std::uint64_t>{0};
		for (std::size_t n : config.sizes) {
			for (double p : ps) {
				for (std::uint64_t seed : seeds) {
					Graph g = generate_family(family, n, p, seed);
					std::string id = family + "_n" + std::to_string(n);
					if (random)
						id += "_p" + format_probability(p) + "_s" + std::to_string(seed);

					Graph even = normalize_even(g).graph;
					Matching m = maximal_matching(even);
					std::size_t greedy_cut = greedy_bisection(even, m).cut_size();

					for (std::int64_t k : config.ks) {
						BenchRow row;
						row.graph_id = id;
						row.n = g.vertex_count();
						row.m = g.edge_count();
						row.k = k;
						row.matching_size = m.size();
						row.bound_4k_k1 = k > 0 ? kernel_vertex_bound(k) : 0;
						row.greedy_cut = greedy_cut;
						row.lemma1_bound = matching_guarantee(g.edge_count(), m.size());

						auto start = std::chrono::steady_clock::now();
						try {
							DecisionResult d = decide_atlb(g, k, config.vertex_limit);
							row.path = to_string(d.path);
							row.kernel_n = d.kernel_n;
							row.kernel_m = d.kernel_m;
						} catch (const undecided_error &) {
							row.path = "undecided";
						}
						row.elapsed_ms =
						    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

						if (row.kernel_n && (*row.kernel_n > kernel_vertex_bound(k) ||
						                     *row.kernel_m > kernel_edge_bound(k, *row.kernel_n)))
							throw std::logic_error("kernel bound violated on " + id);
						rows.push_back(std::move(row));
					}
				}
			}
		}
	}
	return rows;
}

void write_bench_csv(std::ostream &out, const std::vector<BenchRow> &rows) {
	out << "graph_id,n,m,k,matching_size,path,kernel_n,kernel_m,bound_4k_k1,greedy_cut,lemma1_bound,elapsed_ms\n";
	for (const auto &r : rows) {
		out << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.matching_size << ',' << r.path << ',';
		if (r.kernel_n)
			out << *r.kernel_n;
		out << ',';
		if (r.kernel_m)
			out << *r.kernel_m;
		out << ',' << r.bound_4k_k1 << ',' << r.greedy_cut << ',' << r.lemma1_bound << ',' << std::fixed
		    << std::setprecision(3) << r.elapsed_ms << std::defaultfloat << '\n';
	}
}

} // namespace bisectk
