#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bisectk/exact_oracle.hpp"
#include "bisectk/graph.hpp"

namespace bisectk {

/**
 * Instance grid read from a plain-text `key = values...` file:
 *
 *   # comment
 *   families = gnp star complete path cycle edgeless
 *   n        = 10 12 14
 *   p        = 0.1 0.3        (gnp only)
 *   seeds    = 1 2 3          (gnp only)
 *   k        = 1 2
 *   limit    = 24             (oracle vertex limit)
 *
 * Rows are produced in the order family, n, p, seed, k. Families that ignore
 * p and seed contribute one graph per n. A config without families or sizes is
 * an empty grid.
 */
struct BenchConfig {
	std::vector<std::string> families;
	std::vector<std::size_t> sizes;
	std::vector<double> probabilities{0.3};
	std::vector<std::uint64_t> seeds{1};
	std::vector<std::int64_t> ks{1};
	std::size_t vertex_limit = default_vertex_limit;
};

BenchConfig parse_bench_config(std::istream &in);

// Named instance families on n vertices: gnp, star (n - 1 leaves), complete,
// path, cycle, edgeless.
Graph generate_family(const std::string &family, std::size_t n, double p, std::uint64_t seed);
bool is_known_family(const std::string &family);

struct BenchRow {
	std::string graph_id;
	std::size_t n = 0;
	std::size_t m = 0;
	std::int64_t k = 0;
	std::size_t matching_size = 0;
	std::string path; // a DecisionPath name, or "undecided"
	std::optional<std::size_t> kernel_n;
	std::optional<std::size_t> kernel_m;
	std::uint64_t bound_4k_k1 = 0;
	std::size_t greedy_cut = 0;
	std::int64_t lemma1_bound = 0;
	double elapsed_ms = 0.0;
};

// Throws std::logic_error if a reduced row breaks either kernel bound.
std::vector<BenchRow> run_bench(const BenchConfig &config);

void write_bench_csv(std::ostream &out, const std::vector<BenchRow> &rows);

} // namespace bisectk
