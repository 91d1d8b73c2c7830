#include "bisectk/exact_oracle.hpp"

#include <bit>
#include <stdexcept>

#include "bisectk/errors.hpp"
#include "bisectk/greedy_bisection.hpp"
#include "bisectk/kernelizer.hpp"
#include "bisectk/matching.hpp"

namespace bisectk {

namespace {

// Equal-size sets as bitmasks: the set holding the lowest differing element
// comes first in lexicographic order of sorted members.
bool lex_less(std::uint64_t a, std::uint64_t b) {
	std::uint64_t diff = a ^ b;
	return diff != 0 && (a & diff & -diff) != 0;
}

Bisection padded_back(const Graph &original, const NormalizedGraph &padded, const Bisection &b) {
	if (!padded.added_vertex)
		return b;
	return strip_vertex(original, b, static_cast<vertex>(original.vertex_count()));
}

} // namespace

ExactResult max_bisection_exact(const Graph &g, std::size_t vertex_limit) {
	if (vertex_limit > 64)
		throw input_error("the exhaustive oracle supports at most 64 vertices");
	NormalizedGraph padded = normalize_even(g);
	const Graph &h = padded.graph;
	const std::size_t n = h.vertex_count();
	if (n > vertex_limit)
		throw oracle_limit_error("graph has " + std::to_string(n) + " vertices (even-padded); the exhaustive oracle limit is " +
		                         std::to_string(vertex_limit));
	if (n == 0)
		return {0, Bisection::from_sides(g, {}, {})};

	std::vector<std::uint64_t> adj(n, 0);
	for (const Edge &e : h.edges()) {
		adj[e.u] |= std::uint64_t{1} << e.v;
		adj[e.v] |= std::uint64_t{1} << e.u;
	}
	const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

	// Gosper's hack over the n-1 free vertices choosing n/2-1 of them; vertex 0 is pinned to X.
	const std::size_t free_bits = n - 1;
	const std::size_t choose = n / 2 - 1;
	const std::uint64_t limit = std::uint64_t{1} << free_bits;
	std::uint64_t best_x = 0;
	std::size_t best = 0;
	bool have = false;
	for (std::uint64_t c = choose == 0 ? 0 : (std::uint64_t{1} << choose) - 1; c < limit;) {
		const std::uint64_t x = (c << 1) | 1;
		const std::uint64_t y = all & ~x;
		std::size_t cut = 0;
		for (std::uint64_t rest = x; rest != 0; rest &= rest - 1)
			cut += static_cast<std::size_t>(std::popcount(adj[std::countr_zero(rest)] & y));
		if (!have || cut > best || (cut == best && lex_less(x, best_x))) {
			best = cut;
			best_x = x;
			have = true;
		}
		if (c == 0)
			break;
		const std::uint64_t low = c & -c;
		const std::uint64_t ripple = c + low;
		c = (((ripple ^ c) >> 2) / low) | ripple;
	}

	std::vector<vertex> xs, ys;
	for (vertex v = 0; v < n; ++v)
		((best_x >> v) & 1 ? xs : ys).push_back(v);
	Bisection b = Bisection::from_sides(h, std::move(xs), std::move(ys));
	return {best, padded_back(g, padded, b)};
}

std::string to_string(DecisionPath path) {
	switch (path) {
	case DecisionPath::early_big_matching:
		return "early_big_matching";
	case DecisionPath::early_case1:
		return "early_case1";
	case DecisionPath::kernel_bruteforce:
		return "kernel_bruteforce";
	case DecisionPath::trivial_k_nonpositive:
		return "trivial_k_nonpositive";
	}
	return "unknown";
}

DecisionResult decide_atlb(const Graph &g, std::int64_t k, std::size_t vertex_limit) {
	NormalizedGraph padded = normalize_even(g);
	const Graph &h = padded.graph;

	DecisionResult result;
	result.bound_used = half_ceil(g.edge_count()) + k;

	if (k <= 0) {
		Matching m = maximal_matching(h);
		result.answer = true;
		result.path = DecisionPath::trivial_k_nonpositive;
		result.matching_size = m.size();
		result.witness = padded_back(g, padded, greedy_bisection(h, m));
	} else {
		KernelOutcome outcome = kernelize(h, k);
		if (auto *early = std::get_if<EarlyYes>(&outcome)) {
			result.answer = true;
			result.path = early->reason == EarlyReason::big_matching ? DecisionPath::early_big_matching
			                                                         : DecisionPath::early_case1;
			result.matching_size = early->matching_size;
			result.witness = padded_back(g, padded, early->witness);
		} else {
			auto &reduced = std::get<Reduced>(outcome);
			const Graph &kernel = reduced.kernel;
			result.path = DecisionPath::kernel_bruteforce;
			result.matching_size = reduced.matching_size;
			result.kernel_n = kernel.vertex_count();
			result.kernel_m = kernel.edge_count();
			if (kernel.vertex_count() > vertex_limit)
				throw undecided_error("kernel has " + std::to_string(kernel.vertex_count()) +
				                      " vertices, above the oracle limit of " + std::to_string(vertex_limit) +
				                      "; undecided at desk scale");
			ExactResult exact = max_bisection_exact(kernel, vertex_limit);
			result.kernel_max = exact.size;
			result.answer = static_cast<std::int64_t>(exact.size) >= half_ceil(kernel.edge_count()) + k;
			if (result.answer) {
				Bisection lifted = lift_witness(h, exact.bisection, reduced.trace, reduced.id_map);
				result.witness = padded_back(g, padded, lifted);
			}
		}
	}

	if (result.answer && static_cast<std::int64_t>(result.witness->cut_size()) < result.bound_used)
		throw std::logic_error("decision witness is below the bound");
	return result;
}

std::size_t pm_lower_bound(const Graph &g) {
	const unsigned __int128 n = g.vertex_count() + g.vertex_count() % 2;
	if (n < 2)
		return 0;
	const unsigned __int128 num = n * g.edge_count();
	const unsigned __int128 den = 2 * (n - 1);
	return static_cast<std::size_t>((num + den - 1) / den);
}

} // namespace bisectk
