#include "bisectk/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bisectk/errors.hpp"

namespace bisectk {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
	const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
	for (;;) {
		std::uint64_t r = next();
		if (r < limit)
			return r % bound;
	}
}

Graph gen_star(std::size_t leaves) {
	if (leaves == 0)
		throw input_error("a star needs at least one leaf");
	std::vector<Edge> edges;
	for (std::size_t v = 1; v <= leaves; ++v)
		edges.push_back({0, static_cast<vertex>(v)});
	return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph gen_complete(std::size_t n) {
	if (n == 0)
		throw input_error("complete graph needs n >= 1");
	std::vector<Edge> edges;
	edges.reserve(n * (n - 1) / 2);
	for (vertex u = 0; u < n; ++u)
		for (vertex v = u + 1; v < n; ++v)
			edges.push_back({u, v});
	return Graph::from_edges(n, std::move(edges));
}

Graph gen_path(std::size_t n) {
	std::vector<Edge> edges;
	for (vertex v = 1; v < n; ++v)
		edges.push_back({v - 1, v});
	return Graph::from_edges(n, std::move(edges));
}

Graph gen_cycle(std::size_t n) {
	if (n < 3)
		throw input_error("a cycle needs n >= 3");
	std::vector<Edge> edges;
	for (vertex v = 1; v < n; ++v)
		edges.push_back({v - 1, v});
	edges.push_back({0, static_cast<vertex>(n - 1)});
	return Graph::from_edges(n, std::move(edges));
}

Graph gen_edgeless(std::size_t n) {
	return Graph::from_edges(n, std::vector<Edge>{});
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
	std::vector<Edge> edges;
	edges.reserve(a * b);
	for (vertex u = 0; u < a; ++u)
		for (vertex v = 0; v < b; ++v)
			edges.push_back({u, static_cast<vertex>(a + v)});
	return Graph::from_edges(a + b, std::move(edges));
}

Graph gen_double_star(std::size_t z_leaves, std::size_t w_leaves, std::size_t isolates) {
	std::vector<Edge> edges{{0, 1}};
	vertex next = 2;
	for (std::size_t i = 0; i < z_leaves; ++i)
		edges.push_back({0, next++});
	for (std::size_t i = 0; i < w_leaves; ++i)
		edges.push_back({1, next++});
	return Graph::from_edges(next + isolates, std::move(edges));
}

Graph gen_gnp(std::size_t n, double edge_probability, std::uint64_t seed) {
	if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
		throw input_error("edge probability must lie in [0, 1]");
	// p * 2^53 is exact for any double p in [0, 1].
	const auto threshold = static_cast<std::uint64_t>(std::ldexp(edge_probability, 53));
	SplitMix64 rng(seed);
	std::vector<Edge> edges;
	for (vertex u = 0; u < n; ++u)
		for (vertex v = u + 1; v < n; ++v)
			if ((rng.next() >> 11) < threshold)
				edges.push_back({u, v});
	return Graph::from_edges(n, std::move(edges));
}

Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
	const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
	if (m > pairs)
		throw input_error("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
	SplitMix64 rng(seed);
	std::vector<Edge> edges;
	edges.reserve(m);
	// Draw in batches, then sort/unique; repeats are rare for sparse targets.
	while (edges.size() < m) {
		std::size_t missing = m - edges.size();
		for (std::size_t i = 0; i < missing; ++i) {
			auto a = static_cast<vertex>(rng.below(n));
			auto b = static_cast<vertex>(rng.below(n));
			if (a != b)
				edges.push_back(make_edge(a, b));
		}
		std::sort(edges.begin(), edges.end());
		edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
	}
	return Graph::from_edges(n, std::move(edges));
}

} // namespace bisectk
