#include "bisectk/greedy_bisection.hpp"

#include <algorithm>
#include <string>

#include "bisectk/errors.hpp"
#include "bisectk/generators.hpp"

namespace bisectk {

namespace {

enum : std::uint8_t { unplaced = 0, side_x = 1, side_y = 2 };

std::vector<std::uint8_t> seed_labels(const Graph &g, const Matching &m, const SeedPartition &seed) {
	const std::size_t n = g.vertex_count();
	if (seed.seed_x.size() != seed.seed_y.size())
		throw input_error("seed sides differ in size");
	std::vector<std::uint8_t> label(n, unplaced);
	auto mark = [&](const std::vector<vertex> &side, std::uint8_t tag) {
		for (vertex v : side) {
			if (v >= n)
				throw input_error("seed vertex " + std::to_string(v) + " outside the graph");
			if (label[v] != unplaced)
				throw input_error("seed vertex " + std::to_string(v) + " listed twice");
			if (m.covers(v))
				throw input_error("seed vertex " + std::to_string(v) + " is covered by the matching");
			label[v] = tag;
		}
	};
	mark(seed.seed_x, side_x);
	mark(seed.seed_y, side_y);
	return label;
}

void check_shapes(const Graph &g, const Matching &m) {
	if (g.vertex_count() % 2 != 0)
		throw input_error("pairing needs an even vertex count; normalize first");
	if (m.host_vertex_count() != g.vertex_count())
		throw input_error("matching belongs to a graph of a different size");
}

template <typename Chooser>
Bisection place_pairs(const Graph &g, const Matching &m, const SeedPartition &seed, Chooser &&u_goes_to_x) {
	check_shapes(g, m);
	auto label = seed_labels(g, m, seed);
	PairSequence seq = pair_sequence(g, m, seed);
	for (auto [u, v] : seq.pairs) {
		bool u_in_x = u_goes_to_x(label, u, v);
		label[u] = u_in_x ? side_x : side_y;
		label[v] = u_in_x ? side_y : side_x;
	}
	std::vector<vertex> x, y;
	x.reserve(g.vertex_count() / 2);
	y.reserve(g.vertex_count() / 2);
	for (vertex v = 0; v < g.vertex_count(); ++v)
		(label[v] == side_x ? x : y).push_back(v);
	return Bisection::from_sides(g, std::move(x), std::move(y));
}

} // namespace

PairSequence pair_sequence(const Graph &g, const Matching &m, const SeedPartition &seed) {
	check_shapes(g, m);
	auto label = seed_labels(g, m, seed);

	PairSequence seq;
	std::vector<Edge> forced(m.pairs().begin(), m.pairs().end());
	std::sort(forced.begin(), forced.end());
	seq.pairs.reserve(g.vertex_count() / 2);
	for (const Edge &e : forced)
		seq.pairs.emplace_back(e.u, e.v);
	seq.matched_prefix_len = forced.size();

	vertex pending = no_vertex;
	for (vertex v = 0; v < g.vertex_count(); ++v) {
		if (label[v] != unplaced || m.covers(v))
			continue;
		if (pending == no_vertex) {
			pending = v;
		} else {
			seq.pairs.emplace_back(pending, v);
			pending = no_vertex;
		}
	}
	// n even and |seed_x| = |seed_y| leave an even number of leftovers.
	if (pending != no_vertex)
		throw contract_error("odd number of leftover vertices");
	return seq;
}

Bisection randomized_bisection(const Graph &g, const Matching &m, const SeedPartition &seed,
                               std::uint64_t rng_seed) {
	SplitMix64 rng(rng_seed);
	return place_pairs(g, m, seed, [&](const std::vector<std::uint8_t> &, vertex, vertex) { return rng.coin(); });
}

Bisection greedy_bisection(const Graph &g, const Matching &m, const SeedPartition &seed) {
	return place_pairs(g, m, seed, [&](const std::vector<std::uint8_t> &label, vertex u, vertex v) {
		std::size_t u_x = 0, u_y = 0, v_x = 0, v_y = 0;
		for (vertex w : g.neighbors(u)) {
			u_x += label[w] == side_x;
			u_y += label[w] == side_y;
		}
		for (vertex w : g.neighbors(v)) {
			v_x += label[w] == side_x;
			v_y += label[w] == side_y;
		}
		return u_y + v_x >= u_x + v_y;
	});
}

} // namespace bisectk
