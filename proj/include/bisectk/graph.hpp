#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace bisectk {

using vertex = std::uint32_t;

// Unordered vertex pair stored as (min, max). The defaulted ordering is the
// canonical edge order used for every deterministic tie-break in the library.
struct Edge {
	vertex u = 0;
	vertex v = 0;

	auto operator<=>(const Edge &) const = default;
};

Edge make_edge(vertex a, vertex b);

/**
 * Simple undirected graph on the dense vertex ids 0..n-1.
 *
 * Edges are deduplicated and kept in canonical order. Adjacency is stored in
 * CSR form with every neighbor list sorted ascending. Instances are immutable
 * once built and can be shared freely between threads.
 */
class Graph {
public:
	Graph() = default;

	// Rejects out-of-range endpoints and self-loops; collapses repeated pairs.
	static Graph from_edges(std::size_t n, std::span<const std::pair<vertex, vertex>> edges);
	static Graph from_edges(std::size_t n, std::vector<Edge> edges);

	std::size_t vertex_count() const { return n_; }
	std::size_t edge_count() const { return edges_.size(); }

	std::span<const Edge> edges() const { return edges_; }
	std::span<const vertex> neighbors(vertex v) const {
		return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
	}
	std::size_t degree(vertex v) const { return offsets_[v + 1] - offsets_[v]; }
	bool has_edge(vertex a, vertex b) const;

	friend bool operator==(const Graph &a, const Graph &b) {
		return a.n_ == b.n_ && a.edges_ == b.edges_;
	}

private:
	void build_adjacency();

	std::size_t n_ = 0;
	std::vector<Edge> edges_;
	std::vector<std::size_t> offsets_{0};
	std::vector<vertex> adjacency_;
};

// Convenience wrapper matching the pair-list construction used throughout the tests.
Graph new_graph(std::size_t n, std::initializer_list<std::pair<vertex, vertex>> edges);

struct NormalizedGraph {
	Graph graph;
	bool added_vertex = false;
};

// Appends one isolated vertex when n is odd; m never changes.
NormalizedGraph normalize_even(const Graph &g);

// Counts edges with one endpoint on each side. Throws input_error unless
// x and y partition the vertex set.
std::size_t cut_size(const Graph &g, std::span<const vertex> x, std::span<const vertex> y);

/**
 * Balanced two-way partition with |X| <= |Y| <= |X| + 1 and a cached cut size.
 *
 * Both sides are stored sorted. Construction validates the partition and the
 * balance condition and recomputes the cut from the graph.
 */
class Bisection {
public:
	Bisection() = default;

	// Sides are swapped when |x| > |y|, since a bisection is an unordered pair.
	static Bisection from_sides(const Graph &g, std::vector<vertex> x, std::vector<vertex> y);

	const std::vector<vertex> &side_x() const { return x_; }
	const std::vector<vertex> &side_y() const { return y_; }
	std::size_t cut_size() const { return cut_; }

	friend bool operator==(const Bisection &, const Bisection &) = default;

private:
	std::vector<vertex> x_;
	std::vector<vertex> y_;
	std::size_t cut_ = 0;
};

std::size_t cut_size(const Graph &g, const Bisection &b);

// Drops vertex `removed` (an isolated vertex added by normalize_even) from a
// bisection of `padded` and returns the matching bisection of `original`.
Bisection strip_vertex(const Graph &original, const Bisection &b, vertex removed);

// ceil(m / 2), the tight lower bound on the maximum bisection.
inline std::int64_t half_ceil(std::size_t m) {
	return static_cast<std::int64_t>((m + 1) / 2);
}

} // namespace bisectk
