#include "bisectk/graph.hpp"

#include <algorithm>
#include <string>

#include "bisectk/errors.hpp"

namespace bisectk {

Edge make_edge(vertex a, vertex b) {
	return a < b ? Edge{a, b} : Edge{b, a};
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<vertex, vertex>> edges) {
	std::vector<Edge> list;
	list.reserve(edges.size());
	for (auto [a, b] : edges)
		list.push_back(Edge{a, b});
	return from_edges(n, std::move(list));
}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
	if (n > std::size_t{UINT32_MAX})
		throw input_error("vertex count " + std::to_string(n) + " exceeds the 32-bit id range");
	for (Edge &e : edges) {
		if (e.u >= n || e.v >= n)
			throw input_error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
			                  "} has an endpoint outside [0, " + std::to_string(n) + ")");
		if (e.u == e.v)
			throw input_error("self-loop at vertex " + std::to_string(e.u));
		e = make_edge(e.u, e.v);
	}
	std::sort(edges.begin(), edges.end());
	edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

	Graph g;
	g.n_ = n;
	g.edges_ = std::move(edges);
	g.build_adjacency();
	return g;
}

void Graph::build_adjacency() {
	offsets_.assign(n_ + 1, 0);
	for (const Edge &e : edges_) {
		++offsets_[e.u + 1];
		++offsets_[e.v + 1];
	}
	for (std::size_t v = 0; v < n_; ++v)
		offsets_[v + 1] += offsets_[v];

	// Filling in canonical edge order leaves every list sorted: for vertex w the
	// smaller neighbors arrive first (from earlier rows), then the larger ones.
	adjacency_.resize(2 * edges_.size());
	std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
	for (const Edge &e : edges_) {
		adjacency_[fill[e.u]++] = e.v;
		adjacency_[fill[e.v]++] = e.u;
	}
}

bool Graph::has_edge(vertex a, vertex b) const {
	if (a >= n_ || b >= n_)
		return false;
	if (degree(a) > degree(b))
		std::swap(a, b);
	auto adj = neighbors(a);
	return std::binary_search(adj.begin(), adj.end(), b);
}

Graph new_graph(std::size_t n, std::initializer_list<std::pair<vertex, vertex>> edges) {
	return Graph::from_edges(n, std::span<const std::pair<vertex, vertex>>(edges.begin(), edges.size()));
}

NormalizedGraph normalize_even(const Graph &g) {
	if (g.vertex_count() % 2 == 0)
		return {g, false};
	std::vector<Edge> edges(g.edges().begin(), g.edges().end());
	return {Graph::from_edges(g.vertex_count() + 1, std::move(edges)), true};
}

namespace {

enum : std::uint8_t { unassigned = 0, in_x = 1, in_y = 2 };

std::vector<std::uint8_t> side_labels(std::size_t n, std::span<const vertex> x, std::span<const vertex> y) {
	std::vector<std::uint8_t> label(n, unassigned);
	auto mark = [&](std::span<const vertex> side, std::uint8_t tag) {
		for (vertex v : side) {
			if (v >= n)
				throw input_error("partition names vertex " + std::to_string(v) + " outside the graph");
			if (label[v] != unassigned)
				throw input_error("vertex " + std::to_string(v) + " appears twice in the partition");
			label[v] = tag;
		}
	};
	mark(x, in_x);
	mark(y, in_y);
	if (x.size() + y.size() != n)
		throw input_error("partition does not cover all " + std::to_string(n) + " vertices");
	return label;
}

} // namespace

std::size_t cut_size(const Graph &g, std::span<const vertex> x, std::span<const vertex> y) {
	auto label = side_labels(g.vertex_count(), x, y);
	std::size_t cut = 0;
	for (const Edge &e : g.edges())
		cut += label[e.u] != label[e.v];
	return cut;
}

std::size_t cut_size(const Graph &g, const Bisection &b) {
	return cut_size(g, b.side_x(), b.side_y());
}

Bisection Bisection::from_sides(const Graph &g, std::vector<vertex> x, std::vector<vertex> y) {
	if (x.size() > y.size())
		std::swap(x, y);
	if (y.size() > x.size() + 1)
		throw input_error("unbalanced partition: |X|=" + std::to_string(x.size()) +
		                  ", |Y|=" + std::to_string(y.size()));
	Bisection b;
	b.cut_ = bisectk::cut_size(g, x, y);
	std::sort(x.begin(), x.end());
	std::sort(y.begin(), y.end());
	b.x_ = std::move(x);
	b.y_ = std::move(y);
	return b;
}

Bisection strip_vertex(const Graph &original, const Bisection &b, vertex removed) {
	auto drop = [removed](const std::vector<vertex> &side) {
		std::vector<vertex> out;
		out.reserve(side.size());
		for (vertex v : side)
			if (v != removed)
				out.push_back(v);
		return out;
	};
	return Bisection::from_sides(original, drop(b.side_x()), drop(b.side_y()));
}

} // namespace bisectk
