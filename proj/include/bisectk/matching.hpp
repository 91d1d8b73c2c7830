#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "bisectk/graph.hpp"

namespace bisectk {

inline constexpr vertex no_vertex = std::numeric_limits<vertex>::max();

// Set of vertex-disjoint edges of a host graph, with O(1) coverage lookup.
class Matching {
public:
	Matching() = default;

	// Validates that every pair is an edge of g and that pairs are disjoint.
	static Matching from_pairs(const Graph &g, std::vector<Edge> pairs);

	std::span<const Edge> pairs() const { return pairs_; }
	std::size_t size() const { return pairs_.size(); }
	std::size_t host_vertex_count() const { return mate_.size(); }

	bool covers(vertex v) const { return v < mate_.size() && mate_[v] != no_vertex; }
	vertex mate(vertex v) const { return mate_[v]; }

	// V(M), ascending.
	std::vector<vertex> covered() const;

	// Every edge of g touches a covered vertex.
	bool is_maximal_in(const Graph &g) const;

	// Copy without the pair covering v.
	Matching without_pair_of(vertex v) const;

	friend bool operator==(const Matching &a, const Matching &b) { return a.pairs_ == b.pairs_; }

private:
	friend Matching maximal_matching(const Graph &g);

	std::vector<Edge> pairs_;
	std::vector<vertex> mate_;
};

// Greedy scan in canonical edge order: an edge joins when both ends are still
// free. O(n + m).
Matching maximal_matching(const Graph &g);

} // namespace bisectk
