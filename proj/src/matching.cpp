#include "bisectk/matching.hpp"

#include <string>

#include "bisectk/errors.hpp"

namespace bisectk {

Matching Matching::from_pairs(const Graph &g, std::vector<Edge> pairs) {
	Matching m;
	m.mate_.assign(g.vertex_count(), no_vertex);
	for (Edge &e : pairs) {
		e = make_edge(e.u, e.v);
		if (!g.has_edge(e.u, e.v))
			throw input_error("matching pair {" + std::to_string(e.u) + "," + std::to_string(e.v) +
			                  "} is not an edge");
		if (m.mate_[e.u] != no_vertex || m.mate_[e.v] != no_vertex)
			throw input_error("matching pairs share a vertex at {" + std::to_string(e.u) + "," +
			                  std::to_string(e.v) + "}");
		m.mate_[e.u] = e.v;
		m.mate_[e.v] = e.u;
	}
	m.pairs_ = std::move(pairs);
	return m;
}

std::vector<vertex> Matching::covered() const {
	std::vector<vertex> out;
	out.reserve(2 * pairs_.size());
	for (vertex v = 0; v < mate_.size(); ++v)
		if (mate_[v] != no_vertex)
			out.push_back(v);
	return out;
}

bool Matching::is_maximal_in(const Graph &g) const {
	for (const Edge &e : g.edges())
		if (!covers(e.u) && !covers(e.v))
			return false;
	return true;
}

Matching Matching::without_pair_of(vertex v) const {
	Matching out;
	out.mate_ = mate_;
	if (!covers(v))
		return *this;
	vertex w = mate_[v];
	out.mate_[v] = no_vertex;
	out.mate_[w] = no_vertex;
	Edge gone = make_edge(v, w);
	for (const Edge &e : pairs_)
		if (e != gone)
			out.pairs_.push_back(e);
	return out;
}

Matching maximal_matching(const Graph &g) {
	Matching m;
	m.mate_.assign(g.vertex_count(), no_vertex);
	for (const Edge &e : g.edges()) {
		if (m.mate_[e.u] == no_vertex && m.mate_[e.v] == no_vertex) {
			m.mate_[e.u] = e.v;
			m.mate_[e.v] = e.u;
			m.pairs_.push_back(e);
		}
	}
	return m;
}

} // namespace bisectk
