#include "bisectk/graph_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "bisectk/errors.hpp"

namespace bisectk {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string &what) {
	throw input_error("line " + std::to_string(line_no) + ": " + what);
}

bool skippable(const std::string &line, bool dimacs) {
	auto pos = line.find_first_not_of(" \t\r");
	if (pos == std::string::npos || line[pos] == '#')
		return true;
	return dimacs && line[pos] == 'c';
}

// Parses exactly `count` unsigned integers from the rest of `in`, rejecting trailing tokens.
template <std::size_t count>
std::array<std::uint64_t, count> read_fields(std::istringstream &in, std::size_t line_no) {
	std::array<std::uint64_t, count> out{};
	for (auto &field : out) {
		std::string token;
		if (!(in >> token))
			fail(line_no, "expected " + std::to_string(count) + " integers");
		if (token.find_first_not_of("0123456789") != std::string::npos)
			fail(line_no, "not a non-negative integer: '" + token + "'");
		try {
			field = std::stoull(token);
		} catch (const std::out_of_range &) {
			fail(line_no, "integer out of range: '" + token + "'");
		}
	}
	std::string extra;
	if (in >> extra)
		fail(line_no, "unexpected trailing token '" + extra + "'");
	return out;
}

} // namespace

ParsedGraph read_edge_list(std::istream &in) {
	std::string line;
	std::size_t line_no = 0;
	bool header_seen = false;
	bool dimacs = false;
	std::uint64_t n = 0;
	std::uint64_t m = 0;
	std::vector<Edge> edges;

	while (std::getline(in, line)) {
		++line_no;
		if (!header_seen) {
			auto pos = line.find_first_not_of(" \t\r");
			if (pos != std::string::npos && line[pos] == 'p')
				dimacs = true;
		}
		// `c` lines before the header can only be DIMACS comments.
		if (skippable(line, dimacs || !header_seen))
			continue;
		std::istringstream fields(line);

		if (!header_seen) {
			if (dimacs) {
				std::string p, kind;
				fields >> p >> kind;
				if (p != "p" || kind != "edge")
					fail(line_no, "expected 'p edge n m'");
			}
			auto [hn, hm] = read_fields<2>(fields, line_no);
			if (hn > std::numeric_limits<vertex>::max())
				fail(line_no, "vertex count too large");
			n = hn;
			m = hm;
			header_seen = true;
			edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 26)));
			continue;
		}

		if (dimacs) {
			std::string e;
			fields >> e;
			if (e != "e")
				fail(line_no, "expected 'e u v'");
		}
		if (edges.size() == m)
			fail(line_no, "more edge lines than the header's m = " + std::to_string(m));
		auto [a, b] = read_fields<2>(fields, line_no);
		if (dimacs) {
			if (a == 0 || b == 0)
				fail(line_no, "DIMACS vertex ids are 1-based");
			--a;
			--b;
		}
		if (a >= n || b >= n)
			fail(line_no, "endpoint outside [0, " + std::to_string(n) + ")");
		if (a == b)
			fail(line_no, "self-loop at vertex " + std::to_string(a));
		edges.push_back(make_edge(static_cast<vertex>(a), static_cast<vertex>(b)));
	}

	if (!header_seen)
		throw input_error("missing header line");
	if (edges.size() != m)
		throw input_error("header promises " + std::to_string(m) + " edges, found " +
		                  std::to_string(edges.size()));
	return {Graph::from_edges(static_cast<std::size_t>(n), std::move(edges)), dimacs};
}

ParsedGraph read_edge_list(const std::filesystem::path &path) {
	std::ifstream in(path);
	if (!in)
		throw input_error("cannot open " + path.string());
	return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const Graph &g) {
	out << g.vertex_count() << ' ' << g.edge_count() << '\n';
	for (const Edge &e : g.edges())
		out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path &path, const Graph &g) {
	std::ofstream out(path);
	if (!out)
		throw input_error("cannot write " + path.string());
	write_edge_list(out, g);
}

} // namespace bisectk
