#pragma once

#include <filesystem>
#include <iosfwd>

#include "bisectk/graph.hpp"

namespace bisectk {

struct ParsedGraph {
	Graph graph;
	// Input used the 1-based DIMACS `p edge` / `e u v` form.
	bool dimacs = false;
};

/**
 * Reads either format:
 *
 *   # comment            c comment
 *   n m                  p edge n m
 *   u v   (m lines,      e u v   (m lines,
 *          0-based)               1-based)
 *
 * Blank lines and `#` lines are skipped in both; `c` lines only in DIMACS.
 * Throws input_error with the offending line number.
 */
ParsedGraph read_edge_list(std::istream &in);
ParsedGraph read_edge_list(const std::filesystem::path &path);

// Header `n m`, then edges in canonical order, 0-based.
void write_edge_list(std::ostream &out, const Graph &g);
void write_edge_list(const std::filesystem::path &path, const Graph &g);

} // namespace bisectk
