#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bisectk/graph.hpp"
#include "bisectk/greedy_bisection.hpp"
#include "bisectk/matching.hpp"

namespace bisectk {

enum class SideKind {
	neighbors_outside_matching,     // N(x) \ V(M)
	non_neighbors_outside_matching, // V \ (V(M) + N(x))
};

/**
 * S(x) for a matched vertex x: the smaller of its neighbors outside V(M) and
 * its non-neighbors outside V(M). Ties resolve to the neighbor side.
 */
struct SideSet {
	vertex x = 0;
	std::vector<vertex> members;
	SideKind kind = SideKind::neighbors_outside_matching;
};

SideSet side_set(const Graph &g, const Matching &m, vertex x);

// Smallest z in V(M) with |S(z)| >= 2k - |M| + 1. Requires |M| < 2k.
std::optional<vertex> detect_case1(const Graph &g, const Matching &m, std::int64_t k);

/**
 * Witness for a vertex z found by detect_case1.
 *
 * With t = 2k - |M| + 1, X' holds the t lowest ids of N(z) \ V(M) and Y' holds
 * z plus the t - 1 lowest ids of V \ (V(M) + N(z)). Both are independent and
 * exactly t edges join them (all at z). The remaining vertices are placed by
 * greedy_bisection seeded with (X', Y'), forcing M minus z's pair, which
 * yields a cut of at least ceil(m/2) + k.
 */
Bisection case1_witness(const Graph &g, const Matching &m, std::int64_t k, vertex z);

// Classes of equal open neighborhood, members ascending, classes ordered by
// their smallest member.
std::vector<std::vector<vertex>> twin_classes(const Graph &g);

// One application of the twin rule. All ids refer to the graph the reduction
// started from.
struct ReductionStep {
	std::vector<vertex> neighborhood;
	std::vector<vertex> deleted; // 2j twins, ascending
	std::size_t degree = 0;
	std::size_t n_before = 0;

	std::size_t j() const { return deleted.size() / 2; }
	friend bool operator==(const ReductionStep &, const ReductionStep &) = default;
};

struct ReductionTrace {
	std::vector<ReductionStep> steps;

	// Sum of j * d over the steps: what lifting adds to a kernel cut.
	std::size_t cut_gain() const;
	bool empty() const { return steps.empty(); }
	friend bool operator==(const ReductionTrace &, const ReductionTrace &) = default;
};

// Relabeling between the input graph and a compacted reduced graph.
struct IdMap {
	std::size_t original_vertex_count = 0;
	std::vector<vertex> kernel_to_original;
	std::vector<vertex> original_to_kernel; // no_vertex for deleted vertices

	static IdMap identity(std::size_t n);
	static IdMap from_kernel_ids(std::size_t original_n, std::vector<vertex> kernel_to_original);
};

struct TwinReduction {
	Graph graph;
	ReductionTrace trace;
	IdMap id_map;
};

/**
 * Applies the twin rule to a fixpoint: while some twin class has n/2 + j
 * members (j > 0), its 2j highest-id members are deleted. Any bisection puts at
 * least j members of such a class on each side, so the decision for every k is
 * unchanged. Requires n even.
 */
TwinReduction reduce_large_twin_class(const Graph &g);

/**
 * Reinserts deleted twins, j per side per step in reverse order, and maps
 * kernel ids back. The lifted cut is exactly the kernel cut plus cut_gain().
 * Throws input_error if the trace or id map does not fit `original`.
 */
Bisection lift_witness(const Graph &original, const Bisection &kernel_witness, const ReductionTrace &trace,
                       const IdMap &id_map);

enum class EarlyReason { big_matching, case1 };

struct EarlyYes {
	Bisection witness; // on the input graph, cut >= ceil(m/2) + k
	EarlyReason reason = EarlyReason::big_matching;
	std::size_t matching_size = 0;
};

struct Reduced {
	Graph kernel;
	std::int64_t k = 0;
	ReductionTrace trace;
	IdMap id_map;
	std::size_t matching_size = 0; // maximal matching of the kernel
};

using KernelOutcome = std::variant<EarlyYes, Reduced>;

// 4k(k+1)
std::uint64_t kernel_vertex_bound(std::int64_t k);
// 4k n' + 8k^2
std::uint64_t kernel_edge_bound(std::int64_t k, std::size_t kernel_n);

/**
 * Kernelization for "is there a bisection of size >= ceil(m/2) + k".
 *
 * Loops to a fixpoint over three phases on the current graph: a maximal
 * matching with >= 2k edges answers yes; a Case 1 vertex answers yes with an
 * explicit witness; otherwise the twin rule runs, and if it changes nothing the
 * graph is returned as the kernel. The kernel is checked against both size
 * bounds and the structure of Z (the unmatched vertices outside every S(x)),
 * and a failed check throws std::logic_error.
 *
 * Requires an even vertex count and 1 <= k <= 10^9.
 */
KernelOutcome kernelize(const Graph &g, std::int64_t k);

std::string to_string(EarlyReason reason);

// JSON array of {"neighborhood", "deleted", "degree", "n_before"} objects.
std::string trace_to_json(const ReductionTrace &trace);
ReductionTrace trace_from_json(const std::string &text);

} // namespace bisectk
