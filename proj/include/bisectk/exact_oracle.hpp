#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bisectk/graph.hpp"

namespace bisectk {

inline constexpr std::size_t default_vertex_limit = 24;

struct ExactResult {
	std::size_t size = 0;
	Bisection bisection;
};

/**
 * Maximum bisection by exhaustive search.
 *
 * Odd inputs are padded with an isolated vertex, which is stripped from the
 * returned bisection. Only sides X containing vertex 0 are enumerated (the
 * other half are mirror images). Ties keep the lexicographically smallest X.
 * Throws oracle_limit_error when the padded vertex count exceeds
 * `vertex_limit`; limits above 64 are rejected.
 */
ExactResult max_bisection_exact(const Graph &g, std::size_t vertex_limit = default_vertex_limit);

enum class DecisionPath { early_big_matching, early_case1, kernel_bruteforce, trivial_k_nonpositive };

std::string to_string(DecisionPath path);

struct DecisionResult {
	bool answer = false;
	std::optional<Bisection> witness; // original ids; present iff answer
	std::int64_t bound_used = 0;      // ceil(m/2) + k
	DecisionPath path = DecisionPath::trivial_k_nonpositive;
	std::size_t matching_size = 0;
	// Only on the kernel_bruteforce path.
	std::optional<std::size_t> kernel_n;
	std::optional<std::size_t> kernel_m;
	std::optional<std::size_t> kernel_max;
};

/**
 * Does g have a bisection of size >= ceil(m/2) + k?
 *
 * k <= 0 is always yes. Otherwise the instance is kernelized; early answers
 * pass their witness through, and a reduced kernel is solved by
 * max_bisection_exact with a yes-witness lifted back. Throws undecided_error
 * if the kernel is larger than `vertex_limit`.
 */
DecisionResult decide_atlb(const Graph &g, std::int64_t k, std::size_t vertex_limit = default_vertex_limit);

// ceil(p m) with p = n / (2(n - 1)) on the even-padded vertex count; 0 when n < 2.
std::size_t pm_lower_bound(const Graph &g);

} // namespace bisectk
