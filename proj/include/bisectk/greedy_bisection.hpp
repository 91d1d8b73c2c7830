#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bisectk/graph.hpp"
#include "bisectk/matching.hpp"

namespace bisectk {

// Vertices placed before any pair is processed. Both sides independent of the
// matching and of equal size.
struct SeedPartition {
	std::vector<vertex> seed_x;
	std::vector<vertex> seed_y;

	bool empty() const { return seed_x.empty() && seed_y.empty(); }
};

/**
 * Ordered pairs (u_i, v_i) covering every vertex outside the seed.
 *
 * The first `matched_prefix_len` entries are the matching edges in canonical
 * order, each oriented (min, max). The rest pair up the leftover vertices
 * consecutively in ascending id order.
 */
struct PairSequence {
	std::vector<std::pair<vertex, vertex>> pairs;
	std::size_t matched_prefix_len = 0;
};

// Throws input_error when n is odd or the seed is malformed or overlaps V(M).
PairSequence pair_sequence(const Graph &g, const Matching &m, const SeedPartition &seed = {});

// Each pair is split by a fair SplitMix64 coin: u_i goes to X on heads.
Bisection randomized_bisection(const Graph &g, const Matching &m, const SeedPartition &seed,
                               std::uint64_t rng_seed);

/**
 * Derandomized pairing by conditional expectations.
 *
 * Pair i is placed as u_i -> X, v_i -> Y exactly when
 *   |N(u_i) & Y| + |N(v_i) & X| >= |N(u_i) & X| + |N(v_i) & Y|
 * against the sides built so far (seed included), otherwise the other way.
 * Ties go to u_i -> X. Every step touches only the two adjacency lists, so the
 * whole pass is O(n + m).
 *
 * With an empty seed the cut is at least ceil(m/2) + floor(|M|/2).
 */
Bisection greedy_bisection(const Graph &g, const Matching &m, const SeedPartition &seed = {});

// ceil(m/2) + floor(|M|/2).
inline std::int64_t matching_guarantee(std::size_t m, std::size_t matching_size) {
	return half_ceil(m) + static_cast<std::int64_t>(matching_size / 2);
}

} // namespace bisectk
