#pragma once

#include <cstddef>
#include <cstdint>

#include "bisectk/graph.hpp"

namespace bisectk {

/**
 * splitmix64: state += 0x9E3779B97F4A7C15, then the output is the state
 * passed through two xor-shift-multiply rounds
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   z =  z ^ (z >> 31)
 * Bit-exact on every platform, so seeded generators reproduce everywhere.
 */
class SplitMix64 {
public:
	explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

	std::uint64_t next() {
		std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
		z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
		z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
		return z ^ (z >> 31);
	}

	// Top bit of the next output.
	bool coin() { return (next() >> 63) != 0; }

	// Uniform in [0, bound) by rejection; bound must be positive.
	std::uint64_t below(std::uint64_t bound);

private:
	std::uint64_t state_;
};

// K_{1,leaves}: vertex 0 is the center.
Graph gen_star(std::size_t leaves);
Graph gen_complete(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_edgeless(std::size_t n);
// K_{a,b} with sides {0..a-1} and {a..a+b-1}.
Graph gen_complete_bipartite(std::size_t a, std::size_t b);

/**
 * Two adjacent hubs z = 0 and w = 1, z with `z_leaves` private leaves
 * (ids 2..), w with `w_leaves` private leaves (next ids), then `isolates`
 * isolated vertices. With no w leaves this is a star plus isolated vertices.
 */
Graph gen_double_star(std::size_t z_leaves, std::size_t w_leaves, std::size_t isolates);

/**
 * G(n, p): the C(n,2) candidate pairs are visited in canonical order and each
 * takes one SplitMix64 draw; the pair is kept when (draw >> 11) < p * 2^53.
 */
Graph gen_gnp(std::size_t n, double edge_probability, std::uint64_t seed);

// m distinct edges drawn uniformly (with rejection of loops and repeats).
Graph gen_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

} // namespace bisectk
