#include <gtest/gtest.h>

#include "bisectk/errors.hpp"
#include "bisectk/exact_oracle.hpp"
#include "bisectk/generators.hpp"
#include "bisectk/greedy_bisection.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

namespace bisectk {
namespace {

TEST(MaxBisectionExact, Examples) {
	EXPECT_EQ(max_bisection_exact(gen_star(5)).size, 3u);
	EXPECT_EQ(max_bisection_exact(gen_complete(4)).size, 4u);
	EXPECT_EQ(max_bisection_exact(gen_edgeless(6)).size, 0u);
	EXPECT_EQ(max_bisection_exact(gen_edgeless(0)).size, 0u);
}

TEST(MaxBisectionExact, RefusesAboveLimit) {
	EXPECT_THROW(max_bisection_exact(gen_path(26)), oracle_limit_error);
	EXPECT_THROW(max_bisection_exact(gen_path(9), 8), oracle_limit_error); // padded to 10
	EXPECT_NO_THROW(max_bisection_exact(gen_path(8), 8));
	EXPECT_THROW(max_bisection_exact(gen_path(4), 65), input_error);
	try {
		max_bisection_exact(gen_path(30));
	} catch (const oracle_limit_error &e) {
		EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
	}
}

TEST(MaxBisectionExact, OddInputReturnsBalancedBisectionOfOriginal) {
	Graph p5 = gen_path(5);
	ExactResult r = max_bisection_exact(p5);
	EXPECT_EQ(r.bisection.side_x().size(), 2u);
	EXPECT_EQ(r.bisection.side_y().size(), 3u);
	EXPECT_EQ(r.size, cut_size(p5, r.bisection));
	EXPECT_EQ(r.size, oracle::max_bisection_full(p5));
}

// Pinning vertex 0 loses nothing: agree with unpinned enumeration, and the
// tie-break picks the lexicographically first maximizer.
TEST(MaxBisectionExact, SymmetryHalvingMatchesFullEnumeration) {
	auto instances = corpus::named_families(8);
	for (auto &inst : corpus::gnp_small(200))
		if (inst.graph.vertex_count() <= 8)
			instances.push_back(std::move(inst));
	for (const auto &inst : instances) {
		ExactResult r = max_bisection_exact(inst.graph);
		EXPECT_EQ(r.size, oracle::max_bisection_full(inst.graph)) << inst.name;
		EXPECT_EQ(r.size, r.bisection.cut_size()) << inst.name;
		const Graph &g = inst.graph;
		if (g.vertex_count() >= 2 && g.vertex_count() % 2 == 0) {
			auto first = oracle::lex_first_maximizer(g);
			const auto &x = r.bisection.side_x();
			const auto &y = r.bisection.side_y();
			EXPECT_TRUE(x == first || y == first) << inst.name;
		}
	}
}

TEST(DecideAtlb, Examples) {
	DecisionResult star = decide_atlb(gen_star(5), 1);
	EXPECT_FALSE(star.answer);
	EXPECT_FALSE(star.witness);
	EXPECT_EQ(star.bound_used, 4);
	EXPECT_EQ(star.path, DecisionPath::kernel_bruteforce);

	DecisionResult c4 = decide_atlb(gen_cycle(4), 2);
	EXPECT_TRUE(c4.answer);
	ASSERT_TRUE(c4.witness);
	EXPECT_EQ(c4.witness->cut_size(), 4u);
	EXPECT_EQ(c4.bound_used, 4);

	for (const auto &inst : corpus::named_families(9)) {
		DecisionResult d = decide_atlb(inst.graph, 0);
		EXPECT_TRUE(d.answer);
		EXPECT_EQ(d.path, DecisionPath::trivial_k_nonpositive);
		EXPECT_GE(static_cast<std::int64_t>(d.witness->cut_size()), d.bound_used);
	}
}

TEST(DecideAtlb, OddInputWitnessDropsPaddingVertex) {
	Graph g = gen_star(4); // n = 5
	DecisionResult d = decide_atlb(g, -1);
	ASSERT_TRUE(d.witness);
	EXPECT_EQ(d.witness->side_x().size() + d.witness->side_y().size(), 5u);
	EXPECT_EQ(d.witness->side_x().size(), 2u);
	EXPECT_EQ(d.witness->cut_size(), cut_size(g, *d.witness));
}

TEST(DecideAtlb, LiftsKernelWitness) {
	// K_{2,8}: the twin rule removes 6 of the 8 right-hand vertices, the kernel
	// K_{2,2} has max bisection 4 >= ceil(4/2) + 2, and the lifted witness is
	// 4 + 3*2 = 10 on the original.
	Graph g = gen_complete_bipartite(2, 8);
	DecisionResult d = decide_atlb(g, 2);
	EXPECT_EQ(d.path, DecisionPath::kernel_bruteforce);
	ASSERT_TRUE(d.answer);
	EXPECT_EQ(d.kernel_n, std::optional<std::size_t>(4));
	EXPECT_EQ(d.witness->cut_size(), 10u);
	EXPECT_EQ(oracle::max_bisection_full(g), 10u);
}

TEST(DecideAtlb, UndecidedWhenKernelTooLarge) {
	// K_4 is its own kernel for k = 3; a limit of 2 cannot hold its 4 vertices.
	Graph g = gen_complete(4);
	EXPECT_THROW(decide_atlb(g, 3, 2), undecided_error);
}

TEST(PmLowerBound, Examples) {
	EXPECT_EQ(pm_lower_bound(gen_complete(4)), 4u);
	EXPECT_EQ(pm_lower_bound(gen_star(5)), 3u);
	EXPECT_EQ(pm_lower_bound(gen_edgeless(7)), 0u);
	EXPECT_EQ(pm_lower_bound(gen_edgeless(1)), 0u);
	EXPECT_EQ(pm_lower_bound(gen_complete(4)), max_bisection_exact(gen_complete(4)).size);
	// K_3 pads to n = 4: ceil(4*3 / 6) = 2, which is the true maximum.
	EXPECT_EQ(pm_lower_bound(gen_complete(3)), 2u);
}

// Dominance chain: exact >= greedy >= matching guarantee, exact >= ceil(pm) >= ceil(m/2),
// and decide agrees with direct brute force.
TEST(ExactOracle, InvariantsOverSmallCorpus) {
	auto instances = corpus::named_families(12);
	for (auto &inst : corpus::gnp_small(200))
		instances.push_back(std::move(inst));
	for (const auto &inst : instances) {
		const Graph &g = inst.graph;
		std::size_t best = max_bisection_exact(g).size;
		Graph even = normalize_even(g).graph;
		Matching m = maximal_matching(even);
		auto greedy = static_cast<std::int64_t>(greedy_bisection(even, m).cut_size());
		EXPECT_GE(static_cast<std::int64_t>(best), greedy) << inst.name;
		EXPECT_GE(greedy, matching_guarantee(g.edge_count(), m.size())) << inst.name;
		if (g.vertex_count() >= 2) {
			EXPECT_LE(pm_lower_bound(g), best) << inst.name;
			EXPECT_LE(half_ceil(g.edge_count()), static_cast<std::int64_t>(pm_lower_bound(g))) << inst.name;
		}
		for (std::int64_t k = -1; k <= 3; ++k) {
			DecisionResult d = decide_atlb(g, k);
			EXPECT_EQ(d.answer, static_cast<std::int64_t>(best) >= half_ceil(g.edge_count()) + k)
			    << inst.name << " k=" << k;
			if (d.answer)
				EXPECT_GE(static_cast<std::int64_t>(cut_size(g, *d.witness)), d.bound_used) << inst.name;
		}
	}
}

} // namespace
} // namespace bisectk
