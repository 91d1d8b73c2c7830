#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "bisectk/errors.hpp"
#include "bisectk/generators.hpp"
#include "bisectk/greedy_bisection.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

namespace bisectk {
namespace {

using Pairs = std::vector<std::pair<vertex, vertex>>;

TEST(PairSequence, MatchingCoversEverything) {
	Graph p4 = gen_path(4);
	PairSequence seq = pair_sequence(p4, maximal_matching(p4));
	EXPECT_EQ(seq.pairs, (Pairs{{0, 1}, {2, 3}}));
	EXPECT_EQ(seq.matched_prefix_len, 2u);
}

TEST(PairSequence, LeftoversAscending) {
	Graph s5 = gen_star(5);
	PairSequence seq = pair_sequence(s5, maximal_matching(s5));
	EXPECT_EQ(seq.pairs, (Pairs{{0, 1}, {2, 3}, {4, 5}}));
	EXPECT_EQ(seq.matched_prefix_len, 1u);

	Graph e6 = gen_edgeless(6);
	EXPECT_EQ(pair_sequence(e6, maximal_matching(e6)).pairs, (Pairs{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(PairSequence, ForcedPairsSortedAndSeedExcluded) {
	Graph g = new_graph(8, {{6, 7}, {0, 3}, {0, 1}});
	Matching m = Matching::from_pairs(g, {{7, 6}, {3, 0}});
	SeedPartition seed{{1}, {5}};
	PairSequence seq = pair_sequence(g, m, seed);
	EXPECT_EQ(seq.pairs, (Pairs{{0, 3}, {6, 7}, {2, 4}}));
	EXPECT_EQ(seq.matched_prefix_len, 2u);
}

TEST(PairSequence, Errors) {
	Graph p3 = gen_path(3);
	EXPECT_THROW(pair_sequence(p3, maximal_matching(p3)), input_error);
	Graph p4 = gen_path(4);
	Matching m = maximal_matching(p4);
	EXPECT_THROW(pair_sequence(p4, m, SeedPartition{{0}, {}}), input_error);
	EXPECT_THROW(pair_sequence(p4, m, SeedPartition{{0}, {2}}), input_error);
	EXPECT_THROW(pair_sequence(p4, maximal_matching(gen_path(6))), input_error);
}

TEST(RandomizedBisection, MatchedPairAlwaysSplit) {
	Graph k2 = gen_complete(2);
	Matching m = maximal_matching(k2);
	for (std::uint64_t s = 0; s < 20; ++s)
		EXPECT_EQ(randomized_bisection(k2, m, {}, s).cut_size(), 1u);
	Graph e4 = gen_edgeless(4);
	EXPECT_EQ(randomized_bisection(e4, maximal_matching(e4), {}, 3).cut_size(), 0u);
}

TEST(RandomizedBisection, ReproducibleGivenSeed) {
	Graph g = gen_gnp(20, 0.3, 42);
	Matching m = maximal_matching(g);
	EXPECT_EQ(randomized_bisection(g, m, {}, 99), randomized_bisection(g, m, {}, 99));
}

TEST(GreedyBisection, SingleEdgeMeetsBoundWithEquality) {
	Graph k2 = gen_complete(2);
	Bisection b = greedy_bisection(k2, maximal_matching(k2));
	EXPECT_EQ(b.cut_size(), 1u);
	EXPECT_EQ(static_cast<std::int64_t>(b.cut_size()), matching_guarantee(1, 1));
}

TEST(GreedyBisection, CycleFour) {
	Graph c4 = gen_cycle(4);
	Matching m = Matching::from_pairs(c4, {{0, 1}, {2, 3}});
	Bisection b = greedy_bisection(c4, m);
	EXPECT_GE(static_cast<std::int64_t>(b.cut_size()), 3);
	EXPECT_EQ(oracle::max_bisection_full(c4), 4u);
	// Hand-simulated: ties at step 1, then 2 >= 0 at step 2.
	EXPECT_EQ(b.side_x(), (std::vector<vertex>{0, 2}));
	EXPECT_EQ(b.cut_size(), 4u);
}

TEST(GreedyBisection, StarFive) {
	Graph s5 = gen_star(5);
	Bisection b = greedy_bisection(s5, maximal_matching(s5));
	EXPECT_GE(static_cast<std::int64_t>(b.cut_size()), 3);
	EXPECT_EQ(oracle::max_bisection_full(s5), 3u);
	EXPECT_EQ(b.side_x(), (std::vector<vertex>{0, 2, 4}));
}

TEST(GreedyBisection, SeededPlacementKeepsSeeds) {
	Graph h = gen_double_star(5, 0, 5);
	Matching none = Matching::from_pairs(h, {});
	SeedPartition seed{{2, 3}, {0, 7}};
	Bisection b = greedy_bisection(h, none, seed);
	std::set<vertex> x(b.side_x().begin(), b.side_x().end());
	EXPECT_TRUE(x.count(2) && x.count(3));
	EXPECT_FALSE(x.count(0) || x.count(7));
	EXPECT_GE(b.cut_size(), 4u);
}

// Guarantee, balance, and matched-pair splitting over the corpus.
TEST(GreedyBisection, GuaranteeOverCorpus) {
	auto instances = corpus::named_families(16);
	for (auto &inst : corpus::gnp_large())
		instances.push_back(std::move(inst));
	for (const auto &inst : instances) {
		Graph g = normalize_even(inst.graph).graph;
		Matching m = maximal_matching(g);
		Bisection b = greedy_bisection(g, m);
		const auto cut = static_cast<std::int64_t>(b.cut_size());
		EXPECT_GE(cut, matching_guarantee(g.edge_count(), m.size())) << inst.name;
		// Integer form of "at least the expectation |M| + (m - |M|)/2".
		EXPECT_GE(2 * cut, static_cast<std::int64_t>(g.edge_count() + m.size())) << inst.name;
		EXPECT_EQ(b.side_x().size(), b.side_y().size()) << inst.name;
		EXPECT_EQ(b.cut_size(), oracle::count_cut(g, {b.side_x().begin(), b.side_x().end()})) << inst.name;
		std::set<vertex> x(b.side_x().begin(), b.side_x().end());
		for (const Edge &e : m.pairs())
			EXPECT_NE(x.count(e.u), x.count(e.v)) << inst.name;
	}
}

// Small-sample version of the expectation check; the acceptance suite runs 20,000 trials.
TEST(RandomizedBisection, MeanNearExpectation) {
	Graph g = gen_gnp(16, 0.4, 5);
	Matching m = maximal_matching(g);
	const int trials = 4000;
	double sum = 0, sum_sq = 0;
	for (int s = 0; s < trials; ++s) {
		double c = static_cast<double>(randomized_bisection(g, m, {}, static_cast<std::uint64_t>(s)).cut_size());
		sum += c;
		sum_sq += c * c;
	}
	double mean = sum / trials;
	double sd = std::sqrt((sum_sq - trials * mean * mean) / (trials - 1));
	double expect = static_cast<double>(m.size()) + static_cast<double>(g.edge_count() - m.size()) / 2.0;
	EXPECT_LE(std::abs(mean - expect), 3 * sd / std::sqrt(trials));
}

} // namespace
} // namespace bisectk
