#include <gtest/gtest.h>

#include <sstream>

#include "bisectk/bench.hpp"
#include "bisectk/errors.hpp"
#include "bisectk/kernelizer.hpp"

namespace bisectk {
namespace {

BenchConfig parse(const std::string &text) {
	std::istringstream in(text);
	return parse_bench_config(in);
}

std::string strip_elapsed(const std::string &csv) {
	std::istringstream in(csv);
	std::ostringstream out;
	std::string line;
	while (std::getline(in, line))
		out << line.substr(0, line.rfind(',')) << '\n';
	return out.str();
}

const char *header =
    "graph_id,n,m,k,matching_size,path,kernel_n,kernel_m,bound_4k_k1,greedy_cut,lemma1_bound,elapsed_ms\n";

TEST(BenchConfig, ParsesGrid) {
	BenchConfig c = parse("# grid\nfamilies = gnp star\nn = 10 12 # sizes\np = 0.1 0.3\nseeds = 4\nk = 1 2\nlimit = 20\n");
	EXPECT_EQ(c.families, (std::vector<std::string>{"gnp", "star"}));
	EXPECT_EQ(c.sizes, (std::vector<std::size_t>{10, 12}));
	EXPECT_EQ(c.probabilities, (std::vector<double>{0.1, 0.3}));
	EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{4}));
	EXPECT_EQ(c.ks, (std::vector<std::int64_t>{1, 2}));
	EXPECT_EQ(c.vertex_limit, 20u);
}

TEST(BenchConfig, RejectsBadInput) {
	EXPECT_THROW(parse("families = gnp hypercube\n"), input_error);
	EXPECT_THROW(parse("n = ten\n"), input_error);
	EXPECT_THROW(parse("p = 1.5\n"), input_error);
	EXPECT_THROW(parse("colour = red\n"), input_error);
	EXPECT_THROW(parse("just words\n"), input_error);
}

TEST(Bench, EmptyGridIsHeaderOnly) {
	std::ostringstream out;
	write_bench_csv(out, run_bench(parse("# nothing\n")));
	EXPECT_EQ(out.str(), header);
}

TEST(Bench, SmokeGridRowsAndBounds) {
	auto rows = run_bench(parse("families = gnp\nn = 10 12\np = 0.3\nseeds = 1 2 3 4 5\nk = 1\n"));
	ASSERT_EQ(rows.size(), 10u);
	EXPECT_EQ(rows.front().graph_id, "gnp_n10_p0.3_s1");
	EXPECT_EQ(rows.back().graph_id, "gnp_n12_p0.3_s5");
	for (const auto &r : rows) {
		EXPECT_GE(static_cast<std::int64_t>(r.greedy_cut), r.lemma1_bound);
		EXPECT_EQ(r.bound_4k_k1, 8u);
		if (r.path == "kernel_bruteforce") {
			ASSERT_TRUE(r.kernel_n);
			EXPECT_LE(*r.kernel_n, r.bound_4k_k1);
			EXPECT_LE(*r.kernel_m, kernel_edge_bound(r.k, *r.kernel_n));
		}
	}
}

TEST(Bench, NonRandomFamiliesIgnoreSeedsAndDeterministicCsv) {
	BenchConfig c = parse("families = star complete gnp\nn = 8 11\np = 0.5\nseeds = 1 2\nk = 1 2 3\n");
	auto rows = run_bench(c);
	// star and complete: 2 sizes x 3 k; gnp: 2 sizes x 2 seeds x 3 k.
	EXPECT_EQ(rows.size(), 6u + 6u + 12u);
	std::ostringstream a, b;
	write_bench_csv(a, rows);
	write_bench_csv(b, run_bench(c));
	EXPECT_EQ(strip_elapsed(a.str()), strip_elapsed(b.str()));
	EXPECT_EQ(rows[0].graph_id, "star_n8");
	EXPECT_EQ(rows[0].path, "kernel_bruteforce");
}

} // namespace
} // namespace bisectk
