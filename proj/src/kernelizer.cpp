#include "bisectk/kernelizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "bisectk/errors.hpp"

namespace bisectk {

namespace {

constexpr std::int64_t max_parameter = 1'000'000'000;

void require_matching_of(const Graph &g, const Matching &m) {
	if (m.host_vertex_count() != g.vertex_count())
		throw input_error("matching belongs to a graph of a different size");
}

// |N(x) \ V(M)| and |V \ (V(M) + N(x))| for a covered x.
std::pair<std::size_t, std::size_t> side_sizes(const Graph &g, const Matching &m, vertex x) {
	std::size_t outside = g.vertex_count() - 2 * m.size();
	std::size_t neighbors = 0;
	for (vertex w : g.neighbors(x))
		neighbors += !m.covers(w);
	return {neighbors, outside - neighbors};
}

std::int64_t case1_threshold(const Matching &m, std::int64_t k) {
	return 2 * k - static_cast<std::int64_t>(m.size()) + 1;
}

struct WorkingGraph {
	Graph graph;
	std::vector<vertex> to_original;
};

// One firing of the twin rule on `work`. Returns false at the fixpoint.
bool apply_twin_rule(WorkingGraph &work, ReductionTrace &trace) {
	const Graph &g = work.graph;
	const std::size_t n = g.vertex_count();
	for (const auto &cls : twin_classes(g)) {
		if (2 * cls.size() <= n)
			continue;
		const std::size_t j = cls.size() - n / 2;

		ReductionStep step;
		step.n_before = n;
		step.degree = g.degree(cls.front());
		for (vertex w : g.neighbors(cls.front()))
			step.neighborhood.push_back(work.to_original[w]);
		std::vector<bool> drop(n, false);
		for (std::size_t i = cls.size() - 2 * j; i < cls.size(); ++i) {
			drop[cls[i]] = true;
			step.deleted.push_back(work.to_original[cls[i]]);
		}
		std::sort(step.neighborhood.begin(), step.neighborhood.end());
		std::sort(step.deleted.begin(), step.deleted.end());

		std::vector<vertex> new_id(n, no_vertex);
		std::vector<vertex> to_original;
		to_original.reserve(n - 2 * j);
		for (vertex v = 0; v < n; ++v) {
			if (drop[v])
				continue;
			new_id[v] = static_cast<vertex>(to_original.size());
			to_original.push_back(work.to_original[v]);
		}
		std::vector<Edge> edges;
		edges.reserve(g.edge_count());
		for (const Edge &e : g.edges())
			if (!drop[e.u] && !drop[e.v])
				edges.push_back({new_id[e.u], new_id[e.v]});

		work.graph = Graph::from_edges(to_original.size(), std::move(edges));
		work.to_original = std::move(to_original);
		trace.steps.push_back(std::move(step));
		return true;
	}
	return false;
}

bool twin_rule_fixpoint(WorkingGraph &work, ReductionTrace &trace) {
	bool changed = false;
	while (apply_twin_rule(work, trace))
		changed = true;
	return changed;
}

// Every unmatched vertex outside all S(x) has the same neighborhood, and there
// are at most n/2 of them once the twin rule is exhausted.
void check_case2_structure(const Graph &g, const Matching &m) {
	const std::size_t n = g.vertex_count();
	std::vector<bool> in_s(n, false);
	for (vertex x : m.covered())
		for (vertex v : side_set(g, m, x).members)
			in_s[v] = true;
	std::optional<vertex> first;
	std::size_t z_size = 0;
	for (vertex v = 0; v < n; ++v) {
		if (m.covers(v) || in_s[v])
			continue;
		++z_size;
		if (!first) {
			first = v;
		} else if (!std::ranges::equal(g.neighbors(*first), g.neighbors(v))) {
			throw std::logic_error("Case 2 check failed: Z spans more than one twin class");
		}
	}
	if (2 * z_size > n)
		throw std::logic_error("Case 2 check failed: |Z| exceeds n/2 after the twin rule");
}

IdMap id_map_of(std::size_t original_n, const WorkingGraph &work) {
	return IdMap::from_kernel_ids(original_n, work.to_original);
}

void check_witness(const Graph &g, const Bisection &b, std::int64_t k, const char *where) {
	if (static_cast<std::int64_t>(cut_size(g, b)) < half_ceil(g.edge_count()) + k)
		throw std::logic_error(std::string(where) + " witness misses ceil(m/2) + k");
}

} // namespace

SideSet side_set(const Graph &g, const Matching &m, vertex x) {
	require_matching_of(g, m);
	if (x >= g.vertex_count() || !m.covers(x))
		throw input_error("side_set needs a matched vertex, got " + std::to_string(x));
	std::vector<bool> adjacent(g.vertex_count(), false);
	std::vector<vertex> neighbors;
	for (vertex w : g.neighbors(x)) {
		adjacent[w] = true;
		if (!m.covers(w))
			neighbors.push_back(w);
	}
	std::vector<vertex> others;
	for (vertex v = 0; v < g.vertex_count(); ++v)
		if (!m.covers(v) && !adjacent[v])
			others.push_back(v);

	if (neighbors.size() <= others.size())
		return {x, std::move(neighbors), SideKind::neighbors_outside_matching};
	return {x, std::move(others), SideKind::non_neighbors_outside_matching};
}

std::optional<vertex> detect_case1(const Graph &g, const Matching &m, std::int64_t k) {
	require_matching_of(g, m);
	if (static_cast<std::int64_t>(m.size()) >= 2 * k)
		throw contract_error("detect_case1 requires |M| < 2k");
	const std::int64_t threshold = case1_threshold(m, k);
	for (vertex x = 0; x < g.vertex_count(); ++x) {
		if (!m.covers(x))
			continue;
		auto [a, b] = side_sizes(g, m, x);
		if (static_cast<std::int64_t>(std::min(a, b)) >= threshold)
			return x;
	}
	return std::nullopt;
}

Bisection case1_witness(const Graph &g, const Matching &m, std::int64_t k, vertex z) {
	require_matching_of(g, m);
	if (g.vertex_count() % 2 != 0)
		throw input_error("case1_witness needs an even vertex count");
	if (static_cast<std::int64_t>(m.size()) >= 2 * k)
		throw contract_error("case1_witness requires |M| < 2k");
	if (z >= g.vertex_count() || !m.covers(z))
		throw contract_error("case1_witness needs a matched vertex z");
	const auto t = static_cast<std::size_t>(case1_threshold(m, k));
	auto [near, far] = side_sizes(g, m, z);
	if (std::min(near, far) < t)
		throw contract_error("Case 1 does not hold at vertex " + std::to_string(z));

	SeedPartition seed;
	std::vector<bool> adjacent(g.vertex_count(), false);
	for (vertex w : g.neighbors(z)) {
		adjacent[w] = true;
		if (!m.covers(w) && seed.seed_x.size() < t)
			seed.seed_x.push_back(w);
	}
	seed.seed_y.push_back(z);
	for (vertex v = 0; v < g.vertex_count() && seed.seed_y.size() < t; ++v)
		if (!m.covers(v) && !adjacent[v])
			seed.seed_y.push_back(v);

	std::size_t seed_edges = 0;
	for (vertex u : seed.seed_x)
		for (vertex v : seed.seed_y)
			seed_edges += g.has_edge(u, v);
	if (seed_edges != t)
		throw std::logic_error("Case 1 seed has " + std::to_string(seed_edges) + " crossing edges, expected " +
		                       std::to_string(t));

	Bisection b = greedy_bisection(g, m.without_pair_of(z), seed);
	check_witness(g, b, k, "Case 1");
	return b;
}

std::vector<std::vector<vertex>> twin_classes(const Graph &g) {
	std::vector<vertex> order(g.vertex_count());
	std::iota(order.begin(), order.end(), vertex{0});
	std::stable_sort(order.begin(), order.end(), [&](vertex a, vertex b) {
		return std::ranges::lexicographical_compare(g.neighbors(a), g.neighbors(b));
	});
	std::vector<std::vector<vertex>> classes;
	for (std::size_t i = 0; i < order.size(); ++i) {
		if (i == 0 || !std::ranges::equal(g.neighbors(order[i - 1]), g.neighbors(order[i])))
			classes.emplace_back();
		classes.back().push_back(order[i]);
	}
	// stable_sort keeps members ascending inside each class.
	std::sort(classes.begin(), classes.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
	return classes;
}

std::size_t ReductionTrace::cut_gain() const {
	std::size_t gain = 0;
	for (const auto &step : steps)
		gain += step.j() * step.degree;
	return gain;
}

IdMap IdMap::identity(std::size_t n) {
	std::vector<vertex> ids(n);
	std::iota(ids.begin(), ids.end(), vertex{0});
	return from_kernel_ids(n, std::move(ids));
}

IdMap IdMap::from_kernel_ids(std::size_t original_n, std::vector<vertex> kernel_to_original) {
	IdMap map;
	map.original_vertex_count = original_n;
	map.original_to_kernel.assign(original_n, no_vertex);
	for (std::size_t i = 0; i < kernel_to_original.size(); ++i) {
		vertex v = kernel_to_original[i];
		if (v >= original_n || map.original_to_kernel[v] != no_vertex)
			throw input_error("id map is not injective into the original graph");
		map.original_to_kernel[v] = static_cast<vertex>(i);
	}
	map.kernel_to_original = std::move(kernel_to_original);
	return map;
}

TwinReduction reduce_large_twin_class(const Graph &g) {
	if (g.vertex_count() % 2 != 0)
		throw input_error("the twin rule needs an even vertex count");
	WorkingGraph work{g, IdMap::identity(g.vertex_count()).kernel_to_original};
	ReductionTrace trace;
	twin_rule_fixpoint(work, trace);
	IdMap map = id_map_of(g.vertex_count(), work);
	return {std::move(work.graph), std::move(trace), std::move(map)};
}

Bisection lift_witness(const Graph &original, const Bisection &kernel_witness, const ReductionTrace &trace,
                       const IdMap &id_map) {
	const std::size_t n = original.vertex_count();
	if (id_map.original_vertex_count != n)
		throw input_error("id map was built for a different original graph");
	const std::size_t kernel_n = kernel_witness.side_x().size() + kernel_witness.side_y().size();
	if (id_map.kernel_to_original.size() != kernel_n)
		throw input_error("id map does not match the kernel witness");

	std::vector<bool> present(n, false);
	std::vector<vertex> x, y;
	auto place = [&](const std::vector<vertex> &side, std::vector<vertex> &out) {
		for (vertex v : side) {
			if (v >= kernel_n)
				throw input_error("kernel witness names a vertex outside the kernel");
			vertex orig = id_map.kernel_to_original[v];
			present[orig] = true;
			out.push_back(orig);
		}
	};
	place(kernel_witness.side_x(), x);
	place(kernel_witness.side_y(), y);

	for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
		const ReductionStep &step = *it;
		if (step.deleted.empty() || step.deleted.size() % 2 != 0)
			throw input_error("trace step deletes an odd or empty set");
		if (step.degree != step.neighborhood.size())
			throw input_error("trace step degree disagrees with its neighborhood");
		for (vertex v : step.neighborhood)
			if (v >= n || !present[v])
				throw input_error("trace neighborhood vertex " + std::to_string(v) + " is not present");
		for (vertex v : step.deleted) {
			if (v >= n || present[v])
				throw input_error("trace deleted vertex " + std::to_string(v) + " is already present");
			present[v] = true;
		}
		for (vertex v : step.deleted) {
			std::vector<vertex> seen;
			for (vertex w : original.neighbors(v))
				if (present[w])
					seen.push_back(w);
			if (seen != step.neighborhood)
				throw input_error("deleted vertex " + std::to_string(v) + " does not have the recorded neighborhood");
		}
		const std::size_t j = step.j();
		x.insert(x.end(), step.deleted.begin(), step.deleted.begin() + static_cast<std::ptrdiff_t>(j));
		y.insert(y.end(), step.deleted.begin() + static_cast<std::ptrdiff_t>(j), step.deleted.end());
	}
	if (x.size() + y.size() != n)
		throw input_error("trace and kernel do not account for every original vertex");

	Bisection lifted = Bisection::from_sides(original, std::move(x), std::move(y));
	if (lifted.cut_size() != kernel_witness.cut_size() + trace.cut_gain())
		throw input_error("lifted cut does not equal kernel cut plus the trace gain");
	return lifted;
}

std::uint64_t kernel_vertex_bound(std::int64_t k) {
	auto uk = static_cast<std::uint64_t>(k);
	return 4 * uk * (uk + 1);
}

std::uint64_t kernel_edge_bound(std::int64_t k, std::size_t kernel_n) {
	auto uk = static_cast<std::uint64_t>(k);
	return 4 * uk * kernel_n + 8 * uk * uk;
}

KernelOutcome kernelize(const Graph &g, std::int64_t k) {
	if (k < 1 || k > max_parameter)
		throw input_error("kernelize needs 1 <= k <= 10^9, got " + std::to_string(k));
	if (g.vertex_count() % 2 != 0)
		throw input_error("kernelize needs an even vertex count; normalize first");

	WorkingGraph work{g, IdMap::identity(g.vertex_count()).kernel_to_original};
	ReductionTrace trace;
	for (;;) {
		const Graph &cur = work.graph;
		Matching m = maximal_matching(cur);

		if (static_cast<std::int64_t>(m.size()) >= 2 * k) {
			Bisection b = greedy_bisection(cur, m);
			Bisection lifted = lift_witness(g, b, trace, id_map_of(g.vertex_count(), work));
			check_witness(g, lifted, k, "big-matching");
			return EarlyYes{std::move(lifted), EarlyReason::big_matching, m.size()};
		}

		if (auto z = detect_case1(cur, m, k)) {
			Bisection b = case1_witness(cur, m, k, *z);
			Bisection lifted = lift_witness(g, b, trace, id_map_of(g.vertex_count(), work));
			check_witness(g, lifted, k, "Case 1");
			return EarlyYes{std::move(lifted), EarlyReason::case1, m.size()};
		}

		if (twin_rule_fixpoint(work, trace))
			continue;

		check_case2_structure(cur, m);
		if (cur.vertex_count() > kernel_vertex_bound(k))
			throw std::logic_error("kernel has " + std::to_string(cur.vertex_count()) + " vertices, above 4k(k+1)");
		if (cur.edge_count() > kernel_edge_bound(k, cur.vertex_count()))
			throw std::logic_error("kernel has " + std::to_string(cur.edge_count()) + " edges, above 4kn + 8k^2");
		std::size_t matching_size = m.size();
		IdMap map = id_map_of(g.vertex_count(), work);
		return Reduced{std::move(work.graph), k, std::move(trace), std::move(map), matching_size};
	}
}

std::string to_string(EarlyReason reason) {
	return reason == EarlyReason::big_matching ? "big_matching" : "case1";
}

std::string trace_to_json(const ReductionTrace &trace) {
	auto out = nlohmann::json::array();
	for (const auto &step : trace.steps)
		out.push_back({{"neighborhood", step.neighborhood},
		               {"deleted", step.deleted},
		               {"degree", step.degree},
		               {"n_before", step.n_before}});
	return out.dump();
}

ReductionTrace trace_from_json(const std::string &text) {
	ReductionTrace trace;
	try {
		auto doc = nlohmann::json::parse(text);
		if (!doc.is_array())
			throw input_error("trace JSON must be an array");
		for (const auto &item : doc) {
			ReductionStep step;
			item.at("neighborhood").get_to(step.neighborhood);
			item.at("deleted").get_to(step.deleted);
			item.at("degree").get_to(step.degree);
			item.at("n_before").get_to(step.n_before);
			trace.steps.push_back(std::move(step));
		}
	} catch (const nlohmann::json::exception &e) {
		throw input_error(std::string("malformed trace JSON: ") + e.what());
	}
	return trace;
}

} // namespace bisectk
