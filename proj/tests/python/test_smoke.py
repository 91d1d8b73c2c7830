import pytest

import bisectk


def test_graph_roundtrip(tmp_path):
    g = bisectk.Graph(4, [(0, 1), (1, 2), (2, 3), (1, 0)])
    assert (g.n, g.m) == (4, 3)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1) == [0, 2]
    path = tmp_path / "p4.el"
    bisectk.write_edge_list(str(path), g)
    assert bisectk.read_edge_list(str(path)) == g


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        bisectk.Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        bisectk.parse_edge_list("2 1\n0 0\n")


def test_greedy_meets_matching_guarantee():
    g = bisectk.gen_gnp(20, 0.3, 42)
    m = bisectk.maximal_matching(g)
    assert m.is_maximal_in(g)
    b = bisectk.greedy_bisection(g, m)
    assert b.cut == bisectk.cut_size(g, b)
    assert b.cut >= bisectk.matching_guarantee(g.m, len(m))
    assert len(b.x) == len(b.y) == 10


def test_star_exact_value():
    for m in (1, 3, 5, 7):
        assert bisectk.max_bisection_exact(bisectk.gen_star(m)).size == bisectk.half_ceil(m)
        assert bisectk.pm_lower_bound(bisectk.gen_star(m)) == bisectk.half_ceil(m)


def test_decide_matches_exact():
    for seed in range(1, 6):
        g = bisectk.gen_gnp(10, 0.4, seed)
        best = bisectk.max_bisection_exact(g).size
        for k in (1, 2, 3):
            d = bisectk.decide_atlb(g, k)
            assert d.answer == (best >= bisectk.half_ceil(g.m) + k)
            if d.answer:
                assert d.witness.cut >= d.bound


def test_kernelize_outcomes():
    early = bisectk.kernelize(bisectk.gen_gnp(30, 0.5, 1), 2)
    assert early["outcome"] == "early_yes"
    reduced = bisectk.kernelize(bisectk.gen_star(5), 1)
    assert reduced["outcome"] == "reduced"
    assert reduced["trace"][0]["deleted"] == [2, 3, 4, 5]
    assert reduced["kernel"].n <= bisectk.kernel_vertex_bound(1)


def test_oracle_limit():
    with pytest.raises(bisectk.OracleLimitError):
        bisectk.max_bisection_exact(bisectk.gen_edgeless(30))
