import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locdom import families as fam
from locdom.certify import is_st_locating_dominating
from locdom.graph import are_twins, new_graph
from locdom.solve import gamma_L_k
from locdom.trees import (
    NotATreeError,
    check_equality_characterization,
    tree_profile,
    tree_sweep,
    tree_upper_witness,
)

trees_up_to_8 = st.integers(2, 8).flatmap(
    lambda n: st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2).map(lambda s: fam.prufer_tree(s, n))
)


@pytest.mark.parametrize("n", [2, 3, 6])
def test_path_profile(n):
    p = tree_profile(fam.path(n))
    assert (p.sigma, p.ex, len(p.major_vertices)) == (2, 0, 0)


def test_spider_profile():
    p = tree_profile(fam.spider(3, 2))
    assert (p.sigma, p.ex, p.ter(0)) == (3, 1, 3)
    assert p.exterior_deg2 == {1, 3, 5}
    assert not p.interior_deg2


def test_remark_tree_profile():
    p = tree_profile(fam.remark_tree(2, 3, 2))
    assert p.ex == 2
    assert p.ter(0) == p.ter(1) == 3


def test_interior_degree_two():
    # two stars K_{1,3} joined through a path 0 - 6 - 1: vertex 6 is interior
    t = fam.caterpillar([2, 2])
    edges = [(0, 6), (6, 1)] + [e for e in t.edges if e != (0, 1)]
    g = new_graph(7, edges)
    p = tree_profile(g)
    assert p.interior_deg2 == {6}
    assert p.ex == 2


@settings(max_examples=100, deadline=None)
@given(trees_up_to_8)
def test_every_leaf_assigned_when_a_major_vertex_exists(t):
    # walking inward from a leaf reaches one major vertex strictly first
    p = tree_profile(t)
    if p.major_vertices:
        assert sum(len(ls) for ls in p.terminal_map.values()) == p.sigma


def test_not_a_tree():
    with pytest.raises(NotATreeError):
        tree_profile(fam.cycle(4))


def test_upper_witness_examples():
    w = tree_upper_witness(fam.star(4))
    assert len(w) == 3
    g = fam.remark_tree(1, 3, 1)
    w = tree_upper_witness(g)
    assert len(w) == 5 and gamma_L_k(g, 1).value <= 5
    with pytest.raises(ValueError):
        tree_upper_witness(fam.path(5))


def test_equality_examples():
    cat = fam.caterpillar([3, 2, 4])
    v1 = check_equality_characterization(cat, 1)
    assert v1.predicted_equal and v1.observed_equal
    v2 = check_equality_characterization(cat, 2)
    assert not v2.predicted_equal and not v2.observed_equal
    p4 = check_equality_characterization(fam.path(4), 1)
    assert (p4.lhs, p4.rhs, p4.predicted_equal, p4.observed_equal) == (2, 4, False, False)


@settings(max_examples=150, deadline=None)
@given(trees_up_to_8, st.integers(1, 3))
def test_tree_properties(t, k):
    p = tree_profile(t)
    assert p.ex + p.sigma <= t.n
    assert not p.exterior_deg2 & p.interior_deg2
    assert p.exterior_deg2 | p.interior_deg2 == {v for v in range(t.n) if t.degree(v) == 2}
    if p.ex >= 1:
        w = tree_upper_witness(t, p)
        assert len(w) == t.n - p.ex
        assert is_st_locating_dominating(t, w, k, k)
    verdict = check_equality_characterization(t, k, p)
    assert verdict.agrees
    for a in p.leaves:
        for b in p.leaves:
            if a < b and t.adj[a] == t.adj[b]:
                assert are_twins(t, a, b)


def test_sweep_small():
    summary = tree_sweep(6)
    assert summary["trees_checked"] == sum(n ** (n - 2) for n in range(2, 7))
    assert summary["counterexamples"] == []
