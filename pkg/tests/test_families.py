import itertools

import pytest

from locdom import families as fam
from locdom.graph import delete_edge, is_connected
from locdom.solve import dim_k, gamma_k, gamma_L_k


def _girth(g):
    best = None
    for u, v in g.sorted_edges():
        h = delete_edge(g, (u, v))
        d = h.distances[u][v]
        if best is None or d + 1 < best:
            best = d + 1
    return best


def test_petersen_shape():
    g = fam.petersen()
    assert (g.n, g.m) == (10, 15)
    assert all(g.degree(v) == 3 for v in g.vertices())
    assert _girth(g) == 5


def test_remark_tree_shape():
    g = fam.remark_tree(1, 3, 3)
    assert g.n == 1 + 2 * 4 + 3
    dist = g.distances[0]
    assert sorted(dist[v] for v in g.vertices() if g.degree(v) == 1) == [3, 4, 4]


def test_multipartite_star_and_join():
    assert fam.is_star_graph(fam.complete_multipartite([1, 5]))
    # K_1 + (K_1 u K_2): the K_2 edge plus 3 join edges
    g = fam.join(fam.complete(1), fam.disjoint_union(fam.complete(1), fam.complete(2)))
    assert (g.n, g.m) == (4, 4)
    assert fam.complement(fam.complete(4)).m == 0
    assert fam.complement(fam.path(4)).m == 3


def test_spider_and_caterpillar():
    s = fam.spider(4, 2)
    assert s.n == 9 and s.degree(0) == 4
    c = fam.caterpillar([2, 0, 3])
    assert c.n == 8 and c.m == 7 and is_connected(c)


def test_fig2_shape():
    g, e = fam.fig2(3)
    assert g.n == 17 and e == (0, 1)
    assert is_connected(delete_edge(g, e))


@pytest.mark.parametrize(
    "call",
    [lambda: fam.remark_tree(1, 2, 1), lambda: fam.fig2(2), lambda: fam.spider(2, 1), lambda: fam.cycle(2)],
)
def test_range_errors(call):
    with pytest.raises(fam.FamilyError):
        call()


def test_prufer_examples():
    assert fam.prufer_tree([]).sorted_edges() == [(0, 1)]
    assert fam.is_star_graph(fam.prufer_tree([0, 0]))
    assert fam.prufer_tree([0, 0]).degree(0) == 3
    outs = {fam.prufer_tree(seq).edges for seq in fam.prufer_sequences(5)}
    assert len(outs) == 125
    with pytest.raises(fam.FamilyError):
        fam.prufer_tree([5, 0])


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_pathcycle_small_regimes(k):
    assert all(fam.dim_k_path(n, k) == 1 for n in range(2, k + 3))
    assert all(fam.dim_k_cycle(n, k) == 2 for n in range(3, 3 * k + 4))
    assert fam.gammaL_k_path(k + 2, k) == 2
    assert fam.gammaL_k_cycle(3 * k + 3, k) == 3


def test_pathcycle_substitution():
    assert fam.dim_k_path(10, 1) == 4
    assert fam.gammaL_k_cycle(5, 1) == 2


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pathcycle_formulas_match_solver(k):
    for n in range(2, 17):
        g = fam.path(n)
        assert (dim_k(g, k).value, gamma_L_k(g, k).value) == (fam.dim_k_path(n, k), fam.gammaL_k_path(n, k))
        if n >= 3:
            g = fam.cycle(n)
            assert (dim_k(g, k).value, gamma_L_k(g, k).value) == (fam.dim_k_cycle(n, k), fam.gammaL_k_cycle(n, k))


def test_multipartite_formulas():
    assert fam.dim_multipartite([2, 3]) == 3
    assert fam.gammaL_k_multipartite([2, 3], 1) == 3
    assert fam.gammaL_k_multipartite([1, 6], 1) == 6
    assert fam.gammaL_k_multipartite([1, 6], 2) == 5
    assert fam.gammaL_k_multipartite([1, 1, 1], 3) == 2
    with pytest.raises(fam.FamilyError):
        fam.dim_multipartite([4])


@pytest.mark.parametrize("parts", [(2, 3), (1, 4), (1, 1, 2), (2, 2, 2), (1, 1, 1, 1), (3, 3)])
@pytest.mark.parametrize("k", [1, 2])
def test_multipartite_matches_solver(parts, k):
    g = fam.complete_multipartite(parts)
    assert dim_k(g, k).value == fam.dim_k_multipartite(parts, k)
    assert gamma_L_k(g, k).value == fam.gammaL_k_multipartite(parts, k)


def test_max_order():
    assert fam.max_order_dim(2, 1) == 6
    assert fam.max_order_dim(2, 2) == 11
    for beta, k in itertools.product(range(1, 6), range(1, 7)):
        assert fam.max_order_gammaL(beta, k) == fam.max_order_dim(beta, k) - 1


@pytest.mark.parametrize("x, alpha", [(1, 3), (1, 4), (2, 3)])
@pytest.mark.parametrize("k", [1, 2])
def test_remark_family_values(x, alpha, k):
    g = fam.remark_tree(x, alpha, k)
    assert gamma_k(g, k).value == x * alpha
    assert dim_k(g, k).value == x * alpha - 1


@pytest.mark.parametrize("alpha", [3, 4, 5])
@pytest.mark.parametrize("k", [1, 2])
def test_spider_values(alpha, k):
    g = fam.spider(alpha, k)
    assert gamma_k(g, k).value == 1
    assert dim_k(g, k).value == alpha - 1


@pytest.mark.parametrize("a", [3, 4])
def test_fig2_values(a):
    g, e = fam.fig2(a)
    assert dim_k(g, 2).value == 2 * a
    assert dim_k(delete_edge(g, e), 2).value == a + 1


def test_random_corpus_is_seeded_and_connected():
    a = fam.random_corpus(20, 9, seed=3)
    b = fam.random_corpus(20, 9, seed=3)
    assert [g.edges for g in a] == [g.edges for g in b]
    assert all(is_connected(g) and 3 <= g.n <= 9 for g in a)


def test_generate_registry():
    assert fam.generate("multipartite", 2, 3).m == 6
    with pytest.raises(fam.FamilyError, match="unknown family"):
        fam.generate("hypercube", 3)
    with pytest.raises(fam.FamilyError, match="usage"):
        fam.generate("path")
