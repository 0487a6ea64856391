import hypothesis.strategies as st
import pytest

from locdom.graph import new_graph


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    """Random spanning tree (each vertex hooks to an earlier one) plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=2 * n, unique=True)))
    return new_graph(n, edges)


@pytest.fixture
def p4():
    return new_graph(4, [(0, 1), (1, 2), (2, 3)])
