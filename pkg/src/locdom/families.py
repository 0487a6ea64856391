"""Named graphs, extremal constructions, and closed-form parameter values.

Vertex labeling, per generator:

* ``path(n)``: ``0 - 1 - ... - n-1``.
* ``cycle(n)``: ``0 - 1 - ... - n-1 - 0``.
* ``complete_multipartite(parts)``: parts take consecutive id blocks in order.
* ``star(n)``: center ``0``, leaves ``1..n-1`` (this is ``K_{1,n-1}``).
* ``join(a, b)`` / ``disjoint_union(a, b)``: ``a`` keeps its ids, ``b`` is shifted by ``a.n``.
* ``spider(alpha, leg)``: center ``0``; leg ``i`` (0-based) holds ids
  ``1 + i*leg .. (i+1)*leg``, listed outward from the center.
* ``remark_tree(x, alpha, k)``: spine ``v_1..v_x`` is ``0..x-1``; then for each
  spine vertex in turn its ``alpha`` legs, outward from the spine: ``alpha-1``
  legs of length ``k+1`` followed by one leg of length ``k``.
* ``fig2(a)``: ``u = 0``, ``v = 1`` (the designated edge is ``(0, 1)``); gadget
  ``i`` (0-based) is ``p_i, t_i, x_i, y_i, z_i = 2+5i .. 6+5i`` with the path
  ``u - p_i - t_i - v``, the 4-cycle ``z_i - x_i - p_i - y_i - z_i`` and the edge ``z_i - u``.
* ``petersen()``: ``u_1..u_5 = 0..4`` on the outer 5-cycle, ``w_1..w_5 = 5..9``
  on the inner cycle ``w_1 w_3 w_5 w_2 w_4``, spokes ``u_i w_i``.
* ``caterpillar(leaf_counts)``: spine ``0..len-1``, then the leaves of spine
  vertex 0, of spine vertex 1, and so on.
"""

from __future__ import annotations

import heapq
import itertools
import math
import random
from typing import Callable, Iterator, Sequence

from .graph import Graph, is_connected, new_graph


class FamilyError(ValueError):
    """Generator or oracle parameters outside their valid range."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


# Generators


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return new_graph(n, itertools.combinations(range(n), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    _require(len(parts) >= 1 and all(p >= 1 for p in parts), f"parts must be positive, got {list(parts)}")
    blocks = []
    start = 0
    for p in parts:
        blocks.append(range(start, start + p))
        start += p
    edges = [(u, v) for a, b in itertools.combinations(blocks, 2) for u in a for v in b]
    return new_graph(start, edges)


def star(n: int) -> Graph:
    """``K_{1,n-1}`` on ``n`` vertices."""
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return new_graph(n, [(0, i) for i in range(1, n)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return new_graph(a.n + b.n, [*a.edges, *((u + a.n, v + a.n) for u, v in b.edges)])


def join(a: Graph, b: Graph) -> Graph:
    cross = [(u, a.n + v) for u in range(a.n) for v in range(b.n)]
    return new_graph(a.n + b.n, [*disjoint_union(a, b).edges, *cross])


def complement(a: Graph) -> Graph:
    return new_graph(a.n, [e for e in itertools.combinations(range(a.n), 2) if e not in a.edges])


def _attach_leg(edges: list, anchor: int, start: int, length: int) -> int:
    """Hang a path of ``length`` new vertices off ``anchor``; return the next free id."""
    prev = anchor
    for vid in range(start, start + length):
        edges.append((prev, vid))
        prev = vid
    return start + length


def spider(alpha: int, leg: int) -> Graph:
    """``K_{1,alpha}`` with every edge subdivided into a path of ``leg`` edges."""
    _require(alpha >= 3, f"spider needs alpha >= 3, got {alpha}")
    _require(leg >= 1, f"spider legs need length >= 1, got {leg}")
    edges: list = []
    nxt = 1
    for _ in range(alpha):
        nxt = _attach_leg(edges, 0, nxt, leg)
    return new_graph(nxt, edges)


def remark_tree(x: int, alpha: int, k: int) -> Graph:
    """Tree with ``gamma_k = x*alpha = dim_k + 1`` (the construction drawn for ``k = 3``)."""
    _require(x >= 1, f"remark_tree needs x >= 1, got {x}")
    _require(alpha >= 3, f"remark_tree needs alpha >= 3, got {alpha}")
    _require(k >= 1, f"remark_tree needs k >= 1, got {k}")
    edges: list = [(i, i + 1) for i in range(x - 1)]
    nxt = x
    for i in range(x):
        for j in range(alpha):
            nxt = _attach_leg(edges, i, nxt, k + 1 if j < alpha - 1 else k)
    return new_graph(nxt, edges)


def fig2(a: int) -> tuple[Graph, tuple[int, int]]:
    """Graph whose distance-k dimension drops from ``2a`` to ``a+1`` when edge ``(0, 1)`` goes."""
    _require(a >= 3, f"fig2 needs a >= 3, got {a}")
    u, v = 0, 1
    edges = [(u, v)]
    for i in range(a):
        p, t, x, y, z = range(2 + 5 * i, 7 + 5 * i)
        edges += [(u, p), (p, t), (t, v)]
        edges += [(z, x), (x, p), (p, y), (y, z), (z, u)]
    return new_graph(2 + 5 * a, edges), (u, v)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    ring = [5, 7, 9, 6, 8]  # w_1 w_3 w_5 w_2 w_4
    inner = [(ring[i], ring[(i + 1) % 5]) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return new_graph(10, outer + inner + spokes)


def caterpillar(leaf_counts: Sequence[int]) -> Graph:
    """Path spine with ``leaf_counts[i]`` pendant leaves on spine vertex ``i``."""
    _require(len(leaf_counts) >= 1, "caterpillar needs a nonempty spine")
    _require(all(c >= 0 for c in leaf_counts), f"leaf counts must be >= 0, got {list(leaf_counts)}")
    spine = len(leaf_counts)
    edges: list = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return new_graph(nxt, edges)


def prufer_tree(seq: Sequence[int], n: int | None = None) -> Graph:
    """Decode a Prüfer sequence into the labeled tree on ``len(seq) + 2`` vertices."""
    n = len(seq) + 2 if n is None else n
    _require(len(seq) == n - 2, f"a tree on {n} vertices needs a sequence of length {n - 2}")
    for s in seq:
        _require(0 <= s < n, f"Prüfer entry {s} outside 0..{n - 1}")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return new_graph(n, edges)


def prufer_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """All ``n**(n-2)`` Prüfer sequences for labeled trees on ``n >= 2`` vertices."""
    return itertools.product(range(n), repeat=n - 2)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Erdős–Rényi ``G(n, p)`` redrawn until connected."""
    while True:
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
        g = new_graph(n, edges)
        if is_connected(g):
            return g


def random_corpus(count: int, nmax: int, seed: int, nmin: int = 3) -> list[Graph]:
    """Seeded list of connected graphs with ``nmin <= n <= nmax``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(nmin, nmax)
        p = rng.uniform(0.25, 0.75)
        out.append(random_connected_graph(rng, n, p))
    return out


# Recognizers used by the characterization checks.


def is_path_graph(g: Graph) -> bool:
    if g.m != g.n - 1 or not is_connected(g):
        return False
    return all(g.degree(v) <= 2 for v in g.vertices())


def is_complete_graph(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_star_graph(g: Graph) -> bool:
    """``K_{1,n-1}`` for ``n >= 2`` (so ``K_2`` counts)."""
    if g.n < 2 or g.m != g.n - 1:
        return False
    return max(g.degree(v) for v in g.vertices()) == g.n - 1


# Closed-form values


def _pathcycle_large(n: int, k: int) -> int:
    period = 3 * k + 2
    r = n % period
    if k + 3 <= r <= math.ceil((3 * k + 5) / 2) - 1:
        return (2 * n + 4 * k - 1) // period
    return (2 * n + 3 * k - 1) // period


def dim_k_path(n: int, k: int) -> int:
    _require(n >= 2, f"path order must be >= 2, got {n}")
    _require(k >= 1, f"k must be >= 1, got {k}")
    if n <= k + 2:
        return 1
    if n <= 3 * k + 3:
        return 2
    return _pathcycle_large(n, k)


def dim_k_cycle(n: int, k: int) -> int:
    _require(n >= 3, f"cycle order must be >= 3, got {n}")
    _require(k >= 1, f"k must be >= 1, got {k}")
    if n <= 3 * k + 3:
        return 2
    return _pathcycle_large(n, k)


def gammaL_k_path(n: int, k: int) -> int:
    period = 3 * k + 2
    r = n % period
    return dim_k_path(n, k) + (r == 1 or r == k + 2)


def gammaL_k_cycle(n: int, k: int) -> int:
    period = 3 * k + 2
    r = n % period
    return dim_k_cycle(n, k) + (r == 1 or (n >= 3 * k + 4 and r == k + 2))


def _check_parts(parts: Sequence[int]) -> None:
    _require(len(parts) >= 2, f"need at least 2 parts, got {len(parts)}")
    _require(all(p >= 1 for p in parts), f"parts must be positive, got {list(parts)}")
    _require(sum(parts) >= 3, f"total order must be >= 3, got {sum(parts)}")


def dim_multipartite(parts: Sequence[int]) -> int:
    """Metric dimension of a complete multipartite graph."""
    _check_parts(parts)
    n, m = sum(parts), len(parts)
    singles = sum(1 for p in parts if p == 1)
    return n - m if singles == 0 else n - m + singles - 1


def dim_k_multipartite(parts: Sequence[int], k: int) -> int:
    # Diameter is at most 2, so d_k = d for every k >= 1.
    _require(k >= 1, f"k must be >= 1, got {k}")
    return dim_multipartite(parts)


def gammaL_k_multipartite(parts: Sequence[int], k: int) -> int:
    _require(k >= 1, f"k must be >= 1, got {k}")
    d = dim_multipartite(parts)
    is_star = len(parts) == 2 and min(parts) == 1
    return d + 1 if k == 1 and is_star else d


def max_order_dim(beta: int, k: int) -> int:
    """Largest order of a graph with distance-k dimension ``beta``."""
    _require(beta >= 1 and k >= 1, f"beta and k must be >= 1, got {beta}, {k}")
    base = (2 * (k + 1)) // 3 + 1
    terms = -(-(k + 1) // 3)
    return base**beta + beta * sum((2 * i - 1) ** (beta - 1) for i in range(1, terms + 1))


def max_order_gammaL(beta: int, k: int) -> int:
    """Largest order of a graph with distance-k location-domination number ``beta``."""
    return max_order_dim(beta, k) - 1


# Registry for the CLI: kind -> (builder over int args, usage, parameter ranges).

def _fig2_graph(a: int) -> Graph:
    return fig2(a)[0]


def _multipartite(*parts: int) -> Graph:
    return complete_multipartite(parts)


def _caterpillar(*counts: int) -> Graph:
    return caterpillar(counts)


def _prufer(*seq: int) -> Graph:
    return prufer_tree(seq)


KINDS: dict[str, tuple[Callable[..., Graph], str, str]] = {
    "path": (path, "path N", "N >= 1"),
    "cycle": (cycle, "cycle N", "N >= 3"),
    "complete": (complete, "complete N", "N >= 1"),
    "multipartite": (_multipartite, "multipartite A1 A2 ...", "each Ai >= 1"),
    "star": (star, "star N", "N >= 2 (K_{1,N-1})"),
    "spider": (spider, "spider ALPHA LEG", "ALPHA >= 3, LEG >= 1"),
    "remark_tree": (remark_tree, "remark_tree X ALPHA K", "X >= 1, ALPHA >= 3, K >= 1"),
    "fig2": (_fig2_graph, "fig2 A", "A >= 3; designated edge is 0 1"),
    "petersen": (petersen, "petersen", "no parameters"),
    "caterpillar": (_caterpillar, "caterpillar C1 C2 ...", "spine leaf counts, each >= 0"),
    "prufer": (_prufer, "prufer S1 ... S(n-2)", "entries in 0..n-1; empty gives K_2"),
}


def generate(kind: str, *params: int) -> Graph:
    if kind not in KINDS:
        raise FamilyError(f"unknown family {kind!r}; known: {', '.join(sorted(KINDS))}")
    builder = KINDS[kind][0]
    try:
        return builder(*params)
    except TypeError:
        raise FamilyError(f"bad parameters for {kind}; usage: {KINDS[kind][1]}") from None
