"""Graph substrate: simple undirected graphs on dense ids, truncated distances, twins.

Vertices are the integers ``0..n-1``. Every other module reads graphs through
this one; all values here are immutable after construction.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

# Hop count reported for pairs in different components. Larger than any real
# distance, so ``min(d, k + 1)`` maps it to ``k + 1`` without special casing.
UNREACHABLE = 1 << 30


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, self-loops, parse errors)."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Build with :func:`new_graph`; the constructor assumes normalized input.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v]) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks."""
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs hop counts by BFS; :data:`UNREACHABLE` across components."""
        n, adj = self.n, self.adj
        rows = []
        for src in range(n):
            row = [UNREACHABLE] * n
            row[src] = 0
            frontier = [src]
            d = 0
            while frontier:
                d += 1
                nxt = []
                for x in frontier:
                    for y in adj[x]:
                        if row[y] == UNREACHABLE:
                            row[y] = d
                            nxt.append(y)
                frontier = nxt
            rows.append(tuple(row))
        return tuple(rows)

    def digest(self) -> str:
        """SHA-256 of the canonical edge-list text; stable across runs."""
        return hashlib.sha256(format_edge_list(self).encode()).hexdigest()


def new_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph, deduplicating repeated edges.

    Raises :class:`GraphError` on a self-loop or an endpoint outside ``0..n-1``.
    """
    if n < 1:
        raise GraphError(f"vertex count must be at least 1, got {n}")
    es: set[tuple[int, int]] = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}: ({u}, {v})")
        es.add(_norm(u, v))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in es:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, frozenset(es), tuple(tuple(sorted(a)) for a in nbrs))


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Return ``g - e``. Connectivity of the result is the caller's concern."""
    u, v = int(e[0]), int(e[1])
    key = _norm(u, v)
    if key not in g.edges:
        raise GraphError(f"edge ({u}, {v}) is not in the graph")
    return new_graph(g.n, g.edges - {key})


def is_connected(g: Graph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.n


def non_bridge_edges(g: Graph) -> Iterator[tuple[int, int]]:
    """Edges whose deletion leaves ``g`` connected, in sorted order."""
    for e in g.sorted_edges():
        if is_connected(delete_edge(g, e)):
            yield e


@dataclass(frozen=True)
class TruncatedMetric:
    """Shortest-path distances read through ``d_k(u, v) = min(d(u, v), k + 1)``."""

    k: int
    dist: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.dist)

    def d(self, u: int, v: int) -> int:
        return self.dist[u][v]

    def d_k(self, u: int, v: int) -> int:
        d = self.dist[u][v]
        return d if d <= self.k else self.k + 1

    @cached_property
    def table(self) -> tuple[tuple[int, ...], ...]:
        """The full ``d_k`` matrix."""
        cap = self.k + 1
        return tuple(tuple(d if d < cap else cap for d in row) for row in self.dist)

    @property
    def diameter(self) -> int:
        """Largest hop count; :data:`UNREACHABLE` if the graph is disconnected."""
        return max(max(row) for row in self.dist)

    def ball(self, v: int) -> frozenset[int]:
        """Closed ``k``-neighborhood of ``v``."""
        return frozenset(u for u, d in enumerate(self.dist[v]) if d <= self.k)

    def ball_mask(self, v: int) -> int:
        k = self.k
        return sum(1 << u for u, d in enumerate(self.dist[v]) if d <= k)

    def dist_to_set(self, v: int, s: Iterable[int]) -> int:
        return min((self.dist[v][u] for u in s), default=UNREACHABLE)


def truncated_metric(g: Graph, k: int) -> TruncatedMetric:
    if k < 1:
        raise ValueError(f"truncation level must be >= 1, got {k}")
    return TruncatedMetric(k, g.distances)


def k_ball(g: Graph, v: int, k: int) -> frozenset[int]:
    return truncated_metric(g, k).ball(v)


def diameter(g: Graph) -> int:
    return max(max(row) for row in g.distances)


@dataclass(frozen=True)
class TwinPartition:
    """Maximal classes of pairwise twins, each sorted, ordered by smallest member."""

    classes: tuple[tuple[int, ...], ...]

    def class_of(self, v: int) -> tuple[int, ...]:
        for c in self.classes:
            if v in c:
                return c
        raise KeyError(v)

    def nontrivial(self) -> list[tuple[int, ...]]:
        return [c for c in self.classes if len(c) > 1]


def are_twins(g: Graph, x: int, y: int) -> bool:
    if x == y:
        return False
    return set(g.adj[x]) - {y} == set(g.adj[y]) - {x}


def twin_classes(g: Graph) -> TwinPartition:
    """Group vertices by open and by closed neighborhood, then merge the groupings.

    Equal open neighborhoods catch non-adjacent twins, equal closed ones catch
    adjacent twins.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    masks = g.adj_masks
    for key_of in (lambda v: masks[v], lambda v: masks[v] | (1 << v)):
        first: dict[int, int] = {}
        for v in range(g.n):
            key = key_of(v)
            if key in first:
                a, b = find(first[key]), find(v)
                if a != b:
                    parent[max(a, b)] = min(a, b)
            else:
                first[key] = v
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return TwinPartition(tuple(sorted(tuple(c) for c in groups.values())))


# Edge-list text format: header "n m", then m lines "u v"; '#' starts a comment.

def parse_edge_list(text: str) -> Graph:
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append([lineno, *line.split()])  # type: ignore[list-item]
    if not rows:
        raise GraphError("empty edge list: missing 'n m' header")
    header = rows[0]
    if len(header) != 3:
        raise GraphError(f"line {header[0]}: header must be 'n m'")
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise GraphError(f"line {header[0]}: header must be two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for row in body:
        if len(row) != 3:
            raise GraphError(f"line {row[0]}: expected 'u v'")
        try:
            edges.append((int(row[1]), int(row[2])))
        except ValueError:
            raise GraphError(f"line {row[0]}: endpoints must be integers") from None
    return new_graph(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
