"""Structure of trees (terminal vertices, exterior major vertices) and the tree bounds.

A leaf is terminal for a major vertex (degree >= 3) when that major vertex is
strictly closer to it than every other one; a leaf at equal distance from two
nearest major vertices is left unassigned but still counts as a leaf.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .certify import LandmarkSet
from .families import prufer_sequences, prufer_tree
from .graph import Graph, is_connected
from .solve import gamma_L_k


class NotATreeError(ValueError):
    pass


@dataclass(frozen=True)
class TreeProfile:
    n: int
    leaves: frozenset[int]
    support_vertices: frozenset[int]
    major_vertices: frozenset[int]
    terminal_map: dict[int, tuple[int, ...]] = field(hash=False)
    exterior_major: frozenset[int]
    exterior_deg2: frozenset[int]
    interior_deg2: frozenset[int]

    @property
    def sigma(self) -> int:
        return len(self.leaves)

    @property
    def ex(self) -> int:
        return len(self.exterior_major)

    def ter(self, v: int) -> int:
        return len(self.terminal_map.get(v, ()))


def _require_tree(t: Graph) -> None:
    if t.n < 2 or t.m != t.n - 1 or not is_connected(t):
        raise NotATreeError(f"expected a tree on n >= 2 vertices (n={t.n}, m={t.m})")


def tree_profile(t: Graph) -> TreeProfile:
    _require_tree(t)
    dist = t.distances
    deg = [t.degree(v) for v in range(t.n)]
    leaves = [v for v in range(t.n) if deg[v] == 1]
    major = [v for v in range(t.n) if deg[v] >= 3]
    support = {t.adj[v][0] for v in leaves}

    terminals: dict[int, list[int]] = {v: [] for v in major}
    on_legs: set[int] = set()
    for leaf in leaves:
        if not major:
            break
        row = dist[leaf]
        best = min(row[w] for w in major)
        nearest = [w for w in major if row[w] == best]
        if len(nearest) != 1:
            continue
        v = nearest[0]
        terminals[v].append(leaf)
        on_legs.update(w for w in range(t.n) if row[w] + dist[w][v] == best and w not in (leaf, v))

    deg2 = {v for v in range(t.n) if deg[v] == 2}
    return TreeProfile(
        n=t.n,
        leaves=frozenset(leaves),
        support_vertices=frozenset(support),
        major_vertices=frozenset(major),
        terminal_map={v: tuple(ls) for v, ls in terminals.items()},
        exterior_major=frozenset(v for v, ls in terminals.items() if ls),
        exterior_deg2=frozenset(deg2 & on_legs),
        interior_deg2=frozenset(deg2 - on_legs),
    )


def tree_upper_witness(t: Graph, profile: TreeProfile | None = None) -> LandmarkSet:
    """All vertices but the smallest terminal leaf of each exterior major vertex.

    The result is distance-k locating-dominating for every ``k`` and has size
    ``n - ex(T)``.
    """
    profile = profile or tree_profile(t)
    if profile.ex == 0:
        raise ValueError("tree has no exterior major vertex; the general n-1 bound applies instead")
    dropped = {min(profile.terminal_map[v]) for v in profile.exterior_major}
    return LandmarkSet(tuple(v for v in range(t.n) if v not in dropped))


@dataclass(frozen=True)
class EqualityVerdict:
    k: int
    lhs: int  # solved gamma_L^k(T)
    rhs: int  # n - ex(T)
    predicted_equal: bool
    observed_equal: bool

    @property
    def agrees(self) -> bool:
        return self.predicted_equal == self.observed_equal


def check_equality_characterization(t: Graph, k: int, profile: TreeProfile | None = None) -> EqualityVerdict:
    """Compare ``gamma_L^k(T) = n - ex(T)`` with ``k = 1, ex >= 1, ex + sigma = n``."""
    profile = profile or tree_profile(t)
    lhs = gamma_L_k(t, k).value
    rhs = t.n - profile.ex
    predicted = k == 1 and profile.ex >= 1 and profile.ex + profile.sigma == t.n
    return EqualityVerdict(k, lhs, rhs, predicted, lhs == rhs)


def _sweep_one(n: int, seq: tuple[int, ...], ks: Iterable[int]) -> list[dict]:
    """Return one record per violated property (empty when all hold)."""
    t = prufer_tree(seq, n)
    prof = tree_profile(t)
    bad = []
    for k in ks:
        v = check_equality_characterization(t, k, prof)
        if v.lhs > n - 1 or (prof.ex >= 1 and v.lhs > v.rhs):
            bad.append({"n": n, "prufer": list(seq), "k": k, "property": "upper_bound", "gammaL": v.lhs, "n_minus_ex": v.rhs})
        if not v.agrees:
            bad.append(
                {
                    "n": n,
                    "prufer": list(seq),
                    "k": k,
                    "property": "equality_characterization",
                    "gammaL": v.lhs,
                    "n_minus_ex": v.rhs,
                    "predicted_equal": v.predicted_equal,
                }
            )
    return bad


def tree_sweep(max_n: int, ks: Iterable[int] = (1, 2), min_n: int = 2) -> dict:
    """Check the tree bound and its equality case on every labeled tree up to ``max_n``.

    Trees are enumerated by Prüfer sequence with no isomorphism reduction.
    """
    ks = tuple(ks)
    per_n = []
    counterexamples: list[dict] = []
    for n in range(max(2, min_n), max_n + 1):
        trees = 0
        equal = {k: 0 for k in ks}
        for seq in prufer_sequences(n):
            trees += 1
            t = prufer_tree(seq, n)
            prof = tree_profile(t)
            for k in ks:
                v = check_equality_characterization(t, k, prof)
                equal[k] += v.observed_equal
                if v.lhs > n - 1 or (prof.ex >= 1 and v.lhs > v.rhs) or not v.agrees:
                    counterexamples.extend(_sweep_one(n, seq, (k,)))
        per_n.append({"n": n, "trees": trees, "equality_cases": {str(k): equal[k] for k in ks}})
    return {
        "max_n": max_n,
        "levels": list(ks),
        "trees_checked": sum(r["trees"] for r in per_n),
        "per_n": per_n,
        "counterexamples": counterexamples,
    }
