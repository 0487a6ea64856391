"""Exact minimum distance-k dominating, resolving and locating-dominating sets.

All three parameters are minimum hitting sets over vertex bitmasks:

* a set is distance-``t`` dominating iff it meets every closed ball ``N^t[v]``;
* it is distance-``s`` resolving iff it meets, for every pair ``x != y``, the
  separator ``{w : d_s(x, w) != d_s(y, w)}`` (which contains ``x`` and ``y``).

The optimized solver runs iterative deepening on the set size, starting from a
lower bound, with a depth-first search that branches on the members of the
smallest unmet requirement and prunes with a disjoint-requirement packing.
:func:`brute_force_min` enumerates subsets through the predicates in
:mod:`locdom.certify` and shares no code with that search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .certify import (
    LandmarkSet,
    is_distance_k_dominating,
    is_distance_k_resolving,
    is_st_locating_dominating,
)
from .graph import Graph, is_connected, truncated_metric, twin_classes

ORACLE_CAP = 20

PARAMETERS = ("gamma", "dim", "gammaL")


class SolverError(ValueError):
    """Input outside the solver's preconditions (disconnected, too large, bad levels)."""


@dataclass(frozen=True)
class SolveResult:
    parameter: str
    levels: tuple[int, ...]
    value: int
    witness: LandmarkSet
    lower_bound_used: int
    nodes_explored: int

    def as_dict(self) -> dict:
        return {
            "parameter": self.parameter,
            "levels": list(self.levels),
            "value": self.value,
            "witness": self.witness.sorted(),
            "lower_bound_used": self.lower_bound_used,
            "nodes_explored": self.nodes_explored,
        }


def _levels(parameter: str, s: int | None, t: int | None) -> tuple[int | None, int | None]:
    """Map a parameter name and levels to (resolving level, dominating level)."""
    if parameter == "gamma":
        return None, t
    if parameter == "dim":
        return s, None
    if parameter == "gammaL":
        return s, t
    raise SolverError(f"unknown parameter {parameter!r}; expected one of {PARAMETERS}")


def _check_levels(*levels):
    for lv in levels:
        if lv is None or lv < 1:
            raise SolverError(f"levels must be positive integers, got {lv}")


def _ball_masks(g: Graph, t: int) -> list[int]:
    return [truncated_metric(g, t).ball_mask(v) for v in range(g.n)]


def _separator_masks(g: Graph, s: int) -> list[int]:
    table = truncated_metric(g, s).table
    n = g.n
    out = []
    for x in range(n):
        rx = table[x]
        for y in range(x + 1, n):
            ry = table[y]
            out.append(sum(1 << w for w in range(n) if rx[w] != ry[w]))
    return out


def _minimal_family(masks: list[int]) -> list[int]:
    """Drop duplicates and supersets; hitting the survivors hits everything."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if all(m & k != k for k in kept):
            kept.append(m)
    return kept


def _packing(sets: list[int]) -> int:
    """Greedy count of pairwise-disjoint sets (input sorted small-first)."""
    used = 0
    count = 0
    for m in sets:
        if not m & used:
            used |= m
            count += 1
    return count


def lower_bound_twins(g: Graph, k: int | None = None) -> int:
    """Every resolving set misses at most one vertex per twin class."""
    return sum(len(c) - 1 for c in twin_classes(g).classes)


def lower_bound_packing(g: Graph, k: int) -> int:
    """Greedy family of pairwise-disjoint closed ``k``-balls, smallest balls first."""
    balls = sorted(((b.bit_count(), v, b) for v, b in enumerate(_ball_masks(g, k))))
    used = 0
    count = 0
    for _, _, b in balls:
        if not b & used:
            used |= b
            count += 1
    return count


def greedy_upper_bound(g: Graph, parameter: str, s: int | None = None, t: int | None = None) -> LandmarkSet:
    """A feasible set built by repeatedly taking the vertex meeting the most unmet requirements.

    For domination that is maximum marginal coverage; for resolution it is the
    vertex splitting the most still-confused pairs. Ties go to the smaller id.
    """
    rs, ts = _levels(parameter, s, t)
    sets = _requirement_masks(g, rs, ts)
    chosen: list[int] = []
    while sets:
        best = max(range(g.n), key=lambda w: (sum(m >> w & 1 for m in sets), -w))
        chosen.append(best)
        sets = [m for m in sets if not m >> best & 1]
    return LandmarkSet(tuple(chosen))


def _requirement_masks(g: Graph, rs: int | None, ts: int | None) -> list[int]:
    masks: list[int] = []
    if rs is not None:
        masks += _separator_masks(g, rs)
    if ts is not None:
        masks += _ball_masks(g, ts)
    return masks


class _Search:
    """Depth-limited hitting-set search with a fixed branching order."""

    def __init__(self, sets: list[int], rank: list[int]):
        self.sets = sets
        self.rank = rank  # rank[v]: position of v in the branching order
        self.nodes = 0

    def run(self, chosen: int, budget: int) -> int | None:
        return self._dfs(chosen, 0, budget)

    def _dfs(self, chosen: int, excluded: int, budget: int) -> int | None:
        self.nodes += 1
        open_sets = []
        for m in self.sets:
            if not m & chosen:
                r = m & ~excluded
                if not r:
                    return None
                open_sets.append(r)
        if not open_sets:
            return chosen
        if budget == 0:
            return None
        open_sets.sort(key=int.bit_count)
        if _packing(open_sets) > budget:
            return None
        pick = open_sets[0]
        cands = []
        while pick:
            low = pick & -pick
            cands.append(low.bit_length() - 1)
            pick ^= low
        cands.sort(key=self.rank.__getitem__)
        for w in cands:
            found = self._dfs(chosen | 1 << w, excluded, budget - 1)
            if found is not None:
                return found
            excluded |= 1 << w
        return None


def _solve(g: Graph, parameter: str, rs: int | None, ts: int | None, levels: tuple[int, ...]) -> SolveResult:
    if not is_connected(g):
        raise SolverError("graph is disconnected; the parameters are defined for connected graphs")
    if rs is not None and g.n < 2 and ts is None:
        raise SolverError("the distance-k dimension needs at least two vertices")
    sets = _minimal_family(_requirement_masks(g, rs, ts))

    # Any permutation of a twin class is an automorphism, and a resolving set
    # misses at most one member of each class, so some optimum contains all
    # but the largest id of every class.
    committed = 0
    bound = 0
    if rs is not None:
        for c in twin_classes(g).classes:
            for v in c[:-1]:
                committed |= 1 << v
        bound = lower_bound_twins(g)
    if ts is not None:
        bound = max(bound, lower_bound_packing(g, ts))
    bound = max(1, bound, _packing(sets)) if sets else max(bound, 0)

    incumbent = greedy_upper_bound(g, parameter, rs, ts)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    rank = [0] * g.n
    for i, v in enumerate(order):
        rank[v] = i
    search = _Search(sets, rank)
    base = committed.bit_count()
    witness = None
    for beta in range(max(bound, base), len(incumbent)):
        found = search.run(committed, beta - base)
        if found is not None:
            witness = LandmarkSet.from_mask(found)
            break
    if witness is None:
        witness = incumbent
    return SolveResult(parameter, levels, len(witness), witness, min(bound, len(witness)), search.nodes)


def gamma_k(g: Graph, k: int) -> SolveResult:
    """Distance-``k`` domination number with a witness."""
    _check_levels(k)
    return _solve(g, "gamma", None, k, (k,))


def dim_k(g: Graph, k: int) -> SolveResult:
    """Distance-``k`` dimension with a witness."""
    _check_levels(k)
    if g.n < 2:
        raise SolverError("the distance-k dimension needs at least two vertices")
    return _solve(g, "dim", k, None, (k,))


def gamma_L_st(g: Graph, s: int, t: int) -> SolveResult:
    """(s,t)-location-domination number: distance-``s`` resolving and distance-``t`` dominating."""
    _check_levels(s, t)
    return _solve(g, "gammaL", s, t, (s, t))


def gamma_L_k(g: Graph, k: int) -> SolveResult:
    return gamma_L_st(g, k, k)


def solve(g: Graph, parameter: str, s: int | None = None, t: int | None = None) -> SolveResult:
    """Dispatch by parameter name; ``gamma`` reads ``t``, ``dim`` reads ``s``."""
    if parameter == "gamma":
        return gamma_k(g, t)
    if parameter == "dim":
        return dim_k(g, s)
    if parameter == "gammaL":
        return gamma_L_st(g, s, t)
    raise SolverError(f"unknown parameter {parameter!r}; expected one of {PARAMETERS}")


def feasible(g: Graph, parameter: str, candidate, s: int | None = None, t: int | None = None) -> bool:
    """Check ``candidate`` against the certify predicate for ``parameter``."""
    if parameter == "gamma":
        return is_distance_k_dominating(truncated_metric(g, t), candidate)
    if parameter == "dim":
        return is_distance_k_resolving(truncated_metric(g, s), candidate)
    if parameter == "gammaL":
        return is_st_locating_dominating(g, candidate, s, t)
    raise SolverError(f"unknown parameter {parameter!r}; expected one of {PARAMETERS}")


def brute_force_min(
    g: Graph, parameter: str, s: int | None = None, t: int | None = None, cap: int = ORACLE_CAP
) -> SolveResult:
    """Ground truth: the first feasible subset in order of size, then lexicographic."""
    if g.n > cap:
        raise SolverError(f"brute force refused: n = {g.n} exceeds the oracle cap of {cap}")
    rs, ts = _levels(parameter, s, t)
    if not is_connected(g):
        raise SolverError("graph is disconnected; the parameters are defined for connected graphs")
    levels = tuple(lv for lv in (rs, ts) if lv is not None)
    _check_levels(*levels)
    tried = 0
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            tried += 1
            if feasible(g, parameter, combo, s, t):
                return SolveResult(parameter, levels, size, LandmarkSet(combo), 0, tried)
    raise AssertionError("the full vertex set is always feasible")
