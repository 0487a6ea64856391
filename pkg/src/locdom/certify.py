"""Predicates on landmark sets: distance-k domination, resolution, and both at once."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, TruncatedMetric, truncated_metric


@dataclass(frozen=True)
class LandmarkSet:
    """Ordered, duplicate-free vertex list; compares as a set."""

    members: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.members)) != len(self.members):
            raise ValueError(f"duplicate landmark in {self.members}")

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "LandmarkSet":
        return cls(tuple(int(v) for v in vertices))

    @classmethod
    def from_mask(cls, mask: int) -> "LandmarkSet":
        return cls(tuple(v for v in range(mask.bit_length()) if mask >> v & 1))

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members

    def __eq__(self, other) -> bool:
        if isinstance(other, LandmarkSet):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def sorted(self) -> list[int]:
        return sorted(self.members)


def _landmarks(s) -> LandmarkSet:
    return s if isinstance(s, LandmarkSet) else LandmarkSet.of(s)


@dataclass(frozen=True)
class CodeVector:
    """Truncated distances from one vertex to each landmark, in landmark order."""

    entries: tuple[int, ...]
    k: int

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def is_far(self) -> bool:
        """True for the all-``(k+1)`` code: no landmark within distance ``k``."""
        return all(e == self.k + 1 for e in self.entries)

    def packed(self) -> int:
        """Base ``k+2`` integer encoding; equal codes pack equal."""
        base = self.k + 2
        out = 0
        for e in self.entries:
            out = out * base + e
        return out


def code_vector(metric: TruncatedMetric, s, v: int) -> CodeVector:
    row = metric.table[v]
    return CodeVector(tuple(row[u] for u in _landmarks(s).members), metric.k)


def undominated(metric: TruncatedMetric, s) -> list[int]:
    """Vertices outside ``s`` with no member within distance ``k``."""
    members = _landmarks(s).members
    k = metric.k
    out = []
    for v in range(metric.n):
        row = metric.dist[v]
        if not any(row[u] <= k for u in members):
            out.append(v)
    return out


def first_collision(metric: TruncatedMetric, s) -> tuple[int, int] | None:
    """The first pair ``(x, y)``, ``x < y``, with identical codes, or ``None``."""
    ls = _landmarks(s)
    seen: dict[int, int] = {}
    for v in range(metric.n):
        key = code_vector(metric, ls, v).packed()
        if key in seen:
            return seen[key], v
        seen[key] = v
    return None


def is_distance_k_dominating(metric: TruncatedMetric, s) -> bool:
    return not undominated(metric, s)


def is_distance_k_resolving(metric: TruncatedMetric, s) -> bool:
    return first_collision(metric, s) is None


def is_st_locating_dominating(g: Graph, s_set, s: int, t: int) -> bool:
    """Distance-``s`` resolving and distance-``t`` dominating."""
    return is_distance_k_resolving(truncated_metric(g, s), s_set) and is_distance_k_dominating(
        truncated_metric(g, t), s_set
    )
