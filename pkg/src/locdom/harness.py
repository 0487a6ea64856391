"""Verification checks: every bound and characterization run over its graph families.

Each ``check_*`` function returns one or more :class:`CheckRecord`. A record
fails when its counterexample list is nonempty; no check aborts another.
Instances with ``n <= OracleLog.nmax`` are also re-solved by brute force, and
disagreements land in the ``solver_oracle_agreement`` record.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import families as fam
from .graph import Graph, delete_edge, diameter, is_connected
from .solve import ORACLE_CAP, brute_force_min, solve
from .trees import tree_sweep

DEFAULT_SEED = 20240601
CORPUS_SIZE = 200
CORPUS_NMAX = 12


@dataclass
class CheckRecord:
    name: str
    anchor: str
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": "pass" if self.passed else "fail",
            "details": {**self.details, "counterexamples": self.counterexamples},
        }


@lru_cache(maxsize=None)
def value(g: Graph, parameter: str, s: int | None = None, t: int | None = None) -> int:
    return solve(g, parameter, s, t).value


def gam(g: Graph, k: int) -> int:
    return value(g, "gamma", None, k)


def dim(g: Graph, k: int) -> int:
    return value(g, "dim", k, None)


def loc(g: Graph, s: int, t: int | None = None) -> int:
    return value(g, "gammaL", s, s if t is None else t)


def describe(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


class OracleLog:
    """Re-solves small instances by brute force and records disagreements."""

    def __init__(self, nmax: int = 12):
        self.nmax = min(nmax, ORACLE_CAP)
        self.compared = 0
        self.mismatches: list[dict] = []
        self._seen: set = set()

    def compare(self, g: Graph, parameter: str, s: int | None, t: int | None) -> None:
        key = (g, parameter, s, t)
        if g.n > self.nmax or key in self._seen:
            return
        self._seen.add(key)
        self.compared += 1
        fast = value(g, parameter, s, t)
        slow = brute_force_min(g, parameter, s, t).value
        if fast != slow:
            self.mismatches.append(
                {"graph": describe(g), "parameter": parameter, "s": s, "t": t, "solver": fast, "oracle": slow}
            )

    def all_three(self, g: Graph, k: int) -> None:
        self.compare(g, "gamma", None, k)
        self.compare(g, "dim", k, None)
        self.compare(g, "gammaL", k, k)

    def record(self) -> CheckRecord:
        return CheckRecord(
            "solver_oracle_agreement",
            "optimized solver equals exhaustive subset enumeration",
            list(self.mismatches),
            {"instances_compared": self.compared, "oracle_nmax": self.nmax},
        )


def check_path_cycle(oracle: OracleLog, nmax: int = 16, ks=(1, 2, 3)) -> CheckRecord:
    bad = []
    count = 0
    for k in ks:
        for n in range(2, nmax + 1):
            cases = [("path", fam.path(n), fam.dim_k_path, fam.gammaL_k_path)]
            if n >= 3:
                cases.append(("cycle", fam.cycle(n), fam.dim_k_cycle, fam.gammaL_k_cycle))
            for kind, g, dim_formula, loc_formula in cases:
                count += 1
                got = (dim(g, k), loc(g, k))
                want = (dim_formula(n, k), loc_formula(n, k))
                if got != want:
                    bad.append({"kind": kind, "n": n, "k": k, "solver": list(got), "formula": list(want)})
                oracle.compare(g, "dim", k, None)
                oracle.compare(g, "gammaL", k, k)
    return CheckRecord(
        "path_cycle_oracles",
        "dim_k and gammaL_k of P_n and C_n equal their closed forms (period 3k+2 dispatch)",
        bad,
        {"instances": count, "nmax": nmax, "levels": list(ks)},
    )


def check_petersen(oracle: OracleLog) -> CheckRecord:
    g = fam.petersen()
    want = {"diam": 2, "dim_1": 3, "dim_2": 3, "dim_3": 3, "gammaL_1": 4, "gammaL_2": 3, "gammaL_3": 3}
    got = {"diam": diameter(g)}
    for k in (1, 2, 3):
        got[f"dim_{k}"] = dim(g, k)
        got[f"gammaL_{k}"] = loc(g, k)
        oracle.compare(g, "dim", k, None)
        oracle.compare(g, "gammaL", k, k)
    bad = [{"quantity": q, "solver": got[q], "expected": w} for q, w in want.items() if got[q] != w]
    return CheckRecord(
        "petersen",
        "Petersen graph: dim = 3 for every k, gammaL_1 = 4, gammaL_k = 3 for k >= 2",
        bad,
        {"values": got},
    )


def check_remark_family(oracle: OracleLog, cases=((1, 3), (2, 3), (1, 4)), ks=(1, 2, 3)) -> CheckRecord:
    bad = []
    rows = []
    for (x, alpha), k in itertools.product(cases, ks):
        g = fam.remark_tree(x, alpha, k)
        got = (gam(g, k), dim(g, k))
        rows.append({"x": x, "alpha": alpha, "k": k, "n": g.n, "gamma_k": got[0], "dim_k": got[1]})
        if got != (x * alpha, x * alpha - 1):
            bad.append(rows[-1])
        oracle.compare(g, "gamma", None, k)
        oracle.compare(g, "dim", k, None)
    return CheckRecord(
        "remark_tree_family",
        "extremal trees with gamma_k = x*alpha = dim_k + 1",
        bad,
        {"instances": rows},
    )


def check_spider(oracle: OracleLog, alphas=(3, 4, 5), ks=(1, 2)) -> CheckRecord:
    bad = []
    rows = []
    for alpha, k in itertools.product(alphas, ks):
        g = fam.spider(alpha, k)
        got = (gam(g, k), dim(g, k))
        rows.append({"alpha": alpha, "k": k, "n": g.n, "gamma_k": got[0], "dim_k": got[1]})
        if got != (1, alpha - 1):
            bad.append(rows[-1])
        oracle.compare(g, "gamma", None, k)
        oracle.compare(g, "dim", k, None)
    return CheckRecord(
        "spider_family",
        "subdivided stars: gamma_k = 1 and dim_k = alpha - 1",
        bad,
        {"instances": rows},
    )


def corpus(seed: int = DEFAULT_SEED, count: int = CORPUS_SIZE, nmax: int = CORPUS_NMAX) -> list[Graph]:
    return fam.random_corpus(count, nmax, seed, nmin=2)


def check_bounds(graphs: list[Graph], oracle: OracleLog, ks=(1, 2)) -> list[CheckRecord]:
    bad = {name: [] for name in ("dom_upper", "sum", "sandwich", "gap", "max_order", "monotone")}
    sum_two = 0
    for idx, g in enumerate(graphs):
        n = g.n
        for k in ks:
            oracle.all_three(g, k)
            gk, dk, lk = gam(g, k), dim(g, k), loc(g, k)
            tag = {"graph": idx, "n": n, "k": k, "gamma_k": gk, "dim_k": dk, "gammaL_k": lk}
            if gk > dk + 1:
                bad["dom_upper"].append(tag)
            small_path = fam.is_path_graph(g) and n <= k + 2
            if not 2 <= gk + dk <= n or (gk + dk == 2) != small_path:
                bad["sum"].append(tag)
            sum_two += gk + dk == 2
            if not max(gk, dk) <= lk <= min(dk + 1, n - 1):
                bad["sandwich"].append(tag)
            if lk - dk not in (0, 1):
                bad["gap"].append(tag)
            if n > fam.max_order_gammaL(lk, k) or n > fam.max_order_dim(dk, k):
                bad["max_order"].append({**tag, "bound": fam.max_order_gammaL(lk, k)})
            if k >= diameter(g) and lk != dk:
                bad["monotone"].append({**tag, "rule": "k >= diam implies gammaL_k = dim_k"})
        for k2, k1 in itertools.combinations(sorted(ks), 2):
            for label, f in (("gamma", gam), ("dim", dim), ("gammaL", loc)):
                if f(g, k1) > f(g, k2):
                    bad["monotone"].append({"graph": idx, "parameter": label, "k_small": k2, "k_large": k1})
        lo, hi = min(ks), max(ks)
        if lo != hi:
            chain = {(a, b): loc(g, a, b) for a in (lo, hi) for b in (lo, hi)}
            for (s, t), (s2, t2) in itertools.permutations(chain, 2):
                if s <= s2 and t <= t2 and chain[(s, t)] < chain[(s2, t2)]:
                    bad["monotone"].append({"graph": idx, "parameter": "gammaL_st", "smaller": [s, t], "larger": [s2, t2]})
    common = {"graphs": len(graphs), "levels": list(ks)}
    return [
        CheckRecord("bounds.domination_vs_dimension", "gamma_k <= dim_k + 1", bad["dom_upper"], common),
        CheckRecord(
            "bounds.sum",
            "2 <= gamma_k + dim_k <= n, with 2 exactly on P_2..P_{k+2}",
            bad["sum"],
            {**common, "sum_equal_two": sum_two},
        ),
        CheckRecord(
            "bounds.sandwich", "max(gamma_k, dim_k) <= gammaL_k <= min(dim_k + 1, n - 1)", bad["sandwich"], common
        ),
        CheckRecord("bounds.gap", "gammaL_k - dim_k in {0, 1}", bad["gap"], common),
        CheckRecord(
            "bounds.max_order",
            "n <= (floor(2(k+1)/3)+1)^b - 1 + b * sum_{i<=ceil((k+1)/3)} (2i-1)^(b-1), b = gammaL_k",
            bad["max_order"],
            common,
        ),
        CheckRecord(
            "bounds.level_monotonicity",
            "parameters non-increasing in k and in (s,t); gammaL_k = dim_k once k >= diam",
            bad["monotone"],
            common,
        ),
    ]


def check_characterization(graphs: list[Graph], oracle: OracleLog, ks=(1, 2, 3), complete_nmax: int = 9) -> CheckRecord:
    bad = []
    pool = list(graphs) + [fam.path(n) for n in range(2, 11)]
    for g in pool:
        for k in ks:
            lk = loc(g, k)
            oracle.compare(g, "gammaL", k, k)
            expect_one = fam.is_path_graph(g) and g.n <= k + 1
            if (lk == 1) != expect_one:
                bad.append({"rule": "gammaL_k = 1 iff P_2..P_{k+1}", "graph": describe(g), "k": k, "gammaL_k": lk})
            if g.n >= 2 and lk == g.n - 1:
                allowed = fam.is_complete_graph(g) or (k == 1 and fam.is_star_graph(g))
                if not allowed:
                    bad.append({"rule": "gammaL_k = n-1 only on K_n (and K_{1,n-1} when k = 1)", "graph": describe(g), "k": k})
    for n in range(2, complete_nmax + 1):
        for kind, g in (("complete", fam.complete(n)), ("star", fam.star(n))):
            l1, l2 = loc(g, 1), loc(g, 2)
            oracle.compare(g, "gammaL", 1, 1)
            oracle.compare(g, "gammaL", 2, 2)
            if l1 != n - 1:
                bad.append({"rule": "gammaL_1 = n-1 on K_n and K_{1,n-1}", "kind": kind, "n": n, "gammaL_1": l1})
            if (l2 == n - 1) != fam.is_complete_graph(g):
                bad.append({"rule": "gammaL_2 = n-1 iff K_n", "kind": kind, "n": n, "gammaL_2": l2})
    return CheckRecord(
        "characterization",
        "gammaL_k = 1 iff G in {P_2..P_{k+1}}; gammaL_1 = n-1 iff K_n or K_{1,n-1}; gammaL_k = n-1 iff K_n for k >= 2",
        bad,
        {"graphs": len(pool), "levels": list(ks), "complete_and_star_nmax": complete_nmax},
    )


def check_tree_equality(oracle: OracleLog, nmax: int = 8, ks=(1, 2), oracle_nmax: int = 6) -> CheckRecord:
    summary = tree_sweep(nmax, ks)
    for n in range(2, min(nmax, oracle_nmax) + 1):
        for seq in fam.prufer_sequences(n):
            t = fam.prufer_tree(seq, n)
            for k in ks:
                oracle.compare(t, "gammaL", k, k)
    return CheckRecord(
        "tree_equality",
        "trees: gammaL_k <= n - ex(T); equality iff k = 1, ex(T) >= 1, ex(T) + sigma(T) = n",
        summary.pop("counterexamples"),
        summary,
    )


def gammaL_deletion_ok(k: int, before: int, after: int) -> bool:
    if k == 1:
        return before - 2 <= after <= before + 2
    if k == 2:
        return after <= before + 2
    return after <= before + 3


def dim_deletion_ok(k: int, before: int, after: int) -> bool:
    if k == 1:
        return before - 1 <= after <= before + 1
    if k == 2:
        return after <= before + 1
    return after <= before + 2


def edge_sweep(g: Graph, k: int, oracle: OracleLog | None = None) -> dict:
    """Parameter changes under every single-edge deletion that keeps ``g`` connected."""
    if not is_connected(g):
        raise ValueError("edge sweep needs a connected graph")
    base_l, base_d = loc(g, k), dim(g, k)
    rows, violations = [], []
    skipped = 0
    for e in g.sorted_edges():
        h = delete_edge(g, e)
        if not is_connected(h):
            skipped += 1
            continue
        lh, dh = loc(h, k), dim(h, k)
        if oracle is not None:
            oracle.compare(h, "gammaL", k, k)
            oracle.compare(h, "dim", k, None)
        row = {
            "edge": list(e),
            "gammaL_G": base_l,
            "gammaL_G_minus_e": lh,
            "gammaL_delta": lh - base_l,
            "dim_G": base_d,
            "dim_G_minus_e": dh,
            "dim_delta": dh - base_d,
        }
        rows.append(row)
        if not gammaL_deletion_ok(k, base_l, lh):
            violations.append({**row, "bound": "gammaL"})
        if not dim_deletion_ok(k, base_d, dh):
            violations.append({**row, "bound": "dim"})
    return {"k": k, "rows": rows, "skipped_bridges": skipped, "violations": violations}


def check_edge_deletion(graphs: list[Graph], oracle: OracleLog, nmax: int = 10, ks=(1, 2)) -> list[CheckRecord]:
    bad = []
    swept = 0
    edges = 0
    skipped = 0
    for idx, g in enumerate(graphs):
        if g.n > nmax:
            continue
        swept += 1
        for k in ks:
            res = edge_sweep(g, k, oracle)
            edges += len(res["rows"])
            skipped += res["skipped_bridges"]
            bad.extend({"graph": idx, "k": k, **v} for v in res["violations"])
    stability = CheckRecord(
        "edge_deletion.stability",
        "gammaL_1(G) - 2 <= gammaL_1(G-e) <= gammaL_1(G) + 2; gammaL_2(G-e) <= gammaL_2(G) + 2; "
        "dim_1 moves by at most 1; dim_2(G-e) <= dim_2(G) + 1",
        bad,
        {"graphs": swept, "edges_checked": edges, "skipped_bridges": skipped, "levels": list(ks)},
    )

    a = 3
    g, e = fam.fig2(a)
    h = delete_edge(g, e)
    got = {"dim_2_G": dim(g, 2), "dim_2_G_minus_e": dim(h, 2), "gammaL_2_G": loc(g, 2), "gammaL_2_G_minus_e": loc(h, 2)}
    for x in (g, h):
        oracle.compare(x, "dim", 2, None)
    fig_bad = []
    if got["dim_2_G"] != 2 * a:
        fig_bad.append({"quantity": "dim_2_G", "solver": got["dim_2_G"], "expected": 2 * a})
    if got["dim_2_G_minus_e"] != a + 1:
        fig_bad.append({"quantity": "dim_2_G_minus_e", "solver": got["dim_2_G_minus_e"], "expected": a + 1})
    if got["gammaL_2_G"] - got["gammaL_2_G_minus_e"] < a - 2:
        fig_bad.append({"quantity": "gammaL_2 drop", "solver": got["gammaL_2_G"] - got["gammaL_2_G_minus_e"], "expected_at_least": a - 2})
    unbounded = CheckRecord(
        "edge_deletion.unbounded_drop",
        "fig2(a): dim_2(G) = 2a, dim_2(G-e) = a+1, gammaL_2(G) - gammaL_2(G-e) >= a-2",
        fig_bad,
        {"a": a, "n": g.n, "edge": list(e), "values": got},
    )
    return [stability, unbounded]


def part_lists(nmax: int) -> list[tuple[int, ...]]:
    """Non-increasing part lists with at least 2 parts and total 3..nmax."""

    def parts(total: int, largest: int):
        if total == 0:
            yield ()
            return
        for p in range(min(total, largest), 0, -1):
            for rest in parts(total - p, p):
                yield (p, *rest)

    return [p for n in range(3, nmax + 1) for p in parts(n, n) if len(p) >= 2]


def check_multipartite(oracle: OracleLog, nmax: int = 10, ks=(1, 2)) -> CheckRecord:
    bad = []
    lists = part_lists(nmax)
    for parts in lists:
        g = fam.complete_multipartite(parts)
        for k in ks:
            got = (dim(g, k), loc(g, k))
            want = (fam.dim_k_multipartite(parts, k), fam.gammaL_k_multipartite(parts, k))
            if got != want:
                bad.append({"parts": list(parts), "k": k, "solver": list(got), "formula": list(want)})
            oracle.compare(g, "dim", k, None)
            oracle.compare(g, "gammaL", k, k)
    return CheckRecord(
        "multipartite",
        "complete multipartite: dim = n-m (no singleton parts) or n-m+s-1; gammaL_k = dim except K_{1,n-1} at k = 1",
        bad,
        {"part_lists": len(lists), "nmax": nmax, "levels": list(ks)},
    )


SCOPES = (
    "path-cycle",
    "petersen",
    "remark-family",
    "spider",
    "bounds",
    "characterization",
    "tree-equality",
    "edge-deletion",
    "multipartite",
)


def run_harness(only: list[str] | None = None, nmax: int | None = None, seed: int = DEFAULT_SEED) -> list[CheckRecord]:
    """Run the selected scopes (all by default); ``nmax`` overrides each scope's size knob."""
    only = list(only or SCOPES)
    unknown = set(only) - set(SCOPES)
    if unknown:
        raise ValueError(f"unknown scope(s): {', '.join(sorted(unknown))}; known: {', '.join(SCOPES)}")
    oracle = OracleLog()
    records: list[CheckRecord] = []
    graphs = None

    def get_corpus():
        nonlocal graphs
        if graphs is None:
            graphs = corpus(seed)
        return graphs

    if "path-cycle" in only:
        records.append(check_path_cycle(oracle, nmax=nmax or 16))
    if "petersen" in only:
        records.append(check_petersen(oracle))
    if "remark-family" in only:
        records.append(check_remark_family(oracle))
    if "spider" in only:
        records.append(check_spider(oracle))
    if "bounds" in only:
        records.extend(check_bounds(get_corpus(), oracle))
    if "characterization" in only:
        records.append(check_characterization(get_corpus(), oracle, complete_nmax=nmax or 9))
    if "tree-equality" in only:
        records.append(check_tree_equality(oracle, nmax=nmax or 8))
    if "edge-deletion" in only:
        records.extend(check_edge_deletion(get_corpus(), oracle, nmax=nmax or 10))
    if "multipartite" in only:
        records.append(check_multipartite(oracle, nmax=nmax or 10))
    records.append(oracle.record())
    return sorted(records, key=lambda r: r.name)
