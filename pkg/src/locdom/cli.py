"""Command-line front end.

Subcommands: ``solve``, ``verify``, ``family``, ``tree-sweep``, ``edge-sweep``,
``harness``. Human-readable text goes to stdout; ``--report FILE`` also writes a
JSON report whose layout is versioned by its ``schema`` field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import families as fam
from .certify import LandmarkSet, first_collision, undominated
from .graph import Graph, GraphError, format_edge_list, is_connected, parse_edge_list, truncated_metric
from .harness import DEFAULT_SEED, SCOPES, CheckRecord, edge_sweep, run_harness
from .solve import PARAMETERS, SolverError, feasible, solve
from .trees import tree_sweep

SCHEMA = "locdom.report/1"


class CLIError(Exception):
    pass


def _load(path: str) -> tuple[Graph, dict]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
        g = parse_edge_list(raw.decode("utf-8"))
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}") from None
    except (GraphError, UnicodeDecodeError) as exc:
        raise CLIError(f"{path}: {exc}") from None
    return g, {"path": path, "n": g.n, "m": g.m, "sha256": hashlib.sha256(raw).hexdigest()}


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise CLIError("graph is disconnected; all parameters assume a connected graph")


def _report(args, checks: list[CheckRecord], input_digest: dict | None, result, started: float) -> dict:
    report = {
        "schema": SCHEMA,
        "command": args.argv,
        "input": input_digest,
        "result": result,
        "checks": [c.as_dict() for c in sorted(checks, key=lambda c: c.name)],
        "summary": {
            "checks": len(checks),
            "passed": sum(c.passed for c in checks),
            "failed": sum(not c.passed for c in checks),
        },
    }
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    return report


def _emit(args, report: dict) -> None:
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")


def _levels(args) -> tuple[int, int]:
    s = args.s if args.s is not None else args.k
    t = args.t if args.t is not None else args.k
    return s, t


def cmd_solve(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args.file)
    _require_connected(g)
    s, t = _levels(args)
    res = solve(g, args.param, s, t)
    certified = feasible(g, args.param, res.witness, s, t)
    check = CheckRecord(
        "witness_certified",
        "the witness satisfies the defining predicate of the parameter",
        [] if certified else [{"witness": res.witness.sorted()}],
        {"parameter": args.param},
    )
    print(f"parameter: {args.param} levels: {' '.join(map(str, res.levels))}")
    print(f"value: {res.value}")
    print(f"witness: {' '.join(map(str, res.witness.sorted()))}")
    print(f"lower bound used: {res.lower_bound_used}")
    print(f"nodes explored: {res.nodes_explored}")
    _emit(args, _report(args, [check], digest, res.as_dict(), started))
    return 0 if certified else 1


def _parse_set(text: str, n: int) -> LandmarkSet:
    items = [x for x in text.replace(",", " ").split() if x]
    try:
        verts = [int(x) for x in items]
    except ValueError:
        raise CLIError(f"--set must list integer vertex labels, got {text!r}") from None
    for v in verts:
        if not 0 <= v < n:
            raise CLIError(f"unknown vertex label {v} (graph has vertices 0..{n - 1})")
    try:
        return LandmarkSet.of(verts)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def cmd_verify(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args.file)
    _require_connected(g)
    s, t = _levels(args)
    ls = _parse_set(args.set, g.n)
    pair = first_collision(truncated_metric(g, s), ls)
    far = undominated(truncated_metric(g, t), ls)
    resolving = CheckRecord(
        "resolving",
        f"every pair of vertices has distinct distance-{s} codes",
        [] if pair is None else [{"same_code": list(pair)}],
        {"level": s},
    )
    dominating = CheckRecord(
        "dominating",
        f"every vertex outside the set is within distance {t} of a member",
        [{"undominated": v} for v in far],
        {"level": t},
    )
    both = CheckRecord(
        "locating_dominating",
        f"({s},{t})-locating-dominating: resolving at {s} and dominating at {t}",
        [] if resolving.passed and dominating.passed else [{"failed": [c.name for c in (resolving, dominating) if not c.passed]}],
        {"levels": [s, t]},
    )
    print(f"set: {' '.join(map(str, ls.members))}")
    print(f"resolving (k={s}): {'pass' if resolving.passed else 'fail'}" + (f"  vertices {pair[0]} and {pair[1]} share a code" if pair else ""))
    print(f"dominating (k={t}): {'pass' if dominating.passed else 'fail'}" + (f"  undominated: {' '.join(map(str, far))}" if far else ""))
    print(f"locating-dominating: {'pass' if both.passed else 'fail'}")
    _emit(args, _report(args, [resolving, dominating, both], digest, {"set": list(ls.members)}, started))
    return 0 if both.passed else 1


def cmd_family(args) -> int:
    if args.list:
        for kind, (_, usage, ranges) in sorted(fam.KINDS.items()):
            print(f"{usage:28s} {ranges}")
        return 0
    if not args.kind:
        raise CLIError("family needs a kind (see --list)")
    try:
        g = fam.generate(args.kind, *args.params)
    except fam.FamilyError as exc:
        raise CLIError(str(exc)) from None
    text = format_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.kind} (n={g.n}, m={g.m}) to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_tree_sweep(args) -> int:
    started = time.perf_counter()
    summary = tree_sweep(args.n, args.k)
    check = CheckRecord(
        "tree_equality",
        "trees: gammaL_k <= n - ex(T); equality iff k = 1, ex(T) >= 1, ex(T) + sigma(T) = n",
        summary["counterexamples"],
        {"trees_checked": summary["trees_checked"]},
    )
    for row in summary["per_n"]:
        eq = ", ".join(f"k={k}: {c}" for k, c in row["equality_cases"].items())
        print(f"n={row['n']}: {row['trees']} labeled trees, equality cases {eq}")
    print(f"counterexamples: {len(summary['counterexamples'])}")
    _emit(args, _report(args, [check], None, summary, started))
    return 0 if check.passed else 1


def cmd_edge_sweep(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args.file)
    _require_connected(g)
    res = edge_sweep(g, args.k)
    check = CheckRecord(
        "edge_deletion",
        "gammaL_k and dim_k change under edge deletion within the level's bounds",
        res["violations"],
        {"k": args.k, "edges_checked": len(res["rows"]), "skipped_bridges": res["skipped_bridges"]},
    )
    print(f"{'edge':>9}  {'gammaL':>6} {'delta':>5}  {'dim':>4} {'delta':>5}")
    for row in res["rows"]:
        u, v = row["edge"]
        print(f"{u:>4} {v:<4}  {row['gammaL_G_minus_e']:>6} {row['gammaL_delta']:>+5}  {row['dim_G_minus_e']:>4} {row['dim_delta']:>+5}")
    print(f"gammaL_{args.k}(G) = {res['rows'][0]['gammaL_G'] if res['rows'] else '-'}; skipped bridges: {res['skipped_bridges']}")
    print(f"violations: {len(res['violations'])}")
    _emit(args, _report(args, [check], digest, res, started))
    return 0 if check.passed else 1


def cmd_harness(args) -> int:
    started = time.perf_counter()
    records = run_harness(args.only, args.nmax, args.seed)
    for r in records:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  [{r.anchor}]")
    failed = sum(not r.passed for r in records)
    print(f"{len(records) - failed}/{len(records)} checks passed")
    _emit(args, _report(args, records, None, {"scopes": args.only or list(SCOPES), "seed": args.seed}, started))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="locdom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, levels=True):
        if levels:
            p.add_argument("--k", type=int, default=1, help="level used for s and t when they are not given")
            p.add_argument("--s", type=int, help="resolving level")
            p.add_argument("--t", type=int, help="dominating level")
        p.add_argument("--report", help="write a JSON report here")
        p.add_argument("--no-timing", action="store_true", help="omit the timing field from the report")

    p = sub.add_parser("solve", help="compute gamma_k, dim_k or gammaL^(s,t) of an edge-list graph")
    p.add_argument("file")
    p.add_argument("--param", choices=PARAMETERS, default="gammaL")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a vertex set against the resolving and dominating predicates")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="vertex labels, comma or space separated")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="write a named graph in edge-list format")
    p.add_argument("kind", nargs="?")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--list", action="store_true", help="list the known kinds and their parameters")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("tree-sweep", help="check the tree bound on all labeled trees up to --n vertices")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--k", type=_int_list, default=[1, 2], help="levels, e.g. 1,2")
    common(p, levels=False)
    p.set_defaults(func=cmd_tree_sweep)

    p = sub.add_parser("edge-sweep", help="parameter changes under each non-bridge edge deletion")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--report")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_edge_sweep)

    p = sub.add_parser("harness", help="run the verification checks")
    p.add_argument("--only", nargs="+", choices=SCOPES, help="restrict to these scopes")
    p.add_argument("--nmax", type=int, help="override each scope's size limit")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed of the random graph corpus")
    common(p, levels=False)
    p.set_defaults(func=cmd_harness)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    try:
        return args.func(args)
    except (CLIError, SolverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
