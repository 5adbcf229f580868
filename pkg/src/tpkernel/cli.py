"""Command-line frontend.

Exit codes: 0 for success, 1 for a negative decision (`not-tp`, `no`,
`invalid`), 2 for usage or parse errors, so shell harnesses can assert
decisions without scraping output.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from multiprocessing import Pool
from pathlib import Path

from . import fileio
from .combs import enumerate_critical_combs
from .fileio import ParseError
from .generate import GenParams, perturb, random_tp_graph
from .recognition import compute_ucd, find_obstruction, ucd_to_lines
from .rules import VARIANTS, Instance, kernelize
from .solver import solve, verify_edit

_BENCH_SOLVE_MAX_N = 12
_BENCH_SOLVE_MAX_K = 3

CSV_COLUMNS = [
    "instance", "n", "m", "k", "variant", "n_reduced", "m_reduced",
    "rule1_count", "rule2_count", "rule3_count", "rule4_count", "rule5_count",
    "millis", "solved", "feasible",
]


def _read_input(path: str | None) -> str:
    if path is None:
        return sys.stdin.read()
    return Path(path).read_text()


def _nonneg(text: str) -> int:
    val = int(text)
    if val < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return val


def cmd_recognize(args: argparse.Namespace) -> int:
    g = fileio.parse_graph(_read_input(args.input))
    ob = find_obstruction(g)
    if ob is None:
        print("tp")
        if args.ucd:
            d = compute_ucd(g)
            Path(args.ucd).write_text("\n".join(ucd_to_lines(d, offset=1)) + "\n")
        return 0
    witnesses = " ".join(str(w + 1) for w in ob.witnesses)
    print(f"not-tp {ob.kind} {witnesses}")
    return 1


def cmd_combs(args: argparse.Namespace) -> int:
    g = fileio.parse_graph(_read_input(args.input))
    for comb in enumerate_critical_combs(g):
        print(fileio.comb_to_line(comb))
    return 0


def cmd_kernelize(args: argparse.Namespace) -> int:
    g = fileio.parse_graph(_read_input(args.input))
    inst = Instance(g, args.k, args.variant)
    reduced, trace = kernelize(inst)
    text = fileio.serialize_graph(reduced.graph)
    if args.output:
        Path(args.output).write_text(text)
        print(
            f"kernelized n={g.n} m={g.m} -> n={reduced.graph.n} m={reduced.graph.m} "
            f"steps={len(trace.steps)}"
        )
    else:
        sys.stdout.write(text)
    if args.trace:
        Path(args.trace).write_text(fileio.serialize_trace(trace))
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    g = fileio.parse_graph(_read_input(args.input))
    sol = solve(Instance(g, args.k, args.variant))
    if sol is None:
        print("no")
        return 1
    print("yes")
    sys.stdout.write(fileio.serialize_edits(sol.edits))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = fileio.parse_graph(_read_input(args.input))
    edits = fileio.parse_edits(Path(args.edits).read_text())
    ok = verify_edit(g, edits, args.variant, args.k)
    print("valid" if ok else "invalid")
    return 0 if ok else 1


def _resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("TPK_SEED")
    if env is not None:
        return int(env)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    params = GenParams(
        n=args.n, max_fanout=args.max_fanout, max_bag=args.max_bag, seed=seed
    )
    base = random_tp_graph(params)
    perturbed, repair = perturb(base, args.k, args.variant, seed + 1)
    manifest = fileio.format_manifest(
        seed=seed,
        n=args.n,
        k=args.k,
        variant=args.variant,
        planted=repair.size,
        params=f"fanout<={args.max_fanout};bag<={args.max_bag}",
    )
    Path(args.output).write_text(manifest + "\n" + fileio.serialize_graph(perturbed))
    print(manifest)
    return 0


def _bench_one(path: str) -> dict:
    text = Path(path).read_text()
    inst, _ = fileio.read_instance_text(text)
    start = time.perf_counter()
    reduced, trace = kernelize(inst)
    millis = (time.perf_counter() - start) * 1000.0
    counts = trace.rule_counts()
    row = {
        "instance": Path(path).name,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "k": inst.budget,
        "variant": inst.variant,
        "n_reduced": reduced.graph.n,
        "m_reduced": reduced.graph.m,
        "millis": f"{millis:.1f}",
    }
    for r in range(1, 6):
        row[f"rule{r}_count"] = counts[r]
    if reduced.graph.n <= _BENCH_SOLVE_MAX_N and inst.budget <= _BENCH_SOLVE_MAX_K:
        row["solved"] = 1
        row["feasible"] = "yes" if solve(reduced) is not None else "no"
    else:
        row["solved"] = 0
        row["feasible"] = "na"
    return row


def cmd_bench(args: argparse.Namespace) -> int:
    paths = sorted(str(p) for p in Path(args.corpus).glob("*.tpg"))
    if not paths:
        print(f"error: no *.tpg instances under {args.corpus}", file=sys.stderr)
        return 2
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            rows = pool.map(_bench_one, paths)
    else:
        rows = [_bench_one(p) for p in paths]
    rows.sort(key=lambda r: r["instance"])
    with open(args.csv, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    print(f"bench: {len(rows)} instance(s) -> {args.csv}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpk", description="Trivially perfect editing: kernelize, solve, generate."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide trivial perfection, print a certificate")
    p.add_argument("-i", "--input", help="graph file (default: stdin)")
    p.add_argument("--ucd", help="write the universal clique decomposition here")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("combs", help="print the critical combs")
    p.add_argument("-i", "--input", help="graph file (default: stdin)")
    p.set_defaults(func=cmd_combs)

    p = sub.add_parser("kernelize", help="reduce an instance with rules 1-5")
    p.add_argument("-i", "--input", help="graph file (default: stdin)")
    p.add_argument("-k", type=_nonneg, required=True, help="edit budget")
    p.add_argument("--variant", choices=VARIANTS, required=True)
    p.add_argument("-o", "--output", help="write the reduced graph here (default: stdout)")
    p.add_argument("--trace", help="write the reduction trace here")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("solve", help="exact bounded-search decision with witness")
    p.add_argument("-i", "--input", help="graph file (default: stdin)")
    p.add_argument("-k", type=_nonneg, required=True)
    p.add_argument("--variant", choices=VARIANTS, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check an edit set against an instance")
    p.add_argument("-i", "--input", help="graph file (default: stdin)")
    p.add_argument("--edits", required=True, help="edit list file (add/del lines)")
    p.add_argument("--variant", choices=VARIANTS, required=True)
    p.add_argument("-k", type=_nonneg, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a seeded perturbed yes-instance")
    p.add_argument("-n", type=int, required=True, help="base vertex count")
    p.add_argument("-k", type=_nonneg, required=True, help="planted perturbation size")
    p.add_argument("--variant", choices=VARIANTS, required=True)
    p.add_argument("--seed", type=int, default=None,
                   help="generator seed (default: TPK_SEED env var, else 0)")
    p.add_argument("--max-fanout", type=int, default=4)
    p.add_argument("--max-bag", type=int, default=3)
    p.add_argument("-o", "--output", required=True, help="instance file to write")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="kernelize a corpus and emit CSV")
    p.add_argument("--corpus", required=True, help="directory of *.tpg instances")
    p.add_argument("--csv", required=True, help="CSV report to write")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
