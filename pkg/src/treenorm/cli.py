"""Command-line interface: JSON or edge lists on stdout, summaries on stderr.

Exit status is 0 on success, 1 when ``verify --strict`` finds a discrepancy
and 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile
from typing import Sequence

from treenorm import constructions as cons
from treenorm import formulas
from treenorm.canon import canonical_code
from treenorm.enumeration import free_trees_filtered
from treenorm.graph import Graph, GraphError, parse_edge_list, serialize_edge_list
from treenorm.invariants import profile
from treenorm.verify import (
    SCHEMA_VERSION,
    THEOREMS,
    extremal_scan,
    search_edge_anomalies,
    verify_theorem,
)

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE = 0, 1, 2
OBJECTIVE_FLAGS = {"norm": "norm_sum", "lambda": "lambda_sum", "ecc": "ecc_sum"}

log = logging.getLogger("treenorm")


class UsageError(Exception):
    pass


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file in the same directory."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(payload: dict, out: str | None) -> None:
    text = dumps(payload)
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _need(args: argparse.Namespace, *names: str) -> list[int]:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family} needs " + ", ".join("--" + n for n in missing))
    return [getattr(args, n) for n in names]


def build_family(args: argparse.Namespace) -> Graph:
    fam = args.family
    if fam == "path":
        return cons.path(*_need(args, "n"))
    if fam == "star":
        return cons.star(*_need(args, "n"))
    if fam == "comet":
        return cons.comet(*_need(args, "n", "r"))
    if fam == "dumbbell":
        return cons.dumbbell(*_need(args, "n", "a", "b"))
    if fam == "balanced_starlike":
        n, k = _need(args, "n", "k")
        if k < 1 or (n - 1) % k:
            raise UsageError("balanced_starlike needs k to divide n-1")
        return cons.balanced_starlike(k, (n - 1) // k)
    if fam == "t_hat":
        n, d = _need(args, "n", "d")
        if 2 <= d <= n - 1 and cons.t_hat_is_degenerate(n, d):
            print(f"note: comet length is 0 for d={d}; the {n - d - 1} extra vertices "
                  "hang directly off the middle vertex", file=sys.stderr)
        return cons.t_hat(n, d)
    if fam == "t_tilde":
        return cons.t_tilde(*_need(args, "n", "k", "d", "a", "b"))
    if fam == "s_tilde":
        return cons.s_tilde(*_need(args, "n", "k"))
    if fam == "s_hat":
        return cons.s_hat(*_need(args, "n"))
    if fam == "fixture":
        if args.id is None:
            raise UsageError("family fixture needs --id")
        return cons.fixture(args.id)
    raise UsageError(f"unknown family {fam}")


def cmd_compute(args: argparse.Namespace) -> int:
    if args.input == "-":
        g = parse_edge_list(sys.stdin)
    else:
        with open(args.input, encoding="utf-8") as fh:
            g = parse_edge_list(fh)
    p = profile(g)
    emit({"schema": SCHEMA_VERSION, "n": g.n, "edges": g.edge_count, "profile": p.to_json()}, None)
    print(f"n={g.n} diameter={p.diameter} radius={p.radius} Ecc={p.ecc_sum} "
          f"Norm={p.norm_sum} Lambda={p.lambda_sum}", file=sys.stderr)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    g = build_family(args)
    sys.stdout.write(serialize_edge_list(g))
    summary = f"{args.family}: n={g.n} edges={g.edge_count}"
    if g.n >= 1 and g.edge_count == g.n - 1:
        summary += f" code={canonical_code(g)}"
    print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    trees = free_trees_filtered(args.n, args.diameter, args.peripheral)
    if args.count_only:
        count = sum(1 for _ in trees)
        emit({"schema": SCHEMA_VERSION, "n": args.n, "diameter": args.diameter,
              "peripheral_count": args.peripheral, "count": count}, None)
    else:
        count = 0
        for t in trees:
            if count:
                sys.stdout.write("\n")
            sys.stdout.write(serialize_edge_list(t))
            count += 1
    print(f"{count} tree(s) of order {args.n}", file=sys.stderr)
    return EXIT_OK


def cmd_formula(args: argparse.Namespace) -> int:
    result = formulas.evaluate(args.name, n=args.n, d=args.d, k=args.k)
    emit({"schema": SCHEMA_VERSION, **result}, None)
    print(f"{args.name} [{result['branch']}] = {result['value']}", file=sys.stderr)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    rep = extremal_scan(args.n, OBJECTIVE_FLAGS[args.objective], args.direction,
                        args.diameter, args.peripheral, jobs=args.jobs)
    emit({"schema": SCHEMA_VERSION, **rep.to_json()}, args.out)
    if rep.vacuous:
        print("vacuous: no tree satisfies the constraints", file=sys.stderr)
    else:
        print(f"{args.direction} {rep.objective} = {rep.optimum} over {rep.trees_scanned} tree(s), "
              f"{len(rep.witnesses)} witness(es)", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    reports = verify_theorem(args.theorem, args.n, jobs=args.jobs)
    spec = THEOREMS[args.theorem]
    bad = [r for r in reports if r.discrepancy]
    emit({
        "schema": SCHEMA_VERSION,
        "theorem": args.theorem,
        "claim": spec.claim,
        "semantics": spec.semantics,
        "n_range": [args.n.start, args.n.stop - 1],
        "report_count": len(reports),
        "discrepancy_count": len(bad),
        "reports": [r.to_json() for r in reports],
    }, args.out)
    print(f"{args.theorem}: {len(reports)} report(s), {len(bad)} discrepanc"
          f"{'y' if len(bad) == 1 else 'ies'}", file=sys.stderr)
    for r in bad:
        print(f"  n={r.n}: {r.detail}", file=sys.stderr)
    off = [r for r in reports
           if getattr(r, "extras", {}).get("formula", {}).get("matches_construction") is False]
    if off:
        cells = ", ".join(f"({r.n},{r.diameter})" for r in off)
        print(f"  note: closed form disagrees with the construction at (n,d) = {cells}", file=sys.stderr)
    return EXIT_DISCREPANCY if bad and args.strict else EXIT_OK


def cmd_anomaly(args: argparse.Namespace) -> int:
    records = search_edge_anomalies(args.n)
    emit({"schema": SCHEMA_VERSION, "n": args.n, "count": len(records),
          "records": [r.to_json() for r in records]}, args.out)
    print(f"{len(records)} norm-increasing edge addition(s) at n={args.n}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treenorm", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariant profile of an edge-list graph")
    p.add_argument("--input", required=True, metavar="FILE", help="edge-list file, or - for stdin")
    p.add_argument("--json", action="store_true", help="JSON output (the only format; accepted for clarity)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("construct", help="edge list of a named family member")
    p.add_argument("--family", required=True, choices=cons.FAMILIES)
    for flag in ("n", "d", "k", "r", "a", "b"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--id", choices=sorted(cons.FIXTURES))
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="all trees of an order, optionally filtered")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diameter", type=int)
    p.add_argument("--peripheral", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("formula", help="evaluate a closed-form value or bound")
    p.add_argument("--name", required=True, choices=sorted(formulas.REGISTRY))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("scan", help="exhaustive optimum and all optimal trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--objective", required=True, choices=sorted(OBJECTIVE_FLAGS))
    p.add_argument("--direction", required=True, choices=("max", "min"))
    p.add_argument("--diameter", type=int)
    p.add_argument("--peripheral", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="check a theorem against exhaustive scans")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--n", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--strict", action="store_true", help="exit 1 on any discrepancy")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("anomaly", help="edge additions that increase the sum of normalities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_anomaly)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
    except (GraphError, ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
