"""Command-line front end: ``catalan-blocks`` / ``python -m catalan_blocks``.

Exit codes: 0 all checks pass, 1 at least one failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import DomainError, f_inverse, f_map, format_trace, trace, trace_to_json
from .catalan import catalan_table
from .perm_core import ParseError, Permutation
from .symfun import q_of, schur_expand
from .verify import LIMITS, bl_level_sets, iter_reports, ldes_level_sets


def _emit_report(report, fmt: str, out) -> None:
    if fmt == "tsv":
        ce = "" if report.counterexample is None else json.dumps(report.counterexample)
        lo, hi = report.n_range
        out.write(f"{report.claim_id}\t{lo}-{hi}\t{report.status}\t{report.elapsed_ms}\t{ce}\n")
    else:
        out.write(json.dumps(report.to_json(), separators=(",", ":")) + "\n")
    out.flush()


def _cmd_verify(args, out) -> int:
    n_max = LIMITS[args.claim][0] if args.n_max is None else args.n_max
    try:
        reports = iter_reports(args.claim, n_max)
        ok = True
        for report in reports:
            _emit_report(report, args.format, out)
            ok &= report.passed
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if ok else 1


def _cmd_bijection(args, out) -> int:
    try:
        p = Permutation.parse(args.word)
        if args.action == "map":
            out.write(f"{f_map(p)}\n")
        elif args.action == "inverse":
            out.write(f"{f_inverse(p)}\n")
        else:
            steps = trace(p)
            out.write((trace_to_json(steps) if args.json else format_trace(steps)) + "\n")
    except DomainError as exc:
        i, j, k = exc.positions
        print(f"domain error: {exc.permutation} contains 321 at positions ({i},{j},{k})",
              file=sys.stderr)
        return 2
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_table(args, out) -> int:
    if args.n_max < 0:
        print("error: --n-max must be nonnegative", file=sys.stderr)
        return 2
    out.write(catalan_table(args.n_max).to_tsv())
    return 0


def _cmd_qsym(args, out) -> int:
    n, k = args.n, args.k
    if not 1 <= k <= n <= 10:
        print("error: need 1 <= k <= n <= 10", file=sys.stderr)
        return 2
    # Both sets are indexed by k: Bl_{n,k} and its equinumerous partner L_{n,n-k}.
    members = bl_level_sets(n)[k] if args.set == "bl" else ldes_level_sets(n)[n - k]
    q = q_of(members, n)
    expansion = schur_expand(q)
    payload = {"set": args.set, "n": n, "k": k, "size": len(members), "qsym": q.to_json(),
               "schur": expansion.to_json() if hasattr(expansion, "to_json")
               else {"not_symmetric": [list(w) for w in expansion.witness]}}
    out.write(json.dumps(payload) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-blocks",
        description="Block number vs. last inverse descent on 321-avoiding permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run an exhaustive verification")
    v.add_argument("claim", choices=sorted(LIMITS))
    v.add_argument("--n-max", type=int, default=None)
    fmt = v.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--tsv", dest="format", action="store_const", const="tsv")
    v.set_defaults(format="json", func=_cmd_verify)

    b = sub.add_parser("bijection", help="apply the bijection to one permutation")
    b.add_argument("action", choices=["map", "inverse", "trace"])
    b.add_argument("word")
    b.add_argument("--json", action="store_true", help="JSON trace instead of text lines")
    b.set_defaults(func=_cmd_bijection)

    t = sub.add_parser("table", help="emit a number table")
    t.add_argument("which", choices=["catalan"])
    t.add_argument("--n-max", type=int, default=10)
    t.set_defaults(func=_cmd_table)

    q = sub.add_parser("qsym", help="quasi-symmetric generating functions")
    q.add_argument("action", choices=["expand"])
    q.add_argument("--set", choices=["bl", "ldes"], required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=_cmd_qsym)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
