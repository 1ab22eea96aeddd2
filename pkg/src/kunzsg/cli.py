"""Command line front end: ``kunzsg {count,enumerate,verify,tree,kunz}``.

Exit codes: 0 success, 1 failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import counting
from .kunz import enumerate_kunz, kunz_polytope, semigroup_from_kunz
from .tree import build_tree, export_tree

UNRESTRICTED_TREE_LIMIT = 12
RESTRICTED_TREE_LIMIT = 60

_METHOD_ALIASES = {
    "auto": "auto",
    "closed": "closed_form",
    "enumerate": "enumeration",
    "partition": "partition",
    "residues": "residue_sum",
}


class UsageError(Exception):
    pass


def _rows_out(rows, fmt: str) -> str:
    rows = [list(r) for r in rows]
    if fmt == "json":
        return json.dumps(rows) + "\n"
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_count(args) -> int:
    if args.genus < 0:
        raise UsageError("genus must be nonnegative")
    try:
        report = counting.count(args.mult, args.genus, _METHOD_ALIASES[args.method])
    except ValueError as e:
        raise UsageError(str(e)) from e
    print(report.to_json())
    return 0


def cmd_enumerate(args) -> int:
    if args.mult < 2:
        raise UsageError("enumeration needs --mult >= 2")
    pts = enumerate_kunz(args.mult, args.genus)
    if args.as_ == "kunz":
        rows = [kc.k for kc in pts]
    else:
        rows = [semigroup_from_kunz(kc).minimal_generators for kc in pts]
    sys.stdout.write(_rows_out(rows, args.format))
    return 0


def verify_range(m: int, g0: int, g1: int) -> dict:
    """Cross-check every available counting route over ``[g0, g1]``."""
    if g0 > g1:
        raise ValueError(f"--from {g0} exceeds --to {g1}")
    if m < 2:
        raise ValueError("verification needs --mult >= 2")
    closed = counting.closed_form(m)
    failure = None
    enum_counts = {}
    for g in range(g0, g1 + 1):
        e = enum_counts[g] = counting.count_enumerated(m, g).value
        got = {}
        if closed is not None:
            got["closed_form"] = closed(g)
        if m == 4:
            got["residue_sum"] = counting.count_mult4_residues(g) if g >= 3 else 0
            got["partition_closed"] = counting.partition_count_closed(g + 6)
            got["partition_enumerated"] = counting.partition_count_enumerated(g + 6)
        for name, v in got.items():
            if v != e and failure is None:
                failure = {"genus": g, "check": name, "value": v, "enumeration": e}
    checks = ["closed_form"] if closed else []
    if m == 4:
        checks += ["residue_sum", "partition_closed", "partition_enumerated"]
    mono = counting.verify_nondecreasing(enum_counts.__getitem__, g0, g1, period=1)
    if not mono.ok and failure is None:
        failure = {"genus": mono.first_violation, "check": "nondecreasing"}
    return {
        "mult": m,
        "from": g0,
        "to": g1,
        "checks": checks + ["nondecreasing"],
        "ok": failure is None,
        "first_failure": failure,
    }


def cmd_verify(args) -> int:
    try:
        report = verify_range(args.mult, args.from_, args.to)
    except ValueError as e:
        raise UsageError(str(e)) from e
    print(json.dumps(report))
    return 0 if report["ok"] else 1


def cmd_tree(args) -> int:
    limit = UNRESTRICTED_TREE_LIMIT if args.mult is None else RESTRICTED_TREE_LIMIT
    if args.max_genus < 0:
        raise UsageError("--max-genus must be nonnegative")
    if args.max_genus > limit and not args.force:
        raise UsageError(f"--max-genus {args.max_genus} exceeds the safety limit {limit}; pass --force")
    if args.mult is not None and args.mult < 1:
        raise UsageError("--mult must be positive")
    root = build_tree(args.max_genus, args.mult)
    out = export_tree(root, args.format)
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def cmd_kunz(args) -> int:
    if args.mult < 2:
        raise UsageError("--mult must be >= 2")
    poly = kunz_polytope(args.mult, verbatim=args.verbatim)
    if args.verbatim and args.format is None:
        print(poly.to_gap())
    else:
        sys.stdout.write(_rows_out(poly.rows, args.format or "json"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kunzsg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count semigroups of given multiplicity and genus")
    c.add_argument("--mult", type=int, required=True)
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--method", choices=list(_METHOD_ALIASES), default="auto")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="list S(m,g)")
    e.add_argument("--mult", type=int, required=True)
    e.add_argument("--genus", type=int, required=True)
    e.add_argument("--format", choices=["json", "csv"], default="json")
    e.add_argument("--as", dest="as_", choices=["kunz", "generators"], default="kunz")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="cross-check counting routes over a genus range")
    v.add_argument("--mult", type=int, required=True)
    v.add_argument("--from", dest="from_", type=int, required=True)
    v.add_argument("--to", type=int, required=True)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tree", help="export the semigroup tree")
    t.add_argument("--max-genus", type=int, required=True)
    t.add_argument("--mult", type=int, default=None)
    t.add_argument("--format", choices=["dot", "json"], default="dot")
    t.add_argument("--force", action="store_true")
    t.set_defaults(func=cmd_tree)

    k = sub.add_parser("kunz", help="print the Kunz polytope inequalities")
    k.add_argument("--mult", type=int, required=True)
    k.add_argument("--verbatim", "--verbatim-gap", dest="verbatim", action="store_true",
                   help="ordered-pair rows with duplicates, printed as a GAP list")
    k.add_argument("--format", choices=["json", "csv"], default=None)
    k.set_defaults(func=cmd_kunz)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"kunzsg {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
