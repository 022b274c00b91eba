"""Command-line front end.

    spacking chromatic --seq 1,2,4,4 --cycle 9 [--witness]
    spacking table --table 1 [--format csv|json] [--out FILE]
    spacking verify --theorem 4.3 [--n-max 48] [--out report.json]
    spacking certify --pattern "(12131214)*" --seq 1,2,4,7

`table` regenerates the bundled chromatic-number tables as golden
artifacts (CSV is byte-stable across runs); `verify` runs one of the named
verification sweeps and exits nonzero when the solver disagrees with a
formula, characterization, or certificate.

Exit codes: 0 success/verified, 1 discrepancy or violation found,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .coloring import GraphSpec, coloring_to_text
from .criticality import CYCLE_RULES, cross_validate
from .formulas import path_chromatic_formula
from .patterns import certify_family, parse_pattern, pattern_library
from .sequences import (
    PackingSequence,
    classify,
    doubling_band_suite,
    dominates,
    halve,
    parse_family,
    parse_sequence,
)
from .solver import chromatic, chromatic_value

TABLE_ROWS = {
    1: (3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41),
    2: (3, 4, 5, 6, 7, 9, 10, 11, 12, 14, 15, 17, 19, 22, 23, 27),
}
TABLE_FAMILIES = {
    1: (("S1", "1,2,4,4"), ("S2", "1,2,4,5"), ("S3", "1,2,4,6"), ("S4", "1,2,5,5")),
    2: (("S1", "1,3,4,4"), ("S2", "1,3,4,5"), ("S3", "1,3,5,5")),
}

_FAMILY_GROUPS = {
    "1.2": ("1,1", "1,2,2", "1,[2-3],3"),
    "4.1": ("1,2,4,4", "1,2,[4-5],5", "1,2,[4-6],6"),
    "4.2": ("1,3,4,4", "1,3,4,5", "1,3,5,5"),
    "4.3": ("1,2,[4-7],7", "1,3,[4-7],7", "1,3,[5-6],6"),
}
_FAMILY_GROUPS["5.1"] = (
    _FAMILY_GROUPS["4.1"] + _FAMILY_GROUPS["4.2"] + _FAMILY_GROUPS["4.3"]
)

# fixed sample for the lemma sweeps: s_1 = 1 and a halvable second entry
_LEMMA_SEQS = (
    "1,2,2",
    "1,2,3",
    "1,2,4,7",
    "1,3,3",
    "1,3,5,5",
    "1,2,4,8,15",
    "1,4,4",
    "1,2,5,5",
    "1,3,4,9",
    "1,5,9,15",
    "1,2,6,12",
    "1,3,7,15",
)
_CYCLE_LEMMA_SEQS = ("1,2,2", "1,2,3", "1,2,4,7", "1,3,5,5", "1,3,4,4", "1,2,4,6")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def table_values(table_id: int, rows=None) -> list[dict]:
    """Compute one table: per row, the path value and one cycle value per
    family representative.  The path value is computed for every family and
    must agree across them."""
    reps = [
        (label, parse_sequence(lit)) for label, lit in TABLE_FAMILIES[table_id]
    ]
    out = []
    for n in rows or TABLE_ROWS[table_id]:
        path_vals = {
            chromatic_value(GraphSpec("path", n), seq) for _, seq in reps
        }
        if len(path_vals) != 1:
            raise AssertionError(f"path values disagree across families at n={n}")
        row = {"n": n, "P": path_vals.pop()}
        for label, seq in reps:
            row[label] = chromatic_value(GraphSpec("cycle", n), seq)
        out.append(row)
    return out


def cmd_table(args) -> int:
    rows = None
    if args.rows:
        rows = [int(t) for t in args.rows.split(",")]
    start = time.perf_counter()
    values = table_values(args.table, rows)
    columns = ["n", "P"] + [label for label, _ in TABLE_FAMILIES[args.table]]
    if args.format == "csv":
        lines = [",".join(columns)]
        lines += [",".join(str(row[c]) for c in columns) for row in values]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        doc = {
            "table": args.table,
            "columns": columns,
            "families": {label: lit for label, lit in TABLE_FAMILIES[args.table]},
            "rows": values,
            "metadata": {
                "version": __version__,
                "runtime_seconds": round(time.perf_counter() - start, 3),
            },
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_chromatic(args) -> int:
    if args.path is not None:
        g = GraphSpec("path", args.path)
    else:
        g = GraphSpec("cycle", args.cycle)
    seqs = (
        [parse_sequence(args.seq)]
        if args.seq
        else parse_family(args.family).members()
    )
    results = []
    for seq in seqs:
        if args.witness:
            res = chromatic(g, seq)
            results.append((seq, res.chromatic, coloring_to_text(res.witness)))
        else:
            results.append((seq, chromatic_value(g, seq), None))
    if args.format == "json":
        doc = [
            {"sequence": str(s), "graph": str(g), "chromatic": v, "witness": w}
            for s, v, w in results
        ]
        _emit(json.dumps(doc if len(doc) > 1 else doc[0], indent=2) + "\n", args.out)
        return 0
    lines = []
    for s, v, w in results:
        prefix = f"{s}: " if len(results) > 1 else ""
        lines.append(f"{prefix}{v}" + (f"  {w}" if w else ""))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_certify(args) -> int:
    pattern = parse_pattern(args.pattern)
    seq = parse_sequence(args.seq)
    report = certify_family(pattern, seq)
    if args.format == "json":
        doc = {
            "pattern": str(pattern),
            "sequence": str(seq),
            "proved": report.proved,
            "covered": report.covered.describe(),
            "checked_sizes": list(report.checked_sizes),
        }
        if report.violation:
            n, vr = report.violation
            doc["violation"] = {"n": n, "pair": vr.witness}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit(report.describe() + "\n", args.out)
    return 0 if report.proved else 1


def _sweep_families(names, n_max):
    discrepancies = []
    checks = 0
    for name in names:
        report = cross_validate(name, n_max)
        checks += report.checked
        for row in report.rows:
            discrepancies.append({"family": name, **row})
    return checks, discrepancies


def _verify_formula_sweep(n_max):
    suite = doubling_band_suite()
    discrepancies = []
    checks = 0
    for seq in suite:
        level = classify(seq).k
        for n in range(1, n_max + 1):
            checks += 1
            want = min(level, n.bit_length())
            got = chromatic_value(GraphSpec("path", n), seq)
            if got != want:
                discrepancies.append(
                    {"sequence": str(seq), "n": n, "formula": want, "solver": got}
                )
    return checks, discrepancies


def _verify_band_window_sweep(n_max):
    horizon = n_max.bit_length()
    candidates = [
        tuple(1 << (i - 1) for i in range(1, horizon + 1)),
        tuple((1 << i) - 1 for i in range(1, horizon + 1)),
        tuple(
            (1 << (i - 1)) if i % 2 else (1 << i) - 1 for i in range(1, horizon + 1)
        ),
        tuple(max(1, 3 * (1 << (i - 1)) // 2) for i in range(1, horizon + 1)),
    ]
    discrepancies = []
    checks = 0
    for entries in candidates:
        seq = PackingSequence(entries)
        for n in range(1, n_max + 1):
            checks += 1
            got = chromatic_value(GraphSpec("path", n), seq)
            if got != n.bit_length():
                discrepancies.append(
                    {"sequence": str(seq), "n": n, "formula": n.bit_length(), "solver": got}
                )
    return checks, discrepancies


def _verify_critical_paths(n_max):
    discrepancies = []
    checks = 0
    for seq in doubling_band_suite():
        level = classify(seq).k
        want = {1 << j for j in range(level) if 1 << j <= n_max}
        chi = [chromatic_value(GraphSpec("path", n), seq) for n in range(1, n_max + 1)]
        got = {1} | {n for n in range(2, n_max + 1) if chi[n - 2] < chi[n - 1]}
        checks += 1
        if got != want:
            discrepancies.append(
                {"sequence": str(seq), "expected": sorted(want), "got": sorted(got)}
            )
    return checks, discrepancies


def _verify_lemmas(n_max):
    discrepancies = []
    checks = 0
    seqs = [parse_sequence(s) for s in _LEMMA_SEQS]
    # halving recursion on paths
    for seq in seqs:
        half = halve(seq)
        for n in range(2, min(n_max, 64) + 1):
            checks += 1
            lhs = chromatic_value(GraphSpec("path", n), seq)
            rhs = chromatic_value(GraphSpec("path", n // 2), half) + 1
            if lhs != rhs:
                discrepancies.append(
                    {"check": "path-halving", "sequence": str(seq), "n": n,
                     "lhs": lhs, "rhs": rhs}
                )
    # even-length plateau on paths
    for seq in seqs:
        for n in range(2, min(n_max, 64) + 1, 2):
            checks += 1
            a = chromatic_value(GraphSpec("path", n), seq)
            b = chromatic_value(GraphSpec("path", n + 1), seq)
            if a != b:
                discrepancies.append(
                    {"check": "even-plateau", "sequence": str(seq), "n": n,
                     "chi_n": a, "chi_n1": b}
                )
    # halving upper bound on cycles
    for lit in _CYCLE_LEMMA_SEQS:
        seq = parse_sequence(lit)
        half = halve(seq)
        for n in range(3, min(n_max // 2, 32) + 1):
            checks += 1
            lhs = chromatic_value(GraphSpec("cycle", 2 * n), seq)
            rhs = chromatic_value(GraphSpec("cycle", n), half) + 1
            if lhs > rhs:
                discrepancies.append(
                    {"check": "cycle-halving-bound", "sequence": str(seq), "n": n,
                     "lhs": lhs, "rhs": rhs}
                )
    # entrywise monotonicity on sampled dominating pairs
    pool = doubling_band_suite(2, 4, 8)
    pool += [parse_sequence(s) for s in _LEMMA_SEQS]
    pairs = [
        (a, b)
        for a in pool
        for b in pool
        if a.key() != b.key() and dominates(a, b)
    ]
    for a, b in pairs:
        for g in (GraphSpec("path", 12), GraphSpec("cycle", 12), GraphSpec("cycle", 13)):
            checks += 1
            va, vb = chromatic_value(g, a), chromatic_value(g, b)
            if va > vb:
                discrepancies.append(
                    {"check": "monotonicity", "a": str(a), "b": str(b),
                     "graph": str(g), "chi_a": va, "chi_b": vb}
                )
    return checks, discrepancies


def _verify_certificates(n_max):
    discrepancies = []
    checks = 0
    for entry in pattern_library():
        for seq in entry.family.members():
            checks += 1
            report = certify_family(entry.pattern, seq)
            if not report.proved:
                n, vr = report.violation
                discrepancies.append(
                    {"pattern": str(entry.pattern), "sequence": str(seq),
                     "n": n, "pair": vr.witness}
                )
    return checks, discrepancies


_THEOREM_DEFAULT_NMAX = {
    "1.2": 48, "4.1": 48, "4.2": 48, "4.3": 48, "5.1": 48,
    "3": 64, "4ii": 64, "5": 64, "lemmas": 64, "patterns": 64,
}


def run_verify(theorem: str, n_max: int | None = None) -> dict:
    """Run one named verification sweep and return its JSON-ready report."""
    tid = theorem.strip().lower().replace("(", "").replace(")", "")
    if tid not in _THEOREM_DEFAULT_NMAX:
        raise ValueError(f"unknown verification id {theorem!r}")
    n_max = n_max or _THEOREM_DEFAULT_NMAX[tid]
    start = time.perf_counter()
    if tid in _FAMILY_GROUPS:
        checks, discrepancies = _sweep_families(_FAMILY_GROUPS[tid], n_max)
    elif tid == "3":
        checks, discrepancies = _verify_formula_sweep(n_max)
    elif tid == "4ii":
        checks, discrepancies = _verify_band_window_sweep(n_max)
    elif tid == "5":
        checks, discrepancies = _verify_critical_paths(n_max)
    elif tid == "patterns":
        checks, discrepancies = _verify_certificates(n_max)
    else:
        checks, discrepancies = _verify_lemmas(n_max)
    return {
        "theorem": theorem,
        "n_max": n_max,
        "ok": not discrepancies,
        "checks": checks,
        "discrepancies": discrepancies,
        "elapsed_seconds": round(time.perf_counter() - start, 3),
    }


def cmd_verify(args) -> int:
    report = run_verify(args.theorem, args.n_max)
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        _emit(text, args.out)
        status = "ok" if report["ok"] else f"{len(report['discrepancies'])} discrepancies"
        print(f"verify {args.theorem}: {status} ({report['checks']} checks)")
    else:
        sys.stdout.write(text)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spacking",
        description="Exact S-packing coloring computations on paths and cycles",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", help="compute a chromatic number")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--seq", help='sequence literal, e.g. "1,2,4,7"')
    target.add_argument("--family", help='family literal, e.g. "1,2,[4-7],7"')
    graph = p.add_mutually_exclusive_group(required=True)
    graph.add_argument("--path", type=int, metavar="N")
    graph.add_argument("--cycle", type=int, metavar="N")
    p.add_argument("--witness", action="store_true", help="also print a witness")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("table", help="regenerate a bundled value table")
    p.add_argument("--table", type=int, choices=(1, 2), required=True)
    p.add_argument("--rows", help="comma-separated row override")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a named verification sweep")
    p.add_argument(
        "--theorem",
        required=True,
        help="one of: 1.2, 3, 4(ii), 5, 4.1, 4.2, 4.3, 5.1, lemmas, patterns",
    )
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--out", metavar="PATH", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="certify a periodic pattern")
    p.add_argument("--pattern", required=True, help='e.g. "(12131214)*"')
    p.add_argument("--seq", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main())
