"""Criticality verdicts for paths and cycles, plus the characterization
cross-checks.

Every proper subgraph of P_n or C_n is a disjoint union of shorter paths,
so both notions reduce to a handful of solver calls: a path is critical iff
chi(P_{n-1}) < chi(P_n); a cycle is critical iff chi(P_n) < chi(C_n) (one
edge deletion already realizes the largest proper subgraph) and
vertex-critical iff chi(P_{n-1}) < chi(C_n).

The characterization predicates transcribe, clause for clause, the known
exact critical sets for specific sequence families.  They are kept strictly
separate from the solver so that each side can falsify the other;
`cross_validate` reports disagreements and never resolves them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .coloring import GraphSpec
from .sequences import SequenceFamily, parse_family
from .solver import chromatic_value


@dataclass(frozen=True)
class CriticalityVerdict:
    graph: GraphSpec
    is_critical: bool
    is_vertex_critical: bool
    evidence: dict = field(compare=False)


def decide_path(seq, n: int) -> CriticalityVerdict:
    """Criticality of P_n; the two notions coincide on paths.

    P_1 is critical by definition (it has no proper subgraph with a vertex).
    """
    g = GraphSpec("path", n)
    chi = chromatic_value(g, seq)
    chi_sub = chromatic_value(GraphSpec("path", n - 1), seq) if n > 1 else 0
    crit = chi_sub < chi
    return CriticalityVerdict(g, crit, crit, {"chi": chi, "chi_path_minus": chi_sub})


def decide_cycle(seq, n: int) -> CriticalityVerdict:
    g = GraphSpec("cycle", n)
    chi = chromatic_value(g, seq)
    chi_path = chromatic_value(GraphSpec("path", n), seq)
    chi_path_minus = chromatic_value(GraphSpec("path", n - 1), seq)
    return CriticalityVerdict(
        g,
        chi > chi_path,
        chi > chi_path_minus,
        {"chi": chi, "chi_path": chi_path, "chi_path_minus": chi_path_minus},
    )


@dataclass(frozen=True)
class FamilyRule:
    """Characterized critical/vertex-critical cycle orders for one family."""

    family: SequenceFamily
    critical: Callable[[int], bool] | None
    vertex_critical: Callable[[int], bool] | None


def _build_rules() -> dict[str, FamilyRule]:
    crit_126 = frozenset(
        {3, 5, 6, 7, 9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41}
    )
    vc_126 = frozenset({17, 18, 19, 20, 25, 26, 27, 33, 34, 41})
    specs: list[tuple[str, Callable | None, Callable | None]] = [
        ("1,1", lambda n: n % 2 == 1, None),
        ("1,2,2", lambda n: n in (3, 5), None),
        ("1,[2-3],3", lambda n: n % 4 != 0, None),
        ("1,2,4,4", lambda n: n in {3, 5, 6, 7, 9}, lambda n: n <= 9),
        (
            "1,2,[4-5],5",
            lambda n: n in {3, 5, 6, 7, 9, 10, 11, 17},
            lambda n: n <= 11 or n == 17,
        ),
        (
            "1,2,[4-6],6",
            lambda n: n in crit_126,
            lambda n: n <= 13 or n in vc_126,
        ),
        ("1,3,4,4", lambda n: n in {3, 5, 6, 7, 9}, lambda n: n <= 9),
        (
            "1,3,4,5",
            lambda n: n in {3, 5, 6, 7, 9, 10, 11, 15, 17, 23},
            lambda n: n <= 11 or n in {15, 17, 23},
        ),
        (
            "1,3,5,5",
            lambda n: n in {6, 10} or n % 2 == 1,
            lambda n: n <= 10 or n % 2 == 1,
        ),
    ]
    eight = lambda n: n % 8 != 0 and n != 4  # noqa: E731
    eight_vc = lambda n: n % 8 != 0 or n == 8  # noqa: E731
    for fam in ("1,2,[4-7],7", "1,3,[4-7],7", "1,3,[5-6],6"):
        specs.append((fam, eight, eight_vc))
    return {
        sig: FamilyRule(parse_family(sig), crit, vc) for sig, crit, vc in specs
    }


CYCLE_RULES: dict[str, FamilyRule] = _build_rules()


def characterized_families() -> list[SequenceFamily]:
    return [rule.family for rule in CYCLE_RULES.values()]


def characterization_predicate(fam, n: int, kind: str) -> bool:
    """The characterized verdict for C_n, transcribed clause for clause.

    `kind` is "critical" or "vertex_critical"; raises for families (or
    kinds) outside the characterized catalogue.
    """
    sig = str(fam)
    rule = CYCLE_RULES.get(sig)
    if rule is None:
        raise ValueError(f"family {sig} is not covered by any characterization")
    if kind == "critical":
        pred = rule.critical
    elif kind == "vertex_critical":
        pred = rule.vertex_critical
    else:
        raise ValueError(f"unknown criticality kind {kind!r}")
    if pred is None:
        raise ValueError(f"no {kind} characterization for family {sig}")
    return pred(n)


@dataclass(frozen=True)
class DiscrepancyReport:
    """Solver-vs-characterization disagreements for one family sweep."""

    family: str
    n_max: int
    checked: int
    rows: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.rows

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n_max": self.n_max,
            "checked": self.checked,
            "ok": self.ok,
            "discrepancies": list(self.rows),
        }


def cross_validate(fam, n_max: int = 48) -> DiscrepancyReport:
    """Sweep every representative and 3 <= n <= n_max, comparing solver
    verdicts with the characterized predicates of the family."""
    if isinstance(fam, str):
        fam = parse_family(fam)
    sig = str(fam)
    rule = CYCLE_RULES.get(sig)
    if rule is None:
        raise ValueError(f"family {sig} is not covered by any characterization")
    kinds = [
        (kind, pred)
        for kind, pred in (
            ("critical", rule.critical),
            ("vertex_critical", rule.vertex_critical),
        )
        if pred is not None
    ]
    rows = []
    checked = 0
    for seq in fam.members():
        for n in range(3, n_max + 1):
            verdict = decide_cycle(seq, n)
            got = {
                "critical": verdict.is_critical,
                "vertex_critical": verdict.is_vertex_critical,
            }
            for kind, pred in kinds:
                checked += 1
                if got[kind] != pred(n):
                    rows.append(
                        {
                            "sequence": str(seq),
                            "n": n,
                            "kind": kind,
                            "expected": pred(n),
                            "got": got[kind],
                            **verdict.evidence,
                        }
                    )
    return DiscrepancyReport(sig, n_max, checked, tuple(rows))
