"""Closed-form results for paths: exact values, lower bounds, critical sets.

All logarithms are integer bit lengths (floor(log2 n) + 1 == n.bit_length()),
never floating point, so powers of two sit on the right side of every
boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequences import PackingSequence, classify


@dataclass(frozen=True)
class PathFormulaResult:
    """Exact value or one-sided bound for a path chromatic number.

    Exactly one of `exact`/`lower` is set, except for the inapplicable
    case where both are None.  `source` names the clause that fired.
    """

    exact: int | None
    lower: int | None
    source: str

    @property
    def applicable(self) -> bool:
        return self.source != "inapplicable"


def path_chromatic_formula(seq: PackingSequence, n: int) -> PathFormulaResult:
    """Evaluate the strongest applicable closed-form clause for chi_S(P_n).

    Clauses, strongest first (L = floor(log2 n) + 1):

    * class-exact:  the sequence classifies at band level k; value is
      min(k, L) exactly.
    * window-exact: s_1 = 1 and 2^(i-1) <= s_i < 2^i for all 2 <= i <= L;
      value is L exactly.
    * window-lower: s_1 = 1 and 2^(i-1) <= s_i for all 2 <= i <= L; the
      value is at least L.
    * break-lower:  s_1 = 1 and some s_i < 2^(i-1); with k the least such
      index, the value is at least min(k, L).
    * inapplicable: s_1 > 1; callers fall back to the solver.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    bits = n.bit_length()
    level = classify(seq).k
    if level is not None:
        return PathFormulaResult(min(level, bits), None, "class-exact")
    if seq.entry(1) != 1:
        return PathFormulaResult(None, None, "inapplicable")
    in_band = [1 << (i - 1) <= seq.entry(i) < 1 << i for i in range(2, bits + 1)]
    if all(in_band):
        return PathFormulaResult(bits, None, "window-exact")
    if all(1 << (i - 1) <= seq.entry(i) for i in range(2, bits + 1)):
        return PathFormulaResult(None, bits, "window-lower")
    k = _first_band_break(seq)
    return PathFormulaResult(None, min(k, bits), "break-lower")


def _first_band_break(seq: PackingSequence) -> int:
    """Least i with s_i < 2^(i-1); exists for every constant-tail sequence."""
    i = 2
    while True:
        if seq.entry(i) < 1 << (i - 1):
            return i
        i += 1


def critical_path_set(seq: PackingSequence, n_max: int) -> set[int]:
    """Orders n <= n_max at which P_n is critical: the powers of two up to
    2^(k-1) for a sequence at band level k, or all powers of two when the
    band condition 2^(i-1) <= s_i < 2^i holds through the horizon."""
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    level = classify(seq).k
    if level is not None:
        return {1 << j for j in range(level) if 1 << j <= n_max}
    horizon = n_max.bit_length()
    if seq.entry(1) == 1 and all(
        1 << (i - 1) <= seq.entry(i) < 1 << i for i in range(2, horizon + 1)
    ):
        return {1 << j for j in range(horizon) if 1 << j <= n_max}
    raise ValueError(f"no critical-set clause applies to {seq}")


def vertex_critical_path_set(seq: PackingSequence, n_max: int) -> set[int]:
    """Identical to critical_path_set: the two notions coincide on paths
    (every proper subgraph is a disjoint union of shorter paths)."""
    return critical_path_set(seq, n_max)
