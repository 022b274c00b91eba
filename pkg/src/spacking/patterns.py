"""Periodic coloring patterns and their finite certificates.

A pattern is a list of digit blocks, each repeated a fixed number of times,
with at most one block carrying a free exponent (the "star" block).  One
pattern therefore describes colorings of cycles of every order in an
arithmetic progression: offset + period * m for m >= m_min.

Literal syntax: "(1213124)^2(12131214)*" — parenthesized blocks, caret for
a fixed multiplicity, a trailing star for the free exponent.  Digits limit
patterns to colors 1..9, which covers everything catalogued here.

`certify_family` turns the infinite claim into a finite check: validating
the instances m_min..m_min + ceil(2W/period) + 1 (W = largest separation of
any used color) proves validity for every m.  Once the instance length
passes 2W, any same-colored pair within distance W spans at most 2W + 1
consecutive positions, so it appears verbatim in a checked instance with
the same wrap distances; growing m further only inserts star periods away
from the pair.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coloring import Coloring, GraphSpec, ValidationReport, validate
from .sequences import PackingSequence, SequenceFamily, parse_family


@dataclass(frozen=True)
class PatternBlock:
    colors: tuple[int, ...]
    mult: int | None  # None marks the star block

    def __post_init__(self):
        if not self.colors:
            raise ValueError("empty pattern block")
        if any(not 1 <= c <= 9 for c in self.colors):
            raise ValueError(f"pattern colors must be 1..9: {self.colors}")
        if self.mult is not None and self.mult < 0:
            raise ValueError("block multiplicity must be >= 0")


@dataclass(frozen=True)
class PatternSpec:
    """Prefix blocks plus an optional starred block with minimum exponent."""

    blocks: tuple[PatternBlock, ...]
    m_min: int = 1

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("pattern needs at least one block")
        if sum(1 for b in self.blocks if b.mult is None) > 1:
            raise ValueError("at most one star block allowed")
        if self.m_min < 0:
            raise ValueError("m_min must be >= 0")

    @property
    def star_block(self) -> PatternBlock | None:
        for b in self.blocks:
            if b.mult is None:
                return b
        return None

    @property
    def fixed_length(self) -> int:
        return sum(len(b.colors) * b.mult for b in self.blocks if b.mult is not None)

    @property
    def period(self) -> int:
        star = self.star_block
        return len(star.colors) if star else 0

    def length_for(self, m: int) -> int:
        return self.fixed_length + self.period * m

    def __str__(self) -> str:
        parts = []
        for b in self.blocks:
            digits = "".join(str(c) for c in b.colors)
            if b.mult is None:
                parts.append(f"({digits})*")
            elif b.mult == 1:
                parts.append(f"({digits})")
            else:
                parts.append(f"({digits})^{b.mult}")
        return "".join(parts)


_PATTERN_TOKEN = re.compile(r"\((\d+)\)(?:\^(\d+)|(\*))?")


def parse_pattern(text: str, m_min: int = 1) -> PatternSpec:
    """Parse a pattern literal such as "(1213124)^2(12131214)*"."""
    text = text.strip()
    blocks = []
    pos = 0
    while pos < len(text):
        m = _PATTERN_TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad pattern literal at {text[pos:]!r}")
        colors = tuple(int(ch) for ch in m.group(1))
        if m.group(3):
            mult = None
        elif m.group(2):
            mult = int(m.group(2))
        else:
            mult = 1
        blocks.append(PatternBlock(colors, mult))
        pos = m.end()
    if not blocks:
        raise ValueError(f"empty pattern literal: {text!r}")
    return PatternSpec(tuple(blocks), m_min)


def instantiate(p: PatternSpec, m: int | None = None) -> Coloring:
    """Concatenate the blocks into a cycle coloring, the star block m times."""
    star = p.star_block
    if star is not None:
        if m is None:
            raise ValueError("pattern has a star block: m required")
        if m < p.m_min:
            raise ValueError(f"m={m} below the pattern minimum {p.m_min}")
    elif m not in (None, 1):
        raise ValueError("pattern has no star block")
    out: list[int] = []
    for b in p.blocks:
        reps = m if b.mult is None else b.mult
        out.extend(b.colors * reps)
    if not out:
        raise ValueError("pattern instantiates to an empty coloring")
    return Coloring(tuple(out), max(out))


@dataclass(frozen=True)
class Coverage:
    """Cycle orders described by a pattern: offset + period*m, m >= m_min."""

    offset: int
    period: int
    m_min: int

    def contains(self, n: int) -> bool:
        if self.period == 0:
            return n == self.offset
        return n >= self.offset + self.period * self.m_min and (
            (n - self.offset) % self.period == 0
        )

    def up_to(self, n_max: int) -> list[int]:
        if self.period == 0:
            return [self.offset] if self.offset <= n_max else []
        start = self.offset + self.period * self.m_min
        return list(range(start, n_max + 1, self.period))

    def describe(self) -> str:
        if self.period == 0:
            return f"n = {self.offset}"
        lo = self.offset + self.period * self.m_min
        return f"n = {self.offset} + {self.period}m (m >= {self.m_min}), i.e. n ≡ {self.offset % self.period} (mod {self.period}), n >= {lo}"


@dataclass(frozen=True)
class CertificateReport:
    """Result of certifying one pattern against one sequence."""

    proved: bool
    pattern: PatternSpec
    sequence: PackingSequence
    covered: Coverage
    checked_sizes: tuple[int, ...]
    violation: tuple[int, ValidationReport] | None = None

    def describe(self) -> str:
        if self.proved:
            return f"PROVED: {self.covered.describe()}"
        n, report = self.violation
        return f"REJECTED at n={n}: pair {report.witness}"


def certify_family(p: PatternSpec, seq: PackingSequence) -> CertificateReport:
    """Prove the pattern valid for every admissible exponent, or find the
    first failing instance.

    Every instance from m_min through m_min + ceil(2W/period) + 1 is
    validated outright; periodicity then settles all larger exponents (see
    the module docstring for the window argument).
    """
    used = {c for b in p.blocks for c in b.colors}
    width = max(seq.entry(c) for c in used)
    star = p.star_block
    if star is None:
        if p.fixed_length < 3:
            raise ValueError(f"pattern covers no cycle: n={p.fixed_length}")
        m_lo = p.m_min
        sizes = [p.fixed_length]
    else:
        # instances shorter than a triangle are not cycles; coverage starts
        # at the first exponent that reaches one
        m_lo = p.m_min
        while p.length_for(m_lo) < 3:
            m_lo += 1
        m_hi = m_lo + -(-2 * width // p.period) + 1
        sizes = [p.length_for(m) for m in range(m_lo, m_hi + 1)]
    coverage = Coverage(p.fixed_length, p.period, m_lo)
    checked = []
    for n in sizes:
        m = None if star is None else (n - p.fixed_length) // p.period
        report = validate(GraphSpec("cycle", n), seq, instantiate(p, m))
        checked.append(n)
        if not report.ok:
            return CertificateReport(
                False, p, seq, coverage, tuple(checked), (n, report)
            )
    return CertificateReport(True, p, seq, coverage, tuple(checked))


@dataclass(frozen=True)
class LibraryEntry:
    """A catalogued pattern: the family it serves, the pattern, its coverage."""

    family: SequenceFamily
    pattern: PatternSpec
    coverage: Coverage
    note: str


_RULER_BLOCK = "12131214"  # the all-purpose period-8 block


def pattern_library() -> list[LibraryEntry]:
    """The complete catalogue of periodic patterns used by the bundled
    characterizations, each bound to its sequence family and coverage.

    Prefix exponents stop where modular arithmetic says they must: with an
    8-periodic star block, prefixes of length 5, 6 or 7 need at most 7, 3
    and 7 copies respectively to reach every residue the combined form
    a*j + 8*m can reach.
    """
    entries: list[LibraryEntry] = []

    def add(family: str, pattern: str, m_min: int, note: str):
        p = parse_pattern(pattern, m_min)
        entries.append(
            LibraryEntry(
                parse_family(family),
                p,
                Coverage(p.fixed_length, p.period, m_min),
                note,
            )
        )

    def prefixed(family: str, prefix: str, reach: int, note: str):
        add(family, f"({_RULER_BLOCK})*", 1, f"{note}; n = 8m")
        for j in range(1, reach + 1):
            add(
                family,
                f"({prefix})^{j}({_RULER_BLOCK})*",
                0,
                f"{note}; n = {len(prefix) * j} + 8m",
            )

    for fam in ("1,2,4,4", "1,2,[4-5],5", "1,2,[4-6],6"):
        prefixed(fam, "1213124", 7, "covers n = 7j + 8m")
    prefixed("1,3,4,4", "13214", 7, "covers n = 5j + 8m")
    for fam in ("1,3,4,5", "1,3,5,5"):
        prefixed(fam, "131214", 3, "covers even n = 6j + 8m")
    add("1,3,4,5", "(1213124)(131214)*", 1, "odd n = 7 + 6m, m >= 1")
    add("1,3,4,5", "(1213124)(13121412)(131214)*", 1, "odd n = 15 + 6m, m >= 1")
    add("1,3,4,5", "(1213124)(13121412)^2(131214)*", 1, "odd n = 23 + 6m, m >= 1")
    for fam in ("1,2,[4-7],7", "1,3,[4-7],7", "1,3,[5-6],6"):
        add(fam, f"({_RULER_BLOCK})*", 1, "n ≡ 0 (mod 8)")
    return entries
