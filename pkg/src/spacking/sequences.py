"""Packing sequences, sequence families, and the transforms between them.

A packing sequence S = (s_1, s_2, ...) is a non-decreasing sequence of
positive integers: color i may repeat only at distance greater than s_i.
Sequences are stored as a finite prefix plus a constant tail (s_i = s_L for
i > L).  The representation is total and exact for everything computed
here, since a graph on n vertices is only ever constrained by s_1..s_n.

Literal syntax (shared with the CLI and config files):

    "1,2,4,7"        a single sequence
    "1,2,[4-7],7"    a family: s_3 ranges over 4..7, the rest fixed

A family has at most one ranged entry.  Enumerating it instantiates each
choice of the ranged entry with a constant tail equal to the last fixed
value (the canonical representative).
"""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True)
class PackingSequence:
    """Finite prefix of a packing sequence, extended by a constant tail."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a packing sequence needs at least one entry")
        if any(e < 1 for e in self.entries):
            raise ValueError(f"entries must be positive: {self.entries}")
        if any(a > b for a, b in zip(self.entries, self.entries[1:])):
            raise ValueError(f"entries must be non-decreasing: {self.entries}")

    def entry(self, i: int) -> int:
        """s_i for any i >= 1 (constant beyond the stored prefix)."""
        if i < 1:
            raise IndexError("sequence indices are 1-based")
        return self.entries[min(i, len(self.entries)) - 1]

    def prefix(self, k: int) -> tuple[int, ...]:
        """(s_1, ..., s_k)."""
        return tuple(self.entry(i) for i in range(1, k + 1))

    def key(self) -> tuple[int, ...]:
        """Canonical form: trailing repeats of the last value dropped.

        (1,2,4,4) and (1,2,4) denote the same infinite sequence and share
        the same key.
        """
        e = list(self.entries)
        while len(e) > 1 and e[-1] == e[-2]:
            e.pop()
        return tuple(e)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)


@dataclass(frozen=True)
class SkClass:
    """Position of a sequence in the doubling-band hierarchy.

    A sequence sits at level k >= 2 when 2^(i-1) <= s_i < 2^i holds for all
    i <= k-1 and s_k < 2^(k-1).  k is None for sequences outside every level.
    """

    k: int | None


def classify(seq: PackingSequence) -> SkClass:
    """Smallest k >= 2 whose doubling-band conditions the sequence satisfies.

    Decidable under the constant tail: the band condition at index i fails
    for every i with 2^(i-1) above the tail value, so only finitely many k
    are candidates.
    """
    top = max(seq.entries).bit_length() + 2
    for k in range(2, top + 1):
        if seq.entry(k) < 1 << (k - 1) and all(
            1 << (i - 1) <= seq.entry(i) < 1 << i for i in range(1, k)
        ):
            return SkClass(k)
    return SkClass(None)


def halve(seq: PackingSequence) -> PackingSequence:
    """The sequence S' with s'_i = floor(s_(i+1) / 2).

    Requires s_1 = 1.  Rejects sequences whose halving would produce a zero
    entry (s_2 = 1): clamping would silently change the semantics.
    """
    if seq.entry(1) != 1:
        raise ValueError(f"halve requires s_1 = 1, got {seq}")
    length = max(len(seq.entries) - 1, 1)
    halved = tuple(seq.entry(i + 1) // 2 for i in range(1, length + 1))
    if halved[0] < 1:
        raise ValueError(f"halving {seq} would produce a zero entry")
    return PackingSequence(halved)


def normalize_odd(seq: PackingSequence) -> PackingSequence:
    """Bump every even entry beyond the first to the next odd integer.

    Requires s_1 = 1.  Taking the larger of the two permitted values gives
    the strongest normal form; path chromatic numbers are unchanged.
    """
    if seq.entry(1) != 1:
        raise ValueError(f"normalize_odd requires s_1 = 1, got {seq}")
    out = (1,) + tuple(
        e if e % 2 == 1 else e + 1 for e in seq.entries[1:]
    )
    return PackingSequence(out)


def dominates(a: PackingSequence, b: PackingSequence) -> bool:
    """Entrywise a_i <= b_i under the tail rules."""
    horizon = max(len(a.entries), len(b.entries))
    return all(a.entry(i) <= b.entry(i) for i in range(1, horizon + 1))


@dataclass(frozen=True)
class SequenceFamily:
    """Constraint box over a sequence prefix: fixed entries plus at most one
    ranged entry, extended by a constant tail equal to the last fixed value."""

    fixed: tuple[tuple[int, int], ...]
    ranged: tuple[int, int, int] | None = None

    def __post_init__(self):
        indices = sorted(i for i, _ in self.fixed)
        if self.ranged is not None:
            idx, lo, hi = self.ranged
            if lo > hi:
                raise ValueError(f"empty range {lo}..{hi} at index {idx}")
            indices.append(idx)
            indices.sort()
        length = len(indices)
        if indices != list(range(1, length + 1)):
            raise ValueError(f"family indices must cover 1..{length} once each")
        self.members()  # every member must be a valid packing sequence

    @property
    def length(self) -> int:
        return len(self.fixed) + (1 if self.ranged is not None else 0)

    def _template(self) -> list[int | None]:
        slots: list[int | None] = [None] * self.length
        for i, v in self.fixed:
            slots[i - 1] = v
        return slots

    def members(self) -> list[PackingSequence]:
        """Every sequence in the family, each with a constant tail."""
        slots = self._template()
        if self.ranged is None:
            return [PackingSequence(tuple(slots))]
        idx, lo, hi = self.ranged
        out = []
        for v in range(lo, hi + 1):
            slots[idx - 1] = v
            out.append(PackingSequence(tuple(slots)))
        return out

    def __str__(self) -> str:
        slots: list[str] = [str(v) for v in self._template()]
        if self.ranged is not None:
            idx, lo, hi = self.ranged
            slots[idx - 1] = f"[{lo}-{hi}]"
        return ",".join(slots)


def enumerate_family(fam: SequenceFamily) -> list[PackingSequence]:
    """All representatives of the family (see SequenceFamily.members)."""
    return fam.members()


_RANGE_TOKEN = re.compile(r"^\[(\d+)-(\d+)\]$")


def parse_sequence(text: str) -> PackingSequence:
    """Parse a comma-separated sequence literal such as "1,2,4,7"."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise ValueError(f"empty sequence literal: {text!r}")
    try:
        entries = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"bad sequence literal: {text!r}") from None
    return PackingSequence(entries)


def parse_family(text: str) -> SequenceFamily:
    """Parse a family literal such as "1,2,[4-7],7" (or a plain sequence)."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise ValueError(f"empty family literal: {text!r}")
    fixed = []
    ranged = None
    for pos, tok in enumerate(tokens, start=1):
        m = _RANGE_TOKEN.match(tok)
        if m:
            if ranged is not None:
                raise ValueError(f"at most one ranged entry allowed: {text!r}")
            ranged = (pos, int(m.group(1)), int(m.group(2)))
        elif tok.isdigit():
            fixed.append((pos, int(tok)))
        else:
            raise ValueError(f"bad family token {tok!r} in {text!r}")
    return SequenceFamily(tuple(fixed), ranged)


def doubling_band_suite(
    k_min: int = 2, k_max: int = 6, entry_cap: int = 31, per_class: int = 12
) -> list[PackingSequence]:
    """Deterministic sample of sequences from each doubling-band level.

    Levels with few members are enumerated exhaustively; larger ones are
    thinned to `per_class` members by even striding, so the suite is stable
    across runs without any randomness.
    """
    suite: list[PackingSequence] = []
    for k in range(k_min, k_max + 1):
        members = sorted(_enumerate_band_level(k, entry_cap))
        if len(members) > per_class:
            idx = {
                round(i * (len(members) - 1) / (per_class - 1))
                for i in range(per_class)
            }
            members = [members[i] for i in sorted(idx)]
        suite.extend(PackingSequence(m) for m in members)
    return suite


def _enumerate_band_level(k: int, entry_cap: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], i: int):
        if i == k:
            lo = max(prefix[-1], 1)
            hi = min((1 << (k - 1)) - 1, entry_cap)
            out.extend(prefix + (v,) for v in range(lo, hi + 1))
            return
        lo = max(1 << (i - 1), prefix[-1] if prefix else 1)
        hi = min((1 << i) - 1, entry_cap)
        for v in range(lo, hi + 1):
            extend(prefix + (v,), i + 1)

    extend((), 1)
    return out
