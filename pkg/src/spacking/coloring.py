"""Paths, cycles, colorings, and validity checking.

Vertices are 1-indexed throughout; the congruence-based ruler coloring
below depends on that convention.  A coloring assigns every vertex a color
in 1..k and is valid for a sequence S when any two vertices sharing color
i sit at distance greater than s_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequences import PackingSequence


@dataclass(frozen=True)
class GraphSpec:
    """A path or a cycle, identified by kind and order."""

    kind: str  # "path" | "cycle"
    n: int

    def __post_init__(self):
        if self.kind not in ("path", "cycle"):
            raise ValueError(f"unknown graph kind {self.kind!r}")
        if self.kind == "path" and self.n < 1:
            raise ValueError("a path needs at least one vertex")
        if self.kind == "cycle" and self.n < 3:
            raise ValueError("a cycle needs at least three vertices")

    def distance(self, u: int, v: int) -> int:
        d = abs(u - v)
        if self.kind == "cycle":
            return min(d, self.n - d)
        return d

    def __str__(self) -> str:
        return f"{'P' if self.kind == 'path' else 'C'}{self.n}"


def path(n: int) -> GraphSpec:
    return GraphSpec("path", n)


def cycle(n: int) -> GraphSpec:
    return GraphSpec("cycle", n)


@dataclass(frozen=True)
class Coloring:
    """Total vertex labeling with colors in 1..k."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("color budget must be at least 1")
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ValueError(f"colors out of range 1..{self.k}: {bad}")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validity check; carries the first violating pair so
    failing property tests are diagnosable."""

    ok: bool
    witness: tuple[int, int, int, int] | None = None  # (u, v, color, distance)

    def __bool__(self) -> bool:
        return self.ok


def validate(g: GraphSpec, seq: PackingSequence, c: Coloring) -> ValidationReport:
    """Check the separation condition for every same-colored pair.

    Only pairs within distance max_i s_i can violate, so the scan is
    windowed; the witness returned on failure is the lexicographically
    first violating pair (u, v, color, distance).
    """
    n = g.n
    if len(c.colors) != n:
        raise ValueError(f"coloring has {len(c.colors)} entries, graph has {n}")
    colors = c.colors
    window = max(seq.entry(col) for col in set(colors))
    for u in range(1, n + 1):
        cu = colors[u - 1]
        su = seq.entry(cu)
        near_end = min(n, u + window)
        for v in range(u + 1, near_end + 1):
            if colors[v - 1] == cu and v - u <= su:
                return ValidationReport(False, (u, v, cu, v - u))
        if g.kind == "cycle":
            for v in range(max(near_end + 1, n - window + u), n + 1):
                if colors[v - 1] == cu:
                    d = g.distance(u, v)
                    if d <= su:
                        return ValidationReport(False, (u, v, cu, d))
    return ValidationReport(True)


def canonical_path_coloring(n: int, k: int) -> Coloring:
    """The binary-ruler coloring of a path: vertex i gets the position of
    the lowest set bit of i, capped at k.

    Equivalently, color j <= k-1 goes to i = 2^(j-1) (mod 2^j) and color k
    to multiples of 2^(k-1); min(k, floor(log2 n) + 1) colors appear.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if k < 2:
        raise ValueError("need k >= 2")
    colors = tuple(min((i & -i).bit_length(), k) for i in range(1, n + 1))
    return Coloring(colors, min(k, n.bit_length()))


def used_colors(c: Coloring) -> int:
    """Number of distinct colors present."""
    return len(set(c.colors))


def coloring_to_text(c: Coloring) -> str:
    """Digit string for colors up to 9, comma-separated list beyond."""
    if max(c.colors) <= 9:
        return "".join(str(v) for v in c.colors)
    return ",".join(str(v) for v in c.colors)


def parse_coloring(text: str, k: int | None = None) -> Coloring:
    """Inverse of coloring_to_text."""
    text = text.strip()
    if "," in text:
        values = tuple(int(t) for t in text.split(","))
    else:
        values = tuple(int(ch) for ch in text)
    if not values:
        raise ValueError("empty coloring literal")
    return Coloring(values, max(values) if k is None else k)
