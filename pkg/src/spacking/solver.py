"""Exact coloring solvers for paths and cycles.

Two independent engines decide whether an S-packing k-coloring exists.

The automaton engine drives all production queries.  Its states are capped
gap vectors: for each color i the distance back to its most recent use,
saturated at s_i (the saturated value means "free").  Appending color c is
legal exactly when c's gap is saturated, so valid path colorings of length
n are walks of length n out of the all-free state.  Valid cycle colorings
of length n > W, with W = max_i s_i, are closed walks of length n in the
reachable state graph: closing the walk forces every stored gap to equal
the true capped distance in the cyclic word, and saturation is reached
before the seam can alias a vertex with itself.  For n <= W that argument
breaks down (a color used once would collide with itself across the seam),
so small cycles go to the backtracking engine instead.

Layered reachability over gap states answers path queries; for chromatic
values only, each layer is thinned to its dominance-maximal states (a state
with pointwise larger gaps permits every continuation of a smaller one),
which keeps even wide separation vectors tractable.  Cycle queries scan
seed states in index order, each restricted to states of index >= seed: a
closed walk is always found at its minimum-index state, so the restriction
loses nothing and shrinks the later searches.

The backtracking engine (`brute_force_chromatic`) enumerates colorings
position by position, pruning only on the immediate validity of each
placement.  It is deliberately naive: its job is to cross-check the
automaton on small instances, so it shares no machinery with it.

A necessary capacity condition prefilters hopeless color budgets: color i
fits at most ceil(n/(s_i+1)) times on a path and max(1, floor(n/(s_i+1)))
times on a cycle, so budgets whose capacities sum below n are rejected
without a search.

All caches are plain dicts keyed by immutable tuples: safe for concurrent
reads; writes are idempotent recomputations, so racing threads at worst
duplicate work.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, GraphSpec, validate
from .sequences import PackingSequence

ORACLE_SIZE_BOUND = 18
_STATE_LIMIT = 200_000

_PATH_SCANS: dict[tuple[int, ...], "_PathScan"] = {}
_AUTOMATA: dict[tuple[int, ...], "_Automaton"] = {}
_CYCLE_SCANS: dict[tuple[int, ...], "_CycleScan"] = {}
_VALUE_CACHE: dict[tuple[str, int, tuple[int, ...]], int] = {}


@dataclass(frozen=True)
class SolveResult:
    chromatic: int
    witness: Coloring


class _StateLimitExceeded(Exception):
    pass


def _step(g: tuple[int, ...], c: int, caps: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(
        0 if i == c else (v + 1 if v < caps[i] else v) for i, v in enumerate(g)
    )


def _capacity_ok(kind: str, n: int, caps: tuple[int, ...]) -> bool:
    total = 0
    for s in caps:
        if kind == "cycle":
            total += max(1, n // (s + 1))
        else:
            total += (n + s) // (s + 1)
        if total >= n:
            return True
    return False


class _PathScan:
    """Lazily extended layered reachability with dominance pruning."""

    def __init__(self, caps: tuple[int, ...]):
        self.caps = caps
        self.layer: list[tuple[int, ...]] = [caps]
        self.length = 0
        self.dead = False

    def max_feasible_length(self, horizon: int) -> int:
        """Largest feasible length found while scanning up to `horizon`.

        A return value >= horizon means alive through the horizon; anything
        smaller is the exact maximum feasible length.
        """
        caps = self.caps
        k = len(caps)
        while not self.dead and self.length < horizon:
            nxt = set()
            for g in self.layer:
                for c in range(k):
                    if g[c] == caps[c]:
                        nxt.add(_step(g, c, caps))
            if not nxt:
                self.dead = True
                break
            kept: list[tuple[int, ...]] = []
            for g in sorted(nxt, key=sum, reverse=True):
                if not any(all(x >= y for x, y in zip(h, g)) for h in kept):
                    kept.append(g)
            self.layer = kept
            self.length += 1
        return self.length


def _path_scan(caps: tuple[int, ...]) -> _PathScan:
    scan = _PATH_SCANS.get(caps)
    if scan is None:
        scan = _PATH_SCANS[caps] = _PathScan(caps)
    return scan


class _Automaton:
    """Full reachable gap-state graph for one separation vector."""

    def __init__(self, caps: tuple[int, ...], limit: int = _STATE_LIMIT):
        self.caps = caps
        k = len(caps)
        index = {caps: 0}
        order = [caps]
        trans: list[list[tuple[int, int]]] = []
        qi = 0
        while qi < len(order):
            g = order[qi]
            qi += 1
            row = []
            for c in range(k):
                if g[c] == caps[c]:
                    h = _step(g, c, caps)
                    j = index.get(h)
                    if j is None:
                        j = len(order)
                        if j > limit:
                            raise _StateLimitExceeded(caps)
                        index[h] = j
                        order.append(h)
                    row.append((c, j))
            trans.append(row)
        m = len(order)
        succ = [0] * m
        pred = [0] * m
        for u, row in enumerate(trans):
            for _, j in row:
                succ[u] |= 1 << j
                pred[j] |= 1 << u
        self.states = order
        self.trans = trans
        self.succ_mask = succ
        self.pred_mask = pred


def _automaton(caps: tuple[int, ...]) -> _Automaton:
    auto = _AUTOMATA.get(caps)
    if auto is None:
        auto = _AUTOMATA[caps] = _Automaton(caps)
    return auto


class _CycleScan:
    """Closed-walk length oracle over an automaton (valid for n > max cap)."""

    def __init__(self, auto: _Automaton):
        self.auto = auto
        m = len(auto.states)
        alive = (1 << m) - 1
        # states off every cycle of the graph can never close a walk
        changed = True
        while changed:
            changed = False
            for u in range(m):
                if alive >> u & 1:
                    if not (auto.succ_mask[u] & alive) or not (
                        auto.pred_mask[u] & alive
                    ):
                        alive &= ~(1 << u)
                        changed = True
        self.core_mask = alive
        self.core = [u for u in range(m) if alive >> u & 1]
        self._layers: dict[int, list[int]] = {u: [1 << u] for u in self.core}
        self._feasible: dict[int, bool] = {}
        self._seed: dict[int, int] = {}

    def _extend(self, u: int, n: int) -> list[int]:
        layers = self._layers[u]
        if len(layers) <= n and layers[-1]:
            succ = self.auto.succ_mask
            restrict = self.core_mask & ~((1 << u) - 1)
            mask = layers[-1]
            while len(layers) <= n:
                acc = 0
                m = mask
                while m:
                    lsb = m & -m
                    acc |= succ[lsb.bit_length() - 1]
                    m ^= lsb
                mask = acc & restrict
                layers.append(mask)
                if not mask:
                    break
        return layers

    def feasible(self, n: int) -> bool:
        known = self._feasible.get(n)
        if known is not None:
            return known
        for u in self.core:
            layers = self._extend(u, n)
            if len(layers) > n and layers[n] >> u & 1:
                self._feasible[n] = True
                self._seed[n] = u
                return True
        self._feasible[n] = False
        return False

    def witness_colors(self, n: int) -> tuple[int, ...]:
        """Colors (1-based) of the closed walk found by feasible(n); walks
        are reconstructed smallest-color-first for determinism."""
        u = self._seed[n]
        auto = self.auto
        restrict = self.core_mask & ~((1 << u) - 1)
        back = [0] * (n + 1)
        back[n] = 1 << u
        for t in range(n - 1, -1, -1):
            acc = 0
            m = back[t + 1]
            while m:
                lsb = m & -m
                acc |= auto.pred_mask[lsb.bit_length() - 1]
                m ^= lsb
            back[t] = acc & restrict
        colors = []
        v = u
        for t in range(1, n + 1):
            for c, j in auto.trans[v]:
                if back[t] >> j & 1:
                    colors.append(c + 1)
                    v = j
                    break
            else:
                raise AssertionError("witness reconstruction lost the walk")
        return tuple(colors)


def _cycle_scan(caps: tuple[int, ...]) -> _CycleScan:
    scan = _CYCLE_SCANS.get(caps)
    if scan is None:
        scan = _CYCLE_SCANS[caps] = _CycleScan(_automaton(caps))
    return scan


def _backtrack(g: GraphSpec, seq: PackingSequence, k: int) -> tuple[int, ...] | None:
    """Plain depth-first search over colorings, smallest color first.

    Prunes only on the immediate validity of each placement; returns the
    first complete coloring found, or None.
    """
    n = g.n
    colors = [0] * n
    dist = g.distance

    def ok(pos: int, c: int) -> bool:
        sc = seq.entry(c)
        for q in range(pos):
            if colors[q] == c and dist(pos + 1, q + 1) <= sc:
                return False
        return True

    def dfs(pos: int) -> bool:
        if pos == n:
            return True
        for c in range(1, k + 1):
            if ok(pos, c):
                colors[pos] = c
                if dfs(pos + 1):
                    return True
                colors[pos] = 0
        return False

    return tuple(colors) if dfs(0) else None


def _path_feasible(seq: PackingSequence, n: int, k: int) -> bool:
    caps = seq.prefix(k)
    if not _capacity_ok("path", n, caps):
        return False
    return _path_scan(caps).max_feasible_length(n) >= n


def _path_witness(seq: PackingSequence, n: int, k: int) -> tuple[int, ...]:
    """Greedy smallest-color witness, guided by a survival-depth memo."""
    caps = seq.prefix(k)
    proven_alive: dict[tuple[int, ...], int] = {}
    proven_dead: dict[tuple[int, ...], int] = {}

    def survive(g: tuple[int, ...], r: int) -> bool:
        if r <= proven_alive.get(g, 0):
            return True
        if r >= proven_dead.get(g, r + 1):
            return False
        for c in range(k):
            if g[c] == caps[c] and survive(_step(g, c, caps), r - 1):
                proven_alive[g] = max(proven_alive.get(g, 0), r)
                return True
        proven_dead[g] = min(proven_dead.get(g, r), r)
        return False

    g = caps
    colors = []
    for t in range(1, n + 1):
        for c in range(k):
            if g[c] == caps[c]:
                h = _step(g, c, caps)
                if survive(h, n - t):
                    colors.append(c + 1)
                    g = h
                    break
        else:
            raise AssertionError(f"no witness at k={k}, n={n} for {seq}")
    return tuple(colors)


def _cycle_feasible(seq: PackingSequence, n: int, k: int):
    """(feasible, witness-or-None); witness computed only for small cycles,
    where it falls out of the backtracking run anyway."""
    caps = seq.prefix(k)
    if not _capacity_ok("cycle", n, caps):
        return False, None
    if n <= max(caps):
        wit = _backtrack(GraphSpec("cycle", n), seq, k)
        return wit is not None, wit
    try:
        return _cycle_scan(caps).feasible(n), None
    except _StateLimitExceeded:
        wit = _backtrack(GraphSpec("cycle", n), seq, k)
        return wit is not None, wit


def _cycle_witness(seq: PackingSequence, n: int, k: int) -> tuple[int, ...]:
    ok, wit = _cycle_feasible(seq, n, k)
    if not ok:
        raise AssertionError(f"no witness at k={k}, n={n} for {seq}")
    if wit is not None:
        return wit
    return _cycle_scan(seq.prefix(k)).witness_colors(n)


def chromatic_value(g: GraphSpec, seq: PackingSequence) -> int:
    """The chromatic number alone, skipping witness extraction."""
    key = (g.kind, g.n, seq.key())
    cached = _VALUE_CACHE.get(key)
    if cached is not None:
        return cached
    if g.kind == "path":
        k = 1
        while not _path_feasible(seq, g.n, k):
            k += 1
    else:
        # a path is a subgraph of the cycle, so its value is a lower bound
        k = chromatic_value(GraphSpec("path", g.n), seq)
        while not _cycle_feasible(seq, g.n, k)[0]:
            k += 1
    _VALUE_CACHE[key] = k
    return k


def feasible(g: GraphSpec, seq: PackingSequence, k: int):
    """Whether an S-packing k-coloring of g exists; (bool, witness | None).

    k larger than needed simply answers True.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if g.kind == "path":
        if not _path_feasible(seq, g.n, k):
            return False, None
        return True, Coloring(_path_witness(seq, g.n, k), k)
    ok, wit = _cycle_feasible(seq, g.n, k)
    if not ok:
        return False, None
    if wit is None:
        wit = _cycle_witness(seq, g.n, k)
    return True, Coloring(wit, k)


def chromatic(g: GraphSpec, seq: PackingSequence) -> SolveResult:
    """Smallest k admitting an S-packing k-coloring, with a witness.

    Feasibility is monotone in k and k = n always suffices (all colors
    distinct), so the ascending search terminates.  Witnesses are
    deterministic: ties always break toward the smallest color.
    """
    k = chromatic_value(g, seq)
    if g.kind == "path":
        wit = _path_witness(seq, g.n, k)
    else:
        wit = _cycle_witness(seq, g.n, k)
    return SolveResult(k, Coloring(wit, k))


def brute_force_chromatic(
    g: GraphSpec, seq: PackingSequence, k_max: int, size_bound: int = ORACLE_SIZE_BOUND
) -> SolveResult:
    """Independent oracle: exhaustive backtracking, ascending k.

    Restricted to small graphs; raises when n exceeds the size bound or no
    coloring with at most k_max colors exists.
    """
    if g.n > size_bound:
        raise ValueError(f"oracle size bound exceeded: n={g.n} > {size_bound}")
    if k_max < 1:
        raise ValueError("need k_max >= 1")
    for k in range(1, k_max + 1):
        wit = _backtrack(g, seq, k)
        if wit is not None:
            return SolveResult(k, Coloring(wit, k))
    raise ValueError(f"no coloring of {g} with at most {k_max} colors")


def clear_caches() -> None:
    """Drop all memoized automata and values (mainly for tests)."""
    _PATH_SCANS.clear()
    _AUTOMATA.clear()
    _CYCLE_SCANS.clear()
    _VALUE_CACHE.clear()
