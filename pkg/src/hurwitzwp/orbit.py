"""Budgeted breadth-first search of Hurwitz orbits.

Hurwitz equivalence is only semi-decidable, so every search runs under a
:class:`SearchBudget`.  A ``found`` outcome always carries a braid that was
re-executed and reproduces the target exactly.  ``refuted`` is returned only
when an invariant of the action (the product, or the multiset of conjugacy
classes of the entries) already tells the tuples apart, or when a forward
search enumerated the entire orbit without truncation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .errors import MalformedInputError
from .hurwitz import BraidWord, Factorization, apply_braid, conjugacy_multiset

FOUND = "found"
EXHAUSTED = "exhausted-budget"
REFUTED = "refuted"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 100_000
    max_braid_length: int = 12
    max_element_length: int = 64

    def __post_init__(self):
        for name in ("max_nodes", "max_braid_length", "max_element_length"):
            if getattr(self, name) < 1:
                raise MalformedInputError(f"{name} must be positive")


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    nodes_seen: int = 0
    frontier_peak: int = 0
    dedup_hits: int = 0
    pruned_by_length: int = 0
    depth_reached: int = 0
    reason: str = ""


@dataclass
class SearchOutcome:
    status: str
    witness: BraidWord | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def found(self) -> bool:
        return self.status == FOUND


def canonical_key(F: Factorization) -> bytes:
    """Injective byte encoding of a factorization's reduced entries."""
    return repr(tuple(f.key() for f in F.elements)).encode()


def stabilizer_check(F: Factorization, b: BraidWord) -> bool:
    return apply_braid(F, b) == F


def _neighbors(strands: int) -> list[int]:
    out = []
    for i in range(1, strands):
        out += [i, -i]
    return out


def _step(els: tuple, a: int) -> tuple:
    i = abs(a) - 1
    x, y = els[i], els[i + 1]
    if a > 0:
        new = (y, y.inverse() * x * y)
    else:
        new = (x * y * x.inverse(), x)
    return els[:i] + new + els[i + 2 :]


def _too_long(els: tuple, cap: int) -> bool:
    return any(e.size() > cap for e in els)


def _path(parents: dict, key) -> list[int]:
    letters = []
    while parents[key] is not None:
        key, a = parents[key]
        letters.append(a)
    letters.reverse()
    return letters


def _precheck(F1: Factorization, F2: Factorization) -> str | None:
    if len(F1) != len(F2):
        raise MalformedInputError(f"tuples of lengths {len(F1)} and {len(F2)}")
    if type(F1.product) is not type(F2.product):
        raise MalformedInputError("tuples live in different groups")
    if F1.product != F2.product:
        return "products differ"
    if conjugacy_multiset(F1) != conjugacy_multiset(F2):
        return "conjugacy classes of the entries differ"
    return None


def orbit_search(
    F1: Factorization,
    F2: Factorization,
    budget: SearchBudget = SearchBudget(),
    bidirectional: bool = False,
) -> SearchOutcome:
    """Look for a braid b with F1 b = F2 within the budget."""
    reason = _precheck(F1, F2)
    if reason is not None:
        return SearchOutcome(REFUTED, None, SearchStats(reason=reason))
    if F1 == F2:
        return SearchOutcome(FOUND, BraidWord(len(F1)), SearchStats(reason="identical"))
    if bidirectional:
        out = _bidirectional(F1, F2, budget)
    else:
        out = _forward(F1, F2, budget)
    if out.witness is not None and apply_braid(F1, out.witness) != F2:
        raise AssertionError("orbit search produced a witness that does not re-execute")
    return out


def _forward(F1: Factorization, F2: Factorization, budget: SearchBudget) -> SearchOutcome:
    k = len(F1)
    moves = _neighbors(k)
    stats = SearchStats()
    target = F2.elements
    parents: dict = {F1.elements: None}
    frontier = deque([(F1.elements, 0)])
    stats.nodes_seen = 1
    truncated = False
    while frontier:
        els, depth = frontier.popleft()
        if depth >= budget.max_braid_length:
            truncated = True
            continue
        if stats.nodes_expanded >= budget.max_nodes:
            stats.reason = "node budget"
            return SearchOutcome(EXHAUSTED, None, stats)
        stats.nodes_expanded += 1
        for a in moves:
            nxt = _step(els, a)
            if nxt in parents:
                stats.dedup_hits += 1
                continue
            if _too_long(nxt, budget.max_element_length):
                stats.pruned_by_length += 1
                continue
            parents[nxt] = (els, a)
            stats.nodes_seen += 1
            stats.depth_reached = max(stats.depth_reached, depth + 1)
            if nxt == target:
                return SearchOutcome(FOUND, BraidWord(k, tuple(_path(parents, nxt))), stats)
            frontier.append((nxt, depth + 1))
        stats.frontier_peak = max(stats.frontier_peak, len(frontier))
    if not truncated and not stats.pruned_by_length:
        # the whole (finite) orbit of F1 was enumerated
        stats.reason = "orbit exhausted"
        return SearchOutcome(REFUTED, None, stats)
    stats.reason = "depth budget" if stats.pruned_by_length == 0 else "depth/length budget"
    return SearchOutcome(EXHAUSTED, None, stats)


def _bidirectional(F1: Factorization, F2: Factorization, budget: SearchBudget) -> SearchOutcome:
    """Grow full BFS layers from both ends (smaller layer first); meet on tuple equality."""
    k = len(F1)
    moves = _neighbors(k)
    stats = SearchStats()
    sides = [
        {"parents": {F1.elements: None}, "layer": [F1.elements], "depth": 0},
        {"parents": {F2.elements: None}, "layer": [F2.elements], "depth": 0},
    ]
    stats.nodes_seen = 2
    while sides[0]["depth"] + sides[1]["depth"] < budget.max_braid_length:
        live = [s for s in (0, 1) if sides[s]["layer"]]
        if not live:
            break
        turn = min(live, key=lambda s: (len(sides[s]["layer"]), s))
        me, other = sides[turn], sides[1 - turn]
        nxt_layer = []
        for els in me["layer"]:
            if stats.nodes_expanded >= budget.max_nodes:
                stats.reason = "node budget"
                return SearchOutcome(EXHAUSTED, None, stats)
            stats.nodes_expanded += 1
            for a in moves:
                nxt = _step(els, a)
                if nxt in me["parents"]:
                    stats.dedup_hits += 1
                    continue
                if _too_long(nxt, budget.max_element_length):
                    stats.pruned_by_length += 1
                    continue
                me["parents"][nxt] = (els, a)
                stats.nodes_seen += 1
                if nxt in other["parents"]:
                    fwd = sides[0]["parents"]
                    bwd = sides[1]["parents"]
                    # F1 . path1 = M and F2 . path2 = M, so F1 . path1 . path2^-1 = F2
                    p1 = _path(fwd, nxt)
                    p2 = _path(bwd, nxt)
                    letters = tuple(p1) + tuple(-a for a in reversed(p2))
                    stats.depth_reached = len(letters)
                    return SearchOutcome(FOUND, BraidWord(k, letters), stats)
                nxt_layer.append(nxt)
        me["layer"] = nxt_layer
        me["depth"] += 1
        stats.frontier_peak = max(stats.frontier_peak, len(nxt_layer))
        stats.depth_reached = sides[0]["depth"] + sides[1]["depth"]
    stats.reason = "depth budget"
    return SearchOutcome(EXHAUSTED, None, stats)


def braid_words(strands: int, length: int) -> Iterator[BraidWord]:
    """All braid words of exactly ``length`` letters (no free cancellation)."""
    moves = _neighbors(strands)

    def rec(prefix: tuple):
        if len(prefix) == length:
            yield BraidWord(strands, prefix)
            return
        for a in moves:
            yield from rec(prefix + (a,))

    yield from rec(())
