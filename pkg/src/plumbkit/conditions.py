"""Dual-side Working Conditions, the 17 forbidden plumbing configurations, and
the bad-part decomposition of a dual graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graphs import (
    DUAL,
    PLUMBING,
    LinearGraph,
    Vertex,
    adjusted_weights,
    bad_vertices,
    find_induced,
)


def _g(*comps: Sequence[int]) -> LinearGraph:
    return LinearGraph(tuple(tuple(c) for c in comps), PLUMBING)


# Forbidden plumbing configurations (magnitudes), keyed by their letter.
FORBIDDEN_17: dict[str, LinearGraph] = {
    "a": _g([5, 2]),
    "b": _g([6, 2, 2]),
    "c": _g([2], [2]),
    "d": _g([3], [2, 2]),
    "e": _g([3, 2, 2, 3]),
    "f": _g([3, 5, 3, 2]),
    "g": _g([2, 2, 3, 5]),
    "h": _g([4, 3, 2]),
    "i": _g([3, 4, 2]),
    "j": _g([4, 4, 2, 2]),
    "k": _g([3, 4, 3, 3, 2]),
    "l": _g([3, 3], [2]),
    "m": _g([3, 2, 3], [3]),
    "n": _g([4], [4]),
    "o": _g([4], [3, 3]),
    "p": _g([4], [3, 2, 3]),
    "q": _g([3, 3], [3, 3]),
}

# Forbidden runs of consecutive adjusted weights (matched up to reflection).
FORBIDDEN_RUNS: dict[str, tuple[int, ...]] = {
    "VI.a": (1, 0, 0, 2),
    "VI.b": (1, 0, 0, 3),
    "VI.c": (1, 0, 0, 0, 3),
    "VI.d": (1, 1, 0, 0, 1, 2),
    "VI.e": (3, 1, 0, 0, 1),
    "VI.f": (1, 0, 1, 2),
    "VI.g": (1, 0, 1, 3),
    "VI.h": (1, 1, 0, 2),
    "VI.i": (1, 1, 0, 1, 1, 2),
}

# Allowed bad-part shapes: adjusted weights and the positions that must be
# exactly the bad vertices.
BAD_SHAPES: dict[str, tuple[tuple[int, ...], frozenset[int]]] = {
    "a": ((1, 0, 1), frozenset({1})),
    "b": ((1, 0, 2), frozenset({1})),
    "c": ((1, 0, 3), frozenset({1})),
    "d": ((1, 1, 1), frozenset({1})),
    "e": ((1, 1, 2), frozenset({1})),
    "f": ((1, 2, 1), frozenset({1})),
    "g": ((1, 0, 1, 0, 1), frozenset({1, 3})),
    "h": ((1, 0, 1, 0, 2), frozenset({1, 3})),
    "i": ((1, 0, 1, 1, 1), frozenset({1, 3})),
    "j": ((1, 0, 1, 1, 2), frozenset({1, 3})),
    "k": ((1, 1, 1, 1), frozenset({1, 2})),
    "l": ((1, 1, 1, 1, 1), frozenset({1, 2, 3})),
    "m": ((1, 1, 2, 1), frozenset({1, 2})),
}


@dataclass(frozen=True)
class WCReport:
    violations: tuple[tuple[str, tuple[Vertex, ...]], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def ids(self) -> list[str]:
        return [cid for cid, _ in self.violations]


def _require(g: LinearGraph, convention: str) -> None:
    if g.convention != convention:
        raise ValueError(f"expected a {convention} graph, got {g.convention}")


def _match_shape(g: LinearGraph, bad: set[Vertex]) -> Optional[tuple[str, int, int, int]]:
    """Find (shape id, component, start, stop) for the copy holding all bad vertices."""
    comps = {ci for ci, _ in bad}
    if len(comps) != 1:
        return None
    (ci,) = comps
    pos = sorted(i for _, i in bad)
    start, stop = pos[0] - 1, pos[-1] + 2
    if start < 0 or stop > len(g.components[ci]):
        return None
    adj = adjusted_weights(g).adjusted[ci][start:stop]
    rel = frozenset(i - start for i in pos)
    n = stop - start
    for sid, (shape, circled) in BAD_SHAPES.items():
        if len(shape) != n:
            continue
        if adj == shape and rel == circled:
            return sid, ci, start, stop
        if adj == shape[::-1] and rel == frozenset(n - 1 - i for i in circled):
            return sid, ci, start, stop
    return None


def check_working_conditions(g: LinearGraph) -> WCReport:
    _require(g, DUAL)
    adj = adjusted_weights(g)
    verts = g.vertices()
    bad = bad_vertices(g)
    out: list[tuple[str, tuple[Vertex, ...]]] = []

    for v in verts:
        if g.weight(v) < 2:
            out.append(("I", (v,)))

    big = [v for v in verts if adj[v] > 1]
    for v in verts:
        if adj[v] > 3:
            out.append(("II", (v,)))
    if len(big) > 1:
        out.append(("II", tuple(big)))

    for v in big:
        for x in sorted(bad):
            if adj[x] == 1 and not g.adjacent(x, v):
                out.append(("III", (v, x)))

    ones = [(u, v) for u, v in g.edges() if adj[u] == 1 and adj[v] == 1]
    threes = [v for v in verts if adj[v] == 3]
    if threes:
        for u, v in ones:
            out.append(("IV", (threes[0], u, v)))

    for u, v in ones:
        for x in sorted(bad):
            if adj[x] == 2 and not (g.adjacent(x, u) or g.adjacent(x, v)):
                out.append(("V", (u, v, x)))

    for ci, row in enumerate(adj.adjusted):
        for cid, pat in FORBIDDEN_RUNS.items():
            m = len(pat)
            for s in range(len(row) - m + 1):
                seg = row[s : s + m]
                if seg == pat or seg[::-1] == pat:
                    out.append((cid, tuple((ci, i) for i in range(s, s + m))))

    if bad and _match_shape(g, bad) is None:
        out.append(("VII", tuple(sorted(bad))))
    return WCReport(tuple(out))


def check_17(
    p: LinearGraph, configs: Optional[dict[str, LinearGraph]] = None
) -> tuple[bool, list[tuple[str, tuple[Vertex, ...]]]]:
    """Search ``p`` for induced copies of the forbidden configurations."""
    _require(p, PLUMBING)
    hits = []
    for cid, pat in (configs or FORBIDDEN_17).items():
        for sub in sorted(tuple(sorted(s)) for s in find_induced(p, pat)):
            hits.append((cid, sub))
    return not hits, hits


def passes_17(p: LinearGraph) -> bool:
    from .graphs import contains_induced

    return not any(contains_induced(p, pat) for pat in FORBIDDEN_17.values())


@dataclass(frozen=True)
class BadStructure:
    graph: LinearGraph
    shape: str
    component: int
    bad: tuple[Vertex, ...]
    bad_part: tuple[Vertex, ...]
    extended_bad_part: tuple[Vertex, ...]
    outside_part: tuple[Vertex, ...]
    screw_slots: tuple[tuple[str, Vertex, Vertex], ...] = field(default=())

    @property
    def inner_bad_part(self) -> tuple[Vertex, ...]:
        return self.bad_part[1:-1]

    @property
    def necks(self) -> tuple[Vertex, Vertex]:
        return self.bad_part[0], self.bad_part[-1]


def extend_interval(g: LinearGraph, ci: int, start: int, stop: int) -> tuple[int, int]:
    """Grow positions [start, stop) of component ``ci`` to the extended bad part.

    Each end moves outward until it is a leaf or has just passed two
    consecutive vertices of adjusted weight zero.  Returns inclusive ends.
    """
    adj = adjusted_weights(g).adjusted[ci]
    last = len(adj) - 1
    lo = start
    while not (lo == 0 or (adj[lo + 1] == 0 and adj[lo + 2] == 0)):
        lo -= 1
    hi = stop - 1
    while not (hi == last or (adj[hi - 1] == 0 and adj[hi - 2] == 0)):
        hi += 1
    return lo, hi


def bad_structure(g: LinearGraph) -> Optional[BadStructure]:
    """Bad part, extended bad part, outside part and screw slots of a dual graph.

    Returns None when there are no bad vertices.
    """
    _require(g, DUAL)
    bad = bad_vertices(g)
    if not bad:
        return None
    found = _match_shape(g, bad)
    if found is None:
        raise ValueError(f"bad vertices {sorted(bad)} of {g} fit no allowed bad-part shape")
    shape, ci, start, stop = found
    lo, hi = extend_interval(g, ci, start, stop)
    last = len(g.components[ci]) - 1
    ext = tuple((ci, i) for i in range(lo, hi + 1))
    ext_set = set(ext)
    outside = {v for v in g.vertices() if v not in ext_set}
    screws = []
    if lo != 0:
        outside |= {(ci, lo), (ci, lo + 1), (ci, lo + 2)}
        screws.append(("left", (ci, lo + 2), (ci, lo + 3)))
    if hi != last:
        outside |= {(ci, hi), (ci, hi - 1), (ci, hi - 2)}
        screws.append(("right", (ci, hi - 2), (ci, hi - 3)))
    return BadStructure(
        graph=g,
        shape=shape,
        component=ci,
        bad=tuple(sorted(bad)),
        bad_part=tuple((ci, i) for i in range(start, stop)),
        extended_bad_part=ext,
        outside_part=tuple(sorted(outside)),
        screw_slots=tuple(screws),
    )
