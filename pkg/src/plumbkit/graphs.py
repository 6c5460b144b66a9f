"""Weighted linear graphs: disjoint unions of paths.

Weights are stored as positive magnitudes in both conventions.  For a plumbing
graph the actual sphere self-intersections are the negatives of the stored
values; for a dual graph they are the stored values themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

PLUMBING = "plumbing"
DUAL = "dual"
CONVENTIONS = (PLUMBING, DUAL)

Vertex = tuple[int, int]  # (component index, position)


@dataclass(frozen=True)
class LinearGraph:
    components: tuple[tuple[int, ...], ...]
    convention: str = PLUMBING
    _offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        comps = tuple(tuple(int(w) for w in c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        for c in comps:
            if not c:
                raise ValueError("components must be nonempty")
            if any(w < 2 for w in c):
                raise ValueError(f"weights must be >= 2 in magnitude, got {c}")
        offs, total = [], 0
        for c in comps:
            offs.append(total)
            total += len(c)
        object.__setattr__(self, "_offsets", tuple(offs))

    @classmethod
    def chain(cls, weights: Iterable[int], convention: str = PLUMBING) -> "LinearGraph":
        return cls((tuple(weights),), convention)

    @classmethod
    def empty(cls, convention: str = PLUMBING) -> "LinearGraph":
        return cls((), convention)

    # -- basic structure -------------------------------------------------

    def __len__(self) -> int:
        return sum(len(c) for c in self.components)

    @property
    def n_vertices(self) -> int:
        return len(self)

    def vertices(self) -> list[Vertex]:
        return [(ci, i) for ci, c in enumerate(self.components) for i in range(len(c))]

    def weight(self, v: Vertex) -> int:
        return self.components[v[0]][v[1]]

    def weights(self) -> list[int]:
        return [w for c in self.components for w in c]

    def index(self, v: Vertex) -> int:
        """Flat index of a vertex (component-major order)."""
        return self._offsets[v[0]] + v[1]

    def vertex_at(self, idx: int) -> Vertex:
        for ci in range(len(self.components) - 1, -1, -1):
            if idx >= self._offsets[ci]:
                return (ci, idx - self._offsets[ci])
        raise IndexError(idx)

    def neighbors(self, v: Vertex) -> list[Vertex]:
        ci, i = v
        n = len(self.components[ci])
        return [(ci, j) for j in (i - 1, i + 1) if 0 <= j < n]

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return u[0] == v[0] and abs(u[1] - v[1]) == 1

    def is_leaf(self, v: Vertex) -> bool:
        """A vertex of degree at most one."""
        return self.degree(v) <= 1

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        return [((ci, i), (ci, i + 1)) for ci, c in enumerate(self.components) for i in range(len(c) - 1)]

    def with_convention(self, convention: str) -> "LinearGraph":
        return LinearGraph(self.components, convention)

    def union(self, other: "LinearGraph") -> "LinearGraph":
        if other.convention != self.convention:
            raise ValueError("cannot join graphs of different conventions")
        return LinearGraph(self.components + other.components, self.convention)

    def induced(self, subset: Iterable[Vertex]) -> "LinearGraph":
        """The induced subgraph on ``subset``: its maximal runs, in host order."""
        chosen = set(subset)
        comps = []
        for ci, c in enumerate(self.components):
            run: list[int] = []
            for i, w in enumerate(c):
                if (ci, i) in chosen:
                    run.append(w)
                elif run:
                    comps.append(tuple(run))
                    run = []
            if run:
                comps.append(tuple(run))
        return LinearGraph(tuple(comps), self.convention)

    def remove(self, v: Vertex) -> "LinearGraph":
        return self.induced(u for u in self.vertices() if u != v)

    def __str__(self) -> str:
        return format_graph(self)


@dataclass(frozen=True)
class AdjustedView:
    graph: LinearGraph
    adjusted: tuple[tuple[int, ...], ...]

    def __getitem__(self, v: Vertex) -> int:
        return self.adjusted[v[0]][v[1]]

    def flat(self) -> list[int]:
        return [a for c in self.adjusted for a in c]


def adjusted_weights(g: LinearGraph) -> AdjustedView:
    """w'(v) = w(v) - deg(v), componentwise."""
    adj = []
    for c in g.components:
        n = len(c)
        adj.append(tuple(w - (0 if n == 1 else (1 if i in (0, n - 1) else 2)) for i, w in enumerate(c)))
    return AdjustedView(g, tuple(adj))


def bad_vertices(g: LinearGraph) -> set[Vertex]:
    """Vertices with two distinct neighbours of positive adjusted weight."""
    out = set()
    for ci, row in enumerate(adjusted_weights(g).adjusted):
        for i in range(1, len(row) - 1):
            if row[i - 1] > 0 and row[i + 1] > 0:
                out.add((ci, i))
    return out


# -- induced-subgraph matching -----------------------------------------------


def _occurrences(host: LinearGraph, comp: tuple[int, ...]) -> list[tuple[int, int, int]]:
    """Intervals (component, start, stop) of ``host`` equal to ``comp`` or its reverse."""
    m = len(comp)
    rev = comp[::-1]
    out = []
    for ci, c in enumerate(host.components):
        for s in range(len(c) - m + 1):
            seg = c[s : s + m]
            if seg == comp or seg == rev:
                out.append((ci, s, s + m))
    return out


def _iter_matches(host: LinearGraph, pattern: LinearGraph) -> Iterator[frozenset[Vertex]]:
    """Yield the vertex set of every induced copy of ``pattern`` (with repeats)."""
    comps = sorted(pattern.components, key=lambda c: (-len(c), c))
    occ = [_occurrences(host, c) for c in comps]
    if any(not o for o in occ):
        return
    chosen: list[tuple[int, int, int]] = []

    def compatible(iv: tuple[int, int, int]) -> bool:
        ci, s, t = iv
        for cj, s2, t2 in chosen:
            # disjoint and separated by at least one vertex
            if ci == cj and s <= t2 and s2 <= t:
                return False
        return True

    def rec(k: int) -> Iterator[frozenset[Vertex]]:
        if k == len(comps):
            yield frozenset((ci, i) for ci, s, t in chosen for i in range(s, t))
            return
        for iv in occ[k]:
            # identical pattern components are matched in increasing host order
            if k and comps[k] == comps[k - 1] and iv <= chosen[-1]:
                continue
            if compatible(iv):
                chosen.append(iv)
                yield from rec(k + 1)
                chosen.pop()

    yield from rec(0)


def _check_conventions(host: LinearGraph, pattern: LinearGraph) -> None:
    if host.convention != pattern.convention:
        raise ValueError("host and pattern must share a convention")


def contains_induced(host: LinearGraph, pattern: LinearGraph) -> bool:
    """True iff some vertex subset of ``host`` induces a copy of ``pattern``."""
    _check_conventions(host, pattern)
    if len(pattern) == 0:
        return True
    return next(_iter_matches(host, pattern), None) is not None


def find_induced(host: LinearGraph, pattern: LinearGraph) -> set[frozenset[Vertex]]:
    """All distinct vertex subsets of ``host`` inducing a copy of ``pattern``."""
    _check_conventions(host, pattern)
    return set(_iter_matches(host, pattern))


def count_induced(host: LinearGraph, patterns: Sequence[LinearGraph]) -> int:
    """Number of distinct vertex subsets inducing a copy of at least one pattern."""
    subsets: set[frozenset[Vertex]] = set()
    for pat in patterns:
        subsets |= find_induced(host, pat)
    return len(subsets)


def canonical_form(g: LinearGraph) -> LinearGraph:
    comps = sorted(min(c, c[::-1]) for c in g.components)
    return LinearGraph(tuple(comps), g.convention)


def is_isomorphic_graph(g: LinearGraph, h: LinearGraph) -> bool:
    return canonical_form(g) == canonical_form(h)


def subsets_induced(g: LinearGraph, proper: bool = True) -> Iterator[LinearGraph]:
    """Every induced subgraph (by vertex subset), largest first; the empty graph is skipped."""
    verts = g.vertices()
    top = len(verts) - 1 if proper else len(verts)
    for r in range(top, 0, -1):
        for sub in combinations(verts, r):
            yield g.induced(sub)


# -- text format -------------------------------------------------------------


def parse_graph(text: str, convention: str = PLUMBING) -> LinearGraph:
    """Parse ``"-3,-2,-3;-4"``: components split on ``;``, weights on ``,``."""
    text = text.strip()
    if not text:
        raise ValueError("empty graph string")
    comps = []
    for ci, part in enumerate(text.split(";")):
        items = [t.strip() for t in part.split(",")]
        comp = []
        for i, item in enumerate(items):
            tok = item[1:] if item.startswith("-") else item
            if not tok.isdigit():
                raise ValueError(f"bad weight {item!r} at component {ci + 1}, position {i + 1} of {text!r}")
            comp.append(int(tok))
        comps.append(tuple(comp))
    return LinearGraph(tuple(comps), convention)


def format_graph(g: LinearGraph, signed: bool = False) -> str:
    sign = "-" if signed and g.convention == PLUMBING else ""
    return ";".join(",".join(f"{sign}{w}" for w in c) for c in g.components)
