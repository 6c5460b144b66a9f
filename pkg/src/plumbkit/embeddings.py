"""Enumeration and classification of embeddings of dual graphs into Z^n.

Embeddings are counted up to signed permutations of the coordinates.  An
embedding is stored through its matrix of columns (one column per coordinate,
one entry per vertex); after flipping every column so its first nonzero entry
is positive, the sorted multiset of columns is a complete invariant of the
orbit.  Vertices are added one row at a time and the partial column multiset
is kept canonical, so every orbit is produced exactly once.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, Iterator, Optional, Sequence

from .conditions import extend_interval
from .graphs import DUAL, LinearGraph, Vertex, bad_vertices

Column = tuple[int, ...]

STANDARD = "standard"
SEMI_STANDARD = "semi-standard"
NEITHER = "neither"


@dataclass(frozen=True)
class Embedding:
    graph: LinearGraph
    columns: tuple[Column, ...]

    @property
    def dim(self) -> int:
        return len(self.columns)

    @property
    def vectors(self) -> tuple[tuple[int, ...], ...]:
        """One integer vector per vertex, in flat vertex order."""
        n = len(self.graph)
        return tuple(tuple(c[i] for c in self.columns) for i in range(n))

    def vector(self, v: Vertex) -> tuple[int, ...]:
        i = self.graph.index(v)
        return tuple(c[i] for c in self.columns)

    def support(self, v: Vertex) -> frozenset[int]:
        i = self.graph.index(v)
        return frozenset(k for k, c in enumerate(self.columns) if c[i])

    def is_valid(self) -> bool:
        return verify_vectors(self.graph, self.vectors)

    @classmethod
    def from_vectors(cls, graph: LinearGraph, vectors: Sequence[Sequence[int]]) -> "Embedding":
        return cls(graph, canonical_columns(vectors))


def _normalize(col: Sequence[int]) -> Column:
    for x in col:
        if x:
            return tuple(col) if x > 0 else tuple(-y for y in col)
    return tuple(col)


def canonical_columns(vectors: Sequence[Sequence[int]]) -> tuple[Column, ...]:
    """Sorted sign-normalized nonzero columns of a vector list."""
    if not vectors:
        return ()
    dim = len(vectors[0])
    cols = [_normalize([v[k] for v in vectors]) for k in range(dim)]
    return tuple(sorted((c for c in cols if any(c)), reverse=True))


def target_gram(g: LinearGraph) -> list[list[int]]:
    n = len(g)
    gram = [[0] * n for _ in range(n)]
    for v in g.vertices():
        gram[g.index(v)][g.index(v)] = g.weight(v)
    for u, v in g.edges():
        i, j = g.index(u), g.index(v)
        gram[i][j] = gram[j][i] = -1
    return gram


def verify_vectors(g: LinearGraph, vectors: Sequence[Sequence[int]]) -> bool:
    """Independent check of every pairing against the graph."""
    gram = target_gram(g)
    if len(vectors) != len(gram):
        return False
    for i, a in enumerate(vectors):
        for j, b in enumerate(vectors):
            if sum(x * y for x, y in zip(a, b)) != gram[i][j]:
                return False
    return True


def _square_partitions(r: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing tuples of positive ints x_i <= cap with sum x_i^2 = r."""
    if r == 0:
        yield ()
        return
    if slots == 0:
        return
    for x in range(min(cap, isqrt(r)), 0, -1):
        for rest in _square_partitions(r - x * x, x, slots - 1):
            yield (x,) + rest


def _extend_row(
    cols: tuple[Column, ...], weight: int, targets: Sequence[int], max_dim: int
) -> Iterator[tuple[Column, ...]]:
    """All canonical extensions of the partial column list by one new row."""
    m = len(cols)
    nrows = len(targets)
    nz = [[(j, c[j]) for j in range(nrows) if c[j]] for c in cols]
    last = [-1] * nrows
    for k in range(m):
        for j, _ in nz[k]:
            last[j] = k
    finishing: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for j in range(nrows):
        if last[j] >= 0:
            finishing[last[j]].append((j, cols[last[j]][j]))
    # suffix[k][j] = sum of squares of row j over columns k..m-1
    suffix = [[0] * nrows for _ in range(m + 1)]
    for k in range(m - 1, -1, -1):
        row = suffix[k + 1][:]
        for j, a in nz[k]:
            row[j] += a * a
        suffix[k] = row
    for j in range(nrows):
        if last[j] < 0 and targets[j] != 0:
            return
    same_as_prev = [k > 0 and cols[k] == cols[k - 1] for k in range(m)]

    s = [0] * nrows
    xs = [0] * m

    def feasible(k: int, budget: int) -> bool:
        suf = suffix[k]
        for j in range(nrows):
            d = targets[j] - s[j]
            if d and d * d > budget * suf[j]:
                return False
        return True

    def rec(k: int, budget: int) -> Iterator[tuple[Column, ...]]:
        if k == m:
            used = sum(1 for x in xs if x)
            del used
            for fresh in _square_partitions(budget, isqrt(budget), max_dim - m):
                new = [cols[i] + (xs[i],) for i in range(m)]
                zero = (0,) * nrows
                new.extend(zero + (f,) for f in fresh)
                new.sort(reverse=True)
                yield tuple(new)
            return
        cap = xs[k - 1] if same_as_prev[k] else None
        fin = finishing[k]
        if fin:
            j0, a0 = fin[0]
            d = targets[j0] - s[j0]
            if d % a0:
                return
            cands: Iterable[int] = (d // a0,)
        else:
            r = isqrt(budget)
            cands = range(r, -r - 1, -1)
        for x in cands:
            if x * x > budget or (cap is not None and x > cap):
                continue
            for j, a in nz[k]:
                s[j] += a * x
            ok = all(s[j] == targets[j] for j, _ in fin)
            nb = budget - x * x
            if ok and feasible(k + 1, nb):
                xs[k] = x
                yield from rec(k + 1, nb)
            for j, a in nz[k]:
                s[j] -= a * x
        xs[k] = 0

    if feasible(0, weight):
        yield from rec(0, weight)


def _targets(g: LinearGraph, i: int) -> list[int]:
    v = g.vertex_at(i)
    out = [0] * i
    for u in g.neighbors(v):
        j = g.index(u)
        if j < i:
            out[j] = -1
    return out


def iter_embeddings(g: LinearGraph, max_dim: Optional[int] = None) -> Iterator[Embedding]:
    """Lazily yield one embedding per orbit, with at most ``max_dim`` coordinates."""
    weights = g.weights()
    n = len(weights)
    cap = sum(weights) if max_dim is None else max_dim
    targets = [_targets(g, i) for i in range(n)]

    def rec(i: int, cols: tuple[Column, ...]) -> Iterator[tuple[Column, ...]]:
        if i == n:
            yield cols
            return
        for nxt in _extend_row(cols, weights[i], targets[i], cap):
            yield from rec(i + 1, nxt)

    for cols in rec(0, ()):
        yield Embedding(g, cols)


def enumerate_embeddings(g: LinearGraph, max_dim: Optional[int] = None) -> list[Embedding]:
    """Every full-support embedding of ``g`` up to signed coordinate permutation."""
    if len(g) == 0:
        return [Embedding(g, ())]
    return sorted(iter_embeddings(g, max_dim), key=lambda e: (e.dim, e.columns))


def find_embedding(g: LinearGraph, max_dim: int, min_dim: Optional[int] = None) -> Optional[Embedding]:
    """An embedding of smallest possible dimension at most ``max_dim``, or None."""
    if len(g) == 0:
        return Embedding(g, ())
    if next(iter_embeddings(g, max_dim), None) is None:
        return None
    for d in range(min_dim if min_dim is not None else len(g), max_dim + 1):
        best = [e for e in iter_embeddings(g, d) if e.dim == d]
        if best:
            return min(best, key=lambda e: e.columns)
    return None


def standard_embedding(g: LinearGraph) -> Embedding:
    """The standard embedding: adjacent supports share one coordinate."""
    vectors: list[dict[int, int]] = []
    nxt = 0
    for comp in g.components:
        prev_shared = None
        for i, w in enumerate(comp):
            vec: dict[int, int] = {}
            if prev_shared is not None:
                vec[prev_shared] = -1
            shared = None
            if i < len(comp) - 1:
                shared = nxt
                nxt += 1
                vec[shared] = 1
            private = w - len(vec)
            if private < 0:
                raise ValueError(f"weight {w} too small for a standard embedding")
            for _ in range(private):
                vec[nxt] = 1
                nxt += 1
            vectors.append(vec)
            prev_shared = shared
    dense = [[v.get(k, 0) for k in range(nxt)] for v in vectors]
    return Embedding.from_vectors(g, dense)


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    kind: str
    at: Optional[Vertex] = None

    def __str__(self) -> str:
        return f"{self.kind} at {self.at}" if self.at is not None else self.kind


def _meets(e: Embedding, scope: Sequence[Vertex], special: Optional[Vertex]) -> bool:
    g = e.graph
    supp = {v: e.support(v) for v in scope}
    flank = set(g.neighbors(special)) if special is not None else set()
    for a, u in enumerate(scope):
        if len(supp[u]) != g.weight(u):
            return False
        for v in scope[a + 1 :]:
            k = len(supp[u] & supp[v])
            if g.adjacent(u, v):
                want = 1
            elif u in flank and v in flank:
                want = 2
            else:
                want = 0
            if k != want:
                return False
    if special is not None:
        u, v = sorted(flank)
        if len(supp[u] & supp[v] & e.support(special)) != 1:
            return False
    return True


def classify(
    e: Embedding,
    scope: Optional[Iterable[Vertex]] = None,
    bad: Optional[Iterable[Vertex]] = None,
) -> Classification:
    """Standard, semi-standard at a bad vertex, or neither (on ``scope`` if given).

    ``bad`` overrides the bad vertices computed from the graph; the appendix
    configurations are truncated chains whose far ends can look bad spuriously.
    """
    g = e.graph
    verts = sorted(scope) if scope is not None else g.vertices()
    if _meets(e, verts, None):
        return Classification(STANDARD)
    inside = set(verts)
    for x in sorted(bad_vertices(g) if bad is None else bad):
        if x in inside and all(u in inside for u in g.neighbors(x)) and _meets(e, verts, x):
            return Classification(SEMI_STANDARD, x)
    return Classification(NEITHER)


# -- the appendix batch driver ------------------------------------------------


@dataclass(frozen=True)
class Config:
    """A truncated chain around a bad part, with its bad vertices given."""

    graph: LinearGraph
    bad: tuple[Vertex, ...]
    scope: tuple[Vertex, ...]


@dataclass(frozen=True)
class ConfigResult:
    config: Config
    total: int
    standard: int
    semi_standard: int
    neither: int


@dataclass(frozen=True)
class AllConfigReport:
    configs: tuple[ConfigResult, ...] = field(default=())

    @property
    def total(self) -> int:
        return sum(c.total for c in self.configs)

    @property
    def standard(self) -> int:
        return sum(c.standard for c in self.configs)

    @property
    def semi_standard(self) -> int:
        return sum(c.semi_standard for c in self.configs)

    @property
    def neither(self) -> int:
        return sum(c.neither for c in self.configs)

    def counts(self) -> tuple[int, int, int, int]:
        return self.total, self.standard, self.semi_standard, self.neither


def build_configs(
    bad_weights: Sequence[int],
    bad_positions: Sequence[int],
    lefts: Sequence[Sequence[int]],
    rights: Sequence[Sequence[int]],
    include_empty: bool = True,
) -> list[Config]:
    """Every chain left ++ bad ++ right; an end of the bad part gains 1 when extended.

    ``bad_positions`` are 1-based indices into ``bad_weights``.  Left extensions
    are written in graph order, outermost vertex first.
    """
    bad_weights = list(bad_weights)
    k = len(bad_weights)
    if k < 3 or not bad_positions:
        raise ValueError("bad part needs at least three vertices and one bad position")
    for p in bad_positions:
        if not 1 < p < k:
            raise ValueError(f"bad position {p} must be interior to 1..{k}")
    core = LinearGraph.chain(bad_weights, DUAL)
    got = sorted(i + 1 for _, i in bad_vertices(core))
    if got != sorted(bad_positions):
        raise ValueError(f"bad positions {sorted(bad_positions)} disagree with computed {got}")
    first, last = min(bad_positions) - 1, max(bad_positions) - 1
    if first != 1 or last != k - 2:
        raise ValueError("bad positions must span the bad part between its two end vertices")
    ls = ([()] if include_empty else []) + [tuple(x) for x in lefts]
    rs = ([()] if include_empty else []) + [tuple(x) for x in rights]
    out = []
    for left in ls:
        for right in rs:
            mid = bad_weights[:]
            if left:
                mid[0] += 1
            if right:
                mid[-1] += 1
            g = LinearGraph.chain(list(left) + mid + list(right), DUAL)
            off = len(left)
            lo, hi = extend_interval(g, 0, off, off + k)
            out.append(
                Config(
                    g,
                    tuple((0, off + p - 1) for p in sorted(bad_positions)),
                    tuple((0, i) for i in range(lo, hi + 1)),
                )
            )
    return out


def run_config(cfg: Config, max_dim: Optional[int] = None) -> ConfigResult:
    tally = {STANDARD: 0, SEMI_STANDARD: 0, NEITHER: 0}
    for e in enumerate_embeddings(cfg.graph, max_dim):
        tally[classify(e, cfg.scope, cfg.bad).kind] += 1
    return ConfigResult(cfg, sum(tally.values()), tally[STANDARD], tally[SEMI_STANDARD], tally[NEITHER])


def default_threads() -> int:
    env = os.environ.get("PLUMBKIT_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"PLUMBKIT_THREADS must be an integer, got {env!r}") from None
        if n >= 1:
            return n
    return 1


def map_ordered(fn, items: Sequence, threads: Optional[int] = None) -> list:
    """``list(map(fn, items))``, run on a process pool when threads > 1."""
    threads = default_threads() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items, chunksize=1))


def all_config(
    bad_weights: Sequence[int],
    bad_positions: Sequence[int],
    lefts: Sequence[Sequence[int]],
    rights: Sequence[Sequence[int]],
    include_empty: bool = True,
    threads: Optional[int] = None,
) -> AllConfigReport:
    configs = build_configs(bad_weights, bad_positions, lefts, rights, include_empty)
    return AllConfigReport(tuple(map_ordered(run_config, configs, threads)))
