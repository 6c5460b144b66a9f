"""Property X_k, embedding extensions along added plumbing vertices, vertex
classes, and bounded search for minimal forbidden configurations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Iterator, Optional, Sequence, Union

from .contfrac import LensSpace, expand
from .duality import dualize
from .embeddings import Embedding, find_embedding, map_ordered
from .graphs import DUAL, PLUMBING, LinearGraph, Vertex, canonical_form, contains_induced


def kprime(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return k if k % 2 == 0 else k + 1


def plumbing_of(lens: Sequence[LensSpace]) -> LinearGraph:
    return LinearGraph(tuple(expand(L.p, L.q) for L in lens), PLUMBING)


@dataclass(frozen=True)
class XkVerdict:
    plumbing: LinearGraph
    k: int
    n_k: int
    satisfies: bool
    witness: Optional[Embedding] = None
    lens_spaces: tuple[LensSpace, ...] = ()


def n_k(plumbing: LinearGraph, k: int) -> int:
    return len(plumbing) + len(dualize(plumbing)) - k


def property_xk(target: Union[LinearGraph, Sequence[LensSpace]], k: int) -> XkVerdict:
    """Decide Property X_k: the dual form does not embed in Z^(n_k).

    A failing verdict carries a witness embedding of minimal dimension.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if isinstance(target, LinearGraph):
        plumbing, lens = target, ()
    else:
        lens = tuple(target)
        plumbing = plumbing_of(lens)
    if plumbing.convention != PLUMBING:
        raise ValueError("property X_k is stated for plumbing graphs")
    dual = dualize(plumbing)
    nk = len(plumbing) + len(dual) - k
    witness = find_embedding(dual, nk) if nk >= len(dual) else None
    return XkVerdict(plumbing, k, nk, witness is None, witness, lens)


def satisfies_xk(g: LinearGraph, k: int) -> bool:
    return property_xk(g, k).satisfies


# -- extending embeddings when a plumbing vertex is added ----------------------


@dataclass(frozen=True)
class Isolated:
    w: int


@dataclass(frozen=True)
class Leaf:
    u: Vertex
    w: int
    side: str = "right"  # which end of u's component, for one-vertex components


@dataclass(frozen=True)
class Bridge:
    u1: Vertex
    u2: Vertex
    w: int


@dataclass(frozen=True)
class Merge:
    u1: Vertex
    u2: Vertex


Extension = Union[Isolated, Leaf, Bridge, Merge]


def _oriented(comp: list, pos: int, want_right: bool) -> tuple[list, bool]:
    """Orient a component list so that index ``pos`` is at the requested end."""
    n = len(comp)
    if n == 1:
        return comp, False
    at_right = pos == n - 1
    if pos not in (0, n - 1):
        raise ValueError("vertex is not a leaf")
    if at_right == want_right:
        return comp, False
    return comp[::-1], True


def extend_embedding(e: Embedding, ext: Extension) -> Embedding:
    """Embed the dual of the plumbing obtained by adding one vertex.

    Isolated(w) adds a chain of |w|-1 twos on |w| fresh coordinates.  Leaf(u, w)
    bumps the dual leaf u by one, sending phi(u) to phi(u) - e'_1, and hangs
    |w|-2 twos e'_i - e'_(i+1) off it.  Bridge(u1, u2, w) joins two leaves of
    different components through |w|-3 twos on |w|-2 fresh coordinates.
    Merge(u1, u2) identifies two such leaves with phi(u) = phi(u1) + phi(u2).
    """
    g = e.graph
    vecs = {v: list(e.vector(v)) for v in g.vertices()}
    dim = e.dim
    # components as lists of (weight, vector)
    comps = [[[g.weight((ci, i)), vecs[(ci, i)]] for i in range(len(c))] for ci, c in enumerate(g.components)]

    def fresh(extra: int) -> None:
        nonlocal dim
        for c in comps:
            for item in c:
                item[1] = item[1] + [0] * extra
        dim += extra

    def chain(count: int, start: int) -> list:
        out = []
        for i in range(count):
            v = [0] * dim
            v[start + i] = 1
            v[start + i + 1] = -1
            out.append([2, v])
        return out

    if isinstance(ext, Isolated):
        w = abs(ext.w)
        if w < 2:
            raise ValueError("weights have magnitude at least 2")
        base = dim
        fresh(w)
        comps.append(chain(w - 1, base))
    elif isinstance(ext, Leaf):
        w = abs(ext.w)
        if w < 2:
            raise ValueError("weights have magnitude at least 2")
        ci, pos = ext.u
        n = len(comps[ci])
        if pos not in (0, n - 1):
            raise ValueError("vertex is not a leaf")
        at_left = pos == 0 and (n > 1 or ext.side == "left")
        base = dim
        fresh(w - 1)
        comp = comps[ci][::-1] if at_left else comps[ci]
        leaf = comp[-1]
        leaf[0] += 1
        leaf[1][base] -= 1
        comp = comp + chain(w - 2, base)
        if at_left:
            comp = comp[::-1]
        comps[ci] = comp
    elif isinstance(ext, (Bridge, Merge)):
        (c1, p1), (c2, p2) = ext.u1, ext.u2
        if c1 == c2:
            raise ValueError("the two leaves must lie in different components")
        left, _ = _oriented(comps[c1], p1, True)
        right, _ = _oriented(comps[c2], p2, False)
        if isinstance(ext, Merge):
            a, b = left[-1], right[0]
            if sum(x * y for x, y in zip(a[1], b[1])) != 0:
                raise ValueError("leaves of different components must be orthogonal")
            merged = [a[0] + b[0], [x + y for x, y in zip(a[1], b[1])]]
            joined = left[:-1] + [merged] + right[1:]
        else:
            w = abs(ext.w)
            if w < 3:
                raise ValueError("use Merge for a weight -2 vertex with two neighbours")
            base = dim
            fresh(w - 2)
            left[-1][0] += 1
            left[-1][1][base] -= 1
            right[0][0] += 1
            right[0][1][base + w - 3] += 1
            joined = left + chain(w - 3, base) + right
        comps[c1] = joined
        del comps[c2]
    else:
        raise TypeError(f"unknown extension {ext!r}")

    graph = LinearGraph(tuple(tuple(item[0] for item in c) for c in comps), DUAL)
    vectors = [item[1] for c in comps for item in c]
    return Embedding.from_vectors(graph, vectors)


def grow_witness(g: LinearGraph, subset: Iterable[Vertex], e: Embedding, order: Optional[Sequence[Vertex]] = None) -> Embedding:
    """Push an embedding of dual(g restricted to subset) up to an embedding of dual(g).

    ``e`` must embed the dual of ``g.induced(subset)`` with components in host
    order.  The remaining vertices of g are added one at a time.
    """
    current = sorted(subset)
    # plumbing components (lists of host vertices) aligned with the dual components of e
    groups: list[list[Vertex]] = []
    for ci, c in enumerate(g.components):
        run: list[Vertex] = []
        for i in range(len(c)):
            if (ci, i) in set(current):
                run.append((ci, i))
            elif run:
                groups.append(run)
                run = []
        if run:
            groups.append(run)
    have = set(current)
    rest = [v for v in (order or g.vertices()) if v not in have]
    for v in rest:
        w = g.weight(v)
        nbrs = [u for u in g.neighbors(v) if u in have]
        dual_lens = [len(c) for c in e.graph.components]
        if not nbrs:
            e = extend_embedding(e, Isolated(w))
            groups.append([v])
        elif len(nbrs) == 1:
            (u,) = nbrs
            gi = next(i for i, grp in enumerate(groups) if u in grp)
            grp = groups[gi]
            on_right = u[1] < v[1]
            if len(grp) > 1 and grp[-1] != u and grp[0] != u:
                raise AssertionError("neighbour is not a leaf")
            dpos = dual_lens[gi] - 1 if on_right else 0
            e = extend_embedding(e, Leaf((gi, dpos), w, "right" if on_right else "left"))
            groups[gi] = grp + [v] if on_right else [v] + grp
        else:
            u1, u2 = sorted(nbrs)
            g1 = next(i for i, grp in enumerate(groups) if u1 in grp)
            g2 = next(i for i, grp in enumerate(groups) if u2 in grp)
            d1, d2 = (g1, dual_lens[g1] - 1), (g2, 0)
            ext: Extension = Merge(d1, d2) if w == 2 else Bridge(d1, d2, w)
            e = extend_embedding(e, ext)
            groups[g1] = groups[g1] + [v] + groups[g2]
            del groups[g2]
        have.add(v)
    return e


# -- vertex classes -------------------------------------------------------------

SHALLOW = "shallow"
DEEP = "deep"
NEITHER1 = "neither-1"
NEITHER2 = "neither-2"


def _is_shallow(g: LinearGraph, v: Vertex) -> bool:
    w = g.weight(v)
    if w in (2, 4):
        return True
    return w == 3 and any(g.weight(u) in (2, 3) for u in g.neighbors(v))


def classify_vertices(g: LinearGraph) -> dict[Vertex, Optional[str]]:
    """Shallow / deep / the two kinds of neither, for each plumbing vertex.

    Overlaps resolve shallow > deep > neither-1 > neither-2; a vertex matching
    none of the four (which the definitions leave possible) maps to None.
    """
    shallow = {v for v in g.vertices() if _is_shallow(g, v)}
    out: dict[Vertex, Optional[str]] = {}
    for v in g.vertices():
        w = g.weight(v)
        nb = g.neighbors(v)
        if v in shallow:
            out[v] = SHALLOW
        elif (w >= 5 and not any(u in shallow for u in nb)) or (w == 3 and not nb):
            out[v] = DEEP
        elif w >= 5:
            out[v] = NEITHER1
        elif w == 3 and any(g.weight(u) >= 4 for u in nb):
            out[v] = NEITHER2
        else:
            out[v] = None
    return out


# -- forbidden configurations ----------------------------------------------------


def proper_induced_subgraphs(g: LinearGraph) -> list[LinearGraph]:
    """Canonical forms of the distinct nonempty proper induced subgraphs."""
    verts = g.vertices()
    seen = set()
    for r in range(1, len(verts)):
        for sub in combinations(verts, r):
            seen.add(canonical_form(g.induced(sub)))
    return sorted(seen, key=lambda h: (len(h), h.components))


def verify_minimal_forbidden(config: LinearGraph, k: int, threads: Optional[int] = None) -> bool:
    """Fails X_k, while every proper induced subgraph satisfies it."""
    if satisfies_xk(config, k):
        return False
    subs = proper_induced_subgraphs(config)
    return all(map_ordered(_satisfies_task, [(h, k) for h in subs], threads))


def _satisfies_task(args: tuple[LinearGraph, int]) -> bool:
    return satisfies_xk(*args)


def _chains(max_weight: int, length: int) -> list[tuple[int, ...]]:
    return sorted({min(c, c[::-1]) for c in product(range(2, max_weight + 1), repeat=length)})


def candidate_graphs(max_weight: int, max_vertices: int) -> Iterator[LinearGraph]:
    """Every plumbing graph within the bounds, once per isomorphism class."""
    chains = [c for n in range(1, max_vertices + 1) for c in _chains(max_weight, n)]

    def rec(start: int, left: int, acc: list) -> Iterator[list]:
        if acc:
            yield acc
        for i in range(start, len(chains)):
            c = chains[i]
            if len(c) <= left:
                yield from rec(i, left - len(c), acc + [c])

    for comps in rec(0, max_vertices, []):
        yield LinearGraph(tuple(comps), PLUMBING)


def mine_forbidden(k: int, max_weight: int, max_vertices: int, threads: Optional[int] = None) -> list[LinearGraph]:
    """Minimal graphs failing X_k within the bounds, smallest first."""
    if max_vertices <= 0:
        return []
    found: list[LinearGraph] = []
    cands = sorted(candidate_graphs(max_weight, max_vertices), key=lambda h: (len(h), h.components))
    by_size: dict[int, list[LinearGraph]] = {}
    for h in cands:
        by_size.setdefault(len(h), []).append(h)
    for size in sorted(by_size):
        level = [h for h in by_size[size] if not any(contains_induced(h, f) for f in found)]
        fails = map_ordered(_fails_task, [(h, k) for h in level], threads)
        found.extend(h for h, bad in zip(level, fails) if bad)
    return sorted((canonical_form(h) for h in found), key=lambda h: (len(h), h.components))


def _fails_task(args: tuple[LinearGraph, int]) -> bool:
    return not satisfies_xk(*args)


def c_config(kp: int) -> LinearGraph:
    """k' disjoint -2 vertices."""
    return LinearGraph(tuple((2,) for _ in range(kp)), PLUMBING)


def d_configs(kp: int) -> list[LinearGraph]:
    """All graphs with k' components, each one of [2], [3,3], [4]."""
    pieces = [(2,), (3, 3), (4,)]
    return [LinearGraph(tuple(c), PLUMBING) for c in combinations_with_replacement(pieces, kp)]
