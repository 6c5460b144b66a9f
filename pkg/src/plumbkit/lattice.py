"""Gram matrices, orthogonal complements, and small definite-lattice comparisons.

All internal computation is positive definite; negative-definite forms (the
plumbing convention) are negated at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor, isqrt, sqrt
from typing import Iterator, Optional, Sequence

from flint import fmpz_mat
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.polys.matrices import DomainMatrix

from .duality import bad_vertex_configuration, dualize_component
from .embeddings import Embedding
from .graphs import DUAL, PLUMBING, LinearGraph

POSITIVE = "positive"
NEGATIVE = "negative"

FOUR = "four"
THREE_THREE = "three-three"
THREE_TWO_THREE = "three-two-three"
BLOWDOWN_KINDS = {(4,): FOUR, (3, 3): THREE_THREE, (3, 2, 3): THREE_TWO_THREE}


@dataclass(frozen=True)
class GramMatrix:
    rows: tuple[tuple[int, ...], ...]
    sign: str = POSITIVE

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("Gram matrix must be square")
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
            raise ValueError("Gram matrix must be symmetric")
        if self.sign not in (POSITIVE, NEGATIVE):
            raise ValueError(f"unknown sign {self.sign!r}")

    @property
    def rank(self) -> int:
        return len(self.rows)

    def negated(self) -> "GramMatrix":
        flip = NEGATIVE if self.sign == POSITIVE else POSITIVE
        return GramMatrix(tuple(tuple(-x for x in r) for r in self.rows), flip)

    def positive(self) -> "GramMatrix":
        return self if self.sign == POSITIVE else self.negated()

    def det(self) -> int:
        if not self.rows:
            return 1
        return int(fmpz_mat([list(r) for r in self.rows]).det())

    def is_definite(self) -> bool:
        rows = self.positive().rows
        return all(fmpz_mat([list(r[:k]) for r in rows[:k]]).det() > 0 for k in range(1, self.rank + 1))

    def direct_sum(self, other: "GramMatrix") -> "GramMatrix":
        other = other if other.sign == self.sign else other.negated()
        a, b = self.rank, other.rank
        rows = [list(r) + [0] * b for r in self.rows] + [[0] * a + list(r) for r in other.rows]
        return GramMatrix(tuple(map(tuple, rows)), self.sign)

    def padded(self, m: int) -> "GramMatrix":
        """Add m unit summands (<1> or <-1> according to the sign)."""
        unit = 1 if self.sign == POSITIVE else -1
        return self.direct_sum(GramMatrix(tuple(tuple(unit if i == j else 0 for j in range(m)) for i in range(m)), self.sign))

    def __str__(self) -> str:
        return "\n".join(",".join(str(x) for x in r) for r in self.rows)


def gram_of_graph(g: LinearGraph) -> GramMatrix:
    """Dual graphs give the positive form; plumbing graphs the negative one."""
    n = len(g)
    s = 1 if g.convention == DUAL else -1
    rows = [[0] * n for _ in range(n)]
    for v in g.vertices():
        i = g.index(v)
        rows[i][i] = s * g.weight(v)
    for u, v in g.edges():
        i, j = g.index(u), g.index(v)
        rows[i][j] = rows[j][i] = -s
    return GramMatrix(tuple(map(tuple, rows)), POSITIVE if s == 1 else NEGATIVE)


def integer_kernel(vectors: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """A basis of {x in Z^dim : x . v = 0 for every v}, LLL-reduced."""
    if not vectors:
        basis = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    else:
        m = Matrix([list(v) for v in vectors])
        d, _, v = smith_normal_decomp(m, domain=ZZ)
        rank = sum(1 for i in range(min(d.shape)) if d[i, i] != 0)
        basis = [tuple(int(x) for x in v[:, j]) for j in range(rank, dim)]
    if not basis:
        return []
    reduced = DomainMatrix([[ZZ(x) for x in b] for b in basis], (len(basis), dim), ZZ).lll()
    return [tuple(int(x) for x in row) for row in reduced.to_Matrix().tolist()]


def complement(e: Embedding) -> GramMatrix:
    """Gram matrix of the orthogonal complement of the embedded vectors in Z^n."""
    basis = integer_kernel(e.vectors, e.dim)
    rows = tuple(tuple(sum(x * y for x, y in zip(a, b)) for b in basis) for a in basis)
    return GramMatrix(rows, POSITIVE)


def complement_basis(e: Embedding) -> list[tuple[int, ...]]:
    return integer_kernel(e.vectors, e.dim)


# -- short vectors ------------------------------------------------------------


def _decompose(a: Sequence[Sequence[int]]) -> tuple[list[float], list[list[float]]]:
    """q_ii and q_ij with Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2."""
    n = len(a)
    q = [[float(a[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return [q[i][i] for i in range(n)], q


def short_vectors(a: GramMatrix, bound: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (x, norm) for every nonzero x with 0 < x^T A x <= bound, one of each +-x pair."""
    rows = a.positive().rows
    n = len(rows)
    if n == 0:
        return
    diag, q = _decompose(rows)
    x = [0] * n
    eps = 1e-7

    def center(i: int) -> float:
        return -sum(q[i][j] * x[j] for j in range(i + 1, n))

    def rec(i: int, remaining: float) -> Iterator[tuple[int, ...]]:
        c = center(i)
        r = sqrt(max(remaining, 0.0) / diag[i]) + eps
        for xi in range(int(floor(c - r)) - 0, int(floor(c + r)) + 2):
            t = xi - c
            used = diag[i] * t * t
            if used > remaining + eps:
                continue
            x[i] = xi
            if i == 0:
                yield tuple(x)
            else:
                yield from rec(i - 1, remaining - used)
        x[i] = 0

    for v in rec(n - 1, bound + eps):
        if not any(v):
            continue
        first = next(t for t in reversed(v) if t)
        if first < 0:
            continue
        norm = sum(v[i] * rows[i][j] * v[j] for i in range(n) for j in range(n))
        if 0 < norm <= bound:
            yield v, norm


def represents(a: GramMatrix, m: int) -> bool:
    """Is there a lattice vector of norm exactly |m|?"""
    m = abs(m)
    return any(norm == m for _, norm in short_vectors(a, m))


def norm_counts(a: GramMatrix, bound: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for _, norm in short_vectors(a, bound):
        out[norm] = out.get(norm, 0) + 1
    return out


def is_isomorphic(a: GramMatrix, b: GramMatrix) -> bool:
    """Decide whether an integral basis change carries one form to the other."""
    if a.rank != b.rank or a.sign != b.sign:
        return False
    if a.rank == 0:
        return True
    a, b = a.positive(), b.positive()
    if a.det() != b.det():
        return False
    # search for images of the basis with the smaller diagonal
    if max(r[i] for i, r in enumerate(a.rows)) < max(r[i] for i, r in enumerate(b.rows)):
        a, b = b, a
    target = b.rows
    n = b.rank
    top = max(target[i][i] for i in range(n))
    if norm_counts(a, top) != norm_counts(b, top):
        return False
    pool: dict[int, list[tuple[int, ...]]] = {}
    for v, norm in short_vectors(a, top):
        pool.setdefault(norm, []).append(v)
    rows = a.rows

    def pair(u: tuple[int, ...], v: tuple[int, ...]) -> int:
        return sum(u[i] * rows[i][j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j])

    order = sorted(range(n), key=lambda i: (-sum(1 for j in range(n) if target[i][j] and j != i), target[i][i]))
    chosen: dict[int, tuple[int, ...]] = {}

    def rec(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        cands = pool.get(target[i][i], [])
        for v in cands:
            for s in ((1,) if k == 0 else (1, -1)):
                w = v if s == 1 else tuple(-t for t in v)
                if all(pair(w, chosen[j]) == target[i][j] for j in chosen):
                    chosen[i] = w
                    if rec(k + 1):
                        return True
                    del chosen[i]
        return False

    return rec(0)


# -- rational blowdown forms ---------------------------------------------------


def blowdown_gram(kind: str, a1: int, a2: int, b1: int) -> GramMatrix:
    """The replacement block after blowing down the -4 sphere (negative convention)."""
    if max(a1, a2, b1) > -2:
        raise ValueError("flanking weights must be <= -2")
    if kind == FOUR:
        rows = [[a2, 2, 1], [2, 1 + 4 * a1, 2 * a1], [1, 2 * a1, a1 + b1]]
    elif kind == THREE_THREE:
        rows = [
            [a2, 2, 2, -1],
            [2, 1 + 4 * a1, 4 * a1, -2 * a1],
            [2, 4 * a1, -3 + 4 * a1, 1 - 2 * a1],
            [-1, -2 * a1, 1 - 2 * a1, a1 + b1],
        ]
    elif kind == THREE_TWO_THREE:
        rows = [
            [a2, 2, 2, 0, -1],
            [2, 1 + 4 * a1, 4 * a1, 0, -2 * a1],
            [2, 4 * a1, -3 + 4 * a1, 1, 1 - 2 * a1],
            [0, 0, 1, -2, 0],
            [-1, -2 * a1, 1 - 2 * a1, 0, a1 + b1],
        ]
    else:
        raise ValueError(f"unknown blowdown kind {kind!r}")
    return GramMatrix(tuple(map(tuple, rows)), NEGATIVE)


def blown_down_form(chain: Sequence[int], start: int, stop: int) -> GramMatrix:
    """Intersection form of the plumbing ``chain`` after blowing down chain[start:stop].

    The blown-down piece must be [4], [3,3] or [3,2,3] with a neighbour on each
    side.  Vertices beyond the block keep their weights; the one before a2
    pairs with the a2 row and the one after b1 pairs with the last block row.
    """
    chain = list(chain)
    kind = BLOWDOWN_KINDS.get(tuple(chain[start:stop]))
    if kind is None:
        raise ValueError(f"{chain[start:stop]} is not a blow-down configuration")
    if start < 1 or stop >= len(chain):
        raise ValueError("blow-down needs a neighbour on each side")
    has_a2 = start >= 2
    a1, b1 = -chain[start - 1], -chain[stop]
    a2 = -chain[start - 2] if has_a2 else -2
    block = [list(r) for r in blowdown_gram(kind, a1, a2, b1).rows]
    if not has_a2:
        block = [r[1:] for r in block[1:]]
    prefix = chain[: start - 2] if has_a2 else []
    suffix = chain[stop + 1 :]
    size = len(prefix) + len(block) + len(suffix)
    rows = [[0] * size for _ in range(size)]
    for i, w in enumerate(prefix):
        rows[i][i] = -w
        if i:
            rows[i][i - 1] = rows[i - 1][i] = 1
    off = len(prefix)
    for i, r in enumerate(block):
        for j, x in enumerate(r):
            rows[off + i][off + j] = x
    if prefix:
        rows[off - 1][off] = rows[off][off - 1] = 1
    off2 = off + len(block)
    for i, w in enumerate(suffix):
        k = off2 + i
        rows[k][k] = -w
        if i:
            rows[k][k - 1] = rows[k - 1][k] = 1
    if suffix:
        rows[off2 - 1][off2] = rows[off2][off2 - 1] = 1
    return GramMatrix(tuple(map(tuple, rows)), NEGATIVE)


def blowdown_for_bad_vertex(dual: LinearGraph, x) -> Optional[GramMatrix]:
    """Blown-down plumbing form matching a semi-standard embedding at dual vertex x.

    The other components contribute their plumbing forms unchanged.  Returns
    None when the plumbing configuration behind x sits at a chain end.
    """
    ci, j = x
    out = GramMatrix((), NEGATIVE)
    for k, comp in enumerate(dual.components):
        plumb = dualize_component(comp)
        if k != ci:
            out = out.direct_sum(gram_of_graph(LinearGraph.chain(plumb, PLUMBING)))
            continue
        start, stop = bad_vertex_configuration(plumb, j)
        if start < 1 or stop >= len(plumb):
            return None
        out = out.direct_sum(blown_down_form(plumb, start, stop))
    return out
