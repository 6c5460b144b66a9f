"""Admissible tuples, the tuple at a bad vertex, and minimal filling counts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .conditions import check_17, check_working_conditions
from .contfrac import LensSpace, expand
from .duality import dualize_component
from .graphs import DUAL, PLUMBING, LinearGraph, bad_vertices, count_induced, contains_induced

TRIVIAL = "Trivial"
Z2 = "Z2"

N_PATTERNS = (
    LinearGraph(((4,),), PLUMBING),
    LinearGraph(((3, 3),), PLUMBING),
    LinearGraph(((3, 2, 3),), PLUMBING),
)
REDUCING_PATTERNS = (
    LinearGraph(((4, 4),), PLUMBING),
    LinearGraph(((3, 3, 3),), PLUMBING),
)


def standard_tuple(k: int) -> tuple[int, ...]:
    if k < 1:
        raise ValueError("tuple length must be positive")
    if k == 1:
        return (0,)
    return (1,) + (2,) * (k - 2) + (1,)


def blow_down(t: Sequence[int], i: int) -> tuple[int, ...]:
    """Delete entry i (which must be 1) and lower its neighbours by one."""
    t = list(t)
    if t[i] != 1 or len(t) < 2:
        raise ValueError(f"entry {i} cannot be blown down")
    for j in (i - 1, i + 1):
        if 0 <= j < len(t):
            t[j] -= 1
    del t[i]
    return tuple(t)


def is_admissible(t: Sequence[int]) -> bool:
    """Reduce by blowdowns; admissible tuples reach (0)."""
    t = tuple(t)
    if any(x < 0 for x in t):
        return False
    while len(t) > 1:
        ones = [i for i, x in enumerate(t) if x == 1]
        if not ones:
            return False
        # blowdowns at different 1's commute up to the final result, so any choice works
        t = blow_down(t, ones[0])
        if any(x < 0 for x in t):
            return False
    return t == (0,)


def bad_vertex_tuple(dual_weights: Sequence[int], j: int) -> tuple[int, ...]:
    """The standard tuple with entry j set to 1 and its neighbours raised (j is 1-based)."""
    b = tuple(dual_weights)
    k = len(b)
    if not 1 < j < k:
        raise ValueError("a bad vertex is interior to the chain")
    g = LinearGraph((b,), DUAL)
    if (0, j - 1) not in bad_vertices(g):
        raise ValueError(f"vertex {j} is not bad in {list(b)}")
    n = list(standard_tuple(k))
    n[j - 1] = 1
    n[j - 2] += 1
    n[j] += 1
    if any(x > y for x, y in zip(n, b)):
        raise ValueError(f"tuple {n} is not dominated by the weights {list(b)}")
    if not is_admissible(n):
        raise AssertionError(f"{n} does not reduce to (0)")
    return tuple(n)


@dataclass(frozen=True)
class FillingCount:
    lens: LensSpace
    count: int
    n_l: int
    reduced: bool
    q_squared_one: bool
    q_one: bool

    def __iter__(self):
        return iter((self.count, self.n_l, self.reduced))


def _plumbing(L: LensSpace) -> LinearGraph:
    return LinearGraph((expand(L.p, L.q),), PLUMBING)


def count_fillings(L: LensSpace) -> FillingCount:
    g = _plumbing(L)
    ok, hits = check_17(g)
    if not ok:
        raise ValueError(f"L({L.p},{L.q}) contains forbidden configurations {[h[0] for h in hits]}")
    n_l = count_induced(g, N_PATTERNS)
    q2 = (L.q * L.q) % L.p == 1 % L.p
    q1 = L.q % L.p == 1 % L.p
    reduced = q2 and any(contains_induced(g, pat) for pat in REDUCING_PATTERNS)
    return FillingCount(L, n_l if reduced else n_l + 1, n_l, reduced, q2, q1)


def filling_tuples(L: LensSpace) -> dict[int, tuple[int, ...]]:
    """Modified tuple for each bad vertex of the dual chain, keyed 1-based."""
    b = dualize_component(expand(L.p, L.q))
    g = LinearGraph((b,), DUAL)
    return {v[1] + 1: bad_vertex_tuple(b, v[1] + 1) for v in sorted(bad_vertices(g))}


def filling_pi1(L: LensSpace) -> str:
    """Fundamental group of the codimension-one filling.

    Z2 exactly when a modified tuple agrees with the dual weights at both ends,
    so no 2-handle meets an end of the chain.
    """
    b = dualize_component(expand(L.p, L.q))
    g = LinearGraph((b,), DUAL)
    if not bad_vertices(g) or not check_working_conditions(g).passed:
        raise ValueError(f"L({L.p},{L.q}) has no filling with one less b2")
    for t in filling_tuples(L).values():
        if t[0] == b[0] and t[-1] == b[-1]:
            return Z2
    return TRIVIAL
