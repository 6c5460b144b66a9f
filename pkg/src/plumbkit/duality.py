"""The dual-plumbing transform: L(p,q) <-> L(p,p-q) on chains of weights."""

from __future__ import annotations

from typing import Sequence

from .graphs import DUAL, PLUMBING, LinearGraph


def _path_degrees(n: int) -> list[int]:
    if n == 1:
        return [0]
    return [1] + [2] * (n - 2) + [1]


def dual_adjusted(chain: Sequence[int]) -> tuple[int, ...]:
    """Adjusted weights of the dual chain.

    The chain is read as ([2]^a0, b1, [2]^a1, ..., bk, [2]^ak) with every b_i >= 3;
    the dual has adjusted weights (a0+1, [0]^(b1-3), a1+1, ..., [0]^(bk-3), ak+1).
    """
    chain = tuple(chain)
    if not chain or any(a < 2 for a in chain):
        raise ValueError(f"chain entries must be >= 2, got {chain}")
    if all(a == 2 for a in chain):
        return (len(chain) + 1,)
    out: list[int] = []
    run = 0
    for a in chain:
        if a == 2:
            run += 1
            continue
        out.append(run + 1)
        out.extend([0] * (a - 3))
        run = 0
    out.append(run + 1)
    return tuple(out)


def dualize_component(chain: Sequence[int]) -> tuple[int, ...]:
    adj = dual_adjusted(chain)
    return tuple(a + d for a, d in zip(adj, _path_degrees(len(adj))))


def dualize(g: LinearGraph) -> LinearGraph:
    """Componentwise dual; the convention tag flips."""
    flipped = DUAL if g.convention == PLUMBING else PLUMBING
    return LinearGraph(tuple(dualize_component(c) for c in g.components), flipped)


def b2(g: LinearGraph) -> int:
    return len(g)


def dual_correspondence(chain: Sequence[int]) -> list[tuple[str, int, int]]:
    """For each vertex of the dual chain, the plumbing positions it comes from.

    Separator vertices map to a (possibly empty) run of 2s, tagged "run"; the
    zero-adjusted vertices in between map to the large weight they subdivide,
    tagged "large".  Entries are (tag, start, stop) with stop exclusive.
    """
    chain = tuple(chain)
    if all(a == 2 for a in chain):
        return [("run", 0, len(chain))]
    out: list[tuple[str, int, int]] = []
    run_start = 0
    for t, a in enumerate(chain):
        if a == 2:
            continue
        out.append(("run", run_start, t))
        out.extend(("large", t, t + 1) for _ in range(a - 3))
        run_start = t + 1
    out.append(("run", run_start, len(chain)))
    return out


def bad_vertex_configuration(chain: Sequence[int], j: int) -> tuple[int, int]:
    """Plumbing positions [start, stop) of the [4] or [3,2,...,2,3] behind dual bad vertex j.

    The run of 2's has length one less than the adjusted weight of j.
    """
    corr = dual_correspondence(chain)
    if not 0 < j < len(corr) - 1:
        raise ValueError(f"dual vertex {j} is not interior")
    tag, s, t = corr[j]
    if tag == "large":
        if chain[s] != 4:
            raise ValueError(f"dual vertex {j} is not bad")
        return s, t
    # a separator between the large weights at s-1 and t
    start, stop = s - 1, t + 1
    piece = tuple(chain[start:stop])
    if len(piece) < 2 or piece[0] != 3 or piece[-1] != 3 or any(a != 2 for a in piece[1:-1]):
        raise ValueError(f"dual vertex {j} is not bad")
    return start, stop
