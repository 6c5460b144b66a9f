"""Built-in checks: appendix counts, forbidden-configuration minimality, the
L(55,21) complements, blowdown isomorphism, and filling counts."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Optional

from .analysis import verify_minimal_forbidden
from .conditions import check_working_conditions, passes_17
from .duality import dualize_component
from .graphs import DUAL, adjusted_weights, bad_vertices, canonical_form, contains_induced
from .appendix import CASES, RUN_ORDER
from .conditions import FORBIDDEN_17
from .contfrac import LensSpace, expand
from .duality import dualize
from .embeddings import SEMI_STANDARD, all_config, build_configs, classify, enumerate_embeddings, map_ordered
from .fillings import Z2, count_fillings, filling_pi1
from .graphs import PLUMBING, LinearGraph
from .lattice import blowdown_for_bad_vertex, complement, is_isomorphic, represents


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0


def _timed(name: str, fn) -> Check:
    t = time.perf_counter()
    passed, detail = fn()
    return Check(name, passed, detail, time.perf_counter() - t)


def appendix_case(number: int, threads: Optional[int] = None) -> Check:
    def run():
        c = CASES[number]
        got = all_config(c.bad_weights, c.bad_positions, c.lefts, c.rights, threads=threads).counts()
        return got == c.expected, {"expected": list(c.expected), "got": list(got)}

    return _timed(f"appendix case {number}", run)


def appendix(threads: Optional[int] = None) -> list[Check]:
    return [appendix_case(n, threads) for n in RUN_ORDER]


def minimality(threads: Optional[int] = None) -> Check:
    def run():
        bad = [cid for cid, g in FORBIDDEN_17.items() if not verify_minimal_forbidden(g, 2, threads)]
        return not bad, {"configs": len(FORBIDDEN_17), "not_minimal": bad}

    return _timed("17 configurations minimally fail X_2", run)


def complements_55_21() -> Check:
    """Left and middle semi-standard complements of L(55,21) differ; only one represents 3."""

    def run():
        dual = dualize(LinearGraph((expand(55, 21),), PLUMBING))
        comps = {}
        for e in enumerate_embeddings(dual):
            cl = classify(e)
            if cl.kind == SEMI_STANDARD:
                comps[cl.at] = complement(e)
        left, middle = comps.get((0, 1)), comps.get((0, 2))
        if left is None or middle is None:
            return False, {"semi_standard_at": sorted(comps)}
        reps = [represents(left, 3), represents(middle, 3)]
        ok = left.rank == middle.rank == 3 and not is_isomorphic(left, middle) and sum(reps) == 1
        return ok, {
            "left": [list(r) for r in left.rows],
            "middle": [list(r) for r in middle.rows],
            "represents_3": reps,
        }

    return _timed("L(55,21) complements", run)


def _blowdown_task(cfg) -> dict[str, int]:
    tally = {"isomorphic": 0, "not_isomorphic": 0, "local_only": 0, "at_chain_end": 0}
    for e in enumerate_embeddings(cfg.graph):
        cl = classify(e, cfg.scope, cfg.bad)
        if cl.kind != SEMI_STANDARD:
            continue
        if classify(e, None, cfg.bad).kind != SEMI_STANDARD:
            tally["local_only"] += 1
            continue
        bd = blowdown_for_bad_vertex(cfg.graph, cl.at)
        if bd is None:
            tally["at_chain_end"] += 1
            continue
        comp, target = complement(e), bd.positive()
        m = target.rank - comp.rank
        ok = m >= 0 and is_isomorphic(comp.padded(m) if m else comp, target)
        tally["isomorphic" if ok else "not_isomorphic"] += 1
    return tally


def blowdown_equivalence(threads: Optional[int] = None) -> Check:
    """Complements of globally semi-standard appendix embeddings against blown-down forms."""

    def run():
        cfgs = [cfg for n in RUN_ORDER for cfg in build_configs(
            CASES[n].bad_weights, CASES[n].bad_positions, CASES[n].lefts, CASES[n].rights)]
        total: dict[str, int] = {}
        for t in map_ordered(_blowdown_task, cfgs, threads):
            for k, v in t.items():
                total[k] = total.get(k, 0) + v
        return total["not_isomorphic"] == 0 and total["isomorphic"] > 0, total

    return _timed("complement matches blown-down form", run)


def filling_counts() -> Check:
    def run():
        c = count_fillings(LensSpace(55, 21))
        z2 = []
        for p in range(2, 101):
            for q in range(1, p):
                if gcd(p, q) != 1:
                    continue
                try:
                    if filling_pi1(LensSpace(p, q)) == Z2:
                        z2.append([p, q])
                except ValueError:
                    pass
        ok = c.count == 3 and c.reduced and z2 == [[4, 1], [8, 3], [12, 5]]
        return ok, {"count_55_21": c.count, "reduced": c.reduced, "z2": z2}

    return _timed("filling counts", run)


# -- forward implication: plumbing avoids the 17 => dual meets the working conditions


@dataclass(frozen=True)
class ChainSummary:
    """What a component contributes to conditions that couple components."""

    pieces: int  # bitmask over PIECES found in the plumbing chain
    partners: int  # pieces that would complete a two-component configuration
    local_ok: bool  # working conditions of the dual chain on its own
    big: int  # dual vertices with adjusted weight > 1
    bad: bool
    bad1: bool  # a bad vertex of adjusted weight 1
    bad2: bool
    three: bool  # a vertex of adjusted weight 3
    ones: bool  # an edge joining two vertices of adjusted weight 1


def _pieces() -> tuple[list[LinearGraph], list[int]]:
    pieces: list[LinearGraph] = []
    pairs = []
    for g in FORBIDDEN_17.values():
        if len(g.components) == 2:
            ids = []
            for c in g.components:
                h = LinearGraph((c,), PLUMBING)
                if h not in pieces:
                    pieces.append(h)
                ids.append(pieces.index(h))
            pairs.append(ids)
    partners = [0] * len(pieces)
    for a, b in pairs:
        partners[a] |= 1 << b
        partners[b] |= 1 << a
    return pieces, partners


PIECES, _PARTNERS = _pieces()
if any(len(g.components) > 2 for g in FORBIDDEN_17.values()):
    raise AssertionError("component summaries assume at most two components per configuration")


def chain_summary(chain: tuple[int, ...]) -> ChainSummary:
    g = LinearGraph((chain,), PLUMBING)
    mask = sum(1 << i for i, p in enumerate(PIECES) if contains_induced(g, p))
    partners = 0
    for i in range(len(PIECES)):
        if mask >> i & 1:
            partners |= _PARTNERS[i]
    d = LinearGraph((dualize_component(chain),), DUAL)
    adj = adjusted_weights(d).adjusted[0]
    bad = bad_vertices(d)
    return ChainSummary(
        mask,
        partners,
        check_working_conditions(d).passed,
        sum(a > 1 for a in adj),
        bool(bad),
        any(adj[i] == 1 for _, i in bad),
        any(adj[i] == 2 for _, i in bad),
        3 in adj,
        any(adj[i] == adj[i + 1] == 1 for i in range(len(adj) - 1)),
    )


def union_passes_17(parts: Sequence[ChainSummary]) -> bool:
    """For components that each avoid the 17: no two-component configuration across them."""
    return not any(a.partners & b.pieces for i, a in enumerate(parts) for b in parts[i + 1 :])


def union_working_conditions(parts: Sequence[ChainSummary]) -> bool:
    """Working conditions of a disjoint union of dual chains from per-component data."""
    if not all(p.local_ok for p in parts):
        return False
    if sum(p.big for p in parts) > 1 or sum(p.bad for p in parts) > 1:
        return False
    for i, a in enumerate(parts):
        for j, b in enumerate(parts):
            if i != j and ((a.big and b.bad1) or (a.three and b.ones) or (a.ones and b.bad2)):
                return False
    return True


def passing_chains(max_vertices: int, max_weight: int) -> list[tuple[int, ...]]:
    """Chains avoiding the 17, one orientation each, grown from shorter passing chains."""
    level = {(w,) for w in range(2, max_weight + 1) if passes_17(LinearGraph(((w,),), PLUMBING))}
    out = sorted(level)
    for _ in range(max_vertices - 1):
        nxt = set()
        for c in level:
            for w in range(2, max_weight + 1):
                for h in (c + (w,), (w,) + c):
                    h = min(h, h[::-1])
                    if h not in nxt and passes_17(LinearGraph((h,), PLUMBING)):
                        nxt.add(h)
        level = nxt
        out.extend(sorted(level))
    return out


def forward_conditions(max_vertices: int = 8, max_weight: int = 7) -> Check:
    """Every plumbing graph within the bounds that avoids the 17 has a dual meeting the
    working conditions.  Unions are judged from component summaries."""

    def run():
        chains = passing_chains(max_vertices, max_weight)
        summ = [chain_summary(c) for c in chains]
        failures: list[str] = []
        graphs = 0

        def rec(start: int, room: int, chosen: list[int], parts: list[ChainSummary]) -> None:
            nonlocal graphs
            for idx in range(start, len(chains)):
                c = chains[idx]
                if len(c) > room:
                    break
                s = summ[idx]
                if any(s.partners & p.pieces for p in parts):
                    continue
                parts.append(s)
                chosen.append(idx)
                graphs += 1
                if not union_working_conditions(parts):
                    failures.append(";".join(",".join(map(str, chains[i])) for i in chosen))
                rec(idx, room - len(c), chosen, parts)
                parts.pop()
                chosen.pop()

        order = sorted(range(len(chains)), key=lambda i: (len(chains[i]), chains[i]))
        chains[:] = [chains[i] for i in order]
        summ[:] = [summ[i] for i in order]
        rec(0, max_vertices, [], [])
        return not failures, {"graphs": graphs, "chains": len(chains), "failures": failures[:20]}

    return _timed(f"forward implication, <= {max_vertices} vertices, weights <= {max_weight}", run)


SUITES = {
    "appendix": appendix,
    "minimality": lambda threads=None: [minimality(threads)],
    "complements": lambda threads=None: [complements_55_21()],
    "blowdown": lambda threads=None: [blowdown_equivalence(threads)],
    "fillings": lambda threads=None: [filling_counts()],
    "forward": lambda threads=None: [forward_conditions()],
}
