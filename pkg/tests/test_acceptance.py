"""Acceptance criteria, one test each.  Every test records a PASS/FAIL line that is
printed in the terminal summary; run this file directly to print them without pytest."""

import random
import time
from math import gcd

import pytest

from plumbkit.analysis import grow_witness, n_k, property_xk
from plumbkit.contfrac import LensSpace, evaluate, expand
from plumbkit.duality import dualize, dualize_component
from plumbkit.embeddings import STANDARD, classify, default_threads, standard_embedding
from plumbkit.graphs import PLUMBING, LinearGraph, canonical_form
from plumbkit import verify

RESULTS: list[str] = []
THREADS = max(default_threads(), 1)


def record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({detail})")


@pytest.fixture(scope="module")
def appendix_checks():
    return verify.appendix(THREADS)


def test_01_appendix_counts(appendix_checks):
    first = appendix_checks[0]
    matched = sum(c.passed for c in appendix_checks)
    total_time = sum(c.seconds for c in appendix_checks)
    ok = matched == 13 and first.name == "appendix case 6" and first.seconds < 10 and total_time < 600
    record(1, "appendix embedding counts", ok, f"{matched}/13 exact, case 6 {first.seconds:.2f}s, total {total_time:.1f}s")
    for c in appendix_checks:
        assert c.passed, (c.name, c.detail)
    assert ok


def test_02_minimal_forbidden():
    c = verify.minimality(THREADS)
    record(2, "17 configurations fail X_2 minimally", c.passed and c.seconds < 300,
           f"{17 - len(c.detail['not_minimal'])}/17, {c.seconds:.2f}s")
    assert c.passed and c.seconds < 300


def test_03_no_neither(appendix_checks):
    neither = sum(c.detail["got"][3] for c in appendix_checks)
    record(3, "no embedding is neither standard nor semi-standard", neither == 0, f"{neither} neither")
    assert neither == 0


def test_04_blowdown_equivalence():
    c = verify.blowdown_equivalence(THREADS)
    d = c.detail
    record(4, "complements match blown-down forms", c.passed,
           f"{d['isomorphic']} isomorphic, {d['not_isomorphic']} not; skipped {d['local_only']} semi-standard "
           f"only on the extended bad part, {d['at_chain_end']} at a chain end")
    assert c.passed


def test_05_l55_21():
    c = verify.complements_55_21()
    ok = c.passed and c.seconds < 30
    record(5, "L(55,21) complements differ, one represents 3", ok, f"represents 3: {c.detail.get('represents_3')}")
    assert ok


def test_06_duality_exhaustive():
    t = time.perf_counter()
    bad = 0
    for p in range(2, 2001):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            c = expand(p, q)
            d = dualize_component(c)
            g = LinearGraph((c,), PLUMBING)
            if evaluate(c) != (p, q) or evaluate(d) != (p, p - q) or dualize(dualize(g)) != g:
                bad += 1
    record(6, "expansion round trip and duality, p <= 2000", bad == 0, f"{bad} failures, {time.perf_counter() - t:.1f}s")
    assert bad == 0


def test_07_forward_implication():
    c = verify.forward_conditions(8, 7)
    ok = c.passed and c.seconds < 600
    record(7, "avoiding the 17 implies the working conditions", ok,
           f"{c.detail['graphs']} graphs, {len(c.detail['failures'])} failures, {c.seconds:.0f}s")
    assert c.passed, c.detail["failures"]
    assert c.seconds < 600


def _random_pair(rng: random.Random):
    ncomp = rng.randint(1, 3)
    size = rng.randint(ncomp, 6)
    sizes = [1] * ncomp
    for _ in range(size - ncomp):
        sizes[rng.randrange(ncomp)] += 1
    g = LinearGraph(tuple(tuple(rng.randint(2, 5) for _ in range(s)) for s in sizes), PLUMBING)
    sub = sorted(rng.sample(g.vertices(), rng.randint(1, len(g))))
    return g, sub


def test_08_failure_propagates():
    rng = random.Random(20261018)
    pairs = informative = bad = 0
    while pairs < 500:
        g, sub = _random_pair(rng)
        pairs += 1
        h = g.induced(sub)
        for k in (1, 2, 3):
            vh = property_xk(h, k)
            if vh.satisfies:
                continue
            informative += 1
            e = grow_witness(g, sub, vh.witness)
            ok = (
                e.is_valid()
                and canonical_form(e.graph) == canonical_form(dualize(g))
                and e.dim <= n_k(g, k)
                and not property_xk(g, k).satisfies
            )
            bad += not ok
    record(8, "failing X_k passes to supergraphs with explicit witnesses", bad == 0,
           f"{pairs} pairs, {informative} failing (pair, k), {bad} broken")
    assert bad == 0 and informative > 0


def test_09_x0_always_fails():
    rng = random.Random(9)
    seen, bad = 0, 0
    while seen < 200:
        p = rng.randint(2, 500)
        q = rng.randint(1, p - 1)
        if gcd(p, q) != 1:
            continue
        seen += 1
        g = LinearGraph((expand(p, q),), PLUMBING)
        d = dualize(g)
        e = standard_embedding(d)
        ok = e.is_valid() and e.dim == n_k(g, 0) and classify(e).kind == STANDARD
        bad += not ok
    record(9, "standard embedding in dimension n_0", bad == 0, f"{seen} lens spaces, {bad} failures")
    assert bad == 0


def test_10_fillings():
    c = verify.filling_counts()
    record(10, "filling counts and fundamental groups", c.passed,
           f"L(55,21) count {c.detail['count_55_21']}, Z2 on {c.detail['z2']}")
    assert c.passed


if __name__ == "__main__":
    checks = verify.appendix(THREADS)
    for fn in [lambda: test_01_appendix_counts(checks), test_02_minimal_forbidden, lambda: test_03_no_neither(checks),
               test_04_blowdown_equivalence, test_05_l55_21, test_06_duality_exhaustive, test_07_forward_implication,
               test_08_failure_propagates, test_09_x0_always_fails, test_10_fillings]:
        try:
            fn()
        except AssertionError:
            pass
    print("\n".join(RESULTS))
