from hypothesis import given, strategies as st

from plumbkit.conditions import check_working_conditions, passes_17
from plumbkit.duality import dualize
from plumbkit.graphs import PLUMBING, LinearGraph
from plumbkit.verify import chain_summary, forward_conditions, passing_chains, union_passes_17, union_working_conditions

chains = st.lists(st.integers(2, 6), min_size=1, max_size=4).map(tuple)


@given(st.lists(chains, min_size=1, max_size=3))
def test_summaries_match_direct_working_conditions(comps):
    g = LinearGraph(tuple(comps), PLUMBING)
    parts = [chain_summary(c) for c in comps]
    assert union_working_conditions(parts) == check_working_conditions(dualize(g)).passed


@given(st.lists(chains, min_size=1, max_size=3))
def test_summaries_match_direct_17(comps):
    g = LinearGraph(tuple(comps), PLUMBING)
    if all(passes_17(LinearGraph((c,), PLUMBING)) for c in comps):
        assert union_passes_17([chain_summary(c) for c in comps]) == passes_17(g)


def test_passing_chains_complete():
    from itertools import product

    got = set(passing_chains(4, 5))
    brute = {min(c, c[::-1]) for n in range(1, 5) for c in product(range(2, 6), repeat=n)
             if passes_17(LinearGraph((c,), PLUMBING))}
    assert got == brute


def test_forward_small():
    c = forward_conditions(5, 7)
    assert c.passed and c.detail["graphs"] == 10715
