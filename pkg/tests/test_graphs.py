from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from plumbkit.graphs import (
    DUAL,
    PLUMBING,
    LinearGraph,
    adjusted_weights,
    bad_vertices,
    canonical_form,
    contains_induced,
    count_induced,
    find_induced,
    format_graph,
    parse_graph,
)

chains = st.lists(st.integers(2, 5), min_size=1, max_size=4).map(tuple)
graphs = st.lists(chains, min_size=1, max_size=3).map(lambda cs: LinearGraph(tuple(cs), PLUMBING))


def g(text, conv=PLUMBING):
    return parse_graph(text, conv)


def brute_iso(a: LinearGraph, b: LinearGraph) -> bool:
    """Weighted graph isomorphism by trying every vertex bijection."""
    va, vb = a.vertices(), b.vertices()
    if len(va) != len(vb):
        return False
    ea = {frozenset(e) for e in a.edges()}
    for perm in permutations(vb):
        m = dict(zip(va, perm))
        if all(a.weight(v) == b.weight(m[v]) for v in va) and {frozenset((m[x], m[y])) for x, y in ea} == {
            frozenset(e) for e in b.edges()
        }:
            return True
    return False


def brute_find(host: LinearGraph, pattern: LinearGraph) -> set:
    n = len(pattern)
    return {frozenset(s) for s in combinations(host.vertices(), n) if brute_iso(host.induced(s), pattern)}


def test_adjusted_weights():
    assert adjusted_weights(g("4,2,2,2,2,2", DUAL)).flat() == [3, 0, 0, 0, 0, 1]
    assert adjusted_weights(g("2", DUAL)).flat() == [2]
    assert adjusted_weights(g("2,2,2,3", DUAL)).flat() == [1, 0, 0, 2]


def test_bad_vertices():
    assert bad_vertices(g("2,2,2", DUAL)) == {(0, 1)}
    assert bad_vertices(g("2,2", DUAL)) == set()
    # (0,2) sits between two vertices of adjusted weight 1
    assert bad_vertices(g("2,3,2,2", DUAL)) == {(0, 2)}
    assert bad_vertices(g("3,2,2,3", DUAL)) == set()


def test_induced_examples():
    assert contains_induced(g("3,3,3,3"), g("3,3"))
    assert not contains_induced(g("3,2,3"), g("3,3"))
    assert find_induced(g("3,2,2,2"), g("3;2,2")) == {frozenset({(0, 0), (0, 2), (0, 3)})}
    assert not contains_induced(g("3,2,2"), g("3;2,2"))
    pats = [g("4"), g("3,3"), g("3,2,3")]
    assert count_induced(g("3,3,3,3"), pats) == 3
    assert count_induced(g("4"), pats) == 1
    assert count_induced(g("3,2,3,3"), pats) == 2


def test_conventions_must_agree():
    with pytest.raises(ValueError):
        contains_induced(g("2,2", DUAL), g("2"))


@given(graphs, graphs)
def test_matching_agrees_with_subset_enumeration(host, pattern):
    if len(host) > 6:
        return
    assert find_induced(host, pattern) == brute_find(host, pattern)


@given(graphs)
def test_self_containment_and_single_vertex_counts(h):
    assert contains_induced(h, h)
    for w in range(2, 6):
        assert count_induced(h, [LinearGraph(((w,),), PLUMBING)]) == h.weights().count(w)


@given(graphs, chains)
def test_containment_monotone(h, extra):
    bigger = h.union(LinearGraph((extra,), PLUMBING))
    pat = canonical_form(h)
    assert contains_induced(bigger, pat)


@given(graphs)
def test_degree_gap(h):
    d = h.with_convention(DUAL)
    adj = adjusted_weights(d)
    for v in d.vertices():
        assert d.weight(v) - adj[v] == d.degree(v)


def test_canonical_form():
    assert canonical_form(g("5,2")) == canonical_form(g("2,5"))
    assert canonical_form(g("3;2,2")) == canonical_form(g("2,2;3"))
    assert canonical_form(g("3,2,2")) == canonical_form(g("2,2,3"))


def test_canonical_form_matches_brute_isomorphism():
    small = [
        LinearGraph(cs, PLUMBING)
        for cs in [((2, 3),), ((3, 2),), ((2,), (3,)), ((3,), (2,)), ((2, 2, 3),), ((2, 3, 2),), ((3, 2, 2),),
                   ((2, 3), (4,)), ((4,), (3, 2)), ((4, 2, 3),), ((2, 4), (3,)), ((5, 2, 5),), ((5, 5, 2),)]
    ]
    for a in small:
        for b in small:
            assert (canonical_form(a) == canonical_form(b)) == brute_iso(a, b)


def test_parse_and_format():
    h = g("-3,-2,-3;-4")
    assert h.components == ((3, 2, 3), (4,))
    assert format_graph(h) == "3,2,3;4"
    assert format_graph(h, signed=True) == "-3,-2,-3;-4"
    for bad in ["", "3,,2", "3;x", "1,2"]:
        with pytest.raises(ValueError):
            g(bad)


def test_induced_subgraph_splits_components():
    h = g("3,2,2,3").induced([(0, 0), (0, 2), (0, 3)])
    assert h.components == ((3,), (2, 3))
