from itertools import product
from math import isqrt

import pytest
from hypothesis import given, strategies as st

from plumbkit.appendix import CASES
from plumbkit.embeddings import (
    NEITHER,
    SEMI_STANDARD,
    STANDARD,
    Embedding,
    all_config,
    build_configs,
    canonical_columns,
    classify,
    enumerate_embeddings,
    find_embedding,
    standard_embedding,
    target_gram,
)
from plumbkit.graphs import DUAL, LinearGraph, parse_graph


def d(text):
    return parse_graph(text, DUAL)


def norm_vectors(w: int, n: int):
    r = isqrt(w)
    for v in product(range(-r, r + 1), repeat=n):
        if sum(x * x for x in v) == w:
            yield v


def brute_orbits(g: LinearGraph) -> set:
    """All full-support embeddings in every dimension, quotiented by signed permutations."""
    gram = target_gram(g)
    weights = g.weights()
    out = set()
    for n in range(1, sum(weights) + 1):
        pools = [list(norm_vectors(w, n)) for w in weights]

        def rec(i, acc):
            if i == len(weights):
                if all(any(v[c] for v in acc) for c in range(n)):
                    out.add((n, canonical_columns(acc)))
                return
            for v in pools[i]:
                if all(sum(a * b for a, b in zip(v, acc[j])) == gram[i][j] for j in range(i)):
                    rec(i + 1, acc + [v])

        rec(0, [])
    return out


SMALL = ["2", "3", "4", "2,2", "2,3", "3,3", "2,2,2", "2,4", "2;2", "2;3", "3,2,3", "2,2,2,2", "4,2", "2,3,2"]


@pytest.mark.parametrize("text", SMALL)
def test_orbits_match_brute_force(text):
    g = d(text)
    ours = {(e.dim, canonical_columns(e.vectors)) for e in enumerate_embeddings(g)}
    assert ours == brute_orbits(g)


def test_known_classes():
    assert [e.vectors for e in enumerate_embeddings(d("2"))] == [((1, 1),)]
    es = enumerate_embeddings(d("2,2,2"))
    assert [e.dim for e in es] == [3, 4]
    assert classify(es[0]).kind == SEMI_STANDARD and classify(es[0]).at == (0, 1)
    assert classify(es[1]).kind == STANDARD


def test_classify_examples():
    assert classify(Embedding.from_vectors(d("2,2"), [(1, -1, 0), (0, 1, -1)])).kind == STANDARD
    e = Embedding.from_vectors(d("2,2,2"), [(1, 1, 0), (0, -1, 1), (-1, 1, 0)])
    assert classify(e).kind == SEMI_STANDARD and classify(e).at == (0, 1)
    assert classify(Embedding.from_vectors(d("2,2,2"), [(1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1)])).kind == STANDARD


def test_invalid_vectors_are_flagged():
    assert not Embedding.from_vectors(d("2,2"), [(1, 1), (1, 1)]).is_valid()


@given(st.lists(st.integers(2, 4), min_size=1, max_size=4))
def test_pairings_and_one_standard_per_dim(ws):
    g = LinearGraph((tuple(ws),), DUAL)
    es = enumerate_embeddings(g)
    gram = target_gram(g)
    per_dim = {}
    for e in es:
        vs = e.vectors
        assert all(sum(a * b for a, b in zip(vs[i], vs[j])) == gram[i][j] for i in range(len(vs)) for j in range(len(vs)))
        assert all(any(v[c] for v in vs) for c in range(e.dim))
        if classify(e).kind == STANDARD:
            per_dim[e.dim] = per_dim.get(e.dim, 0) + 1
    assert all(c == 1 for c in per_dim.values())


@given(st.lists(st.integers(2, 6), min_size=1, max_size=6))
def test_standard_embedding(ws):
    g = LinearGraph((tuple(ws),), DUAL)
    e = standard_embedding(g)
    assert e.is_valid()
    assert e.dim == sum(ws) - (len(ws) - 1)
    assert classify(e).kind == STANDARD


def test_find_embedding_minimal():
    e = find_embedding(d("2,2,2"), 4)
    assert e.dim == 3
    assert find_embedding(d("3"), 1) is None
    assert find_embedding(d("9"), 1).vectors == ((3,),)


def test_padding_with_isolated_vertex():
    for e in enumerate_embeddings(d("2,3")):
        for w in (2, 3):
            vs = [tuple(v) + (0,) * w for v in e.vectors]
            vs.append((0,) * e.dim + (1,) * w)
            assert Embedding.from_vectors(d(f"2,3;{w}"), vs).is_valid()


def test_case_6():
    c = CASES[6]
    assert all_config(c.bad_weights, c.bad_positions, c.lefts, c.rights).counts() == (32, 16, 16, 0)


def test_empty_extensions_matter():
    c = CASES[6]
    assert all_config(c.bad_weights, c.bad_positions, c.lefts, c.rights, include_empty=False).total == 18


def test_threads_agree():
    c = CASES[2]
    one = all_config(c.bad_weights, c.bad_positions, c.lefts, c.rights, threads=1)
    two = all_config(c.bad_weights, c.bad_positions, c.lefts, c.rights, threads=2)
    assert one == two


def test_build_configs_rejects_wrong_bad_positions():
    with pytest.raises(ValueError):
        build_configs((2, 2, 2), (1,), [(2,)], [(2,)])


def test_no_neither_anywhere():
    for c in CASES.values():
        rep = all_config(c.bad_weights, c.bad_positions, c.lefts, c.rights)
        assert rep.neither == 0
