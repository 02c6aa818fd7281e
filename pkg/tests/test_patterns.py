import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from test_graph import graphs
from symrep.covers import is_hitting
from symrep.graph import (
    GraphError,
    chair,
    complete,
    cycle,
    delete_vertices,
    disjoint_union,
    parse_graph6,
    path,
    petersen,
)
from symrep.kernels import available_backends
from symrep.patterns import (
    contains_copy,
    enumerate_copies,
    family_after_deletion,
    parse_pattern,
    pattern_order,
)
from symrep.symmetry import apply, automorphism_generators

BACKENDS = sorted(available_backends())


@pytest.mark.parametrize("backend", BACKENDS)
def test_copy_examples(backend):
    fam = enumerate_copies(complete(5), chair(), backend=backend)
    assert fam.members == (frozenset(range(5)),)
    assert fam.m == 5 and fam.pattern_size == 5
    assert len(enumerate_copies(cycle(6), chair(), backend=backend)) == 0
    k6 = enumerate_copies(complete(6), chair(), backend=backend)
    assert set(k6.members) == {frozenset(c) for c in itertools.combinations(range(6), 5)}


def test_k5_embeddings_collapse():
    # 120 injections / |Aut(chair)| = 60 labelled chair subgraphs of K5, one vertex set
    injections = [
        img for img in itertools.permutations(range(5))
        if all(complete(5).has_edge(img[u], img[v]) for u, v in chair().edges())
    ]
    assert len(injections) // len(oracles.all_automorphisms(chair())) == 60
    assert len(oracles.copies_bruteforce(complete(5), chair())) == 1


def test_contains_copy_examples():
    assert contains_copy(complete(5), chair())
    assert not contains_copy(path(5), chair())
    assert contains_copy(petersen(), chair())


def test_family_after_deletion_examples():
    k6 = enumerate_copies(complete(6), chair())
    assert family_after_deletion(k6, {0}).members == (frozenset({1, 2, 3, 4, 5}),)
    assert family_after_deletion(k6, set()) == k6
    assert len(family_after_deletion(enumerate_copies(complete(5), chair()), {2})) == 0


def test_pattern_order_is_connected_prefix():
    for p in (chair(), path(5), cycle(6), petersen()):
        order = pattern_order(p)
        assert sorted(order) == list(range(p.n))
        for i in range(1, len(order)):
            assert any(p.has_edge(order[i], order[j]) for j in range(i))
    assert pattern_order(chair())[0] == 2


def test_parse_pattern():
    assert parse_pattern("d5") == chair()
    assert parse_pattern("k4") == complete(4)
    assert parse_pattern("c6") == cycle(6)
    assert parse_pattern("p4") == path(4)
    assert parse_pattern("Bw") == complete(3)
    with pytest.raises(GraphError):
        parse_pattern("zz")


PATTERNS = [chair(), complete(3), path(3), cycle(4), disjoint_union([complete(2), complete(1)])]


@given(graphs(max_n=7), st.sampled_from(PATTERNS), st.booleans())
@settings(max_examples=150, deadline=None)
def test_copies_match_bruteforce(host, pattern, induced):
    expected = oracles.copies_bruteforce(host, pattern, induced)
    for backend in BACKENDS:
        fam = enumerate_copies(host, pattern, induced=induced, backend=backend)
        assert set(fam.members) == expected
        assert len(set(fam.members)) == len(fam.members)
        assert all(len(f) == pattern.n for f in fam.members)
    assert contains_copy(host, pattern, induced) == bool(expected)


@given(graphs(max_n=8), st.sampled_from(PATTERNS[:3]))
@settings(max_examples=100, deadline=None)
def test_family_is_automorphism_invariant(host, pattern):
    fam = enumerate_copies(host, pattern)
    members = set(fam.members)
    for p in automorphism_generators(host).generators:
        assert all(apply(p, f) in members for f in members)


@given(graphs(max_n=8), st.sampled_from(PATTERNS[:3]), st.data())
@settings(max_examples=150, deadline=None)
def test_three_way_hitting_equivalence(host, pattern, data):
    x = data.draw(st.sets(st.integers(0, host.n - 1)))
    fam = enumerate_copies(host, pattern)
    rest, _ = delete_vertices(host, x)
    a = is_hitting(x, fam)
    b = len(family_after_deletion(fam, x)) == 0
    c = not contains_copy(rest, pattern)
    assert a == b == c


def test_copy_order_deterministic():
    fam = enumerate_copies(parse_graph6("E~~w"), chair())
    assert list(fam.members) == sorted(fam.members, key=sorted)
