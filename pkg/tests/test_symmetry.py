import math

import pytest
from hypothesis import given, settings

import oracles
from test_graph import graphs
from symrep.graph import (
    GraphError,
    chair,
    circulant,
    complete,
    cycle,
    edgeless,
    enumerate_connected,
    path,
    petersen,
)
from symrep.symmetry import (
    apply,
    automorphism_generators,
    is_automorphism,
    is_vertex_transitive,
    orbit_neighbour_counts,
    orbit_partition,
)


def closure_order(gens, n):
    """Size of the generated group by naive closure."""
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(n))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def test_group_order_examples():
    assert automorphism_generators(complete(4)).group_order == 24
    assert automorphism_generators(chair()).group_order == 2
    assert automorphism_generators(path(3)).group_order == 2
    assert automorphism_generators(petersen()).group_order == 120


def test_chair_bruteforce():
    assert len(oracles.all_automorphisms(chair())) == 2
    gens = automorphism_generators(chair())
    assert gens.generators == ((1, 0, 2, 3, 4),)


def test_orbit_examples():
    assert orbit_partition(cycle(6)).as_lists() == [list(range(6))]
    assert orbit_partition(path(3)).as_lists() == [[0, 2], [1]]
    op = orbit_partition(chair())
    assert op.as_lists() == [[0, 1], [2], [3], [4]]
    assert op.orbit_of == (0, 0, 1, 2, 3)


def test_vertex_transitive_examples():
    assert is_vertex_transitive(petersen())
    assert not is_vertex_transitive(chair())
    assert is_vertex_transitive(complete(1))


def test_petersen_generators_bruteforce_sample():
    # every generator is an automorphism and the closure has the right size
    gens = automorphism_generators(petersen())
    assert all(is_automorphism(petersen(), p) for p in gens.generators)
    assert closure_order(gens.generators, 10) == 120


def test_apply_examples():
    assert apply(tuple(range(4)), {1, 3}) == {1, 3}
    assert apply((1, 0), {0}) == {1}
    assert apply((2, 1, 0), {1}) == {1}
    with pytest.raises(GraphError):
        apply((1, 0), {2})


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_orbits_match_permutation_oracle(n):
    for g in enumerate_connected(n):
        assert sorted(map(sorted, orbit_partition(g).orbits)) == sorted(map(sorted, oracles.orbits_bruteforce(g)))


@given(graphs(max_n=7))
@settings(max_examples=120, deadline=None)
def test_group_properties(g):
    gens = automorphism_generators(g)
    assert all(is_automorphism(g, p) for p in gens.generators)
    assert gens.group_order >= 1 and math.factorial(g.n) % gens.group_order == 0
    full = g.edge_count in (0, g.n * (g.n - 1) // 2)
    assert (gens.group_order == math.factorial(g.n)) == full
    assert gens.group_order == len(oracles.all_automorphisms(g))
    assert closure_order(gens.generators, g.n) == gens.group_order


@given(graphs(max_n=9))
@settings(max_examples=120, deadline=None)
def test_orbit_partition_properties(g):
    op = orbit_partition(g)
    assert sorted(v for o in op.orbits for v in o) == list(range(g.n))
    assert [min(o) for o in op.orbits] == sorted(min(o) for o in op.orbits)
    for p in automorphism_generators(g).generators:
        assert all(op.orbit_of[p[v]] == op.orbit_of[v] for v in range(g.n))
    # regularity between orbits
    for row in orbit_neighbour_counts(g, op):
        assert all(len(c) == 1 for c in row)


@pytest.mark.parametrize(
    "g, order",
    [(edgeless(5), 120), (circulant(8, [1, 2]), 16), (circulant(10, [1, 2]), 20), (cycle(7), 14)],
)
def test_known_orders(g, order):
    assert automorphism_generators(g).group_order == order
