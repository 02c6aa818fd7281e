"""Automorphism generators and vertex orbits."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _ir
from .graph import Graph, GraphError

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[Permutation, ...]
    group_order: int


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[frozenset, ...]
    orbit_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.orbits)

    def as_lists(self) -> list[list[int]]:
        return [sorted(o) for o in self.orbits]


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if sorted(p) != list(range(g.n)):
        return False
    return _ir.is_automorphism(g.rows, p)


def automorphism_generators(g: Graph) -> GeneratorSet:
    """Generators of Aut(g) with the exact group order.

    The generators form a strong generating set along the leftmost path of
    the refinement search tree; the order is the product of the basic orbit
    lengths along that path.
    """
    gens, order = _ir.automorphism_group(g.n, g.rows)
    return GeneratorSet(tuple(gens), order)


def orbits_from_generators(n: int, gens: Iterable[Sequence[int]]) -> OrbitPartition:
    roots = _ir.orbits_of(n, list(gens))
    index: dict[int, int] = {}
    members: list[set] = []
    orbit_of = []
    for v in range(n):
        r = roots[v]
        if r not in index:
            index[r] = len(members)
            members.append(set())
        members[index[r]].add(v)
        orbit_of.append(index[r])
    return OrbitPartition(tuple(frozenset(m) for m in members), tuple(orbit_of))


def orbit_partition(g: Graph, gens: GeneratorSet | None = None) -> OrbitPartition:
    if gens is None:
        gens = automorphism_generators(g)
    return orbits_from_generators(g.n, gens.generators)


def is_vertex_transitive(g: Graph) -> bool:
    return g.n >= 1 and len(orbit_partition(g)) == 1


def apply(p: Sequence[int], s: Iterable[int]) -> frozenset:
    s = frozenset(s)
    for v in s:
        if not 0 <= v < len(p):
            raise GraphError(f"vertex {v} outside permutation range 0..{len(p) - 1}")
    return frozenset(p[v] for v in s)


def is_invariant(s: Iterable[int], gens: GeneratorSet) -> bool:
    s = frozenset(s)
    return all(apply(p, s) == s for p in gens.generators)


def orbit_neighbour_counts(g: Graph, orbits: OrbitPartition) -> list[list[set[int]]]:
    """``table[a][b]`` is the set of neighbour counts into orbit b seen from orbit a.

    Orbit regularity means every entry is a singleton.
    """
    masks = [sum(1 << v for v in o) for o in orbits.orbits]
    table = []
    for a in orbits.orbits:
        table.append([{(g.rows[v] & mb).bit_count() for v in a} for mb in masks])
    return table
