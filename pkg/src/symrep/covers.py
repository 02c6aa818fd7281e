"""Exact hitting-set solvers and orbit symmetrization of a hitting set."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .graph import mask_of, set_of
from .patterns import CopyFamily
from .symmetry import OrbitPartition


class PreconditionError(ValueError):
    pass


class InternalInconsistency(AssertionError):
    """A guaranteed property failed; signals a bug, never a normal result."""


@dataclass(frozen=True)
class HittingWitness:
    size: int
    witness: frozenset


@dataclass(frozen=True)
class InvariantWitness:
    size: int
    witness: frozenset
    orbit_indices: tuple[int, ...]


def is_hitting(x: Iterable[int], fam: CopyFamily) -> bool:
    xm = mask_of(x)
    return all(m & xm for m in fam.masks)


def min_hitting_set(fam: CopyFamily, n: int, backend: str | None = None) -> HittingWitness:
    if not fam:
        return HittingWitness(0, frozenset())
    size, mask = kernels.min_weighted_hitting([1] * n, fam.masks, backend)
    return HittingWitness(size, set_of(mask))


def orbit_masks(fam: CopyFamily, orbits: OrbitPartition) -> list[int]:
    """Each member re-expressed as the set of orbit indices it meets."""
    out = []
    for m in fam.masks:
        om = 0
        while m:
            low = m & -m
            om |= 1 << orbits.orbit_of[low.bit_length() - 1]
            m ^= low
        out.append(om)
    return out


def min_invariant_hitting_set(
    fam: CopyFamily, orbits: OrbitPartition, backend: str | None = None
) -> InvariantWitness:
    """Cheapest union of whole orbits meeting every member (orbit weight = orbit size)."""
    if not fam:
        return InvariantWitness(0, frozenset(), ())
    weights = [len(o) for o in orbits.orbits]
    cost, chosen = kernels.min_weighted_hitting(weights, orbit_masks(fam, orbits), backend)
    idx = tuple(sorted(set_of(chosen)))
    witness = frozenset().union(*(orbits.orbits[i] for i in idx))
    return InvariantWitness(cost, witness, idx)


def symmetrize(x: Iterable[int], orbits: OrbitPartition, fam: CopyFamily) -> frozenset:
    """Union of every orbit holding at least a 1/m share of ``x`` (m = largest member).

    The result is invariant, still hits the family, and has at most m*|x| vertices.
    """
    x = frozenset(x)
    if not is_hitting(x, fam):
        raise PreconditionError("symmetrize needs a hitting set for the family")
    if not fam:
        return frozenset()
    m = fam.m
    y: set[int] = set()
    for o in orbits.orbits:
        if len(o & x) * m >= len(o):
            y |= o
    y = frozenset(y)
    if not is_hitting(y, fam):
        raise InternalInconsistency("symmetrized set misses a family member")
    if len(y) > m * len(x):
        raise InternalInconsistency(f"|Y|={len(y)} exceeds m|X|={m * len(x)}")
    if any(len(o & y) not in (0, len(o)) for o in orbits.orbits):
        raise InternalInconsistency("symmetrized set is not a union of orbits")
    return y
