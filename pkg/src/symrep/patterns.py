"""Subgraph copies of a pattern inside a host, kept as distinct vertex sets."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .graph import (
    Graph,
    GraphError,
    chair,
    circulant,
    complete,
    cycle,
    edgeless,
    mask_of,
    parse_graph6,
    path,
    petersen,
    set_of,
)


@dataclass(frozen=True)
class CopyFamily:
    masks: tuple[int, ...]
    pattern_size: int

    @property
    def members(self) -> tuple[frozenset, ...]:
        return tuple(set_of(m) for m in self.masks)

    @property
    def m(self) -> int:
        return max((x.bit_count() for x in self.masks), default=0)

    def __len__(self) -> int:
        return len(self.masks)

    def __bool__(self) -> bool:
        return bool(self.masks)


def pattern_order(pattern: Graph) -> list[int]:
    """Static matching order: each component starts at its max-degree vertex,
    then repeatedly takes the vertex with most already-placed neighbours."""
    placed: list[int] = []
    placed_mask = 0
    rest = set(range(pattern.n))
    while rest:
        start = max(sorted(rest), key=pattern.degree)
        placed.append(start)
        placed_mask |= 1 << start
        rest.discard(start)
        while True:
            frontier = [v for v in sorted(rest) if pattern.rows[v] & placed_mask]
            if not frontier:
                break
            v = max(frontier, key=lambda u: ((pattern.rows[u] & placed_mask).bit_count(), pattern.degree(u)))
            placed.append(v)
            placed_mask |= 1 << v
            rest.discard(v)
    return placed


def _sort_key(mask: int) -> list[int]:
    return sorted(set_of(mask))


def enumerate_copies(host: Graph, pattern: Graph, induced: bool = False, backend: str | None = None) -> CopyFamily:
    if pattern.n < 1:
        raise GraphError("pattern needs at least one vertex")
    masks = kernels.copy_masks(host.rows, pattern.rows, pattern_order(pattern), induced, False, backend)
    return CopyFamily(tuple(sorted(masks, key=_sort_key)), pattern.n)


def contains_copy(host: Graph, pattern: Graph, induced: bool = False) -> bool:
    if pattern.n < 1:
        raise GraphError("pattern needs at least one vertex")
    return bool(kernels.copy_masks(host.rows, pattern.rows, pattern_order(pattern), induced, True))


def family_after_deletion(fam: CopyFamily, s: Iterable[int]) -> CopyFamily:
    sm = mask_of(s)
    return CopyFamily(tuple(m for m in fam.masks if not m & sm), fam.pattern_size)


_NAME = re.compile(r"^(d5|k|c|p|e|petersen|circ)(\d*)(?::([\d,]+))?$")


def parse_graph_name(spec: str) -> Graph | None:
    """Shorthands ``d5``, ``k<n>``, ``c<n>``, ``p<n>``, ``e<n>``, ``petersen``,
    ``circ<n>:<j1>,<j2>...``; returns None for anything else."""
    mt = _NAME.match(spec.strip().lower())
    if not mt:
        return None
    kind, num, jumps = mt.groups()
    if kind in ("d5", "petersen"):
        if num or jumps:
            return None
        return chair() if kind == "d5" else petersen()
    if not num or int(num) < 1:
        return None
    n = int(num)
    if kind == "circ":
        if not jumps:
            return None
        return circulant(n, [int(j) for j in jumps.split(",")])
    if jumps:
        return None
    return {"k": complete, "c": cycle, "p": path, "e": edgeless}[kind](n)


def parse_pattern(spec: str) -> Graph:
    """A named shorthand or a graph6 string."""
    g = parse_graph_name(spec)
    if g is not None:
        return g
    try:
        return parse_graph6(spec.strip())
    except ValueError as exc:
        raise GraphError(f"unknown pattern {spec!r}: {exc}") from exc
