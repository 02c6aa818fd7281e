"""Individualization-refinement search over bit-set graphs.

Everything here works on ``(n, rows)`` where ``rows[v]`` is the neighbour
bitmask of ``v``.  Colourings are lists mapping vertex -> colour index; a
colouring always uses every index in ``0..k-1`` and the index order is the
cell order of the ordered partition.
"""
from __future__ import annotations

from typing import Optional, Sequence

Rows = Sequence[int]
Perm = tuple[int, ...]


def refine(n: int, rows: Rows, colors: Sequence[int]) -> list[int]:
    """Equitable colour refinement, ordered so that it commutes with relabeling."""
    colors = list(colors)
    k = max(colors) + 1 if n else 0
    while True:
        masks = [0] * k
        for v in range(n):
            masks[colors[v]] |= 1 << v
        sigs = [
            (colors[v], tuple((rows[v] & m).bit_count() for m in masks))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(rank) == k:
            return colors
        colors = [rank[s] for s in sigs]
        k = len(rank)


def individualize(colors: Sequence[int], v: int) -> list[int]:
    """Split ``v`` off the front of its cell."""
    cv = colors[v]
    return [c + 1 if (c > cv or (c == cv and u != v)) else c for u, c in enumerate(colors)]


def target_cell(colors: Sequence[int]) -> Optional[list[int]]:
    """First smallest non-singleton cell (sorted members), or None if discrete."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _shape(colors: Sequence[int]) -> tuple[int, ...]:
    sizes = [0] * (max(colors) + 1) if colors else []
    for c in colors:
        sizes[c] += 1
    return tuple(sizes)


def is_automorphism(rows: Rows, p: Sequence[int]) -> bool:
    for u, r in enumerate(rows):
        img = 0
        while r:
            low = r & -r
            img |= 1 << p[low.bit_length() - 1]
            r ^= low
        if rows[p[u]] != img:
            return False
    return True


def orbits_of(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    """Union-find closure; returns the smallest member of each vertex's orbit."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def _point_orbit(v: int, gens: Sequence[Sequence[int]]) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _fixes(g: Sequence[int], pts: Sequence[int]) -> bool:
    return all(g[x] == x for x in pts)


class _Search:
    """Shared state for automorphism and canonical-labelling search on one graph."""

    def __init__(self, n: int, rows: Rows):
        self.n = n
        self.rows = list(rows)
        self.root = refine(n, self.rows, [0] * n)
        # leftmost path
        self.path_colors = [self.root]
        self.path_cells: list[list[int]] = []
        self.path_verts: list[int] = []
        c = self.root
        while (cell := target_cell(c)) is not None:
            v = cell[0]
            self.path_cells.append(cell)
            self.path_verts.append(v)
            c = refine(n, self.rows, individualize(c, v))
            self.path_colors.append(c)
        self.left_leaf = c
        self.path_shapes = [_shape(pc) for pc in self.path_colors]
        self.gens: list[Perm] = []
        self.order = 1
        self._build_group()

    def _leaf_perm(self, leaf: Sequence[int]) -> Perm:
        inv = [0] * self.n
        for v, c in enumerate(leaf):
            inv[c] = v
        return tuple(inv[self.left_leaf[u]] for u in range(self.n))

    def _find_aut(self, colors: list[int], depth: int) -> Optional[Perm]:
        if _shape(colors) != self.path_shapes[depth]:
            return None
        cell = target_cell(colors)
        if cell is None:
            p = self._leaf_perm(colors)
            return p if is_automorphism(self.rows, p) else None
        for x in cell:
            found = self._find_aut(refine(self.n, self.rows, individualize(colors, x)), depth + 1)
            if found is not None:
                return found
        return None

    def _build_group(self) -> None:
        for level in reversed(range(len(self.path_cells))):
            prefix = self.path_verts[:level]
            v = self.path_verts[level]
            stab = [g for g in self.gens if _fixes(g, prefix)]
            orbit = _point_orbit(v, stab)
            for w in self.path_cells[level]:
                if w in orbit:
                    continue
                child = refine(self.n, self.rows, individualize(self.path_colors[level], w))
                g = self._find_aut(child, level + 1)
                if g is not None:
                    self.gens.append(g)
                    stab.append(g)
                    orbit = _point_orbit(v, stab)
            self.order *= len(orbit)

    def canonical(self) -> tuple[int, list[int]]:
        best: list = [None, None]
        self._canon(self.root, [], best)
        return best[0], best[1]

    def _canon(self, colors: list[int], prefix: list[int], best: list) -> None:
        cell = target_cell(colors)
        if cell is None:
            code = relabeled_code(self.n, self.rows, colors)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, list(colors)
            return
        stab = [g for g in self.gens if _fixes(g, prefix)]
        done: set[int] = set()
        for x in cell:
            if x in done:
                continue
            done |= _point_orbit(x, stab)
            self._canon(refine(self.n, self.rows, individualize(colors, x)), prefix + [x], best)


def relabeled_code(n: int, rows: Rows, lab: Sequence[int]) -> int:
    """Upper-triangle adjacency bits (graph6 column order) after relabeling v -> lab[v]."""
    new = [0] * n
    for v in range(n):
        r = rows[v]
        acc = 0
        while r:
            low = r & -r
            acc |= 1 << lab[low.bit_length() - 1]
            r ^= low
        new[lab[v]] = acc
    code = 0
    for j in range(1, n):
        r = new[j]
        for i in range(j):
            code = (code << 1) | ((r >> i) & 1)
    return code


def automorphism_group(n: int, rows: Rows) -> tuple[list[Perm], int]:
    s = _Search(n, rows)
    return list(s.gens), s.order


def canonical_labeling(n: int, rows: Rows) -> tuple[int, list[int]]:
    """Return (code, lab): lab[v] is v's canonical position, code the canonical bits."""
    if n == 0:
        return 0, []
    return _Search(n, rows).canonical()
