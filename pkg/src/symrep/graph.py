"""Simple undirected graphs on dense labels ``0..n-1``, stored as neighbour bitmasks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import _ir

VertexSet = frozenset
GRAPH6_MAX_N = 258047
ENUMERATION_MAX_N = 7


class GraphError(ValueError):
    """Invalid graph construction or out-of-domain vertex set."""


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSize(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError("rows must have one entry per vertex")
        full = (1 << self.n) - 1
        for v, r in enumerate(self.rows):
            if r & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if (r >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            rr = r
            while rr:
                low = rr & -rr
                u = low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise GraphError(f"adjacency not symmetric at ({v},{u})")
                rr ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.rows[v]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, graph6={to_graph6(self)!r})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset:
    return frozenset(_bits(mask))


def normalize_edges(n: int, edges: Iterable[tuple[int, int]]) -> tuple[Graph, list[str]]:
    """Build a simple graph from a multigraph edge list, dropping loops and parallels."""
    flags = set()
    seen = set()
    simple = []
    for u, v in edges:
        if u == v:
            flags.add("dropped_loops")
            continue
        key = (min(u, v), max(u, v))
        if key in seen:
            flags.add("collapsed_multi_edges")
            continue
        seen.add(key)
        simple.append(key)
    return Graph.from_edges(n, simple), sorted(flags)


# graph6


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= GRAPH6_MAX_N:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise UnsupportedSize(f"graph6 encoder supports n <= {GRAPH6_MAX_N}, got {n}")


def to_graph6(g: Graph) -> str:
    head = _encode_n(g.n)
    out = []
    acc = nbits = 0
    for j in range(1, g.n):
        r = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((r >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return head + "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        raise Graph6Error("graph6 header not accepted", 0)
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size prefix", len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
        if n <= 62:
            raise Graph6Error("non-minimal size prefix", 0)
    else:
        raise Graph6Error("sizes beyond 258047 are not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(vals) - pos < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}", len(vals))
    if len(vals) - pos > nbytes:
        raise Graph6Error("trailing characters after graph data", pos + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and vals[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("non-zero padding bits", len(vals) - 1)
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph or error)`` for each non-blank line of a corpus."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc


# constructors


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def edgeless(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def chair() -> Graph:
    """Two leaves 0,1 on centre 2, which carries the pendant path 2-3-4."""
    return Graph.from_edges(5, [(0, 2), (1, 2), (2, 3), (3, 4)])


def circulant(n: int, jumps: Sequence[int]) -> Graph:
    edges = {(min(i, (i + j) % n), max(i, (i + j) % n)) for i in range(n) for j in jumps}
    return Graph.from_edges(n, [e for e in edges if e[0] != e[1]])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


_NAMED = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "edgeless": edgeless,
    "chair_d5": lambda n: chair(),
}


def make_named(kind: str, n: int = 5) -> Graph:
    if kind not in _NAMED:
        raise GraphError(f"unknown graph kind {kind!r}")
    if n < 1 and kind != "chair_d5":
        raise GraphError(f"n must be positive, got {n}")
    return _NAMED[kind](n)


# operations


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the survivors, relabeled densely in original order."""
    s = set(s)
    if any(not 0 <= v < g.n for v in s):
        raise GraphError(f"vertex set {sorted(s)} not inside 0..{g.n - 1}")
    keep = [v for v in range(g.n) if v not in s]
    relabel = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(relabel[u] for u in _bits(g.rows[v]) if u in relabel))
    return Graph(len(keep), tuple(rows)), relabel


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    s = set(s)
    return delete_vertices(g, [v for v in range(g.n) if v not in s])


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    if not parts:
        raise GraphError("disjoint_union needs at least one part")
    rows: list[int] = []
    off = 0
    for p in parts:
        rows.extend(r << off for r in p.rows)
        off += p.n
    return Graph(off, tuple(rows))


def connected_components(g: Graph) -> list[frozenset]:
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(set_of(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key ``(n, code)``."""
    code, _ = _ir.canonical_labeling(g.n, g.rows)
    return g.n, code


def canonical_graph(g: Graph) -> Graph:
    _, lab = _ir.canonical_labeling(g.n, g.rows)
    rows = [0] * g.n
    for v in range(g.n):
        rows[lab[v]] = mask_of(lab[u] for u in _bits(g.rows[v]))
    return Graph(g.n, tuple(rows))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if len(connected_components(g)) != len(connected_components(h)):
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[str, ...]:
    """graph6 of canonical representatives of every graph on n vertices."""
    if n == 1:
        return (to_graph6(edgeless(1)),)
    found: dict[int, Graph] = {}
    for prev6 in _all_graphs(n - 1):
        prev = parse_graph6(prev6)
        for nbrs in range(1 << (n - 1)):
            rows = [r | (((nbrs >> v) & 1) << (n - 1)) for v, r in enumerate(prev.rows)]
            rows.append(nbrs)
            cand = Graph(n, tuple(rows))
            code, _ = _ir.canonical_labeling(n, cand.rows)
            if code not in found:
                found[code] = cand
    return tuple(to_graph6(canonical_graph(found[c])) for c in sorted(found))


def enumerate_all(n: int) -> Iterator[Graph]:
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise UnsupportedSize(
            f"built-in enumeration covers 1 <= n <= {ENUMERATION_MAX_N}; "
            "supply a graph6 corpus file for larger n"
        )
    for s in _all_graphs(n):
        yield parse_graph6(s)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs."""
    return (g for g in enumerate_all(n) if is_connected(g))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1])
