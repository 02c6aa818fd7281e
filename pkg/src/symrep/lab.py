"""Executable checks of the representativity results, with JSON certificates."""
from __future__ import annotations

import hashlib
import json
import os
import random
import sys
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Iterable, Optional, Sequence

from .covers import (
    InternalInconsistency,
    PreconditionError,
    is_hitting,
    min_hitting_set,
    min_invariant_hitting_set,
    symmetrize,
)
from .graph import (
    Graph,
    chair,
    complete,
    disjoint_union,
    is_connected,
    is_isomorphic,
    mask_of,
    parse_graph6,
    read_graph6_lines,
    to_graph6,
)
from .patterns import CopyFamily, enumerate_copies, parse_pattern
from .symmetry import (
    GeneratorSet,
    OrbitPartition,
    apply,
    automorphism_generators,
    is_vertex_transitive,
    orbit_neighbour_counts,
    orbit_partition,
)

# connected graphs on n vertices, n = 1..10 (OEIS A001349)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080, 10: 11716571}


@dataclass
class Certificate:
    host: str
    pattern: str
    n: int
    pattern_size: int
    induced: bool
    family_size: int
    m: int
    group_order: int
    generators: list
    orbits: list
    upsilon_v: int
    witness_v: list
    upsilon_sym: int
    witness_sym: list
    sym_orbit_indices: list
    symmetrized_Y: list
    bound_ok: bool
    strict_ok: Optional[bool]
    normalization_flags: list
    digest: str = ""

    def payload(self) -> dict:
        d = asdict(self)
        d.pop("digest")
        return d

    def compute_digest(self) -> str:
        blob = json.dumps(self.payload(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        names = {f.name for f in fields(cls)}
        missing = names - set(d)
        if missing:
            raise ValueError(f"certificate missing fields: {sorted(missing)}")
        return cls(**{k: d[k] for k in names})


def is_chair(pattern: Graph) -> bool:
    return is_isomorphic(pattern, chair())


def _check_orbit_regularity(g: Graph, orbits: OrbitPartition) -> None:
    for a, row in enumerate(orbit_neighbour_counts(g, orbits)):
        for b, counts in enumerate(row):
            if len(counts) != 1:
                raise InternalInconsistency(f"orbit {a} is not regular towards orbit {b}")


def _check_family_invariant(fam: CopyFamily, gens: GeneratorSet) -> None:
    members = set(fam.masks)
    for p in gens.generators:
        for f in fam.members:
            if mask_of(apply(p, f)) not in members:
                raise InternalInconsistency("copy family is not closed under an automorphism")


def analyze(
    host: Graph,
    pattern: Graph,
    pattern_label: str | None = None,
    induced: bool = False,
    normalization_flags: Sequence[str] = (),
    backend: str | None = None,
) -> Certificate:
    gens = automorphism_generators(host)
    orbits = orbit_partition(host, gens)
    _check_orbit_regularity(host, orbits)
    fam = enumerate_copies(host, pattern, induced=induced, backend=backend)
    _check_family_invariant(fam, gens)
    hv = min_hitting_set(fam, host.n, backend=backend)
    hs = min_invariant_hitting_set(fam, orbits, backend=backend)
    y = symmetrize(hv.witness, orbits, fam)

    if not (is_hitting(hv.witness, fam) and is_hitting(hs.witness, fam)):
        raise InternalInconsistency("solver witness misses a family member")
    if not hv.size <= hs.size <= pattern.n * hv.size:
        raise InternalInconsistency(f"sandwich fails: v={hv.size} sym={hs.size} |K|={pattern.n}")
    if hs.size > len(y):
        raise InternalInconsistency("invariant optimum exceeds the symmetrized witness")
    bound_ok = hs.size <= fam.m * hv.size
    if not bound_ok:
        raise InternalInconsistency(f"sym={hs.size} exceeds m*v={fam.m * hv.size}")

    strict_ok = None
    if fam and is_connected(host) and not is_isomorphic(host, complete(pattern.n)) and is_chair(pattern):
        strict_ok = pattern.n * hv.size > hs.size

    cert = Certificate(
        host=to_graph6(host),
        pattern=pattern_label or to_graph6(pattern),
        n=host.n,
        pattern_size=pattern.n,
        induced=induced,
        family_size=len(fam),
        m=fam.m,
        group_order=gens.group_order,
        generators=[list(p) for p in gens.generators],
        orbits=orbits.as_lists(),
        upsilon_v=hv.size,
        witness_v=sorted(hv.witness),
        upsilon_sym=hs.size,
        witness_sym=sorted(hs.witness),
        sym_orbit_indices=list(hs.orbit_indices),
        symmetrized_Y=sorted(y),
        bound_ok=bound_ok,
        strict_ok=strict_ok,
        normalization_flags=sorted(normalization_flags),
    )
    cert.digest = cert.compute_digest()
    return cert


def revalidate(cert: Certificate | dict) -> list[str]:
    """Recompute a certificate from its host and pattern; return mismatching field names."""
    if isinstance(cert, dict):
        cert = Certificate.from_dict(cert)
    fresh = analyze(
        parse_graph6(cert.host),
        parse_pattern(cert.pattern),
        pattern_label=cert.pattern,
        induced=cert.induced,
        normalization_flags=cert.normalization_flags,
    )
    bad = [f.name for f in fields(Certificate) if getattr(fresh, f.name) != getattr(cert, f.name)]
    if cert.digest != cert.compute_digest() and "digest" not in bad:
        bad.append("digest")
    return bad


# sweeps


@dataclass
class SweepReport:
    corpus: str
    pattern: str
    check: str
    graphs_scanned: int = 0
    graphs_with_pattern: int = 0
    excluded: list = field(default_factory=list)
    skipped_disconnected: int = 0
    equality_hosts: int = 0
    violations: list = field(default_factory=list)
    per_n: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _sweep_one(args: tuple) -> dict:
    g6, pattern_label, check, induced, trials = args
    host = parse_graph6(g6)
    pattern = parse_pattern(pattern_label)
    out = {"n": host.n, "status": "checked", "with_pattern": False, "equality": False, "violation": None}
    if not is_connected(host):
        out["status"] = "disconnected"
        return out
    if check == "expansion":
        rep = check_orbit_expansion(host, trials)
        if not rep.ok:
            out["violation"] = rep.to_dict()
        return out
    if check == "theorem22" and is_isomorphic(host, complete(pattern.n)):
        out["status"] = "excluded"
        return out
    cert = analyze(host, pattern, pattern_label=pattern_label, induced=induced)
    if cert.family_size == 0:
        return out
    out["with_pattern"] = True
    if check == "theorem22":
        out["equality"] = pattern.n * cert.upsilon_v == cert.upsilon_sym > 0
        if not pattern.n * cert.upsilon_v > cert.upsilon_sym:
            out["violation"] = cert.to_dict()
    elif not cert.bound_ok:
        out["violation"] = cert.to_dict()
    return out


def default_workers() -> int:
    env = os.environ.get("SYMREP_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def sweep(
    corpus: Iterable[tuple[int, Graph | Exception]] | Iterable[Graph],
    pattern_label: str = "d5",
    check: str = "theorem22",
    corpus_name: str = "stream",
    induced: bool = False,
    trials: int = 32,
    workers: int | None = None,
) -> SweepReport:
    """Run one check over every graph of a corpus.

    ``check`` is ``theorem22`` (|K|*v > sym on connected hosts other than
    K_|K| with at least one copy), ``bound`` (sym <= m*v) or
    ``expansion`` (orbit expansion inequality).  Corpus entries may be bare
    graphs or ``(line, graph-or-error)`` pairs as produced by the graph6 reader.
    """
    if check not in ("theorem22", "bound", "expansion"):
        raise ValueError(f"unknown check {check!r}")
    workers = workers or default_workers()
    started = time.time()
    report = SweepReport(corpus=corpus_name, pattern=pattern_label, check=check)
    jobs = []
    for i, item in enumerate(corpus, 1):
        line, g = item if isinstance(item, tuple) else (i, item)
        if isinstance(g, Exception):
            report.errors.append({"line": line, "offset": getattr(g, "offset", None), "message": str(g)})
            continue
        jobs.append((to_graph6(g), pattern_label, check, induced, trials))

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_one, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        results = [_sweep_one(j) for j in jobs]

    for (g6, *_), r in zip(jobs, results):
        report.graphs_scanned += 1
        per = report.per_n.setdefault(str(r["n"]), {"scanned": 0, "connected": 0, "with_pattern": 0})
        per["scanned"] += 1
        if r["status"] == "disconnected":
            report.skipped_disconnected += 1
            continue
        per["connected"] += 1
        if r["status"] == "excluded":
            report.excluded.append(g6)
            continue
        if r["with_pattern"]:
            report.graphs_with_pattern += 1
            per["with_pattern"] += 1
        if r["equality"]:
            report.equality_hosts += 1
        if r["violation"] is not None:
            report.violations.append(r["violation"])
    report.violations.sort(key=lambda v: v.get("host", ""))
    report.per_n = dict(sorted(report.per_n.items(), key=lambda kv: int(kv[0])))
    if check == "theorem22":
        report.notes.append(
            f"hosts with |K|*upsilon_v == upsilon_sym > 0: {report.equality_hosts} "
            "(equality hosts for the strict bound; expected empty)"
        )
    report.notes.append("finite hosts: representativity is always finite")
    report.timing = {"started": started, "runtime_seconds": round(time.time() - started, 3)}
    return report


# structural checks


@dataclass
class ExpansionReport:
    host: str
    pairs_checked: int = 0
    subsets_checked: int = 0
    regularity_failures: list = field(default_factory=list)
    expansion_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.regularity_failures or self.expansion_failures)

    def to_dict(self) -> dict:
        return asdict(self)


def check_orbit_expansion(host: Graph, trials: int = 32, seed: int | None = None) -> ExpansionReport:
    """Orbit regularity and ``|N(S1) & B| * |A| >= |S1| * |B|`` for S1 inside orbit A.

    Every ordered orbit pair joined by at least one edge is checked with all
    singletons, the full orbit and ``trials`` random subsets.
    """
    g6 = to_graph6(host)
    rng = random.Random(zlib.crc32(g6.encode()) if seed is None else seed)
    orbits = orbit_partition(host)
    rep = ExpansionReport(host=g6)
    table = orbit_neighbour_counts(host, orbits)
    for ai, a in enumerate(orbits.orbits):
        alist = sorted(a)
        for bi, b in enumerate(orbits.orbits):
            bmask = mask_of(b)
            if not any(host.rows[v] & bmask for v in a):
                continue
            rep.pairs_checked += 1
            if len(table[ai][bi]) != 1:
                rep.regularity_failures.append({"A": alist, "B": sorted(b), "counts": sorted(table[ai][bi])})
            subsets = [[v] for v in alist] + [alist]
            for _ in range(trials):
                s = [v for v in alist if rng.random() < 0.5] or [rng.choice(alist)]
                subsets.append(s)
            for s1 in subsets:
                reach = 0
                for v in s1:
                    reach |= host.rows[v]
                s2 = (reach & bmask).bit_count()
                rep.subsets_checked += 1
                if s2 * len(a) < len(s1) * len(b):
                    rep.expansion_failures.append({"A": alist, "B": sorted(b), "S1": s1, "S2_size": s2})
    return rep


def union_additivity_sides(parts: Sequence[Graph], pattern: Graph) -> tuple[int, int]:
    for p in parts:
        if not is_connected(p):
            raise PreconditionError("every part must be connected")
    whole = disjoint_union(list(parts))

    def usym(g: Graph) -> int:
        return min_invariant_hitting_set(enumerate_copies(g, pattern), orbit_partition(g)).size

    return usym(whole), sum(usym(p) for p in parts)


def check_union_additivity(parts: Sequence[Graph], pattern: Graph) -> bool:
    lhs, rhs = union_additivity_sides(parts, pattern)
    return lhs == rhs


def check_transitive_bound(host: Graph, pattern: Graph | None = None) -> Optional[bool]:
    """None when the host is not a connected vertex-transitive graph on more
    than |K| vertices containing the pattern; otherwise whether sym < |K|*v."""
    pattern = pattern or chair()
    if host.n <= pattern.n or not is_connected(host) or not is_vertex_transitive(host):
        return None
    cert = analyze(host, pattern)
    if cert.family_size == 0:
        return None
    return cert.upsilon_sym < pattern.n * cert.upsilon_v


def equality_family(m: int) -> Certificate:
    """m disjoint copies of K5 against the chair: v = m and sym = 5m."""
    if m < 1:
        raise PreconditionError("m must be positive")
    cert = analyze(disjoint_union([complete(5)] * m), chair(), pattern_label="d5")
    if (cert.upsilon_v, cert.upsilon_sym) != (m, 5 * m):
        raise InternalInconsistency(f"expected ({m}, {5 * m}), got ({cert.upsilon_v}, {cert.upsilon_sym})")
    return cert


def chess_demo(host: Graph, k: int) -> Certificate:
    """Delete players so no k of them all know each other; the invariant witness is the fair choice."""
    if k < 2:
        raise PreconditionError("k must be at least 2")
    return analyze(host, complete(k), pattern_label=f"k{k}")


def read_corpus(path: str):
    """Yield ``(line, graph or error)`` from a graph6 file; ``-`` reads stdin."""
    if path == "-":
        yield from read_graph6_lines(sys.stdin)
        return
    with open(path, encoding="ascii", errors="replace") as fh:
        yield from read_graph6_lines(fh)

