"""Exit criteria. Each test prints one PASS/FAIL line (collected in the terminal summary)."""
import random
import time
from functools import lru_cache

import oracles
from symrep.covers import is_hitting, min_hitting_set, min_invariant_hitting_set
from symrep.graph import (
    Graph,
    chair,
    circulant,
    complete,
    disjoint_union,
    enumerate_all,
    enumerate_connected,
    parse_graph6,
    petersen,
    to_graph6,
)
from symrep.lab import (
    CONNECTED_COUNTS,
    analyze,
    check_orbit_expansion,
    check_transitive_bound,
    union_additivity_sides,
    sweep,
)
from symrep.patterns import enumerate_copies
from symrep.symmetry import orbit_partition

D5 = chair()


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@lru_cache(maxsize=None)
def criterion_1():
    t = time.perf_counter()
    cert = analyze(complete(5), D5, "d5")
    return cert, time.perf_counter() - t


@lru_cache(maxsize=None)
def criterion_2():
    t = time.perf_counter()
    rows = []
    for m in (1, 2, 3, 4):
        host = disjoint_union([complete(5)] * m)
        cert = analyze(host, D5, "d5")
        rows.append((m, cert))
    return rows, time.perf_counter() - t


@lru_cache(maxsize=None)
def criterion_3():
    t = time.perf_counter()
    corpus = [g for n in (5, 6, 7) for g in enumerate_connected(n)]
    report = sweep(corpus, "d5", check="theorem22", corpus_name="connected n=5..7", workers=1)
    return report, time.perf_counter() - t


@lru_cache(maxsize=None)
def criterion_5():
    rng = random.Random(20260101)
    probs = (0.2, 0.5, 0.8)
    patterns = {"d5": D5, "k3": complete(3), "k4": complete(4)}
    results = []
    for i in range(500):
        g = random_graph(rng, rng.randint(1, 10), probs[i % 3])
        orbits = orbit_partition(g)
        for label, pattern in patterns.items():
            fam = enumerate_copies(g, pattern)
            cert = analyze(g, pattern, label)
            y = frozenset(cert.symmetrized_Y)
            invariant = all(len(o & y) in (0, len(o)) for o in orbits.orbits)
            hitting = is_hitting(y, fam)
            bounded = len(y) <= fam.m * cert.upsilon_v
            results.append((cert, invariant, hitting, bounded))
    return results


def test_c01_equality_case(verdict):
    cert, secs = criterion_1()
    ok = (cert.upsilon_v, cert.upsilon_sym) == (1, 5) and cert.upsilon_sym == 5 * cert.upsilon_v and secs < 1.0
    verdict("C1 equality case K5/D5", ok, f"v={cert.upsilon_v} sym={cert.upsilon_sym} t={secs:.3f}s")
    assert ok


def test_c02_disjoint_k5_family(verdict):
    rows, secs = criterion_2()
    ok = secs < 5.0
    for m, cert in rows:
        ok &= (cert.upsilon_v, cert.upsilon_sym) == (m, 5 * m)
        ok &= cert.symmetrized_Y == list(range(5 * m))
        ok &= len(cert.symmetrized_Y) == cert.m * len(cert.witness_v) == 5 * m
    verdict("C2 tight family m*K5, m=1..4", ok, f"t={secs:.3f}s")
    assert ok


def test_c03_strict_bound_sweep(verdict):
    report, secs = criterion_3()
    counts_ok = all(
        report.per_n[str(n)]["connected"] == len(oracles.connected_classes_bruteforce(n)) for n in (5, 6)
    ) and report.per_n["7"]["connected"] == CONNECTED_COUNTS[7]
    ok = report.violations == [] and counts_ok and report.excluded == [to_graph6(complete(5))] and secs < 900
    verdict(
        "C3 5v > sym over connected n=5..7",
        ok,
        f"checked={report.graphs_with_pattern} violations={len(report.violations)} "
        f"per_n={ {k: v['connected'] for k, v in report.per_n.items()} } t={secs:.1f}s",
    )
    assert ok


def test_c04_vacuity(verdict):
    report, _ = criterion_3()
    ok = report.equality_hosts == 0
    verdict("C4 no connected host with 5v == sym > 0", ok, f"equality_hosts={report.equality_hosts}")
    assert ok


def test_c05_symmetrization(verdict):
    results = criterion_5()
    fails = [(c.host, c.pattern) for c, inv, hit, bnd in results if not (inv and hit and bnd)]
    verdict("C5 symmetrize invariant/hitting/bounded on 500 random hosts x 3 patterns", not fails,
            f"analyses={len(results)} failures={len(fails)}")
    assert not fails


def test_c06_sandwich(verdict):
    certs = [criterion_1()[0]] + [c for _, c in criterion_2()[0]] + [c for c, *_ in criterion_5()]
    report, _ = criterion_3()
    # the sweep hosts, recomputed so their values are visible here
    corpus = [g for n in (5, 6, 7) for g in enumerate_connected(n)]
    certs += [analyze(g, D5, "d5") for g in corpus]
    bad = [c.host for c in certs if not c.upsilon_v <= c.upsilon_sym <= c.pattern_size * c.upsilon_v]
    verdict("C6 v <= sym <= |K| v on every analysis", not bad and report.ok, f"analyses={len(certs)}")
    assert not bad


def test_c07_oracle_equivalence(verdict):
    discrepancies = []
    count = 0
    for n in range(1, 7):
        for g in enumerate_connected(n):
            count += 1
            orbits = orbit_partition(g)
            brute_orbits = oracles.orbits_bruteforce(g)
            if sorted(map(sorted, orbits.orbits)) != sorted(map(sorted, brute_orbits)):
                discrepancies.append((to_graph6(g), "orbits"))
            fam = enumerate_copies(g, D5)
            members = set(fam.members)
            if members != oracles.copies_bruteforce(g, D5):
                discrepancies.append((to_graph6(g), "copies"))
            if min_hitting_set(fam, g.n).size != oracles.min_hitting_bruteforce(members, g.n):
                discrepancies.append((to_graph6(g), "upsilon_v"))
            expect = oracles.min_orbit_union_bruteforce(members, brute_orbits) if members else 0
            if min_invariant_hitting_set(fam, orbits).size != expect:
                discrepancies.append((to_graph6(g), "upsilon_sym"))
    verdict("C7 solvers and orbits equal brute-force oracles, connected n<=6", not discrepancies,
            f"graphs={count} discrepancies={len(discrepancies)}")
    assert not discrepancies


def test_c08_orbit_expansion(verdict):
    failures = []
    pairs = subsets = 0
    for n in range(1, 7):
        for g in enumerate_connected(n):
            rep = check_orbit_expansion(g, trials=32)
            pairs += rep.pairs_checked
            subsets += rep.subsets_checked
            if not rep.ok:
                failures.append(rep.host)
    verdict("C8 orbit regularity and expansion, connected n<=6", not failures,
            f"pairs={pairs} subsets={subsets} failures={len(failures)}")
    assert not failures


def test_c09_union_additivity(verdict):
    rng = random.Random(9)
    pool = [g for n in range(1, 7) for g in enumerate_connected(n)]
    bad = []
    for _ in range(100):
        parts = [rng.choice(pool) for _ in range(rng.choice((2, 3)))]
        for pattern in (D5, complete(3)):
            lhs, rhs = union_additivity_sides(parts, pattern)
            if lhs != rhs:
                bad.append(([to_graph6(p) for p in parts], lhs, rhs))
    verdict("C9 sym additive over disjoint unions (100 unions x {D5,K3})", not bad, f"failures={len(bad)}")
    assert not bad


def test_c10_vertex_transitive_spot_check(verdict):
    hosts = {"petersen": petersen(), "C8(1,2)": circulant(8, [1, 2]), "C10(1,2)": circulant(10, [1, 2])}
    ok = True
    detail = []
    for name, g in hosts.items():
        cert = analyze(g, D5, "d5")
        res = check_transitive_bound(g)
        ok &= res is True and cert.upsilon_sym < 5 * cert.upsilon_v
        detail.append(f"{name}: v={cert.upsilon_v} sym={cert.upsilon_sym}")
    pet = analyze(petersen(), D5, "d5")
    ok &= (pet.upsilon_v, pet.upsilon_sym) == (3, 10)
    verdict("C10 vertex-transitive hosts: sym < 5v", ok, "; ".join(detail))
    assert ok


def test_c11_graph6_roundtrip(verdict):
    rng = random.Random(11)
    corpus = [g for n in range(1, 7) for g in enumerate_all(n)]
    corpus += [random_graph(rng, rng.randint(1, 30), rng.random()) for _ in range(1000)]
    bad = [g for g in corpus if parse_graph6(to_graph6(g)) != g]
    verdict("C11 graph6 round-trip", not bad, f"graphs={len(corpus)} failures={len(bad)}")
    assert not bad
