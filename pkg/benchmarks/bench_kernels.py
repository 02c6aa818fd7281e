"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import random
import time

from symrep import kernels
from symrep.graph import Graph, chair, complete, enumerate_connected, petersen
from symrep.lab import analyze
from symrep.patterns import enumerate_copies, pattern_order


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases():
    rng = random.Random(0)
    hosts = {
        "K10": complete(10),
        "petersen": petersen(),
        "G(20,0.3)": random_graph(rng, 20, 0.3),
        "G(24,0.35)": random_graph(random.Random(0), 24, 0.35),
        "G(40,0.2)": random_graph(rng, 40, 0.2),
    }
    # hitting sets on the widest host take minutes in pure Python
    copies_only = {"G(40,0.2)"}
    for name, host in hosts.items():
        for pname, pattern in (("d5", chair()), ("k4", complete(4))):
            yield f"copies {pname} in {name}", lambda b, h=host, p=pattern: kernels.copy_masks(
                h.rows, p.rows, pattern_order(p), backend=b
            )
            fam = enumerate_copies(host, pattern)
            if fam and name not in copies_only:
                yield f"hitting {pname} in {name} ({len(fam)} sets)", lambda b, h=host, f=fam: kernels.min_weighted_hitting(
                    [1] * h.n, list(f.masks), backend=b
                )
    corpus = list(enumerate_connected(7))
    yield "analyze all connected n=7 vs d5", lambda b: [analyze(g, chair(), backend=b) for g in corpus]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = sorted(kernels.available_backends())
    print(f"{'case':52s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for label, fn in cases():
        row = {b: best_of(lambda: fn(b), args.repeat) for b in backends}
        line = f"{label:52s}" + "".join(f"{row[b]:11.4f}s" for b in backends)
        if "cython" in row:
            line += f"{row['python'] / row['cython']:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
