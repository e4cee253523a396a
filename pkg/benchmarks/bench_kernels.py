"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends are imported directly, so the result does not depend on
COALGRAPH_PURE_PYTHON. Each workload is checked for identical output
before timing.
"""

import argparse
import random
import time

from coalgraph import _kernels_py
from coalgraph.graph_core import FamilySpec, Graph, enumerate_graphs, make_family

try:
    from coalgraph import _kernels as compiled
except ImportError:
    compiled = None


def _fam(text):
    return make_family(FamilySpec.parse(text))


def search_workloads():
    rng = random.Random(1)
    graphs = [("cycle:10", _fam("cycle:10")), ("path:11", _fam("path:11")), ("cycle:12", _fam("cycle:12"))]
    for n in (10, 11):
        mask = rng.randrange(1 << (n * (n - 1) // 2))
        graphs.append((f"random:{n}", Graph.from_edge_mask(n, mask)))
    return [(name, lambda k, g=g: k.search_partitions(list(g.closed_rows()), g.n)) for name, g in graphs]


def canon_workloads():
    reps = list(enumerate_graphs(6)) + list(enumerate_graphs(7))
    rng = random.Random(2)
    dense = [Graph.from_edge_mask(10, rng.randrange(1 << 45)) for _ in range(40)]

    def run(k, gs):
        return [k.canonical_order(list(g.adj), g.n) for g in gs]

    return [
        ("canon iso classes n=6,7", lambda k: run(k, reps)),
        ("canon 40 random n=10", lambda k: run(k, dense)),
    ]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled kernels not built; run: pip install -e . --no-build-isolation")
        return 1
    print(f"{'workload':<28} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for name, fn in search_workloads() + canon_workloads():
        if fn(compiled) != fn(_kernels_py):
            raise SystemExit(f"backends disagree on {name}")
        fast = best_of(lambda: fn(compiled), args.repeat)
        slow = best_of(lambda: fn(_kernels_py), 1)
        print(f"{name:<28} {fast:>10.4f} {slow:>10.4f} {slow / fast:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
