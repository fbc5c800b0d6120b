"""Compare the numba and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload runs once per backend to check that the outputs agree (and to
trigger numba compilation), then is timed with ``timeit``. Reported times are
the best of ``--repeat`` runs.
"""

import argparse
import random
import timeit

import numpy as np

from perronmax.generate import random_tree
from perronmax.graph import Graph
from perronmax.kernels import _numba, _numpy


def power_workloads():
    rng = random.Random(0)
    tree = random_tree((4, 3, 3, 3, 2, 2, 2, 2) + (1,) * 7, rng)
    big_path = Graph.path(200)
    dense = Graph.complete(60)
    return [
        ("power iteration, 15-vertex tree", tree),
        ("power iteration, path P200", big_path),
        ("power iteration, K60", dense),
    ]


def run_power(mod, g):
    indptr, indices = g.csr()
    return mod.power_iteration(indptr, indices, 1e-12, 100 * g.n + 10000)


def run_permutations(mod, base):
    state = np.array(base, np.int64)
    out = np.empty((4096, len(base)), np.int64)
    total, done = 0, False
    while not done:
        k, done = mod.fill_permutations(state, out)
        total += k
    return total


def run_prufer(mod, codes, n):
    return mod.prufer_decode_batch(codes, n)


def run_codes(mod, edges, n):
    return mod.tree_codes_batch(edges, n)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    n = 12
    rng = np.random.default_rng(1)
    codes = rng.integers(0, n, size=(20000, n - 2), dtype=np.int64)
    edges = _numba.prufer_decode_batch(codes, n)
    perm_base = [0, 0, 0, 1, 1, 2, 2, 3, 4, 5]  # 151200 distinct orders

    jobs = [(name, run_power, (g,)) for name, g in power_workloads()]
    jobs += [
        ("multiset permutations, 151200 rows", run_permutations, (perm_base,)),
        ("Pruefer decode, 20000 codes, n=12", run_prufer, (codes, n)),
        ("tree codes, 20000 trees, n=12", run_codes, (edges, n)),
    ]

    print(f"{'workload':40s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for name, fn, extra in jobs:
        a = fn(_numpy, *extra)
        b = fn(_numba, *extra)
        if isinstance(a, tuple):
            assert abs(a[0] - b[0]) < 1e-10 and a[3] == b[3], name
        else:
            assert np.array_equal(np.asarray(a), np.asarray(b)), name
        times = {}
        for label, mod in (("numpy", _numpy), ("numba", _numba)):
            timer = timeit.Timer(lambda: fn(mod, *extra))
            loops, _ = timer.autorange()
            times[label] = min(timer.repeat(args.repeat, loops)) / loops
        print(f"{name:40s} {times['numpy'] * 1e3:9.3f}ms {times['numba'] * 1e3:9.3f}ms {times['numpy'] / times['numba']:7.1f}x")


if __name__ == "__main__":
    main()
