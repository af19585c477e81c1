#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Workloads mirror the two hot paths: canonical-form minimisation over the
full permutation table of a 7-vertex graph batch, and the cycle-containment
mask scan from the closure oracle.  Run directly:

    python benchmarks/bench_kernels.py
"""

import time
from itertools import permutations

import numpy as np

from cyclosure import _kernels


def bench_min_perm(n_graphs: int = 2000, n: int = 7, repeats: int = 3):
    rng = np.random.default_rng(0)
    nbits = n * (n - 1) // 2
    bits = (rng.random((n_graphs, nbits)) < 0.4).astype(np.uint8)
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pair_index = {p: k for k, p in enumerate(pairs)}
    bit_idx = np.empty((len(perms), nbits), dtype=np.int64)
    for p, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            bit_idx[p, k] = pair_index[(min(a, b), max(a, b))]
    weights = np.array([1 << (nbits - 1 - k) for k in range(nbits)], dtype=np.int64)

    rows = {}
    candidates = [("numpy", _kernels.min_perm_values_numpy)]
    if _kernels.backend_name() == "numba":
        candidates.append(("numba", _kernels.min_perm_values))
    reference = None
    for name, fn in candidates:
        fn(bits[:16], bit_idx, weights)  # warm-up / JIT
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            out = fn(bits, bit_idx, weights)
            best = min(best, time.perf_counter() - t0)
        if reference is None:
            reference = out
        else:
            assert np.array_equal(reference, out), "backends disagree"
        rows[name] = best
    return rows


def bench_any_superset(n_masks: int = 1200, n_queries: int = 20000, repeats: int = 3):
    rng = np.random.default_rng(1)
    masks = rng.integers(0, 1 << 21, size=n_masks).astype(np.uint64)
    queries = rng.integers(0, 1 << 21, size=n_queries).astype(np.uint64)

    rows = {}
    candidates = [("numpy", _kernels.any_superset_numpy)]
    if _kernels.backend_name() == "numba":
        candidates.append(("numba", _kernels.any_superset))
    reference = None
    for name, fn in candidates:
        fn(masks, queries[:64])
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            out = fn(masks, queries)
            best = min(best, time.perf_counter() - t0)
        if reference is None:
            reference = out
        else:
            assert np.array_equal(reference, out), "backends disagree"
        rows[name] = best
    return rows


def main():
    print(f"active backend: {_kernels.backend_name()}")
    print()
    print("canonical-form minimisation (2000 graphs x 5040 perms x 21 bits)")
    for name, secs in bench_min_perm().items():
        print(f"  {name:6s} {secs * 1000:9.1f} ms")
    print()
    print("containment scan (20000 paths x 1200 cycle masks)")
    for name, secs in bench_any_superset().items():
        print(f"  {name:6s} {secs * 1000:9.1f} ms")


if __name__ == "__main__":
    main()
