"""Backend equivalence: the numba fast path and the numpy fallback must agree
bit for bit, and both must match a dumb reference."""

import os
import subprocess
import sys

import numpy as np
import pytest

from cyclosure import _kernels


def _reference_min_perm(bits, bit_idx, weights):
    out = []
    for row in bits:
        best = None
        for perm_row in bit_idx:
            value = sum(int(w) for b, w in zip(row[perm_row], weights) if b)
            best = value if best is None else min(best, value)
        out.append(best if best is not None else 0)
    return np.array(out, dtype=np.int64)


def _random_inputs(rng, n_graphs=5, n_perms=24, n_bits=10):
    bits = (rng.random((n_graphs, n_bits)) < 0.5).astype(np.uint8)
    bit_idx = np.stack(
        [rng.permutation(n_bits) for _ in range(n_perms)]
    ).astype(np.int64)
    weights = np.array([1 << (n_bits - 1 - k) for k in range(n_bits)], dtype=np.int64)
    return bits, bit_idx, weights


def test_min_perm_values_matches_reference():
    rng = np.random.default_rng(7)
    bits, bit_idx, weights = _random_inputs(rng)
    expected = _reference_min_perm(bits, bit_idx, weights)
    assert np.array_equal(_kernels.min_perm_values_numpy(bits, bit_idx, weights), expected)
    assert np.array_equal(_kernels.min_perm_values(bits, bit_idx, weights), expected)


def test_any_superset_matches_reference():
    rng = np.random.default_rng(11)
    masks = rng.integers(0, 1 << 20, size=50).astype(np.uint64)
    queries = rng.integers(0, 1 << 20, size=30).astype(np.uint64)
    expected = np.array(
        [any(int(m) & int(q) == int(q) for m in masks) for q in queries]
    )
    assert np.array_equal(_kernels.any_superset_numpy(masks, queries), expected)
    assert np.array_equal(_kernels.any_superset(masks, queries), expected)


def test_empty_inputs():
    weights = np.zeros(0, dtype=np.int64)
    bits = np.zeros((3, 0), dtype=np.uint8)
    bit_idx = np.zeros((2, 0), dtype=np.int64)
    assert list(_kernels.min_perm_values(bits, bit_idx, weights)) == [0, 0, 0]
    masks = np.zeros(0, dtype=np.uint64)
    queries = np.array([3, 0], dtype=np.uint64)
    assert list(_kernels.any_superset(masks, queries)) == [False, False]


@pytest.mark.parametrize("backend", ["numpy", "numba", "auto"])
def test_backend_env_flag(backend):
    code = (
        "from cyclosure import _kernels; print(_kernels.backend_name())"
    )
    env = dict(os.environ, CYCLOSURE_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode == 0, out.stderr
    name = out.stdout.strip()
    if backend == "numpy":
        assert name == "numpy"
    else:
        assert name in ("numba", "numpy")


def test_bad_backend_rejected():
    code = "import cyclosure._kernels"
    env = dict(os.environ, CYCLOSURE_BACKEND="cuda")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.returncode != 0


def test_census_identical_under_numpy_backend():
    code = (
        "from cyclosure.census import enumerate_connected_graphs;"
        "from cyclosure.io import to_graph6;"
        "print('|'.join(to_graph6(g) for g in enumerate_connected_graphs(5)))"
    )
    outs = []
    for backend in ("numpy", "auto"):
        env = dict(os.environ, CYCLOSURE_BACKEND=backend)
        run = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        assert run.returncode == 0, run.stderr
        outs.append(run.stdout)
    assert outs[0] == outs[1]
