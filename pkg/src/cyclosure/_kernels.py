"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The backend is picked once at import from ``CYCLOSURE_BACKEND``:

* ``auto`` (default): numba when importable, else numpy
* ``numba``: require numba, fail loudly if missing
* ``numpy``: force the vectorised fallback

Both backends are exact integer computations and must agree bit-for-bit;
``tests/test_kernels.py`` asserts that.  Everything else in the package is
branchy combinatorial search over Python-int bitsets, which neither backend
would help with.
"""

from __future__ import annotations

import os

import numpy as np

_VALID = ("auto", "numba", "numpy")


def _resolve_backend() -> str:
    choice = os.environ.get("CYCLOSURE_BACKEND", "auto").strip().lower()
    if choice not in _VALID:
        raise ValueError(
            f"CYCLOSURE_BACKEND={choice!r} not one of {', '.join(_VALID)}"
        )
    if choice == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise
        return "numpy"
    return "numba"


BACKEND = _resolve_backend()


def backend_name() -> str:
    return BACKEND


# -- minimum bitstring value over a permutation table (canonical forms) ------


def min_perm_values_numpy(
    bits: np.ndarray, bit_idx: np.ndarray, weights: np.ndarray
) -> np.ndarray:
    """For each row of ``bits`` return min over permutations of the packed value.

    bits: (G, B) uint8 upper-triangle adjacency bits.
    bit_idx: (P, B) int64; permutation p reads output bit k from bits[bit_idx[p, k]].
    weights: (B,) int64 place values, MSB first.
    """
    n_graphs = bits.shape[0]
    out = np.full(n_graphs, np.iinfo(np.int64).max, dtype=np.int64)
    if bit_idx.shape[0] == 0 or bits.shape[1] == 0:
        out[:] = 0
        return out
    # chunk the permutation axis to bound the (G, chunk, B) gather
    chunk = max(1, 4_000_000 // max(1, n_graphs * bits.shape[1]))
    for lo in range(0, bit_idx.shape[0], chunk):
        idx = bit_idx[lo : lo + chunk]
        vals = bits[:, idx].astype(np.int64) @ weights
        np.minimum(out, vals.min(axis=1), out=out)
    return out


def any_superset_numpy(masks: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """queries[q] is covered iff some masks[c] has all of its bits set."""
    if masks.size == 0:
        return np.zeros(queries.shape[0], dtype=bool)
    return ((masks[None, :] & queries[:, None]) == queries[:, None]).any(axis=1)


if BACKEND == "numba":
    from numba import njit

    @njit(cache=True)
    def _min_perm_values_numba(bits, bit_idx, weights):  # pragma: no cover - jitted
        n_graphs = bits.shape[0]
        n_perms, n_bits = bit_idx.shape
        out = np.empty(n_graphs, dtype=np.int64)
        for g in range(n_graphs):
            best = np.int64(0x7FFFFFFFFFFFFFFF)
            for p in range(n_perms):
                acc = np.int64(0)
                for k in range(n_bits):
                    if bits[g, bit_idx[p, k]]:
                        acc += weights[k]
                        if acc >= best:
                            break
                if acc < best:
                    best = acc
            out[g] = best
        return out

    @njit(cache=True)
    def _any_superset_numba(masks, queries):  # pragma: no cover - jitted
        out = np.zeros(queries.shape[0], dtype=np.bool_)
        for q in range(queries.shape[0]):
            want = queries[q]
            for c in range(masks.shape[0]):
                if masks[c] & want == want:
                    out[q] = True
                    break
        return out

    def min_perm_values(bits, bit_idx, weights):
        if bit_idx.shape[0] == 0 or bits.shape[1] == 0:
            return np.zeros(bits.shape[0], dtype=np.int64)
        return _min_perm_values_numba(bits, bit_idx, weights)

    def any_superset(masks, queries):
        return _any_superset_numba(masks, queries)

else:
    min_perm_values = min_perm_values_numpy
    any_superset = any_superset_numpy
