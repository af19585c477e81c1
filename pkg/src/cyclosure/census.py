"""Small-graph census: canonical forms and connected isomorphism-class enumeration.

The canonical form of a graph is the lexicographically minimal adjacency
bitstring (upper triangle, row-major) over all vertex permutations, packed
into an int.  Enumeration builds classes on n vertices by attaching a new
vertex to every nonempty subset of every class on n-1 vertices; every
connected graph has a non-cut vertex, so this reaches every class.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from . import _kernels
from .errors import TooLarge
from .graph import Graph, build_graph

MAX_CENSUS_N = 7
MAX_CANONICAL_N = 8

#: connected isomorphism classes on 1..7 vertices; frozen reference counts
CONNECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _pair_index(i: int, j: int, n: int) -> int:
    """Row-major upper-triangle index of the pair (i, j), i < j."""
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(bit_idx, weights) for canonicalising n-vertex graphs.

    bit_idx[p, k] is where permutation p reads output bit k from; weights are
    MSB-first place values over the n*(n-1)//2 upper-triangle bits.
    """
    nbits = n * (n - 1) // 2
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    pairs = np.array(
        [(i, j) for i in range(n) for j in range(i + 1, n)], dtype=np.int64
    ).reshape(nbits, 2)
    if nbits == 0:
        return (
            np.zeros((len(perms), 0), dtype=np.int64),
            np.zeros(0, dtype=np.int64),
        )
    a = perms[:, pairs[:, 0]]
    b = perms[:, pairs[:, 1]]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    bit_idx = lo * (2 * n - lo - 1) // 2 + (hi - lo - 1)
    weights = np.array([1 << (nbits - 1 - k) for k in range(nbits)], dtype=np.int64)
    return bit_idx, weights


def _graph_bits(g: Graph) -> np.ndarray:
    n = g.n
    bits = np.zeros(n * (n - 1) // 2, dtype=np.uint8)
    for u, v in g.edges():
        bits[_pair_index(u, v, n)] = 1
    return bits


def canonical_values(bit_rows: np.ndarray, n: int) -> np.ndarray:
    """Canonical forms for a batch of n-vertex graphs given as bit rows."""
    bit_idx, weights = _perm_tables(n)
    return _kernels.min_perm_values(bit_rows, bit_idx, weights)


def canonical_form(g: Graph) -> int:
    """Canonical form of ``g`` as an integer; raises TooLarge beyond n=8."""
    if g.n > MAX_CANONICAL_N:
        raise TooLarge(f"canonical form capped at {MAX_CANONICAL_N} vertices")
    if g.n <= 1:
        return 0
    bits = _graph_bits(g).reshape(1, -1)
    return int(canonical_values(bits, g.n)[0])


def graph_from_canonical(value: int, n: int) -> Graph:
    """Rebuild the canonically labelled graph from its packed bitstring."""
    nbits = n * (n - 1) // 2
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (value >> (nbits - 1 - k)) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[int, ...]:
    """Sorted canonical forms of the connected classes on exactly n vertices."""
    if n == 1:
        return (0,)
    prev = _connected_classes(n - 1)
    nbits = n * (n - 1) // 2
    rows = []
    for value in prev:
        base = graph_from_canonical(value, n - 1)
        stem = np.zeros(nbits, dtype=np.uint8)
        for u, v in base.edges():
            stem[_pair_index(u, v, n)] = 1
        for subset in range(1, 1 << (n - 1)):
            bits = stem.copy()
            for u in range(n - 1):
                if (subset >> u) & 1:
                    bits[_pair_index(u, n - 1, n)] = 1
            rows.append(bits)
    batch = np.stack(rows)
    values = canonical_values(batch, n)
    return tuple(sorted(set(int(v) for v in values)))


def enumerate_connected_graphs(max_n: int) -> Iterator[Graph]:
    """One canonically labelled representative per connected class, 1..max_n vertices.

    Ordered by vertex count, then ascending canonical form.  Built-in
    enumeration is capped at 7 vertices; larger censuses must be ingested
    from graph6 files.
    """
    if max_n > MAX_CENSUS_N:
        raise TooLarge(f"built-in census capped at {MAX_CENSUS_N} vertices")
    for n in range(1, max_n + 1):
        for value in _connected_classes(n):
            yield graph_from_canonical(value, n)
