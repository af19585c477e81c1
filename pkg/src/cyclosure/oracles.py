"""Brute-force oracles: exhaustive cycle/chordless-cycle enumeration, subset
connectivity, and full-permutation orbits.

These are deliberately independent of the fast decision procedures they
cross-check; keep them dumb.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .errors import EmptyGraph
from .graph import Graph, is_connected


def all_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every cycle of g exactly once, as canonical vertex tuples.

    Canonical form: starts at the cycle's minimum vertex and runs toward the
    smaller of that vertex's two cycle neighbours.  Enumeration is plain
    backtracking over paths whose start is the minimum vertex.
    """
    out: list[tuple[int, ...]] = []
    n = g.n
    for root in range(n):
        stack = [(root,)]
        while stack:
            path = stack.pop()
            last = path[-1]
            for w in g.neighbors(last):
                if w <= root or w in path:
                    continue
                nxt = path + (w,)
                if len(nxt) >= 3 and g.adjacent(w, root) and nxt[1] < w:
                    out.append(nxt)
                stack.append(nxt)
    return sorted(out, key=lambda c: (len(c), c))


def chordless_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every chordless (induced) cycle of g exactly once, canonical tuples."""
    out: list[tuple[int, ...]] = []
    n = g.n
    for root in range(n):
        root_bit = 1 << root
        stack = [((root,), root_bit)]
        while stack:
            path, mask = stack.pop()
            last = path[-1]
            last_bit = 1 << last
            for w in g.neighbors(last):
                if w <= root or (mask >> w) & 1:
                    continue
                hits = g.adj_mask(w) & mask
                if hits == last_bit:
                    stack.append((path + (w,), mask | (1 << w)))
                elif hits == (last_bit | root_bit) and len(path) >= 2:
                    if path[1] < w:
                        out.append(path + (w,))
    return sorted(out, key=lambda c: (len(c), c))


def _edge_index(n: int, i: int, j: int) -> int:
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def edge_mask_of(g: Graph, verts: Sequence[int], close: bool) -> int:
    """Edge set of a path (close=False) or cycle (close=True) as a bitmask."""
    mask = 0
    pairs = list(zip(verts, verts[1:]))
    if close:
        pairs.append((verts[-1], verts[0]))
    for a, b in pairs:
        mask |= 1 << _edge_index(g.n, min(a, b), max(a, b))
    return mask


def cycle_masks(g: Graph, cycles: list[tuple[int, ...]]) -> np.ndarray:
    """Edge bitmasks of cycles for the batched containment kernel (needs n <= 11)."""
    if g.n * (g.n - 1) // 2 > 63:
        raise ValueError("edge masks only fit uint64 for n <= 11")
    return np.array(
        [edge_mask_of(g, c, close=True) for c in cycles], dtype=np.uint64
    )


def paths_covered_by_cycles(
    g: Graph,
    path_seqs: list[tuple[int, ...]],
    cycles: list[tuple[int, ...]],
    masks: np.ndarray,
) -> np.ndarray:
    """For each path, whether some enumerated cycle contains it as a subgraph."""
    if not path_seqs:
        return np.zeros(0, dtype=bool)
    queries = np.array(
        [edge_mask_of(g, p, close=False) if len(p) > 1 else 0 for p in path_seqs],
        dtype=np.uint64,
    )
    covered = _kernels.any_superset(masks, queries)
    # a single vertex has an empty edge set; it is covered iff it lies on a cycle
    on_cycle = set()
    for c in cycles:
        on_cycle.update(c)
    for k, seq in enumerate(path_seqs):
        if len(seq) == 1:
            covered[k] = seq[0] in on_cycle
    return covered


def closes_by_enumeration(
    g: Graph,
    seq: Sequence[int],
    induced: bool,
    cycles: Optional[list[tuple[int, ...]]] = None,
) -> bool:
    """Oracle closure decision by scanning an exhaustive cycle list.

    Plain mode: some cycle's edge set contains the path's edge set.  Induced
    mode: some chordless cycle longer than the path contains its vertex
    sequence consecutively (for paths of length <= 1 this degenerates to
    lying on any chordless cycle, which is equivalent to lying on any cycle).
    """
    seq = tuple(seq)
    if cycles is None:
        cycles = chordless_cycles(g) if induced else all_cycles(g)
    if not induced:
        if len(seq) == 1:
            return any(seq[0] in c for c in cycles)
        want = edge_mask_of(g, seq, close=False)
        return any(edge_mask_of(g, c, close=True) & want == want for c in cycles)
    if len(seq) <= 2:
        if len(seq) == 1:
            return any(seq[0] in c for c in cycles)
        return any(_consecutive_in_cycle(c, seq) for c in cycles)
    return any(
        len(c) > len(seq) and _consecutive_in_cycle(c, seq) for c in cycles
    )


def _consecutive_in_cycle(cycle: tuple[int, ...], seq: tuple[int, ...]) -> bool:
    """Whether seq (or its reverse) appears consecutively in the cyclic order."""
    k = len(cycle)
    if len(seq) > k:
        return False
    doubled = cycle + cycle
    fwd = tuple(seq)
    rev = fwd[::-1]
    for start in range(k):
        window = doubled[start : start + len(seq)]
        if window == fwd or window == rev:
            return True
    return False


def brute_vertex_connectivity(g: Graph) -> tuple[int, Optional[tuple[int, ...]]]:
    """kappa by enumerating removal sets in (size, lex) order."""
    n = g.n
    if n == 0:
        raise EmptyGraph("vertex connectivity of the empty graph is undefined")
    if not is_connected(g):
        return 0, ()
    if g.m == n * (n - 1) // 2:
        return n - 1, None
    for size in range(1, n - 1):
        for cut in combinations(range(n), size):
            if not _connected_after_removal(g, set(cut)):
                return size, cut
    return n - 1, None


def _connected_after_removal(g: Graph, removed: set[int]) -> bool:
    keep = [v for v in range(g.n) if v not in removed]
    if len(keep) <= 1:
        return True
    removed_mask = 0
    for v in removed:
        removed_mask |= 1 << v
    start = keep[0]
    visited = 1 << start
    frontier = 1 << start
    while frontier:
        reach = 0
        rest = frontier
        while rest:
            low = rest & -rest
            reach |= g.adj_mask(low.bit_length() - 1)
            rest ^= low
        frontier = reach & ~visited & ~removed_mask
        visited |= frontier
    return all((visited >> v) & 1 for v in keep)


def brute_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms by scanning the full symmetric group; n <= 8 territory."""
    out = []
    for perm in permutations(range(g.n)):
        if all(g.adjacent(perm[u], perm[v]) for u, v in g.edges()):
            out.append(perm)
    return out


def brute_vertex_orbit_reps(g: Graph) -> tuple[int, ...]:
    """representative[v] = min vertex reachable from v under Aut(g), by brute force."""
    reps = list(range(g.n))
    for perm in brute_automorphisms(g):
        for v in range(g.n):
            target = perm[v]
            a, b = _find(reps, v), _find(reps, target)
            if a != b:
                reps[max(a, b)] = min(a, b)
    return tuple(_find(reps, v) for v in range(g.n))


def brute_edge_orbit_reps(g: Graph) -> tuple[int, ...]:
    edge_list = g.edges()
    index = {e: k for k, e in enumerate(edge_list)}
    reps = list(range(len(edge_list)))
    for perm in brute_automorphisms(g):
        for k, (u, v) in enumerate(edge_list):
            a, b = perm[u], perm[v]
            j = index[(min(a, b), max(a, b))]
            ra, rb = _find(reps, k), _find(reps, j)
            if ra != rb:
                reps[max(ra, rb)] = min(ra, rb)
    return tuple(_find(reps, k) for k in range(len(edge_list)))


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def has_odd_cycle(g: Graph) -> bool:
    """Odd-cycle detection by exhaustive cycle enumeration (bipartite cross-check)."""
    return any(len(c) % 2 == 1 for c in all_cycles(g))
