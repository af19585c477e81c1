"""Automorphism generators by backtracking, orbits, and transitivity deciders.

The generator search walks a stabiliser chain over a fixed assignment order:
at level i it looks, for each candidate image w of the i-th base vertex, for
an automorphism fixing the earlier base vertices pointwise and sending the
i-th to w.  The coset representatives found this way generate the full
automorphism group, and the per-level orbit sizes multiply to the group
order.  Pruning uses iterated degree refinement (vertices may only map
within their refinement class) plus adjacency consistency with the partial
map, checked as single bitset comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import SizeMismatch, TooLarge
from .graph import Graph

DEFAULT_VERTEX_CAP = 64

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of 0..n-1 (or edge indices) into orbits.

    representative[x] is the smallest element of x's orbit; orbit_count is
    the number of distinct orbits.
    """

    representative: tuple[int, ...]
    orbit_count: int


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    """True iff ``perm`` preserves adjacency and non-adjacency.

    Raises SizeMismatch when ``perm`` is not a permutation of 0..n-1.
    """
    image = tuple(perm)
    if len(image) != g.n:
        raise SizeMismatch(f"permutation of length {len(image)} on {g.n} vertices")
    if sorted(image) != list(range(g.n)):
        raise SizeMismatch("sequence is not a permutation of 0..n-1")
    # mapping all edges to edges suffices: an injection of a finite edge set
    # into itself is a bijection, so non-edges are preserved automatically
    for u, v in g.edges():
        if not g.adjacent(image[u], image[v]):
            return False
    return True


def _refinement_colors(g: Graph) -> tuple[int, ...]:
    """Iterated degree refinement (1-dimensional WL), renumbered deterministically."""
    n = g.n
    colors = [g.degree(v) for v in range(n)]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [palette[signatures[v]] for v in range(n)]
        if new_colors == colors:
            return tuple(colors)
        colors = new_colors


def _assignment_order(g: Graph, colors: Sequence[int]) -> list[int]:
    """Fixed vertex order: rare colours first, staying adjacent to the prefix."""
    n = g.n
    class_size = [0] * (max(colors) + 1 if n else 0)
    for c in colors:
        class_size[c] += 1
    remaining = set(range(n))
    order: list[int] = []
    adjacent_mask = 0
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                0 if (adjacent_mask >> v) & 1 or not order else 1,
                class_size[colors[v]],
                colors[v],
                v,
            ),
        )
        order.append(best)
        remaining.discard(best)
        adjacent_mask |= g.adj_mask(best)
    return order


def _complete_map(
    g: Graph,
    colors: Sequence[int],
    order: Sequence[int],
    level: int,
    target: int,
) -> Optional[Permutation]:
    """Find an automorphism fixing order[:level] pointwise, order[level] -> target.

    The pinned prefix follows the fixed refinement order; the completion
    assigns the remaining vertices most-constrained-first (most neighbours
    already mapped), which keeps refutations near the root of the search.
    """
    n = g.n
    image = [-1] * n
    used = 0
    assigned_mask = 0

    def consistent(v: int, w: int) -> bool:
        if colors[v] != colors[w]:
            return False
        required = 0
        rest = g.adj_mask(v) & assigned_mask
        while rest:
            low = rest & -rest
            required |= 1 << image[low.bit_length() - 1]
            rest ^= low
        return (g.adj_mask(w) & used) == required

    for k in range(level):
        v = order[k]
        if not consistent(v, v):
            return None
        image[v] = v
        used |= 1 << v
        assigned_mask |= 1 << v
    pinned = order[level]
    if (used >> target) & 1 or not consistent(pinned, target):
        return None
    image[pinned] = target
    used |= 1 << target
    assigned_mask |= 1 << pinned

    # anchored[v] counts already-assigned neighbours of v, kept incrementally
    # so the most-constrained-vertex choice is a cheap scan
    anchored = [0] * n
    rest = assigned_mask
    while rest:
        low = rest & -rest
        for u in g.neighbors(low.bit_length() - 1):
            anchored[u] += 1
        rest ^= low

    def extend(remaining: int) -> bool:
        nonlocal used, assigned_mask
        if remaining == 0:
            return True
        best_v = -1
        best_count = -1
        for v in range(n):
            if not (assigned_mask >> v) & 1 and anchored[v] > best_count:
                best_count = anchored[v]
                best_v = v
        v = best_v
        if best_count > 0:
            anchor = (g.adj_mask(v) & assigned_mask).bit_length() - 1
            candidates = g.adj_mask(image[anchor]) & ~used
        else:
            candidates = ((1 << n) - 1) & ~used
        while candidates:
            low = candidates & -candidates
            w = low.bit_length() - 1
            candidates ^= low
            if consistent(v, w):
                image[v] = w
                used |= 1 << w
                assigned_mask |= 1 << v
                for u in g.neighbors(v):
                    anchored[u] += 1
                if extend(remaining - 1):
                    return True
                image[v] = -1
                used &= ~(1 << w)
                assigned_mask &= ~(1 << v)
                for u in g.neighbors(v):
                    anchored[u] -= 1
        return False

    if extend(n - level - 1):
        return tuple(image)
    return None


def _orbit_closure(seed: set[int], gens: list[Permutation]) -> set[int]:
    frontier = list(seed)
    out = set(seed)
    while frontier:
        x = frontier.pop()
        for gen in gens:
            y = gen[x]
            if y not in out:
                out.add(y)
                frontier.append(y)
    return out


@lru_cache(maxsize=4096)
def _stabilizer_chain(g: Graph, cap: int) -> tuple[list[Permutation], list[int]]:
    if g.n > cap:
        raise TooLarge(f"automorphism search capped at {cap} vertices, got {g.n}")
    n = g.n
    if n <= 1:
        return [], []
    colors = _refinement_colors(g)
    order = _assignment_order(g, colors)
    gens: list[Permutation] = []
    orbit_sizes: list[int] = []
    for level in range(n - 1):
        v = order[level]
        prefix = set(order[:level])
        level_gens: list[Permutation] = []
        covered = {v}
        rejected: set[int] = set()
        for w in range(n):
            if w == v or w in prefix or colors[w] != colors[v]:
                continue
            if w in covered or w in rejected:
                continue
            perm = _complete_map(g, colors, order, level, w)
            if perm is not None:
                gens.append(perm)
                level_gens.append(perm)
                covered = _orbit_closure(covered, level_gens)
                rejected = _orbit_closure(rejected, level_gens) if rejected else rejected
            else:
                # anything reachable from w under the found level generators
                # is equally unreachable from v: a map onto g(w) composed with
                # g^{-1} would give a map onto w, which the complete search
                # just refuted
                rejected = _orbit_closure(rejected | {w}, level_gens)
        orbit_sizes.append(len(covered))
    return gens, orbit_sizes


def automorphism_generators(
    g: Graph, cap: int = DEFAULT_VERTEX_CAP
) -> list[Permutation]:
    """A generating set of Aut(g); deterministic for a given graph.

    Raises TooLarge when g has more than ``cap`` vertices.
    """
    gens, _ = _stabilizer_chain(g, cap)
    return gens


def automorphism_group_order(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """|Aut(g)| from the stabiliser-chain orbit sizes."""
    _, orbit_sizes = _stabilizer_chain(g, cap)
    order = 1
    for size in orbit_sizes:
        order *= size
    return order


def _partition_from_unions(n_elems: int, unions: list[tuple[int, int]]) -> OrbitPartition:
    parent = list(range(n_elems))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in unions:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    reps = tuple(find(x) for x in range(n_elems))
    return OrbitPartition(reps, len(set(reps)))


def vertex_orbits(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> OrbitPartition:
    """Orbits of the automorphism group on vertices."""
    gens = automorphism_generators(g, cap)
    unions = [(v, gen[v]) for gen in gens for v in range(g.n)]
    return _partition_from_unions(g.n, unions)


def edge_orbits(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> OrbitPartition:
    """Orbits of the induced action on unordered edges, indexed in lex edge order."""
    gens = automorphism_generators(g, cap)
    edge_list = g.edges()
    index = {e: k for k, e in enumerate(edge_list)}
    unions = []
    for gen in gens:
        for k, (u, v) in enumerate(edge_list):
            a, b = gen[u], gen[v]
            unions.append((k, index[(min(a, b), max(a, b))]))
    return _partition_from_unions(len(edge_list), unions)


def is_vertex_transitive(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """True iff all vertices lie in one orbit (vacuously true for n <= 1)."""
    return vertex_orbits(g, cap).orbit_count <= 1


def is_edge_transitive(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """True iff all edges lie in one orbit; the edgeless graph counts as true."""
    return edge_orbits(g, cap).orbit_count <= 1
