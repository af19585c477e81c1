"""Immutable simple undirected graphs with bitset adjacency, plus paths and cycles.

Vertices are integers ``0..n-1``.  Each adjacency row is kept as a Python int
used as a bitset, which covers both the single-word case (n <= 64) and the
multi-word case transparently.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .errors import DuplicateEdge, NotAPath, OutOfRange, SelfLoop

MAX_VERTICES = 1 << 16


class Graph:
    """Simple undirected graph, immutable after construction.

    Invariants: no self-loops, symmetric adjacency, ``m`` equals half the
    degree sum.  Use :func:`build_graph` to construct one with validation.
    """

    __slots__ = ("n", "m", "_adj", "_nbrs", "_edges")

    def __init__(self, n: int, adj_masks: Sequence[int]):
        self.n = n
        self._adj = tuple(adj_masks)
        self._nbrs = tuple(tuple(_bits(mask)) for mask in self._adj)
        self.m = sum(mask.bit_count() for mask in self._adj) // 2
        self._edges: Optional[tuple[tuple[int, int], ...]] = None

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def adj_mask(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitset."""
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        return (self._adj[u] >> v) & 1 == 1

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in self._nbrs[u] if u < v
            )
        return self._edges

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph from a vertex count and unordered edge pairs.

    Raises:
        OutOfRange: an endpoint is negative or >= n, or n is out of range.
        SelfLoop: some pair is (v, v).
        DuplicateEdge: the same unordered pair appears twice.
    """
    if n < 0 or n > MAX_VERTICES:
        raise OutOfRange(f"vertex count {n} outside 0..{MAX_VERTICES}")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise OutOfRange(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"edge ({u},{v}) is a self-loop")
        if (masks[u] >> v) & 1:
            raise DuplicateEdge(f"edge ({u},{v}) supplied more than once")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, masks)


def validate_graph(g: Graph) -> None:
    """Debug validator for the Graph invariants; raises AssertionError."""
    assert 0 <= g.n <= MAX_VERTICES
    degree_sum = 0
    for v in range(g.n):
        mask = g.adj_mask(v)
        assert mask >> g.n == 0, f"vertex {v} adjacent to out-of-range vertex"
        assert (mask >> v) & 1 == 0, f"self-loop at {v}"
        degree_sum += mask.bit_count()
        for u in g.neighbors(v):
            assert g.adjacent(u, v), f"asymmetric adjacency {u},{v}"
    assert g.m == degree_sum // 2


def is_connected(g: Graph) -> bool:
    """True iff the graph has exactly one connected component (n <= 1 counts)."""
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    visited = 1
    frontier = 1
    while frontier:
        reach = 0
        rest = frontier
        while rest:
            low = rest & -rest
            reach |= g.adj_mask(low.bit_length() - 1)
            rest ^= low
        frontier = reach & ~visited
        visited |= frontier
    return visited == full


def is_bipartite(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Return a bipartition witness (side_a, side_b) or None.

    Colouring is deterministic: BFS from the lowest-index vertex of each
    component, with that vertex on side A.
    """
    side_a = 0
    side_b = 0
    visited = 0
    for start in range(g.n):
        if (visited >> start) & 1:
            continue
        side_a |= 1 << start
        visited |= 1 << start
        frontier = 1 << start
        while frontier:
            next_frontier = 0
            rest = frontier
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                mask = g.adj_mask(v)
                my_side = side_a if (side_a >> v) & 1 else side_b
                if mask & my_side:
                    return None
                next_frontier |= mask & ~visited
            # everything newly reached gets the colour opposite to its parents;
            # parents of a vertex may sit on both sides, which the conflict
            # check above catches on the next sweep
            rest = next_frontier
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                if g.adj_mask(v) & side_a:
                    side_b |= low
                else:
                    side_a |= low
            visited |= next_frontier
            frontier = next_frontier
    # final conflict sweep: every edge must cross the partition
    for u in range(g.n):
        if g.adj_mask(u) & (side_a if (side_a >> u) & 1 else side_b):
            return None
    return tuple(_bits(side_a)), tuple(_bits(side_b))


class Regularity(NamedTuple):
    min_degree: int
    max_degree: int
    regular_degree: Optional[int]


def regularity(g: Graph) -> Regularity:
    """Minimum and maximum degree, plus the common degree if regular.

    The 0-vertex graph is reported as (0, 0, 0) by convention.
    """
    if g.n == 0:
        return Regularity(0, 0, 0)
    degrees = [g.degree(v) for v in range(g.n)]
    lo, hi = min(degrees), max(degrees)
    return Regularity(lo, hi, lo if lo == hi else None)


def is_star(g: Graph) -> bool:
    """True iff g is a star K_{1,k} for some k >= 0 (includes K_1 and K_2)."""
    if g.n == 0:
        return False
    return g.m == g.n - 1 and max(g.degree(v) for v in range(g.n)) == g.n - 1


def _path_error(g: Graph, verts: Sequence[int]) -> Optional[str]:
    if len(verts) == 0:
        return "empty vertex sequence"
    if len(set(verts)) != len(verts):
        return "repeated vertex"
    for v in verts:
        if not (0 <= v < g.n):
            return f"vertex {v} out of range"
    for a, b in zip(verts, verts[1:]):
        if not g.adjacent(a, b):
            return f"consecutive vertices {a},{b} not adjacent"
    return None


def path_seq_ok(g: Graph, verts: Sequence[int]) -> bool:
    """True iff ``verts`` is a path in ``g`` (distinct, consecutively adjacent)."""
    return _path_error(g, verts) is None


class Path:
    """A path, canonicalised to the lexicographically smaller orientation."""

    __slots__ = ("verts",)

    def __init__(self, graph: Graph, verts: Sequence[int]):
        seq = tuple(verts)
        err = _path_error(graph, seq)
        if err is not None:
            raise NotAPath(err)
        rev = seq[::-1]
        self.verts = seq if seq <= rev else rev

    @property
    def length(self) -> int:
        """Edge count of the path."""
        return len(self.verts) - 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.verts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Path):
            return NotImplemented
        return self.verts == other.verts

    def __hash__(self) -> int:
        return hash(("Path", self.verts))

    def __repr__(self) -> str:
        return f"Path{self.verts}"


class Cycle:
    """A cycle, canonicalised up to rotation and reflection.

    ``verts`` holds each cycle vertex exactly once; the closing edge back to
    ``verts[0]`` is implicit.  Canonical form starts at the minimum vertex and
    runs toward the smaller of its two cyclic neighbours.
    """

    __slots__ = ("verts",)

    def __init__(self, graph: Graph, verts: Sequence[int]):
        seq = tuple(verts)
        if len(seq) < 3:
            raise ValueError("cycle needs at least 3 vertices")
        if len(set(seq)) != len(seq):
            raise ValueError("repeated vertex in cycle")
        for v in seq:
            if not (0 <= v < graph.n):
                raise ValueError(f"vertex {v} out of range")
        for a, b in zip(seq, seq[1:] + seq[:1]):
            if not graph.adjacent(a, b):
                raise ValueError(f"cyclically consecutive vertices {a},{b} not adjacent")
        start = seq.index(min(seq))
        rot = seq[start:] + seq[:start]
        if rot[-1] < rot[1]:
            rot = (rot[0],) + rot[1:][::-1]
        self.verts = rot

    @property
    def length(self) -> int:
        """Edge count == vertex count."""
        return len(self.verts)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Cycle edges as normalised (min, max) pairs."""
        for a, b in zip(self.verts, self.verts[1:] + self.verts[:1]):
            yield (a, b) if a < b else (b, a)

    def __iter__(self) -> Iterator[int]:
        return iter(self.verts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.verts == other.verts

    def __hash__(self) -> int:
        return hash(("Cycle", self.verts))

    def __repr__(self) -> str:
        return f"Cycle{self.verts}"
