"""Closure of (induced) paths to (induced) cycles, path enumeration, and the
blocking certificate.

Closure semantics by path length:

* length 0: the vertex lies on some cycle
* length 1: the edge lies on some cycle (an endpoint-to-endpoint detour of
  length >= 2 avoiding the edge itself)
* length >= 2: the endpoints can be joined by a path avoiding the internal
  vertices; the closing edge alone suffices when the endpoints are adjacent

Returned cycles are the shortest containing the query path; ties break
lexicographically (greedy smallest-next-vertex connector, then the cycle's
canonical form).  Induced closure additionally requires the cycle to be
chordless and to contain the path as a consecutive stretch; since a shortest
cycle through a vertex or edge is automatically chordless, lengths 0 and 1
reduce to plain closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .errors import Indeterminate, NotAPath, NotInducedPath
from .graph import Cycle, Graph, Path, path_seq_ok

PathLike = Union[Path, Sequence[int]]


@dataclass(frozen=True)
class ClosureAnswer:
    """Decision plus witness cycle and search-size telemetry."""

    closes: bool
    cycle: Optional[Cycle]
    nodes_explored: int


def _as_seq(g: Graph, path: PathLike, induced: bool) -> tuple[int, ...]:
    seq = tuple(path.verts) if isinstance(path, Path) else tuple(path)
    if not path_seq_ok(g, seq):
        raise NotAPath(f"{seq} is not a path in the graph")
    if induced and not _induced_ok(g, seq):
        raise NotInducedPath(f"{seq} is not an induced path in the graph")
    return seq


def _induced_ok(g: Graph, seq: Sequence[int]) -> bool:
    seq_mask = 0
    for v in seq:
        seq_mask |= 1 << v
    last = len(seq) - 1
    for k, v in enumerate(seq):
        expected = 0
        if k > 0:
            expected |= 1 << seq[k - 1]
        if k < last:
            expected |= 1 << seq[k + 1]
        if g.adj_mask(v) & seq_mask != expected:
            return False
    return True


def is_path(g: Graph, seq: PathLike) -> bool:
    """Distinct vertices, consecutively adjacent."""
    verts = tuple(seq.verts) if isinstance(seq, Path) else tuple(seq)
    return path_seq_ok(g, verts)


def is_induced_path(g: Graph, seq: PathLike) -> bool:
    """A path with no edges between non-consecutive vertices."""
    verts = tuple(seq.verts) if isinstance(seq, Path) else tuple(seq)
    return path_seq_ok(g, verts) and _induced_ok(g, verts)


def _lexmin_shortest_connector(
    g: Graph,
    start: int,
    goal: int,
    forbidden_mask: int,
    banned_edge: Optional[tuple[int, int]] = None,
) -> tuple[Optional[tuple[int, ...]], int]:
    """Lexicographically least shortest start->goal path avoiding forbidden
    vertices (and optionally one edge).  Returns (path, vertices_explored)."""
    n = g.n
    explored = 0
    dist = {goal: 0}
    frontier = [goal]
    while frontier:
        nxt = []
        for v in frontier:
            explored += 1
            mask = g.adj_mask(v) & ~forbidden_mask
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                if banned_edge and (v, u) in (banned_edge, banned_edge[::-1]):
                    continue
                if u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    if start not in dist:
        return None, explored
    path = [start]
    current = start
    while current != goal:
        step = dist[current] - 1
        rest = g.adj_mask(current) & ~forbidden_mask
        chosen = -1
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if banned_edge and (current, u) in (banned_edge, banned_edge[::-1]):
                continue
            if dist.get(u, -1) == step:
                chosen = u
                break
        path.append(chosen)
        current = chosen
    return tuple(path), explored


def _shortest_cycle_through_vertex(g: Graph, v: int) -> tuple[Optional[Cycle], int]:
    nbrs = g.neighbors(v)
    explored = 0
    best: Optional[Cycle] = None
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1 :]:
            connector, seen = _lexmin_shortest_connector(g, x, y, 1 << v)
            explored += seen
            if connector is None:
                continue
            cand = Cycle(g, (v,) + connector)
            if best is None or (cand.length, cand.verts) < (best.length, best.verts):
                best = cand
    return best, explored


def _shortest_cycle_through_edge(g: Graph, u: int, w: int) -> tuple[Optional[Cycle], int]:
    connector, explored = _lexmin_shortest_connector(g, u, w, 0, banned_edge=(u, w))
    if connector is None:
        return None, explored
    return Cycle(g, connector), explored


def closes_to_cycle(
    g: Graph, path: PathLike, max_nodes: Optional[int] = None
) -> ClosureAnswer:
    """Does the path extend to a cycle of g?  Raises NotAPath otherwise.

    ``max_nodes`` bounds exploration; exceeding it raises Indeterminate.
    """
    seq = _as_seq(g, path, induced=False)
    length = len(seq) - 1
    if length == 0:
        cycle, explored = _shortest_cycle_through_vertex(g, seq[0])
    elif length == 1:
        cycle, explored = _shortest_cycle_through_edge(g, seq[0], seq[1])
    else:
        forbidden = 0
        for v in seq[1:-1]:
            forbidden |= 1 << v
        connector, explored = _lexmin_shortest_connector(
            g, seq[-1], seq[0], forbidden
        )
        cycle = Cycle(g, seq + connector[1:-1]) if connector is not None else None
    if max_nodes is not None and explored > max_nodes:
        raise Indeterminate(f"explored {explored} nodes, budget {max_nodes}")
    return ClosureAnswer(cycle is not None, cycle, explored)


def closes_to_induced_cycle(
    g: Graph, path: PathLike, max_nodes: Optional[int] = None
) -> ClosureAnswer:
    """Does the induced path extend to an induced cycle of g?

    Raises NotInducedPath when the input is not an induced path.  Searches by
    iterative deepening on the cycle length: extensions leave the path's last
    vertex through vertices adjacent only to their predecessor among the
    cycle so far, closing exactly at the first vertex.
    """
    seq = _as_seq(g, path, induced=True)
    length = len(seq) - 1
    if length <= 1:
        answer = closes_to_cycle(g, seq, max_nodes)
        if answer.closes:
            assert _induced_cycle_ok(g, answer.cycle), "shortest cycle must be chordless"
        return answer
    root = seq[0]
    root_bit = 1 << root
    base_mask = 0
    for v in seq:
        base_mask |= 1 << v
    explored = 0
    budget = max_nodes if max_nodes is not None else -1

    def attempt(limit_extra: int) -> Optional[tuple[int, ...]]:
        nonlocal explored
        stack: list[tuple[tuple[int, ...], int]] = [((), base_mask)]
        # depth-first with an explicit stack; children pushed in descending
        # order so the smallest extension is explored first
        while stack:
            ext, mask = stack.pop()
            explored += 1
            if 0 <= budget < explored:
                raise Indeterminate(f"node budget {budget} exhausted")
            last = ext[-1] if ext else seq[-1]
            last_bit = 1 << last
            depth = len(ext)
            children = []
            rest = g.adj_mask(last) & ~mask
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                rest ^= low
                hits = g.adj_mask(w) & mask
                if depth + 1 == limit_extra:
                    if hits == (last_bit | root_bit):
                        return ext + (w,)
                else:
                    if hits == last_bit:
                        children.append((ext + (w,), mask | (1 << w)))
            stack.extend(reversed(children))
        return None

    for extra in range(1, g.n - len(seq) + 1):
        ext = attempt(extra)
        if ext is not None:
            return ClosureAnswer(True, Cycle(g, seq + ext), explored)
    return ClosureAnswer(False, None, explored)


def _induced_cycle_ok(g: Graph, cycle: Cycle) -> bool:
    verts = cycle.verts
    k = len(verts)
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.adjacent(verts[i], verts[j])
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def enumerate_paths(g: Graph, length: int, mode: str = "all") -> Iterator[Path]:
    """Every path of exactly the given length, once per reversal class, in
    lexicographic order of the canonical (smaller-end-first) form."""
    if mode not in ("all", "induced"):
        raise ValueError(f"mode must be 'all' or 'induced', got {mode!r}")
    induced = mode == "induced"
    n = g.n
    if length == 0:
        for v in range(n):
            yield Path(g, (v,))
        return

    def extend(seq: tuple[int, ...], mask: int) -> Iterator[Path]:
        last = seq[-1]
        if len(seq) == length + 1:
            if seq <= seq[::-1]:
                yield Path(g, seq)
            return
        rest = g.adj_mask(last) & ~mask
        while rest:
            low = rest & -rest
            w = low.bit_length() - 1
            rest ^= low
            if induced and g.adj_mask(w) & mask != 1 << last:
                continue
            yield from extend(seq + (w,), mask | (1 << w))

    for v0 in range(n):
        yield from extend((v0,), 1 << v0)


def blocking_certificate(g: Graph, path: PathLike) -> bool:
    """Sufficient certificate that a path closes to no cycle.

    True iff, in one of the two orientations, the first vertex has all its
    neighbours on the path and the last vertex is not adjacent to it.  Both
    orientations are tried because paths are canonicalised up to reversal.
    """
    seq = _as_seq(g, path, induced=False)

    def blocked(s: tuple[int, ...]) -> bool:
        head, tail = s[0], s[-1]
        on_path = 0
        for v in s:
            on_path |= 1 << v
        return g.adj_mask(head) & ~on_path == 0 and not g.adjacent(head, tail)

    return blocked(seq) or blocked(seq[::-1])
