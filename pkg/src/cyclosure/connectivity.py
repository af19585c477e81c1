"""Exact vertex connectivity via Menger (vertex-split max-flow) and the
connectivity bounds for symmetric graphs as checkable predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import EmptyGraph, PreconditionViolated
from .graph import Graph, is_connected, regularity
from .symmetry import DEFAULT_VERTEX_CAP, is_edge_transitive, is_vertex_transitive


@dataclass(frozen=True)
class ConnectivityResult:
    """kappa plus a minimum separating set (absent for complete graphs)."""

    kappa: int
    witness_cut: Optional[tuple[int, ...]]


def _max_flow_vertex_cut(g: Graph, s: int, t: int) -> tuple[int, tuple[int, ...]]:
    """Internally vertex-disjoint s-t path count and a minimum vertex cut.

    Standard vertex splitting: v becomes v_in=2v -> v_out=2v+1 with capacity 1;
    each edge {u,v} contributes u_out->v_in and v_out->u_in with capacity n
    (effectively infinite), so every min cut consists of vertex arcs only.
    Requires s and t non-adjacent.
    """
    n = g.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = cap.get((b, a), 0)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        cap[(a, b)] += c

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            node = queue.pop(0)
            for nxt in adj.get(node, ()):
                if nxt not in parent and cap.get((node, nxt), 0) > 0:
                    parent[nxt] = node
                    queue.append(nxt)
        if sink not in parent:
            break
        bottleneck = big
        node = sink
        while node != source:
            prev = parent[node]
            bottleneck = min(bottleneck, cap[(prev, node)])
            node = prev
        node = sink
        while node != source:
            prev = parent[node]
            cap[(prev, node)] -= bottleneck
            cap[(node, prev)] = cap.get((node, prev), 0) + bottleneck
            node = prev
        flow += bottleneck
    reachable = {source}
    queue = [source]
    while queue:
        node = queue.pop(0)
        for nxt in adj.get(node, ()):
            if nxt not in reachable and cap.get((node, nxt), 0) > 0:
                reachable.add(nxt)
                queue.append(nxt)
    cut = tuple(
        v for v in range(n) if 2 * v in reachable and 2 * v + 1 not in reachable
    )
    return flow, cut


def vertex_connectivity(g: Graph) -> ConnectivityResult:
    """kappa(g) with a witness cut when one exists.

    kappa(K_n) = n - 1 with no cut; a disconnected graph has kappa 0 with the
    empty cut.  Otherwise kappa is minimised over Menger max-flows: from a
    fixed minimum-degree vertex s to every non-neighbour, and between every
    non-adjacent pair of neighbours of s (a minimum cut either misses s,
    leaving s separated from some non-neighbour, or contains s, in which case
    s has neighbours in two components).  Ties between minimum cuts break to
    the lexicographically smallest cut among those candidate pairs.
    """
    n = g.n
    if n == 0:
        raise EmptyGraph("vertex connectivity of the empty graph is undefined")
    if not is_connected(g):
        return ConnectivityResult(0, ())
    if g.m == n * (n - 1) // 2:
        return ConnectivityResult(n - 1, None)
    s = min(range(n), key=lambda v: (g.degree(v), v))
    pairs = [(s, t) for t in range(n) if t != s and not g.adjacent(s, t)]
    nbrs = g.neighbors(s)
    pairs += [
        (x, y)
        for i, x in enumerate(nbrs)
        for y in nbrs[i + 1 :]
        if not g.adjacent(x, y)
    ]
    best_flow = n
    cuts = []
    for a, b in pairs:
        flow, cut = _max_flow_vertex_cut(g, a, b)
        if flow < best_flow:
            best_flow = flow
            cuts = [cut]
        elif flow == best_flow:
            cuts.append(cut)
    witness = min(cuts)
    return ConnectivityResult(best_flow, witness)


def check_mader_watkins(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """kappa >= ceil(2(d+1)/3) for connected d-regular vertex-transitive graphs.

    Raises PreconditionViolated when g is not connected, regular and
    vertex-transitive.
    """
    if g.n == 0 or not is_connected(g):
        raise PreconditionViolated("graph must be connected")
    degree = regularity(g).regular_degree
    if degree is None:
        raise PreconditionViolated("graph must be regular")
    if not is_vertex_transitive(g, cap):
        raise PreconditionViolated("graph must be vertex-transitive")
    bound = -(-2 * (degree + 1) // 3)
    return vertex_connectivity(g).kappa >= bound


def check_watkins_equality(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """kappa == minimum degree for connected edge-transitive graphs."""
    if g.n == 0 or not is_connected(g):
        raise PreconditionViolated("graph must be connected")
    if not is_edge_transitive(g, cap):
        raise PreconditionViolated("graph must be edge-transitive")
    return vertex_connectivity(g).kappa == regularity(g).min_degree
