"""Deterministic generators for the named graph families and their witness paths.

Labelling conventions (fixed so that human-readable vertex names map to ids
the same way every run):

* circulant: vertex k has label "k"
* hypercube: a vertex is its binary string (coordinate 1 first); its id is
  that string read as a base-2 integer
* diamond (complete graph with every edge replaced by a 4-cycle): branch
  vertices v1..vn are ids 0..n-1; corner pairs v_ij, v_ji follow in
  lexicographic (i, j) order, i < j
* line graphs: vertex for edge {a, b} is labelled "<label a>-<label b>"
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadSpec, UnsupportedWitness
from .graph import Graph, Path, build_graph


@dataclass(frozen=True)
class FamilySpec:
    """Parameters naming one generated graph.

    kind is one of circulant, complete, complete_bipartite, star, cycle,
    hypercube, diamond, line; ``a``/``b`` are the integer parameters,
    ``residues`` the circulant connection set (closed under negation mod a),
    and ``inner`` the underlying spec for line graphs.
    """

    kind: str
    a: int = 0
    b: int = 0
    residues: tuple[int, ...] = ()
    inner: Optional["FamilySpec"] = None


def circulant(m: int, residues) -> FamilySpec:
    """Circulant graph spec; the residue set is closed under negation mod m."""
    closed = set()
    for r in residues:
        closed.add(r % m if m else r)
        closed.add((-r) % m if m else r)
    return FamilySpec("circulant", a=m, residues=tuple(sorted(closed)))


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", a=n)


def complete_bipartite(a: int, b: int) -> FamilySpec:
    return FamilySpec("complete_bipartite", a=a, b=b)


def star(leaves: int) -> FamilySpec:
    return FamilySpec("star", a=leaves)


def cycle_graph(n: int) -> FamilySpec:
    return FamilySpec("cycle", a=n)


def hypercube(dim: int) -> FamilySpec:
    return FamilySpec("hypercube", a=dim)


def diamond_complete(n: int) -> FamilySpec:
    return FamilySpec("diamond", a=n)


def line_graph_of(inner: FamilySpec) -> FamilySpec:
    return FamilySpec("line", inner=inner)


def validate_spec(spec: FamilySpec) -> None:
    """Raise BadSpec if the parameters violate the family invariants."""
    kind = spec.kind
    if kind == "circulant":
        m = spec.a
        if m < 3:
            raise BadSpec("circulant needs at least 3 vertices")
        s = set(spec.residues)
        if not s:
            raise BadSpec("circulant connection set is empty")
        for r in s:
            if not (1 <= r <= m - 1):
                raise BadSpec(f"residue {r} outside 1..{m - 1}")
            if (m - r) % m not in s:
                raise BadSpec("connection set not closed under negation")
    elif kind == "complete":
        if spec.a < 0:
            raise BadSpec("complete graph size must be nonnegative")
    elif kind == "complete_bipartite":
        if spec.a < 0 or spec.b < 0:
            raise BadSpec("bipartite side sizes must be nonnegative")
    elif kind == "star":
        if spec.a < 0:
            raise BadSpec("star leaf count must be nonnegative")
    elif kind == "cycle":
        if spec.a < 3:
            raise BadSpec("cycle needs at least 3 vertices")
    elif kind == "hypercube":
        if spec.a < 1:
            raise BadSpec("hypercube dimension must be at least 1")
    elif kind == "diamond":
        if spec.a < 3:
            raise BadSpec("diamond construction needs n >= 3")
    elif kind == "line":
        if spec.inner is None:
            raise BadSpec("line graph spec is missing the underlying family")
        validate_spec(spec.inner)
    else:
        raise BadSpec(f"unknown family kind {kind!r}")


def format_spec(spec: FamilySpec) -> str:
    """Canonical CLI text for a spec, e.g. circulant:14:1,2 or line:hypercube:3."""
    kind = spec.kind
    if kind == "circulant":
        half = sorted(r for r in spec.residues if r <= spec.a - r)
        return f"circulant:{spec.a}:" + ",".join(str(r) for r in half)
    if kind == "complete":
        return f"complete:{spec.a}"
    if kind == "complete_bipartite":
        return f"complete_bipartite:{spec.a}:{spec.b}"
    if kind == "star":
        return f"star:{spec.a}"
    if kind == "cycle":
        return f"cycle:{spec.a}"
    if kind == "hypercube":
        return f"hypercube:{spec.a}"
    if kind == "diamond":
        return f"diamond:{spec.a}"
    if kind == "line":
        return "line:" + format_spec(spec.inner)
    raise BadSpec(f"unknown family kind {kind!r}")


def parse_spec(text: str) -> FamilySpec:
    """Parse the CLI spec syntax; inverse of :func:`format_spec`."""
    parts = text.strip().split(":")
    kind = parts[0]
    try:
        if kind == "circulant":
            m = int(parts[1])
            residues = [int(tok) for tok in parts[2].split(",") if tok]
            spec = circulant(m, residues)
        elif kind == "complete":
            spec = complete(int(parts[1]))
        elif kind == "complete_bipartite":
            spec = complete_bipartite(int(parts[1]), int(parts[2]))
        elif kind == "star":
            spec = star(int(parts[1]))
        elif kind == "cycle":
            spec = cycle_graph(int(parts[1]))
        elif kind == "hypercube":
            spec = hypercube(int(parts[1]))
        elif kind == "diamond":
            spec = diamond_complete(int(parts[1]))
        elif kind == "line":
            spec = line_graph_of(parse_spec(":".join(parts[1:])))
        else:
            raise BadSpec(f"unknown family kind {kind!r}")
    except (IndexError, ValueError) as exc:
        raise BadSpec(f"cannot parse family spec {text!r}: {exc}") from exc
    validate_spec(spec)
    return spec


@dataclass(frozen=True)
class LabeledGraph:
    """A generated graph together with its human-readable vertex names."""

    graph: Graph
    labels: tuple[str, ...]

    def id_of(self, label: str) -> int:
        return self.labels.index(label)

    def relabel(self, verts) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in verts)


def _diamond_ids(n: int) -> dict[tuple[int, int], int]:
    """Corner-vertex ids: v_ij at id n + 2k, v_ji at n + 2k + 1, (i, j) lex with i < j."""
    ids = {}
    k = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ids[(i, j)] = n + 2 * k
            ids[(j, i)] = n + 2 * k + 1
            k += 1
    return ids


def _diamond_label(i: int, j: int, n: int) -> str:
    return f"v{i}{j}" if n <= 9 else f"v{i}_{j}"


def make_family(spec: FamilySpec) -> LabeledGraph:
    """Build the graph named by ``spec`` with its documented labelling."""
    validate_spec(spec)
    kind = spec.kind
    if kind == "circulant":
        m = spec.a
        edges = [
            (u, (u + r) % m) for u in range(m) for r in spec.residues if u < (u + r) % m
        ]
        return LabeledGraph(build_graph(m, edges), tuple(str(v) for v in range(m)))
    if kind == "complete":
        n = spec.a
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return LabeledGraph(build_graph(n, edges), tuple(str(v) for v in range(n)))
    if kind == "complete_bipartite":
        a, b = spec.a, spec.b
        edges = [(u, a + w) for u in range(a) for w in range(b)]
        return LabeledGraph(
            build_graph(a + b, edges), tuple(str(v) for v in range(a + b))
        )
    if kind == "star":
        k = spec.a
        edges = [(0, leaf) for leaf in range(1, k + 1)]
        return LabeledGraph(build_graph(k + 1, edges), tuple(str(v) for v in range(k + 1)))
    if kind == "cycle":
        n = spec.a
        edges = [(v, (v + 1) % n) for v in range(n) if v < (v + 1) % n] + [(0, n - 1)]
        edges = sorted(set(edges))
        return LabeledGraph(build_graph(n, edges), tuple(str(v) for v in range(n)))
    if kind == "hypercube":
        d = spec.a
        size = 1 << d
        edges = [
            (v ^ (1 << bit), v) for v in range(size) for bit in range(d) if v ^ (1 << bit) < v
        ]
        labels = tuple(format(v, f"0{d}b") for v in range(size))
        return LabeledGraph(build_graph(size, edges), labels)
    if kind == "diamond":
        n = spec.a
        ids = _diamond_ids(n)
        edges = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                edges += [
                    (i - 1, ids[(i, j)]),
                    (ids[(i, j)], j - 1),
                    (j - 1, ids[(j, i)]),
                    (ids[(j, i)], i - 1),
                ]
        labels = [f"v{i}" for i in range(1, n + 1)]
        corner_labels = {vid: _diamond_label(i, j, n) for (i, j), vid in ids.items()}
        labels += [corner_labels[vid] for vid in range(n, n + n * (n - 1))]
        edges = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return LabeledGraph(build_graph(n + n * (n - 1), edges), tuple(labels))
    if kind == "line":
        base = make_family(spec.inner)
        lg, edge_of = line_graph(base.graph)
        labels = tuple(
            f"{base.labels[u]}-{base.labels[v]}" for u, v in edge_of
        )
        return LabeledGraph(lg, labels)
    raise BadSpec(f"unknown family kind {kind!r}")


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of ``g`` and the edge each L-vertex stands for.

    L-vertices follow the lexicographic edge order of ``g``; two L-vertices
    are adjacent iff their edges share an endpoint.
    """
    edge_list = g.edges()
    index = {e: k for k, e in enumerate(edge_list)}
    l_edges = []
    for v in range(g.n):
        incident = [index[(min(v, u), max(v, u))] for u in g.neighbors(v)]
        for x in range(len(incident)):
            for y in range(x + 1, len(incident)):
                a, b = incident[x], incident[y]
                l_edges.append((min(a, b), max(a, b)))
    l_edges = sorted(set(l_edges))
    return build_graph(len(edge_list), l_edges), edge_list


def _diamond_witness_min_n(length: int) -> int:
    return 3 + (length - 4) // 2


def witness(spec: FamilySpec, length: int) -> Path:
    """The documented non-closing witness path of the given edge length.

    Supported combinations (everything else raises UnsupportedWitness):

    * circulant(m, {+-1, +-2}) with length >= 5 and m >= length + 4:
      (0, m-2, m-1, 1, 2, ..., length-2)
    * diamond(n) with length >= 4 and n large enough: (v12, v1, v21, v2, v23)
      continued through fresh corner/branch vertices v3, v34, v4, ...
    * hypercube(dim >= 3) with length in {2*dim, 2*dim + 1}
    * line:<spec> with the underlying witness of length+1 mapped onto its
      edge sequence
    """
    validate_spec(spec)
    kind = spec.kind
    if kind == "circulant":
        m = spec.a
        if set(spec.residues) != {1, 2, m - 2, m - 1} or len({1, 2, m - 2, m - 1}) != 4:
            raise UnsupportedWitness("circulant witness needs connection set {+-1,+-2}")
        if length < 5 or m < length + 4:
            raise UnsupportedWitness(
                f"circulant witness needs length >= 5 and m >= length + 4, got ({m}, {length})"
            )
        seq = [0, m - 2, m - 1] + list(range(1, length - 1))
        return Path(make_family(spec).graph, seq)
    if kind == "diamond":
        n = spec.a
        if length < 4:
            raise UnsupportedWitness("diamond witness needs length >= 4")
        if n < _diamond_witness_min_n(length):
            raise UnsupportedWitness(
                f"diamond witness of length {length} needs n >= {_diamond_witness_min_n(length)}"
            )
        ids = _diamond_ids(n)
        seq = [ids[(1, 2)], 0, ids[(2, 1)], 1]
        for t in range(length - 3):
            if t % 2 == 0:
                k = 2 + t // 2
                seq.append(ids[(k, k + 1)])
            else:
                seq.append(2 + (t - 1) // 2)
        return Path(make_family(spec).graph, seq)
    if kind == "hypercube":
        d = spec.a
        if d < 3 or length not in (2 * d, 2 * d + 1):
            raise UnsupportedWitness(
                f"hypercube witness needs dim >= 3 and length in {{2*dim, 2*dim+1}}, got ({d}, {length})"
            )
        unit = [1 << (d - i) for i in range(1, d + 1)]  # e_1 .. e_d as ids
        seq = [0, unit[0]]
        for i in range(1, d):
            seq.append(unit[i - 1] ^ unit[i])
            seq.append(unit[i])
        seq.append(unit[d - 1] ^ unit[0])
        if length == 2 * d + 1:
            seq.append(unit[d - 1] ^ unit[0] ^ unit[1])
        return Path(make_family(spec).graph, seq)
    if kind == "line":
        base_path = witness(spec.inner, length + 1)
        base = make_family(spec.inner)
        _, edge_of = line_graph(base.graph)
        index = {e: k for k, e in enumerate(edge_of)}
        seq = [
            index[(min(a, b), max(a, b))]
            for a, b in zip(base_path.verts, base_path.verts[1:])
        ]
        return Path(make_family(spec).graph, seq)
    raise UnsupportedWitness(f"no witness construction for family kind {kind!r}")
