"""graph6 interchange and DOT rendering.

graph6 strings are header-free; the standard ``>>graph6<<`` prefix is
rejected.  Encoding uses the usual layout: size bytes, then the upper
triangle in column order packed into 6-bit chunks offset by 63.
"""

from __future__ import annotations

from typing import Optional, Sequence, Union

from .errors import InvalidHighlight, MalformedGraph6
from .graph import Graph, MAX_VERTICES, Path, build_graph, path_seq_ok

_SHORT_MAX = 62
_LONG_MAX = 258047


def _encode_size(n: int) -> str:
    if n <= _SHORT_MAX:
        return chr(63 + n)
    return "~" + "".join(chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode a graph as a header-free graph6 string."""
    n = g.n
    out = [_encode_size(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.adjacent(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a header-free graph6 string.

    Raises MalformedGraph6 on: a ``>>graph6<<`` header, characters outside
    63..126, a wrong body length, nonzero padding bits, a non-minimal or
    oversized size field.
    """
    if text.startswith(">>"):
        raise MalformedGraph6("header lines are not accepted")
    if not text:
        raise MalformedGraph6("empty string")
    data = []
    for ch in text:
        code = ord(ch) - 63
        if code < 0 or code > 63:
            raise MalformedGraph6(f"character {ch!r} outside graph6 range")
        data.append(code)
    if data[0] < 63:
        n = data[0]
        pos = 1
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated size field")
        if data[1] == 63:
            raise MalformedGraph6("8-byte size form not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
        if n <= _SHORT_MAX:
            raise MalformedGraph6("non-minimal size encoding")
    if n > min(_LONG_MAX, MAX_VERTICES):
        raise MalformedGraph6(f"vertex count {n} too large")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise MalformedGraph6(
            f"expected {nbytes} edge bytes for n={n}, got {len(data) - pos}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6]
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        last = data[-1]
        pad = 6 - nbits % 6
        if last & ((1 << pad) - 1):
            raise MalformedGraph6("nonzero padding bits")
    return build_graph(n, edges)


def to_dot(g: Graph, highlight: Optional[Union[Path, Sequence[int]]] = None) -> str:
    """Render the graph as DOT text, optionally highlighting a path's edges.

    Raises InvalidHighlight if the highlight sequence is not a path in ``g``.
    """
    marked: set[tuple[int, int]] = set()
    if highlight is not None:
        seq = tuple(highlight.verts) if isinstance(highlight, Path) else tuple(highlight)
        if not path_seq_ok(g, seq):
            raise InvalidHighlight(f"{seq} is not a path in the graph")
        marked = {(min(a, b), max(a, b)) for a, b in zip(seq, seq[1:])}
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        if (u, v) in marked:
            lines.append(f'  {u} -- {v} [color="red", penwidth=2];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
