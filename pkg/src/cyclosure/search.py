"""Counterexample search: edge-transitive non-star graphs carrying an
(induced) path of a given length that does not close to an (induced) cycle.

The circulant template sweeps connection sets as nonempty subsets of
{1..floor(n/2)} in (size, lex) order; each subset stands for the whole
negation-closed set, so every circulant on n vertices appears exactly once.
Hits are emitted in sweep order with the lexicographically first failing
path as witness, which makes runs replayable byte for byte.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional, Union

from . import families as fam
from .cycles import closes_to_cycle, closes_to_induced_cycle, enumerate_paths
from .errors import BadParams, TooLarge
from .graph import Graph, Path, is_star
from .io import parse_graph6
from .symmetry import DEFAULT_VERTEX_CAP, is_edge_transitive

Hit = tuple[Union[fam.FamilySpec, str], Path]


def _first_non_closing_path(g: Graph, length: int, induced: bool) -> Optional[Path]:
    decide = closes_to_induced_cycle if induced else closes_to_cycle
    mode = "induced" if induced else "all"
    for path in enumerate_paths(g, length, mode):
        if not decide(g, path).closes:
            return path
    return None


def search_counterexample(
    n: int,
    template: str = "circulant",
    length: int = 4,
    induced: bool = False,
    census_path: Optional[str] = None,
    cap: int = DEFAULT_VERTEX_CAP,
) -> Iterator[Hit]:
    """Stream (spec-or-graph6, witness path) hits in deterministic order.

    template "circulant" sweeps all circulants on n vertices; template
    "ingest" filters the graphs in ``census_path`` (graph6, one per line)
    with the same edge-transitive/non-star/witness conditions, keeping those
    on n vertices.
    """
    if length < 0:
        raise BadParams("path length must be nonnegative")
    if n > cap:
        raise TooLarge(f"search capped at {cap} vertices, got {n}")
    if template == "circulant":
        if n < 3:
            raise BadParams("circulant template needs n >= 3")
        half = n // 2
        for size in range(1, half + 1):
            for subset in combinations(range(1, half + 1), size):
                spec = fam.circulant(n, subset)
                g = fam.make_family(spec).graph
                if is_star(g) or not is_edge_transitive(g, cap):
                    continue
                path = _first_non_closing_path(g, length, induced)
                if path is not None:
                    yield spec, path
    elif template == "ingest":
        if census_path is None:
            raise BadParams("ingest template needs a census file")
        with open(census_path, "r", encoding="ascii") as handle:
            for line in handle:
                text = line.strip()
                if not text:
                    continue
                g = parse_graph6(text)
                if g.n != n:
                    continue
                if is_star(g) or not is_edge_transitive(g, cap):
                    continue
                path = _first_non_closing_path(g, length, induced)
                if path is not None:
                    yield text, path
    else:
        raise BadParams(f"unknown search template {template!r}")
