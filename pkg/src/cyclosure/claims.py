"""Claim registry: every supported statement as an executable desk-scale sweep.

A claim runs over (a) the built-in census of connected graphs filtered by its
hypotheses and (b) the generated family instances, or over its own parameter
sweep for the counterexample-witness (CW_*) claims.  Hypothesis filters are
applied in a fixed order with per-filter exclusion counts recorded in the
report params.  Instances are never short-circuited, so reports do not depend
on the worker count; the only run-dependent report field is ``elapsed``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from . import families as fam
from . import oracles
from ._pool import map_ordered
from .census import MAX_CENSUS_N, enumerate_connected_graphs
from .connectivity import vertex_connectivity
from .cycles import (
    _induced_cycle_ok,
    blocking_certificate,
    closes_to_cycle,
    closes_to_induced_cycle,
    enumerate_paths,
    is_induced_path,
)
from .errors import BadParams, Indeterminate, TooLarge, UnknownClaim, UnsupportedWitness
from .graph import Graph, is_bipartite, is_connected, is_star, regularity
from .io import parse_graph6, to_graph6
from .symmetry import is_edge_transitive, is_vertex_transitive

CLAIM_IDS = (
    "VT_PTOC",
    "VT_IND_PTOC",
    "ET_PTOC_3",
    "ET_IND_PTOC_3",
    "ET_NOSTAR_PTOC",
    "ET_NOSTAR_IND",
    "KAPPA_TRICK",
    "REG_PTOC",
    "WATKINS_EQ",
    "MADER_WATKINS",
    "STAR_LEMMA",
    "ET_VT_OR_BIPARTITE",
    "LINE_GRAPH_LEMMA",
    "DIRAC_THOMASSEN",
    "CW_CIRCULANT",
    "CW_STARS",
    "CW_DIAMOND",
    "CW_LINE_DIAMOND",
    "CW_HYPERCUBE_LINE",
)

CLAIM_CATALOG = {
    "VT_PTOC": "connected vertex-transitive, >=3 vertices: every path of length <= 4 closes to a cycle",
    "VT_IND_PTOC": "connected vertex-transitive, >=3 vertices: every induced path of length <= 2 closes to an induced cycle; shortest cycles through a vertex or edge are chordless",
    "ET_PTOC_3": "connected edge-transitive: every 3-edge path closes to a cycle",
    "ET_IND_PTOC_3": "connected edge-transitive: every induced 3-edge path closes to an induced cycle",
    "ET_NOSTAR_PTOC": "connected edge-transitive non-star: every path of length <= 3 closes to a cycle",
    "ET_NOSTAR_IND": "connected edge-transitive non-star: every induced path of length <= 3 closes to an induced cycle; induced 2-paths extend to an induced 4-cycle or induced 3-path in the bipartite case",
    "KAPPA_TRICK": "connected with min degree >= 2 and kappa >= 2: every path of length <= kappa closes to a cycle",
    "REG_PTOC": "connected regular with kappa >= 4, or cubic with kappa = 3: every path of length <= 4 closes to a cycle",
    "WATKINS_EQ": "connected edge-transitive: kappa equals the minimum degree",
    "MADER_WATKINS": "connected d-regular vertex-transitive, d >= 2: kappa >= ceil(2(d+1)/3)",
    "STAR_LEMMA": "connected edge-transitive with min degree <= 1: the graph is a star",
    "ET_VT_OR_BIPARTITE": "connected edge-transitive with min degree >= 2: vertex-transitive or bipartite",
    "LINE_GRAPH_LEMMA": "paths map to induced line-graph paths one shorter; induced line-graph cycles of length >= 4 pull back to cycles; blocked paths give induced non-closing line-graph paths",
    "DIRAC_THOMASSEN": "among connected graphs on >= 3 vertices, exactly the complete graphs, cycles, and balanced complete bipartite graphs have every path closing to a cycle",
    "CW_CIRCULANT": "square-of-cycle circulants: the documented witness path of each length >= 5 does not close to a cycle",
    "CW_STARS": "stars: no path (lengths 0..2) closes to a cycle",
    "CW_DIAMOND": "complete graphs with doubled corners: the documented witness of each length >= 4 does not close to a cycle",
    "CW_LINE_DIAMOND": "line graphs of the doubled-corner family: witness images are induced paths not closing to induced cycles",
    "CW_HYPERCUBE_LINE": "hypercube witnesses do not close; their line-graph images are induced paths not closing to induced cycles",
}


@dataclass(frozen=True)
class ClaimReport:
    """Machine-readable verdict for one claim over one instance set."""

    claim: str
    params: dict
    instances_checked: int
    verdict: str
    counterexample: Optional[dict]
    elapsed: float

    def to_json(self) -> str:
        payload = {
            "claim": self.claim,
            "params": self.params,
            "instances_checked": self.instances_checked,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
            "elapsed": self.elapsed,
        }
        return json.dumps(payload, sort_keys=True)


# -- cached per-graph classification -----------------------------------------


@lru_cache(maxsize=65536)
def _vt(g: Graph) -> bool:
    return is_vertex_transitive(g)


@lru_cache(maxsize=65536)
def _et(g: Graph) -> bool:
    return is_edge_transitive(g)


@lru_cache(maxsize=65536)
def _kappa(g: Graph) -> int:
    return vertex_connectivity(g).kappa


def _delta(g: Graph) -> int:
    return regularity(g).min_degree


# -- default generated-instance pool ------------------------------------------


def default_family_pool(max_vertices: int = 40) -> list[fam.FamilySpec]:
    """The family instances swept by the theorem claims, capped by vertex count."""
    specs: list[fam.FamilySpec] = []
    specs += [fam.cycle_graph(n) for n in range(3, 11)]
    specs += [fam.complete(n) for n in range(3, 9)]
    specs += [
        fam.complete_bipartite(a, b)
        for a, b in ((2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4), (5, 5))
    ]
    specs += [fam.star(k) for k in range(2, 7)]
    specs += [
        fam.circulant(m, (1, 2))
        for m in (6, 7, 8, 9, 10, 11, 12, 13, 14, 16, 18, 20, 24, 30, 36, 40)
    ]
    specs += [fam.hypercube(d) for d in range(2, 6)]
    specs += [fam.diamond_complete(n) for n in range(3, 7)]
    specs += [fam.line_graph_of(fam.star(k)) for k in range(2, 6)]
    specs += [fam.line_graph_of(fam.cycle_graph(n)) for n in range(5, 9)]
    specs += [fam.line_graph_of(fam.complete(n)) for n in (4, 5)]
    specs += [fam.line_graph_of(fam.hypercube(d)) for d in (2, 3, 4)]
    specs += [fam.line_graph_of(fam.diamond_complete(n)) for n in (3, 4, 5)]
    return [s for s in specs if fam.make_family(s).graph.n <= max_vertices]


# -- shared check bodies -------------------------------------------------------


def _ctrex(g: Graph, path=None) -> dict:
    return {"graph6": to_graph6(g), "path": list(path) if path is not None else None}


def _check_paths_close(g: Graph, lo: int, hi: int, induced: bool) -> Optional[dict]:
    """First path of length lo..hi that fails to close, or None."""
    decide = closes_to_induced_cycle if induced else closes_to_cycle
    mode = "induced" if induced else "all"
    for length in range(lo, hi + 1):
        for path in enumerate_paths(g, length, mode):
            if not decide(g, path).closes:
                return _ctrex(g, path.verts)
    return None


def _check_paths_do_not_close(g: Graph, lo: int, hi: int) -> Optional[dict]:
    for length in range(lo, hi + 1):
        for path in enumerate_paths(g, length):
            if closes_to_cycle(g, path).closes:
                return _ctrex(g, path.verts)
    return None


def _check_shortest_cycles_chordless(g: Graph) -> Optional[dict]:
    """Shortest cycle through every vertex and every edge must be chordless."""
    for v in range(g.n):
        answer = closes_to_cycle(g, (v,))
        if answer.closes and not _induced_cycle_ok(g, answer.cycle):
            return _ctrex(g, (v,))
    for u, w in g.edges():
        answer = closes_to_cycle(g, (u, w))
        if answer.closes and not _induced_cycle_ok(g, answer.cycle):
            return _ctrex(g, (u, w))
    return None


def _check_two_path_extension(g: Graph) -> Optional[dict]:
    """Each induced 2-path extends, at either endpoint, to an induced 4-cycle
    or an induced 3-path."""
    from .graph import Cycle

    for path in enumerate_paths(g, 2, "induced"):
        for seq in (path.verts, path.verts[::-1]):
            x, y, z = seq
            extended = False
            for w in g.neighbors(x):
                if w in (y, z) or g.adjacent(w, y):
                    continue
                if g.adjacent(w, z):
                    if _induced_cycle_ok(g, Cycle(g, (w, x, y, z))):
                        extended = True
                        break
                elif is_induced_path(g, (w, x, y, z)):
                    extended = True
                    break
            if not extended:
                return _ctrex(g, seq)
    return None


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and regularity(g).regular_degree == 2 and is_connected(g)


def _is_balanced_complete_bipartite(g: Graph) -> bool:
    sides = is_bipartite(g)
    if sides is None:
        return False
    a, b = len(sides[0]), len(sides[1])
    return a == b and a >= 1 and g.m == a * b


def _all_paths_close_by_oracle(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    cycles = oracles.all_cycles(g)
    masks = oracles.cycle_masks(g, cycles)
    for length in range(0, g.n):
        seqs = [p.verts for p in enumerate_paths(g, length)]
        if not seqs:
            break
        covered = oracles.paths_covered_by_cycles(g, seqs, cycles, masks)
        for seq, ok in zip(seqs, covered):
            if not ok:
                return False, seq
    return True, None


def _check_dirac_thomassen(g: Graph) -> Optional[dict]:
    closes_all, offender = _all_paths_close_by_oracle(g)
    in_family = _is_complete(g) or _is_cycle_graph(g) or _is_balanced_complete_bipartite(g)
    if closes_all == in_family:
        return None
    return _ctrex(g, offender)


def _check_line_graph_lemma(g: Graph, len_hi: int) -> Optional[dict]:
    lgraph, edge_of = fam.line_graph(g)
    index = {e: k for k, e in enumerate(edge_of)}
    for length in range(1, len_hi + 1):
        for path in enumerate_paths(g, length):
            image = [
                index[(min(a, b), max(a, b))]
                for a, b in zip(path.verts, path.verts[1:])
            ]
            if not is_induced_path(lgraph, image):
                return _ctrex(g, path.verts)
    for cyc in oracles.chordless_cycles(lgraph):
        if len(cyc) < 4:
            continue
        shared = []
        for k in range(len(cyc)):
            e_now = set(edge_of[cyc[k]])
            e_next = set(edge_of[cyc[(k + 1) % len(cyc)]])
            common = e_now & e_next
            if len(common) != 1:
                return _ctrex(g, cyc)
            shared.append(common.pop())
        if len(set(shared)) != len(shared):
            return _ctrex(g, cyc)
        for k in range(len(shared)):
            if not g.adjacent(shared[k - 1], shared[k]):
                return _ctrex(g, cyc)
    return None


def _witness_or_none(spec: fam.FamilySpec, length: int):
    try:
        return fam.witness(spec, length)
    except UnsupportedWitness:
        return None


# -- claim runner ---------------------------------------------------------------


def _parse_len_range(len_range, default_lo: int, default_hi: int) -> tuple[int, int]:
    if len_range is None:
        return default_lo, default_hi
    lo, hi = len_range
    if lo < 0 or hi < lo:
        raise BadParams(f"bad length range {lo}..{hi}")
    return lo, hi


def _census_instances(max_n: int, census_path: Optional[str]) -> list[tuple[str, Graph]]:
    if census_path is not None:
        out = []
        with open(census_path, "r", encoding="ascii") as handle:
            for line in handle:
                line = line.strip()
                if line:
                    out.append((line, parse_graph6(line)))
        return out
    return [(to_graph6(g), g) for g in enumerate_connected_graphs(max_n)]


def _family_instances(max_vertices: int) -> list[tuple[str, Graph]]:
    return [
        (fam.format_spec(spec), fam.make_family(spec).graph)
        for spec in default_family_pool(max_vertices)
    ]


def _run_instances(instances, filters, check):
    """Evaluate all instances; returns (checked, exclusions, failure, indet)."""

    def one(item):
        _, payload = item
        try:
            for name, pred in filters:
                if not pred(payload):
                    return ("excluded", name)
            ctrex = check(payload)
        except (TooLarge, Indeterminate):
            return ("indeterminate", None)
        return ("fail", ctrex) if ctrex is not None else ("ok", None)

    results = map_ordered(one, instances)
    checked = 0
    exclusions: dict[str, int] = {}
    failure = None
    indeterminate = 0
    for status, detail in results:
        if status == "excluded":
            exclusions[detail] = exclusions.get(detail, 0) + 1
        elif status == "indeterminate":
            indeterminate += 1
        else:
            checked += 1
            if status == "fail" and failure is None:
                failure = detail
    return checked, exclusions, failure, indeterminate


_F_CONNECTED = ("connected", is_connected)
_F_MIN3 = ("min_vertices_3", lambda g: g.n >= 3)
_F_VT = ("vertex_transitive", _vt)
_F_ET = ("edge_transitive", _et)
_F_NOT_STAR = ("not_star", lambda g: not is_star(g))
_F_DELTA2 = ("min_degree_2", lambda g: _delta(g) >= 2)
_F_DELTA_LE1 = ("min_degree_le_1", lambda g: _delta(g) <= 1)
_F_REGULAR = ("regular", lambda g: regularity(g).regular_degree is not None)
_F_DEG2 = ("degree_at_least_2", lambda g: regularity(g).regular_degree >= 2)


def verify_claim(
    claim: str,
    max_n: Optional[int] = None,
    len_range: Optional[tuple[int, int]] = None,
    census_path: Optional[str] = None,
    family_max_vertices: int = 40,
    regular_degree: Optional[int] = None,
    kappa: Optional[int] = None,
) -> ClaimReport:
    """Run one claim and return its report.

    ``max_n`` bounds the built-in census (<= 7) or, for the CW_* sweeps, the
    family size parameter.  ``len_range`` overrides the claim's default path
    lengths.  ``census_path`` swaps the built-in census for a graph6 file.
    ``regular_degree``/``kappa`` apply only to REG_PTOC, where they replace
    the default hypothesis with an exact (degree, connectivity) slice for
    empirical sweeps.
    """
    started = time.perf_counter()
    if claim not in CLAIM_IDS:
        raise UnknownClaim(f"unknown claim {claim!r}")
    if max_n is not None and census_path is None and claim not in _CW_CLAIMS:
        if not (1 <= max_n <= MAX_CENSUS_N):
            raise BadParams(f"max_n must be 1..{MAX_CENSUS_N} for the built-in census")
    if (regular_degree is not None or kappa is not None) and claim != "REG_PTOC":
        raise BadParams("degree/connectivity slices only apply to REG_PTOC")
    runner = _CLAIM_RUNNERS[claim]
    if claim == "REG_PTOC":
        params, checked, exclusions, failure, indet = runner(
            max_n, len_range, census_path, family_max_vertices,
            regular_degree=regular_degree, kappa=kappa,
        )
    else:
        params, checked, exclusions, failure, indet = runner(
            max_n, len_range, census_path, family_max_vertices
        )
    params["exclusions"] = {k: exclusions[k] for k in sorted(exclusions)}
    if indet:
        params["indeterminate_instances"] = indet
    verdict = "fail" if failure is not None else ("indeterminate" if indet else "pass")
    return ClaimReport(
        claim=claim,
        params=params,
        instances_checked=checked,
        verdict=verdict,
        counterexample=failure,
        elapsed=round(time.perf_counter() - started, 6),
    )


def _graph_claim(filters, make_check, default_len, census_default_n=MAX_CENSUS_N,
                 include_families=True):
    """Build a runner for a census+families claim.

    make_check(lo, hi, source) -> check(graph); source is 'census' or 'family'.
    """

    def run(max_n, len_range, census_path, family_max_vertices):
        lo, hi = _parse_len_range(len_range, *default_len)
        n_cap = max_n if max_n is not None else census_default_n
        census = _census_instances(n_cap, census_path)
        fams = _family_instances(family_max_vertices) if include_families else []
        checked_c, excl_c, fail_c, ind_c = _run_instances(
            census, filters, make_check(lo, hi, "census")
        )
        checked_f, excl_f, fail_f, ind_f = _run_instances(
            fams, filters, make_check(lo, hi, "family")
        )
        exclusions = dict(excl_c)
        for key, value in excl_f.items():
            exclusions[key] = exclusions.get(key, 0) + value
        params = {
            "census": census_path if census_path is not None else "builtin",
            "max_n": n_cap,
            "len_lo": lo,
            "len_hi": hi,
            "families_max_vertices": family_max_vertices if include_families else 0,
            "family_instances": len(fams),
        }
        failure = fail_c if fail_c is not None else fail_f
        return params, checked_c + checked_f, exclusions, failure, ind_c + ind_f

    return run


def _simple_paths_claim(filters, default_len, induced):
    def make_check(lo, hi, _source):
        return lambda g: _check_paths_close(g, lo, hi, induced)

    return _graph_claim(filters, make_check, default_len)


def _run_vt_ind_ptoc(max_n, len_range, census_path, family_max_vertices):
    base = _graph_claim(
        [_F_CONNECTED, _F_MIN3, _F_VT],
        lambda lo, hi, _s: lambda g: _check_paths_close(g, lo, hi, induced=True),
        (0, 2),
    )
    params, checked, exclusions, failure, indet = base(
        max_n, len_range, census_path, family_max_vertices
    )
    # refinement sweep: shortest cycles through a vertex/edge are chordless,
    # checked on every census graph regardless of the claim's hypotheses
    census = _census_instances(
        max_n if max_n is not None else MAX_CENSUS_N, census_path
    )
    checked_r, _, fail_r, ind_r = _run_instances(
        census, [], _check_shortest_cycles_chordless
    )
    params["refinement_instances"] = checked_r
    if failure is None:
        failure = fail_r
    return params, checked + checked_r, exclusions, failure, indet + ind_r


def _run_et_nostar_ind(max_n, len_range, census_path, family_max_vertices):
    base = _graph_claim(
        [_F_CONNECTED, _F_ET, _F_NOT_STAR],
        lambda lo, hi, _s: lambda g: _check_paths_close(g, lo, hi, induced=True),
        (0, 3),
    )
    params, checked, exclusions, failure, indet = base(
        max_n, len_range, census_path, family_max_vertices
    )
    # bipartite inner step: induced 2-paths extend to an induced 4-cycle or
    # an induced 3-path
    instances = _census_instances(
        max_n if max_n is not None else MAX_CENSUS_N, census_path
    ) + _family_instances(family_max_vertices)
    filters = [
        _F_CONNECTED,
        _F_ET,
        _F_NOT_STAR,
        ("bipartite", lambda g: is_bipartite(g) is not None),
    ]
    checked_b, _, fail_b, ind_b = _run_instances(
        instances, filters, _check_two_path_extension
    )
    params["bipartite_extension_instances"] = checked_b
    if failure is None:
        failure = fail_b
    return params, checked + checked_b, exclusions, failure, indet + ind_b


def _run_kappa_trick(max_n, len_range, census_path, family_max_vertices):
    # the kappa >= 2 hypothesis is what the argument actually needs: with
    # kappa = 1 a bridge between two triangles has min degree 2 and a 1-edge
    # path (the bridge) lying on no cycle
    def make_check(lo, hi, source):
        def check(g):
            cap = min(_kappa(g), hi)
            if source == "family":
                # desk-scale bound on the big generated instances; the census
                # side runs the full <= kappa range
                cap = min(cap, 5)
            return _check_paths_close(g, lo, cap, induced=False)

        return check

    filters = [_F_CONNECTED, _F_DELTA2, ("kappa_at_least_2", lambda g: _kappa(g) >= 2)]
    return _graph_claim(filters, make_check, (0, 6))(
        max_n, len_range, census_path, family_max_vertices
    )


def _run_reg_ptoc(max_n, len_range, census_path, family_max_vertices,
                  regular_degree=None, kappa=None):
    # default hypothesis: kappa >= 4, or cubic with kappa = 3.  Supplying an
    # explicit (degree, kappa) pair instead turns the run into an empirical
    # sweep over that slice of the census; a fail verdict is then data about
    # the slice, not an implementation bug.
    if regular_degree is None and kappa is None:
        def hypothesis(g):
            degree = regularity(g).regular_degree
            return _kappa(g) >= 4 or (_kappa(g) == 3 and degree == 3)

        filters = [_F_CONNECTED, _F_REGULAR, ("kappa_hypothesis", hypothesis)]
    else:
        filters = [_F_CONNECTED, _F_REGULAR]
        if regular_degree is not None:
            filters.append(
                ("regular_degree", lambda g, d=regular_degree: regularity(g).regular_degree == d)
            )
        if kappa is not None:
            filters.append(("kappa", lambda g, k=kappa: _kappa(g) == k))

    params, checked, exclusions, failure, indet = _graph_claim(
        filters,
        lambda lo, hi, _s: lambda g: _check_paths_close(g, lo, hi, induced=False),
        (0, 4),
    )(max_n, len_range, census_path, family_max_vertices)
    if regular_degree is not None:
        params["regular_degree"] = regular_degree
    if kappa is not None:
        params["kappa"] = kappa
    return params, checked, exclusions, failure, indet


def _run_star_lemma(max_n, len_range, census_path, family_max_vertices):
    filters = [_F_CONNECTED, _F_ET, _F_DELTA_LE1]
    return _graph_claim(
        filters,
        lambda lo, hi, _s: lambda g: None if is_star(g) else _ctrex(g),
        (0, 0),
    )(max_n, len_range, census_path, family_max_vertices)


def _run_et_vt_or_bipartite(max_n, len_range, census_path, family_max_vertices):
    filters = [_F_CONNECTED, _F_ET, _F_DELTA2]
    return _graph_claim(
        filters,
        lambda lo, hi, _s: lambda g: (
            None if _vt(g) or is_bipartite(g) is not None else _ctrex(g)
        ),
        (0, 0),
    )(max_n, len_range, census_path, family_max_vertices)


def _run_watkins_eq(max_n, len_range, census_path, family_max_vertices):
    filters = [_F_CONNECTED, _F_ET]
    return _graph_claim(
        filters,
        lambda lo, hi, _s: lambda g: None if _kappa(g) == _delta(g) else _ctrex(g),
        (0, 0),
    )(max_n, len_range, census_path, family_max_vertices)


def _run_mader_watkins(max_n, len_range, census_path, family_max_vertices):
    filters = [_F_CONNECTED, _F_VT, _F_REGULAR, _F_DEG2]

    def check(g):
        degree = regularity(g).regular_degree
        bound = -(-2 * (degree + 1) // 3)
        return None if _kappa(g) >= bound else _ctrex(g)

    return _graph_claim(filters, lambda lo, hi, _s: check, (0, 0))(
        max_n, len_range, census_path, family_max_vertices
    )


def _run_line_graph_lemma(max_n, len_range, census_path, family_max_vertices):
    lo, hi = _parse_len_range(len_range, 1, 6)
    lo = max(1, lo)
    n_cap = max_n if max_n is not None else 6
    census = _census_instances(n_cap, census_path)
    checked, exclusions, failure, indet = _run_instances(
        census, [], lambda g: _check_line_graph_lemma(g, hi)
    )
    # composite direction on the counterexample families: a blocked path in an
    # edge-transitive graph yields an induced line-graph path with no induced
    # closure
    composite = [
        (fam.diamond_complete(n), length) for n in (3, 4) for length in (4, 5)
    ] + [(fam.hypercube(3), length) for length in (6, 7)]

    def check_pair(item):
        spec, length = item
        base = fam.make_family(spec)
        path = fam.witness(spec, length)
        if not blocking_certificate(base.graph, path):
            return _ctrex(base.graph, path.verts)
        if closes_to_cycle(base.graph, path).closes:
            return _ctrex(base.graph, path.verts)
        image = fam.witness(fam.line_graph_of(spec), length - 1)
        lgraph = fam.make_family(fam.line_graph_of(spec)).graph
        if not is_induced_path(lgraph, image):
            return _ctrex(lgraph, image.verts)
        if closes_to_induced_cycle(lgraph, image).closes:
            return _ctrex(lgraph, image.verts)
        return None

    pairs = [(f"{fam.format_spec(s)}#len{length}", (s, length)) for s, length in composite]
    checked_c, _, fail_c, ind_c = _run_instances(pairs, [], check_pair)
    params = {
        "census": census_path if census_path is not None else "builtin",
        "max_n": n_cap,
        "len_lo": lo,
        "len_hi": hi,
        "families_max_vertices": family_max_vertices,
        "family_instances": len(pairs),
    }
    if failure is None:
        failure = fail_c
    return params, checked + checked_c, exclusions, failure, indet + ind_c


def _run_dirac_thomassen(max_n, len_range, census_path, family_max_vertices):
    n_cap = max_n if max_n is not None else MAX_CENSUS_N
    census = _census_instances(n_cap, census_path)
    checked, exclusions, failure, indet = _run_instances(
        census, [_F_CONNECTED, _F_MIN3], _check_dirac_thomassen
    )
    params = {
        "census": census_path if census_path is not None else "builtin",
        "max_n": n_cap,
        "len_lo": 0,
        "len_hi": n_cap - 1,
        "families_max_vertices": 0,
        "family_instances": 0,
    }
    return params, checked, exclusions, failure, indet


# -- CW sweeps -------------------------------------------------------------------


def _run_cw_circulant(max_n, len_range, census_path, family_max_vertices):
    lo, hi = _parse_len_range(len_range, 5, 8)
    m_max = max_n if max_n is not None else 20
    instances = []
    for length in range(lo, hi + 1):
        for m in range(length + 4, m_max + 1):
            instances.append((f"circulant:{m}:1,2#len{length}", (m, length)))
    if not instances:
        raise BadParams(f"no circulant witnesses with lengths {lo}..{hi}, m <= {m_max}")

    def check(item):
        m, length = item
        spec = fam.circulant(m, (1, 2))
        g = fam.make_family(spec).graph
        path = fam.witness(spec, length)
        if not blocking_certificate(g, path) or closes_to_cycle(g, path).closes:
            return _ctrex(g, path.verts)
        return None

    checked, exclusions, failure, indet = _run_instances(instances, [], check)
    params = {
        "census": "none",
        "max_n": m_max,
        "len_lo": lo,
        "len_hi": hi,
        "families_max_vertices": m_max,
        "family_instances": len(instances),
    }
    return params, checked, exclusions, failure, indet


def _run_cw_stars(max_n, len_range, census_path, family_max_vertices):
    lo, hi = _parse_len_range(len_range, 0, 2)
    k_max = max_n if max_n is not None else 6
    instances = [(f"star:{k}", k) for k in range(2, k_max + 1)]

    def check(k):
        g = fam.make_family(fam.star(k)).graph
        return _check_paths_do_not_close(g, lo, hi)

    checked, exclusions, failure, indet = _run_instances(instances, [], check)
    params = {
        "census": "none",
        "max_n": k_max,
        "len_lo": lo,
        "len_hi": hi,
        "families_max_vertices": k_max + 1,
        "family_instances": len(instances),
    }
    return params, checked, exclusions, failure, indet


def _run_cw_diamond(max_n, len_range, census_path, family_max_vertices):
    lo, hi = _parse_len_range(len_range, 4, 8)
    n_max = max_n if max_n is not None else 6
    instances = []
    skipped = 0
    for length in range(lo, hi + 1):
        for n in range(3, n_max + 1):
            if _witness_or_none(fam.diamond_complete(n), length) is None:
                skipped += 1
                continue
            instances.append((f"diamond:{n}#len{length}", (n, length)))

    def check(item):
        n, length = item
        spec = fam.diamond_complete(n)
        g = fam.make_family(spec).graph
        path = fam.witness(spec, length)
        if not blocking_certificate(g, path) or closes_to_cycle(g, path).closes:
            return _ctrex(g, path.verts)
        return None

    checked, exclusions, failure, indet = _run_instances(instances, [], check)
    params = {
        "census": "none",
        "max_n": n_max,
        "len_lo": lo,
        "len_hi": hi,
        "families_max_vertices": n_max * n_max,
        "family_instances": len(instances),
        "unsupported_witnesses": skipped,
    }
    return params, checked, exclusions, failure, indet


def _run_cw_line_diamond(max_n, len_range, census_path, family_max_vertices):
    lo, hi = _parse_len_range(len_range, 3, 5)  # image lengths
    n_max = max_n if max_n is not None else 4
    instances = []
    skipped = 0
    for length in range(lo, hi + 1):
        for n in range(3, n_max + 1):
            if _witness_or_none(fam.diamond_complete(n), length + 1) is None:
                skipped += 1
                continue
            instances.append((f"line:diamond:{n}#len{length}", (n, length)))

    def check(item):
        n, length = item
        base_spec = fam.diamond_complete(n)
        base = fam.make_family(base_spec).graph
        base_path = fam.witness(base_spec, length + 1)
        if not blocking_certificate(base, base_path):
            return _ctrex(base, base_path.verts)
        spec = fam.line_graph_of(base_spec)
        g = fam.make_family(spec).graph
        image = fam.witness(spec, length)
        if not is_induced_path(g, image) or closes_to_induced_cycle(g, image).closes:
            return _ctrex(g, image.verts)
        return None

    checked, exclusions, failure, indet = _run_instances(instances, [], check)
    params = {
        "census": "none",
        "max_n": n_max,
        "len_lo": lo,
        "len_hi": hi,
        "families_max_vertices": 2 * n_max * (n_max - 1),
        "family_instances": len(instances),
        "unsupported_witnesses": skipped,
    }
    return params, checked, exclusions, failure, indet


def _run_cw_hypercube_line(max_n, len_range, census_path, family_max_vertices):
    dim_max = max_n if max_n is not None else 4
    instances = []
    for dim in range(3, dim_max + 1):
        for length in (2 * dim, 2 * dim + 1):
            instances.append((f"hypercube:{dim}#len{length}", (dim, length)))
    if not instances:
        raise BadParams("hypercube witnesses need dimension >= 3")

    def check(item):
        dim, length = item
        spec = fam.hypercube(dim)
        g = fam.make_family(spec).graph
        path = fam.witness(spec, length)
        if not blocking_certificate(g, path) or closes_to_cycle(g, path).closes:
            return _ctrex(g, path.verts)
        lspec = fam.line_graph_of(spec)
        lgraph = fam.make_family(lspec).graph
        image = fam.witness(lspec, length - 1)
        if not is_induced_path(lgraph, image):
            return _ctrex(lgraph, image.verts)
        if closes_to_induced_cycle(lgraph, image).closes:
            return _ctrex(lgraph, image.verts)
        return None

    checked, exclusions, failure, indet = _run_instances(instances, [], check)
    params = {
        "census": "none",
        "max_n": dim_max,
        "len_lo": 2 * 3,
        "len_hi": 2 * dim_max + 1,
        "families_max_vertices": 1 << dim_max,
        "family_instances": len(instances),
    }
    return params, checked, exclusions, failure, indet


_CW_CLAIMS = {
    "CW_CIRCULANT",
    "CW_STARS",
    "CW_DIAMOND",
    "CW_LINE_DIAMOND",
    "CW_HYPERCUBE_LINE",
}

_CLAIM_RUNNERS: dict[str, Callable] = {
    "VT_PTOC": _simple_paths_claim([_F_CONNECTED, _F_MIN3, _F_VT], (0, 4), False),
    "VT_IND_PTOC": _run_vt_ind_ptoc,
    "ET_PTOC_3": _simple_paths_claim([_F_CONNECTED, _F_ET], (3, 3), False),
    "ET_IND_PTOC_3": _simple_paths_claim([_F_CONNECTED, _F_ET], (3, 3), True),
    "ET_NOSTAR_PTOC": _simple_paths_claim(
        [_F_CONNECTED, _F_ET, _F_NOT_STAR], (0, 3), False
    ),
    "ET_NOSTAR_IND": _run_et_nostar_ind,
    "KAPPA_TRICK": _run_kappa_trick,
    "REG_PTOC": _run_reg_ptoc,
    "WATKINS_EQ": _run_watkins_eq,
    "MADER_WATKINS": _run_mader_watkins,
    "STAR_LEMMA": _run_star_lemma,
    "ET_VT_OR_BIPARTITE": _run_et_vt_or_bipartite,
    "LINE_GRAPH_LEMMA": _run_line_graph_lemma,
    "DIRAC_THOMASSEN": _run_dirac_thomassen,
    "CW_CIRCULANT": _run_cw_circulant,
    "CW_STARS": _run_cw_stars,
    "CW_DIAMOND": _run_cw_diamond,
    "CW_LINE_DIAMOND": _run_cw_line_diamond,
    "CW_HYPERCUBE_LINE": _run_cw_hypercube_line,
}
