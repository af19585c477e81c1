"""Batch CLI: gen, check, witness, classify, verify, search.

Exit codes: 0 all verdicts as expected, 1 unexpected verdict, 2 usage errors
or indeterminate results.  JSON output is key-sorted so identical runs are
byte-identical apart from the ``elapsed`` field of claim reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import families as fam
from .claims import CLAIM_IDS, verify_claim
from .connectivity import vertex_connectivity
from .cycles import blocking_certificate, closes_to_cycle, closes_to_induced_cycle
from .errors import CyclosureError
from .graph import Graph, is_bipartite, is_connected, regularity
from .io import parse_graph6, to_dot, to_graph6
from .search import search_counterexample
from .symmetry import edge_orbits, is_edge_transitive, is_vertex_transitive, vertex_orbits


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _load_graph(arg: str) -> Graph:
    """Accept a graph6 string or a path to a file whose first line is one."""
    if os.path.exists(arg):
        with open(arg, "r", encoding="ascii") as handle:
            for line in handle:
                line = line.strip()
                if line:
                    return parse_graph6(line)
        raise CyclosureError(f"no graph6 line found in {arg}")
    return parse_graph6(arg)


def _parse_len_range(text: Optional[str]) -> Optional[tuple[int, int]]:
    if text is None:
        return None
    lo, _, hi = text.partition("..")
    return (int(lo), int(hi if hi else lo))


def _cmd_gen(args) -> int:
    labeled = fam.make_family(fam.parse_spec(args.family))
    if args.g6 or not args.dot:
        print(to_graph6(labeled.graph))
    if args.dot:
        sys.stdout.write(to_dot(labeled.graph))
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args.g6)
    path = tuple(int(tok) for tok in args.path.split(","))
    decide = closes_to_induced_cycle if args.induced else closes_to_cycle
    answer = decide(g, path)
    _emit(
        {
            "closes": answer.closes,
            "cycle": list(answer.cycle.verts) if answer.cycle else None,
            "nodes_explored": answer.nodes_explored,
        }
    )
    return 0


def _cmd_witness(args) -> int:
    spec = fam.parse_spec(args.family)
    labeled = fam.make_family(spec)
    path = fam.witness(spec, args.len)
    record = {
        "family": fam.format_spec(spec),
        "len": args.len,
        "path": list(path.verts),
        "labels": list(labeled.relabel(path.verts)),
        "graph6": to_graph6(labeled.graph),
    }
    if args.certify:
        if spec.kind == "line":
            base = fam.make_family(spec.inner)
            base_path = fam.witness(spec.inner, args.len + 1)
            certified = (
                blocking_certificate(base.graph, base_path)
                and not closes_to_cycle(base.graph, base_path).closes
                and not closes_to_induced_cycle(labeled.graph, path).closes
            )
        else:
            certified = blocking_certificate(labeled.graph, path) and not closes_to_cycle(
                labeled.graph, path
            ).closes
        record["certified"] = certified
    _emit(record)
    return 0 if not args.certify or record["certified"] else 1


def _cmd_classify(args) -> int:
    g = _load_graph(args.g6)
    reg = regularity(g)
    sides = is_bipartite(g)
    record = {
        "n": g.n,
        "m": g.m,
        "connected": is_connected(g),
        "min_degree": reg.min_degree,
        "max_degree": reg.max_degree,
        "regular_degree": reg.regular_degree,
        "bipartition": [list(sides[0]), list(sides[1])] if sides else None,
        "kappa": vertex_connectivity(g).kappa if g.n else None,
        "vertex_transitive": is_vertex_transitive(g),
        "edge_transitive": is_edge_transitive(g),
        "vertex_orbits": vertex_orbits(g).orbit_count,
        "edge_orbits": edge_orbits(g).orbit_count,
    }
    _emit(record)
    return 0


def _cmd_verify(args) -> int:
    report = verify_claim(
        args.claim,
        max_n=args.max_n,
        len_range=_parse_len_range(args.len_range),
        census_path=args.census,
        family_max_vertices=args.family_max_vertices,
        regular_degree=args.regular_degree,
        kappa=args.kappa,
    )
    print(report.to_json())
    if report.verdict == "pass":
        return 0
    return 2 if report.verdict == "indeterminate" else 1


def _cmd_search(args) -> int:
    for found, path in search_counterexample(
        args.n, args.template, args.len, induced=args.induced, census_path=args.census
    ):
        if isinstance(found, str):
            family, graph6 = None, found
        else:
            family = fam.format_spec(found)
            graph6 = to_graph6(fam.make_family(found).graph)
        _emit(
            {
                "family": family,
                "graph6": graph6,
                "len": args.len,
                "induced": args.induced,
                "path": list(path.verts),
            }
        )
    return 0


def _apply_config(args) -> None:
    """Config file supplies defaults; explicit flags win, CYCLOSURE_THREADS wins
    over the config's thread count."""
    if not getattr(args, "config", None):
        return
    with open(args.config, "r", encoding="utf-8") as handle:
        conf = json.load(handle)
    if "threads" in conf and not os.environ.get("CYCLOSURE_THREADS"):
        os.environ["CYCLOSURE_THREADS"] = str(conf["threads"])
    if getattr(args, "max_n", None) is None and "max_n" in conf:
        args.max_n = int(conf["max_n"])
    if getattr(args, "len_range", None) is None and "len_range" in conf:
        args.len_range = str(conf["len_range"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclosure",
        description="Path-to-cycle closure phenomena in symmetric graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a family graph")
    p_gen.add_argument("--family", required=True, help="family spec, e.g. circulant:14:1,2")
    p_gen.add_argument("--dot", action="store_true", help="emit DOT text")
    p_gen.add_argument("--g6", action="store_true", help="emit graph6 (default)")

    p_check = sub.add_parser("check", help="single closure query")
    p_check.add_argument("--g6", required=True, help="graph6 string or file")
    p_check.add_argument("--path", required=True, help="comma-separated vertex ids")
    p_check.add_argument("--induced", action="store_true")

    p_wit = sub.add_parser("witness", help="emit a documented witness path")
    p_wit.add_argument("--family", required=True)
    p_wit.add_argument("--len", required=True, type=int)
    p_wit.add_argument("--certify", action="store_true", help="oracle-certify non-closure")

    p_cls = sub.add_parser("classify", help="degrees, bipartiteness, kappa, transitivity")
    p_cls.add_argument("--g6", required=True)

    p_ver = sub.add_parser("verify", help="run one claim, print a ClaimReport JSONL line")
    p_ver.add_argument(
        "--claim", required=True, choices=sorted(CLAIM_IDS), metavar="CLAIM",
        help="one of: " + ", ".join(CLAIM_IDS),
    )
    p_ver.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_ver.add_argument("--len-range", default=None, dest="len_range", help="a..b")
    p_ver.add_argument("--census", default=None, help="graph6 census file")
    p_ver.add_argument(
        "--family-max-vertices", type=int, default=40, dest="family_max_vertices"
    )
    p_ver.add_argument(
        "--regular-degree", type=int, default=None, dest="regular_degree",
        help="REG_PTOC only: sweep the d-regular slice of the census",
    )
    p_ver.add_argument(
        "--kappa", type=int, default=None,
        help="REG_PTOC only: sweep the connectivity-k slice of the census",
    )
    p_ver.add_argument("--config", default=None, help="JSON config file; flags win")

    p_srch = sub.add_parser("search", help="stream counterexample hits as JSONL")
    p_srch.add_argument("--n", required=True, type=int)
    p_srch.add_argument("--template", default="circulant", choices=("circulant", "ingest"))
    p_srch.add_argument("--len", required=True, type=int)
    p_srch.add_argument("--induced", action="store_true")
    p_srch.add_argument("--census", default=None, help="graph6 file for the ingest template")

    return parser


_COMMANDS = {
    "gen": _cmd_gen,
    "check": _cmd_check,
    "witness": _cmd_witness,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "search": _cmd_search,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return _COMMANDS[args.command](args)
    except (CyclosureError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
