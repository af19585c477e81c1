"""Family generators, labellings, witnesses, and the line-graph lemma at
generation scale."""

import pytest

from cyclosure.census import canonical_form
from cyclosure.cycles import closes_to_cycle, closes_to_induced_cycle, enumerate_paths, is_induced_path
from cyclosure.errors import BadSpec, UnsupportedWitness
from cyclosure.families import (
    circulant,
    complete,
    complete_bipartite,
    cycle_graph,
    diamond_complete,
    format_spec,
    hypercube,
    line_graph,
    line_graph_of,
    make_family,
    parse_spec,
    star,
    witness,
)
from cyclosure.graph import build_graph, is_bipartite, regularity, validate_graph
from cyclosure.oracles import chordless_cycles
from cyclosure.symmetry import is_edge_transitive, is_vertex_transitive


def test_star_counts():
    labeled = make_family(star(3))
    assert regularity(labeled.graph) == (1, 3, None)
    assert labeled.graph.degree(0) == 3


def test_diamond_counts():
    g = make_family(diamond_complete(3)).graph
    assert (g.n, g.m) == (9, 12)


@pytest.mark.parametrize("n", range(3, 9))
def test_diamond_count_formulas(n):
    g = make_family(diamond_complete(n)).graph
    assert g.n == n + n * (n - 1)
    assert g.m == 2 * n * (n - 1)
    validate_graph(g)


def test_hypercube_q3():
    g = make_family(hypercube(3)).graph
    assert (g.n, g.m) == (8, 12)
    assert regularity(g).regular_degree == 3
    assert is_bipartite(g) is not None


def test_circulant_14():
    g = make_family(circulant(14, (1, 2))).graph
    assert g.n == 14
    assert regularity(g).regular_degree == 4


def test_bad_specs():
    for spec in (
        circulant(2, (1,)),
        diamond_complete(2),
        hypercube(0),
        cycle_graph(2),
        complete(-1),
    ):
        with pytest.raises(BadSpec):
            make_family(spec)
    with pytest.raises(BadSpec):
        parse_spec("circulant:14")
    with pytest.raises(BadSpec):
        parse_spec("widget:3")


def test_spec_text_round_trip():
    for text in (
        "circulant:14:1,2",
        "diamond:4",
        "hypercube:3",
        "line:hypercube:3",
        "line:line:cycle:5",
        "complete:6",
        "complete_bipartite:3:3",
        "star:5",
        "cycle:9",
    ):
        assert format_spec(parse_spec(text)) == text


def test_labels_are_bijections():
    for spec in (circulant(8, (1, 2)), diamond_complete(4), hypercube(3),
                 line_graph_of(diamond_complete(3)), star(4)):
        labeled = make_family(spec)
        assert len(set(labeled.labels)) == labeled.graph.n


def test_diamond_labels():
    labeled = make_family(diamond_complete(3))
    assert labeled.labels == ("v1", "v2", "v3", "v12", "v21", "v13", "v31", "v23", "v32")


def test_hypercube_labels_are_binary_ids():
    labeled = make_family(hypercube(3))
    for v in range(8):
        assert int(labeled.labels[v], 2) == v


def test_line_graph_of_star_is_triangle():
    lg, edge_of = line_graph(make_family(star(3)).graph)
    assert (lg.n, lg.m) == (3, 3)
    assert edge_of == ((0, 1), (0, 2), (0, 3))


def test_line_graph_of_cycle_is_cycle():
    c5 = make_family(cycle_graph(5)).graph
    lg, _ = line_graph(c5)
    assert canonical_form(lg) == canonical_form(c5)


def test_line_graph_of_q3():
    lg, _ = line_graph(make_family(hypercube(3)).graph)
    assert lg.n == 12
    assert regularity(lg).regular_degree == 4


def test_line_graph_empty():
    lg, edge_of = line_graph(build_graph(3, []))
    assert lg.n == 0 and edge_of == ()


def test_witness_circulant_spec_example():
    assert witness(circulant(14, (1, 2)), 5).verts == (0, 12, 13, 1, 2, 3)


def test_witness_diamond_spec_example():
    labeled = make_family(diamond_complete(3))
    path = witness(diamond_complete(3), 4)
    assert labeled.relabel(path.verts) == ("v12", "v1", "v21", "v2", "v23")


def test_witness_hypercube_spec_example():
    labeled = make_family(hypercube(3))
    path = witness(hypercube(3), 6)
    assert labeled.relabel(path.verts) == (
        "000", "100", "110", "010", "011", "001", "101",
    )
    longer = witness(hypercube(3), 7)
    assert labeled.relabel(longer.verts)[-1] == "111"


def test_witness_line_hypercube():
    base_path = witness(hypercube(3), 6)
    base = make_family(hypercube(3)).graph
    lg, edge_of = line_graph(base)
    image = witness(line_graph_of(hypercube(3)), 5)
    assert image.length == 5
    base_edges = {
        (min(a, b), max(a, b)) for a, b in zip(base_path.verts, base_path.verts[1:])
    }
    assert {edge_of[v] for v in image.verts} == base_edges
    assert is_induced_path(lg, image)


def test_witness_extension_rules():
    # paths canonicalise up to reversal, so compare both orientations
    labeled = make_family(diamond_complete(4))
    got = labeled.relabel(witness(diamond_complete(4), 7).verts)
    expected = ("v12", "v1", "v21", "v2", "v23", "v3", "v34", "v4")
    assert got in (expected, expected[::-1])
    assert witness(circulant(12, (1, 2)), 7).verts == (0, 10, 11, 1, 2, 3, 4, 5)


def test_witness_validity_ranges():
    with pytest.raises(UnsupportedWitness):
        witness(circulant(8, (1, 2)), 5)  # m < length + 4
    with pytest.raises(UnsupportedWitness):
        witness(circulant(14, (1, 3)), 5)  # wrong connection set
    with pytest.raises(UnsupportedWitness):
        witness(circulant(14, (1, 2)), 4)  # too short
    with pytest.raises(UnsupportedWitness):
        witness(diamond_complete(3), 6)  # needs n >= 4
    with pytest.raises(UnsupportedWitness):
        witness(hypercube(2), 4)  # dim < 3
    with pytest.raises(UnsupportedWitness):
        witness(hypercube(3), 5)  # length not in {6, 7}
    with pytest.raises(UnsupportedWitness):
        witness(line_graph_of(hypercube(3)), 4)  # base length 5 unsupported
    with pytest.raises(UnsupportedWitness):
        witness(star(4), 2)


@pytest.mark.parametrize(
    "spec,length",
    [(circulant(12, (1, 2)), 5), (circulant(14, (1, 2)), 5), (circulant(20, (1, 2)), 8),
     (diamond_complete(3), 4), (diamond_complete(4), 6), (diamond_complete(5), 8),
     (hypercube(3), 6), (hypercube(3), 7), (hypercube(4), 8)],
)
def test_witnesses_certified_non_closing(spec, length):
    g = make_family(spec).graph
    path = witness(spec, length)
    assert not closes_to_cycle(g, path).closes


@pytest.mark.parametrize(
    "spec,length",
    [(line_graph_of(diamond_complete(3)), 3), (line_graph_of(diamond_complete(4)), 5),
     (line_graph_of(hypercube(3)), 5), (line_graph_of(hypercube(3)), 6)],
)
def test_line_witnesses_certified_non_closing_induced(spec, length):
    g = make_family(spec).graph
    path = witness(spec, length)
    assert is_induced_path(g, path)
    assert not closes_to_induced_cycle(g, path).closes


@pytest.mark.parametrize(
    "spec,length",
    [(circulant(12, (1, 2)), 5), (diamond_complete(3), 4), (hypercube(3), 6)],
)
def test_witnesses_certified_by_enumeration_oracle(spec, length):
    from cyclosure.oracles import closes_by_enumeration

    g = make_family(spec).graph
    path = witness(spec, length)
    assert closes_by_enumeration(g, path.verts, induced=False) is False


def test_generated_graphs_pass_validator():
    from cyclosure.claims import default_family_pool

    for spec in default_family_pool(24):
        validate_graph(make_family(spec).graph)


@pytest.mark.parametrize(
    "spec",
    [cycle_graph(6), star(3), complete(4), hypercube(3), diamond_complete(3),
     circulant(10, (1, 2)), complete_bipartite(2, 3)],
)
def test_path_edge_sequences_are_induced_in_line_graph(spec):
    g = make_family(spec).graph
    lg, edge_of = line_graph(g)
    index = {e: k for k, e in enumerate(edge_of)}
    for length in range(1, 5):
        for path in enumerate_paths(g, length):
            image = [
                index[(min(a, b), max(a, b))]
                for a, b in zip(path.verts, path.verts[1:])
            ]
            assert is_induced_path(lg, image)


@pytest.mark.parametrize(
    "spec",
    [cycle_graph(6), star(4), complete(4), hypercube(3), diamond_complete(3),
     complete_bipartite(2, 3)],
)
def test_induced_line_cycles_pull_back_to_cycles(spec):
    g = make_family(spec).graph
    lg, edge_of = line_graph(g)
    for cyc in chordless_cycles(lg):
        if len(cyc) < 4:
            continue
        shared = []
        for k in range(len(cyc)):
            common = set(edge_of[cyc[k]]) & set(edge_of[cyc[(k + 1) % len(cyc)]])
            assert len(common) == 1
            shared.append(common.pop())
        assert len(set(shared)) == len(shared)
        for k in range(len(shared)):
            assert g.adjacent(shared[k - 1], shared[k])


def test_families_vertex_transitive():
    for m in range(6, 21):
        assert is_vertex_transitive(make_family(circulant(m, (1, 2))).graph)
    for d in range(2, 6):
        assert is_vertex_transitive(make_family(hypercube(d)).graph)
    for spec in (cycle_graph(9), complete(5)):
        assert is_vertex_transitive(make_family(spec).graph)


def test_diamond_et_not_vt():
    for n in (3, 4, 5):
        g = make_family(diamond_complete(n)).graph
        assert is_edge_transitive(g)
        assert not is_vertex_transitive(g)


def test_line_of_et_is_vt():
    for spec in ([diamond_complete(3), diamond_complete(4)]
                 + [star(k) for k in range(2, 6)]
                 + [hypercube(d) for d in (2, 3)]):
        lg = make_family(line_graph_of(spec)).graph
        assert is_vertex_transitive(lg)
