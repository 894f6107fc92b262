from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given

from subcubic.canonical import kiwi_vertices
from subcubic.corpus import enumerate_subcubic
from subcubic.families import family, heawood_vertex, named_graph
from subcubic.graph import Graph, PreconditionError, emit_graph6, parse_graph6
from subcubic.prover import (
    HEAWOOD_BLACK,
    color_girth_high,
    fix_all_but_siblings,
    ladder_coloring,
    petersen_3coloring,
    prove_two_distinguishable,
)
from subcubic.structure import classify
from subcubic.symmetry import automorphisms, find_automorphism, is_distinguishing, moved_points

from .conftest import subcubic_graphs

# corpus graphs (n <= 8) whose construction needs the bounded repair step,
# with the construction that came closest
REPAIRED = {
    "Ep^O": "Thm5.6",  # triangular prism
    "Fo[q_": "Thm5.4",  # subdivided K4
    "G[S_Wg": "Thm5.4",
    "GROXCS": "Thm5.6",  # ring of two non-sibling gadgets
    "GgK}Cc": "Thm5.6",
}


def test_heawood_certificate():
    g = named_graph("Heawood")
    trace = prove_two_distinguishable(g)
    assert trace.strategy == "Lem6.2-Heawood" and trace.verified
    black = {heawood_vertex(lab) for lab in HEAWOOD_BLACK}
    assert set(trace.coloring.vertices_of(1)) == black
    assert is_distinguishing(g, trace.coloring)


def test_dodecahedron_certificate():
    g = named_graph("Dodecahedron")
    trace = prove_two_distinguishable(g)
    assert trace.strategy == "Dodecahedron"
    black = trace.coloring.vertices_of(1)
    p = trace.parameters
    assert sorted(black) == sorted([p["v"], *p["neighbors"], p["w"]])
    assert is_distinguishing(g, trace.coloring)


def test_mcgee_uses_the_girth_seven_construction():
    g = named_graph("McGee")
    trace = color_girth_high(g)
    assert trace.strategy == "Lem6.1"
    cyc = trace.parameters["cycle"]
    assert len(cyc) == 7
    assert is_distinguishing(g, trace.coloring)
    # kiwis sit on the cycle at positions 1, 4, 6 and 7
    assert sorted(cyc.index(v) + 1 for v in kiwi_vertices(g, trace.coloring)) == [1, 4, 6, 7]


@pytest.mark.parametrize("name", ["Pappus", "Desargues"])
def test_whisker_construction(name):
    g = named_graph(name)
    trace = color_girth_high(g)
    assert trace.strategy == "Lem6.2-whisker"
    assert len(trace.parameters["cycle"]) == 6
    assert is_distinguishing(g, trace.coloring)


@pytest.mark.parametrize("name", ["Petersen", "K1_3"])
def test_girth_construction_preconditions(name):
    with pytest.raises(PreconditionError):
        color_girth_high(named_graph(name))


@pytest.mark.parametrize("name", ["Petersen", "K4", "K3_3", "Cube"])
def test_prover_refuses_graphs_without_two_colorings(name):
    with pytest.raises(PreconditionError):
        prove_two_distinguishable(named_graph(name))


def test_prover_refuses_families():
    with pytest.raises(PreconditionError):
        prove_two_distinguishable(family("R2", 2))


def test_paths_and_cycles():
    trace = prove_two_distinguishable(Graph.from_edges(7, [(i, (i + 1) % 7) for i in range(7)]), check=False)
    assert trace.strategy == "path-or-cycle" and trace.verified


def test_corpus_strategies():
    strategies = Counter()
    repaired = {}
    for n in range(4, 9):
        for g in enumerate_subcubic(n):
            if g.max_degree() != 3 or classify(g).kind != "two":
                continue
            trace = prove_two_distinguishable(g)
            assert trace.verified and is_distinguishing(g, trace.coloring)
            strategies[trace.strategy] += 1
            if trace.strategy == "repair":
                repaired[emit_graph6(g)] = trace.parameters["base"]
    assert strategies["fallback-search"] == 0
    assert repaired == REPAIRED
    assert strategies["Thm4.1-onlychild"] > 0 and strategies["Thm5.1"] > 0


@pytest.mark.parametrize("code", sorted(REPAIRED))
def test_repairs_flip_at_most_two_vertices(code):
    trace = prove_two_distinguishable(parse_graph6(code))
    assert trace.strategy == "repair"
    assert 1 <= len(trace.parameters["flipped"]) <= 2


@given(subcubic_graphs(min_n=4, max_n=16))
def test_prover_on_random_graphs(g):
    if g.max_degree() != 3 or classify(g).kind != "two":
        return
    trace = prove_two_distinguishable(g)
    assert trace.strategy != "fallback-search"
    assert is_distinguishing(g, trace.coloring)
    assert trace.to_json()["verified"]


def test_ladder_on_the_prism():
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    outcome, preset, steps = ladder_coloring(prism, 0, 1, 2)
    assert outcome == "done"
    assert preset == {4: 0, 5: 1}
    assert steps == [{"pair": [1, 2], "case": "adjacent"}]


def test_petersen_three_coloring():
    g = named_graph("Petersen")
    c = petersen_3coloring()
    assert c.k == 3 and c.histogram() == [6, 3, 1]
    assert is_distinguishing(g, c)
    # merging red into either other color loses the certificate
    for target in (0, 1):
        merged = [target if x == 2 else x for x in c]
        assert not is_distinguishing(g, merged)


SIBLING_FIXERS = ["K1_3", "K2_3", "T2", "T3", "S2", "S3", "R12", "R22", "R32", "R33"]


def _graph(name: str) -> Graph:
    if name[0] in "TSR" and name[-1].isdigit() and name not in ("K1_3", "K2_3"):
        return family(name[:-1], int(name[-1]))
    return named_graph(name)


@pytest.mark.parametrize("name", SIBLING_FIXERS)
def test_fix_all_but_siblings(name):
    g = _graph(name)
    c, pair = fix_all_but_siblings(g)
    group = automorphisms(g, c)
    assert group.order == 2
    swap = group.elements[1]
    assert moved_points(swap) == sorted(pair)
    # the pair has a common neighbor
    assert set(g.adj[pair[0]]) & set(g.adj[pair[1]])


@pytest.mark.parametrize("name", ["Petersen", "Cube", "K4", "Heawood"])
def test_fix_all_but_siblings_preconditions(name):
    with pytest.raises(PreconditionError):
        fix_all_but_siblings(named_graph(name))


@pytest.mark.parametrize("kind", ["R1", "R2", "R3"])
def test_gadget_pair_is_the_only_freedom_at_depth_four(kind):
    g = family(kind, 4)
    c, pair = fix_all_but_siblings(g)
    swap = find_automorphism(g, c, nontrivial=True)
    assert moved_points(swap) == sorted(pair)
    assert find_automorphism(g, c, fixed=pair, nontrivial=True) is None
