from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from subcubic.families import family, named_graph
from subcubic.graph import Graph
from subcubic.naive import naive_automorphisms
from subcubic.symmetry import (
    CapacityError,
    automorphisms,
    canonical_form,
    compose,
    edge_orbits,
    find_automorphism,
    find_isomorphism,
    inverse,
    is_distinguishing,
    is_isomorphic,
    motion,
    moved_points,
    transitivity,
    vertex_orbits,
    vertex_type,
    vertex_types,
)

from .conftest import relabelings, subcubic_graphs
from .test_graph import to_nx

NAMED = ["K1_3", "K2_3", "K4", "K3_3", "C5", "Cube", "Petersen", "Heawood", "Dodecahedron",
         "McGee", "Pappus", "Desargues"]


def nx_aut_count(g: Graph) -> int:
    h = to_nx(g)
    return sum(1 for _ in GraphMatcher(h, h).isomorphisms_iter())


@pytest.mark.parametrize("name", NAMED)
def test_automorphism_group_order_matches_networkx(name):
    g = named_graph(name)
    assert automorphisms(g).order == nx_aut_count(g)


def test_automorphism_group_orders_frozen():
    # |Aut| of the classical graphs
    orders = {"K1_3": 6, "K2_3": 12, "K4": 24, "K3_3": 72, "C5": 10, "Cube": 48, "Petersen": 120,
              "Heawood": 336, "Dodecahedron": 120, "McGee": 32, "Pappus": 216, "Desargues": 240}
    assert {name: automorphisms(named_graph(name)).order for name in orders} == orders


@given(subcubic_graphs(max_n=7, connected=False))
def test_automorphisms_match_brute_force(g):
    assert list(automorphisms(g)) == sorted(naive_automorphisms(g))


@given(subcubic_graphs(max_n=7), st.data())
def test_colored_automorphisms_and_fixing(g, data):
    coloring = data.draw(st.lists(st.integers(0, 1), min_size=g.n, max_size=g.n))
    fixed = data.draw(st.lists(st.integers(0, g.n - 1), max_size=2, unique=True))
    expected = sorted(
        p for p in naive_automorphisms(g)
        if all(coloring[p[v]] == coloring[v] for v in range(g.n)) and all(p[v] == v for v in fixed)
    )
    assert list(automorphisms(g, coloring, fixed)) == expected
    assert is_distinguishing(g, coloring) == (
        len([p for p in naive_automorphisms(g) if all(coloring[p[v]] == coloring[v] for v in range(g.n))]) == 1
    )


def test_find_automorphism_honours_mapping_and_nontrivial():
    p = named_graph("Petersen")
    phi = find_automorphism(p, mapping={0: 5, 1: 2})
    assert phi[0] == 5 and phi[1] == 2
    assert find_automorphism(p, fixed=range(10), nontrivial=True) is None
    assert find_automorphism(p, mapping={0: 0, 1: 1}) is not None
    # 0 and 9 are disjoint 2-subsets of {0..4}; adjacent vertices cannot go to non-adjacent ones
    a, b = p.adj[0][0], next(v for v in range(1, 10) if not p.has_edge(0, v))
    assert find_automorphism(p, mapping={0: 0, a: b}) is None


def test_capacity_guards():
    with pytest.raises(CapacityError):
        automorphisms(named_graph("Heawood"), max_vertices=10)
    with pytest.raises(CapacityError):
        automorphisms(named_graph("Petersen"), limit=50)


@given(subcubic_graphs(max_n=12).flatmap(lambda g: st.tuples(st.just(g), relabelings(g))))
def test_canonical_form_is_invariant(pair):
    g, h = pair
    assert canonical_form(g) == canonical_form(h)
    assert is_isomorphic(g, h)
    iso = find_isomorphism(g, h)
    assert all(h.has_edge(iso[u], iso[v]) for u, v in g.edges())


@given(subcubic_graphs(max_n=8), subcubic_graphs(max_n=8))
def test_isomorphism_agrees_with_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_form(g) == canonical_form(h)) == is_isomorphic(g, h)


@pytest.mark.parametrize("name, expected", [("Cube", 4), ("Petersen", 6), ("K4", 2), ("Heawood", 8)])
def test_motion(name, expected):
    assert motion(named_graph(name)) == expected


@given(subcubic_graphs(max_n=7))
def test_motion_matches_brute_force(g):
    moved = [len(moved_points(p)) for p in naive_automorphisms(g)]
    assert motion(g) == min((m for m in moved if m), default=None)


def test_vertex_types_of_trees_and_transitive_graphs():
    # root of T2 sees S3, the inner vertices swap their two children, leaves are type 1
    types = vertex_types(family("T", 2))
    assert types[0] == 6
    assert sorted(types[1:4]) == [2, 2, 2]
    assert set(types[4:]) == {1}
    assert set(vertex_types(named_graph("Petersen"))) == {6}
    assert set(vertex_types(named_graph("McGee"))) == {2}


@given(subcubic_graphs(max_n=7))
def test_vertex_type_matches_brute_force(g):
    auts = naive_automorphisms(g)
    for v in range(g.n):
        nb = g.adj[v]
        induced = {tuple(p[w] for w in nb) for p in auts if p[v] == v}
        assert vertex_type(g, v) == (len(induced) if len(nb) > 1 else 1)


def test_orbits_and_transitivity():
    t = transitivity(named_graph("Petersen"))
    assert t.vertex_transitive and t.edge_transitive
    t = transitivity(named_graph("K1_3"))
    assert not t.vertex_transitive and t.edge_transitive
    assert t.vertex_orbits == [[0], [1, 2, 3]]
    assert len(edge_orbits(family("T", 2))) == 2
    assert vertex_orbits(named_graph("C5"), [1, 0, 0, 0, 0]) == [[0], [1, 4], [2, 3]]
    with pytest.raises(ValueError):
        transitivity(Graph.from_edges(2, []))


def test_compose_and_inverse():
    p, q = (1, 2, 0), (0, 2, 1)
    assert compose(p, inverse(p)) == (0, 1, 2)
    assert compose(p, q) == (1, 0, 2)


def test_is_distinguishing_rejects_short_coloring():
    with pytest.raises(ValueError):
        is_distinguishing(named_graph("K4"), [0, 1])
