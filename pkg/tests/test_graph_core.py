import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circalt import graph_core as gc


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return gc.Graph.from_edges(n, chosen)


def to_nx(g: gc.Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph6_small_examples():
    assert gc.parse_graph6("@").n == 1
    assert gc.parse_graph6("@").num_edges == 0
    k2 = gc.parse_graph6("A_")
    assert k2.n == 2 and k2.has_edge(0, 1)
    assert gc.emit_graph6(gc.complete_graph(1)) == "@"
    assert gc.emit_graph6(gc.complete_graph(2)) == "A_"
    assert gc.emit_graph6(gc.empty_graph(2)) == "A?"


@given(graphs(max_n=20))
@settings(max_examples=150, deadline=None)
def test_graph6_matches_networkx(g):
    text = gc.emit_graph6(g)
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    back = gc.parse_graph6(text)
    assert back.adj == g.adj


@pytest.mark.parametrize("bad", ["", "?", ">>graph6<<A_", "A", "A_?", "A`", "~?@A", "A\x7f"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(gc.Graph6Error):
        gc.parse_graph6(bad)


def test_graph6_size_limit():
    with pytest.raises(gc.Graph6Error):
        gc.emit_graph6(gc.empty_graph(63))
    assert gc.parse_graph6(gc.emit_graph6(gc.complete_graph(62))).num_edges == 62 * 61 // 2


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        gc.Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        gc.Graph(1, (0b1,))
    with pytest.raises(ValueError):
        gc.Graph(2, (0, 0), labels=("x", "x"))


def test_complement_examples():
    assert gc.complement(gc.complete_graph(5)).num_edges == 0
    c5 = gc.cycle_graph(5)
    # 0 1 2 3 4 -> pentagram 0 2 4 1 3
    assert gc.is_isomorphism(c5, gc.complement(c5), [0, 2, 4, 1, 3])


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_complement_involution(g):
    assert gc.complement(gc.complement(g)).adj == g.adj


def test_components_examples():
    assert gc.is_connected(gc.cycle_graph(5))
    assert gc.is_connected(gc.complete_graph(1))
    comps = gc.components(gc.complement(gc.complete_bipartite(2, 3)))
    assert sorted(map(sorted, comps)) == [[0, 1], [2, 3, 4]]
    w5 = gc.wheel_graph(5)
    comps = gc.components(gc.complement(w5))
    assert len(comps) == 2 and [5] in comps
    assert not gc.is_connected(gc.empty_graph(2))


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_components_partition_and_join(g):
    comps = gc.components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert sorted(map(sorted, comps)) == sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    comp = gc.complement(g)
    parts = gc.components(comp)
    if len(parts) >= 2:
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                assert all(g.has_edge(x, y) for x in a for y in b)


def test_girth_examples():
    assert gc.girth(gc.cycle_graph(7)) == 7
    assert gc.odd_girth(gc.cycle_graph(7)) == 7
    assert gc.girth(gc.complete_graph(2)) == math.inf
    assert gc.odd_girth(gc.complete_graph(2)) == math.inf
    grotzsch = gc.grotzsch_graph()
    assert gc.girth(grotzsch) == 4
    assert gc.odd_girth(grotzsch) == 5
    assert gc.odd_girth(gc.cycle_graph(6)) == math.inf


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_girth_matches_networkx(g):
    h = to_nx(g)
    expected = nx.girth(h)
    assert gc.girth(g) == expected
    if nx.is_bipartite(h):
        assert gc.odd_girth(g) == math.inf
    else:
        # shortest odd closed walk through each vertex, via the bipartite double cover
        best = math.inf
        cover = nx.bipartite_double_cover(h) if hasattr(nx, "bipartite_double_cover") else None
        if cover is None:
            cover = nx.Graph()
            for a, b in h.edges():
                cover.add_edge((a, 0), (b, 1))
                cover.add_edge((a, 1), (b, 0))
        for v in h.nodes():
            if (v, 0) in cover and (v, 1) in cover and nx.has_path(cover, (v, 0), (v, 1)):
                best = min(best, nx.shortest_path_length(cover, (v, 0), (v, 1)))
        assert gc.odd_girth(g) == best


def test_clique_examples():
    assert gc.clique_number(gc.complete_graph(5)) == 5
    assert gc.clique_number(gc.grotzsch_graph()) == 2
    assert gc.clique_number(gc.empty_graph(3)) == 1


@given(graphs(max_n=12))
@settings(max_examples=150, deadline=None)
def test_clique_matches_networkx(g):
    expected = max(len(c) for c in nx.find_cliques(to_nx(g)))
    clique = gc.max_clique(g)
    assert len(clique) == expected
    assert all(g.has_edge(a, b) for i, a in enumerate(clique) for b in clique[i + 1:])


def _chi_brute(g: gc.Graph) -> int:
    import itertools

    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if gc.is_proper_colouring(g, col):
                return k
    return 0


def test_chromatic_examples():
    assert gc.chromatic_number(gc.cycle_graph(5)) == 3
    assert gc.chromatic_number(gc.petersen_graph()) == 3
    assert gc.chromatic_number(gc.grotzsch_graph()) == 4
    assert gc.chromatic_number(gc.empty_graph(4)) == 1


@given(graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_chromatic_matches_brute_force(g):
    chi, col = gc.optimal_colouring(g)
    assert chi == _chi_brute(g)
    assert gc.is_proper_colouring(g, col)
    assert len(set(col)) == chi
    assert gc.clique_number(g) <= chi


def test_named_graphs_match_networkx():
    pairs = [
        (gc.petersen_graph(), nx.petersen_graph()),
        (gc.grotzsch_graph(), nx.mycielski_graph(4)),
        (gc.wheel_graph(5), nx.wheel_graph(6)),
        (gc.complete_bipartite(3, 3), nx.complete_bipartite_graph(3, 3)),
    ]
    for ours, ref in pairs:
        assert nx.is_isomorphic(to_nx(ours), ref)


def test_induced_subgraph():
    c5 = gc.cycle_graph(5)
    p = c5.induced_subgraph([0, 1, 2])
    assert p.edges() == [(0, 1), (1, 2)]
