import itertools
import os

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from normgraphs import group_core as gc
from normgraphs.cyclic_collapse import build_table, orbits
from normgraphs.graph_engine import (
    INF,
    CheckpointError,
    GraphKind,
    ResourceBudgetExceeded,
    adjacent,
    bfs,
    build_collapsed_graph,
    build_graph_all_pairs,
    collapsed_graph,
    component_diameters,
    connected_components,
    diameter,
    distance_to_subset,
    distances_to_subset,
    eccentricity,
    element_adjacent,
    element_distance,
    export_edge_list,
    read_edge_list,
    subgroups_adjacent,
)
from normgraphs.representations import (
    direct_product,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_symmetric,
    semidirect_product,
)

from oracles import TableOracle, element_diameter

KINDS = list(GraphKind)


def el(G, *cycles):
    return G.element_from_cycles(list(cycles))


def vid(G, t, *cycles):
    return t.id_of(el(G, *cycles))


def test_kind_parsing():
    assert GraphKind.parse("normalizing") is GraphKind.NORMALISING
    assert GraphKind.parse(GraphKind.ENGEL) is GraphKind.ENGEL
    with pytest.raises(ValueError):
        GraphKind.parse("cayley")


def test_adjacency_examples(S3, A4):
    t = build_table(S3)
    a12, a123, a13 = vid(S3, t, [1, 2]), vid(S3, t, [1, 2, 3]), vid(S3, t, [1, 3])
    assert adjacent("normalising", S3, t, a12, a123)
    assert not adjacent("normalising", S3, t, a12, a13)
    assert adjacent("engel", S3, t, a12, a123)
    t4 = build_table(A4)
    assert not adjacent("permuting", A4, t4, vid(A4, t4, [1, 2, 3]), vid(A4, t4, [1, 2], [3, 4]))
    for i, j in itertools.combinations(range(t.count), 2):
        assert adjacent("soluble", S3, t, i, j)
    with pytest.raises(ValueError):
        adjacent("normalising", S3, t, a12, a12)


def test_graph_examples(S3, C6):
    g, t, od = collapsed_graph("normalising", make_cyclic(7))
    assert g.vertex_count == 1 and g.edge_count == 0
    assert diameter(g, od) == 1  # the six generators of C7 are mutually adjacent
    g, t, od = collapsed_graph("normalising", S3)
    assert g.vertex_count == 4 and g.edge_count == 3
    a3 = vid(S3, t, [1, 2, 3])
    assert sorted(g.neighbours(a3).tolist()) == sorted(set(range(4)) - {a3})
    assert len(connected_components(g)) == 1
    assert eccentricity(g, a3) == 1
    assert eccentricity(g, vid(S3, t, [1, 2])) == 2
    assert diameter(g, od) == 2
    g, t, od = collapsed_graph("normalising", C6)
    assert diameter(g, od) == 1


def test_a4_components(A4):
    g, t, od = collapsed_graph("normalising", A4)
    comps = connected_components(g)
    assert len(comps) == 5
    assert max(component_diameters(g, od)) == 1
    assert diameter(g, od) == INF


def test_distance_to_subset_examples(S3, A4):
    g, t, _ = collapsed_graph("normalising", S3)
    A3 = gc.cyclic_subgroup(S3, el(S3, [1, 2, 3]))
    assert distance_to_subset(g, t, el(S3, [1, 2, 3]), A3) == 0
    assert distance_to_subset(g, t, el(S3, [1, 2]), A3) == 1
    g, t, _ = collapsed_graph("normalising", A4)
    V4 = gc.largest_normal_p_subgroup(A4, 2)
    assert distance_to_subset(g, t, el(A4, [1, 2, 3]), V4) == INF
    d = distances_to_subset(g, t, V4)
    assert d[el(A4, [1, 2, 3])] == -1 and d[el(A4, [1, 2], [3, 4])] == 0
    with pytest.raises(ValueError):
        distance_to_subset(g, t, 1, gc.trivial_subgroup(A4))


def test_bfs_parents_and_set_source(S3):
    g, t, _ = collapsed_graph("normalising", S3)
    a12, a13 = vid(S3, t, [1, 2]), vid(S3, t, [1, 3])
    r = bfs(g, a12, with_parents=True)
    path = r.path_to(a13)
    assert len(path) == 3 and path[0] == a12 and path[-1] == a13
    assert all(g.has_edge(u, v) for u, v in zip(path, path[1:]))
    r = bfs(g, [a12, a13])
    assert r.distances[a12] == r.distances[a13] == 0


# -- oracle equivalence on small groups

SMALL = [
    make_symmetric(3),
    make_alternating(4),
    make_symmetric(4),
    make_dihedral(4),
    make_dihedral(5),
    make_dihedral(6),
    make_cyclic(12),
    semidirect_product(7, 1, [[[2]]]),
    semidirect_product(5, 1, [[[2]]]),
    semidirect_product(3, 2, [[[0, 1], [2, 0]]]),  # C3^2 : C4
    direct_product(make_symmetric(3), make_cyclic(2)),
    direct_product(make_symmetric(3), make_symmetric(3)),
]


@pytest.mark.parametrize("G", SMALL, ids=lambda G: G.name)
@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.value)
def test_element_graph_matches_definition_oracle(G, kind):
    o = TableOracle.of(G)
    ref = o.graph(kind.value)
    g, t, od = collapsed_graph(kind, G)
    assert g.is_symmetric()
    # lift the collapsed edges back to elements
    lifted = nx.Graph()
    lifted.add_nodes_from(range(1, G.order))
    for i in range(t.count):
        gens = t.generators(i).tolist()
        lifted.add_edges_from(itertools.combinations(gens, 2))
        for j in g.neighbours(i).tolist():
            lifted.add_edges_from(itertools.product(gens, t.generators(j).tolist()))
    assert set(map(frozenset, lifted.edges())) == set(map(frozenset, ref.edges()))
    assert diameter(g, od) == element_diameter(ref)
    assert len(connected_components(g)) == nx.number_connected_components(ref)


@pytest.mark.parametrize("G", SMALL[:6], ids=lambda G: G.name)
def test_fast_build_equals_all_pairs(G):
    t = build_table(G)
    for kind in KINDS:
        a = build_graph_all_pairs(kind, G, t)
        b = build_collapsed_graph(kind, G, t, threads=2, block_size=1)
        assert np.array_equal(a.indptr, b.indptr) and np.array_equal(a.indices, b.indices)


def test_element_adjacency_oracle(S4):
    o = TableOracle.of(S4)
    for x, y in [(1, 5), (3, 17), (7, 22), (10, 11)]:
        for kind in KINDS:
            assert element_adjacent(kind, S4, x, y) == o.adjacent(kind.value, x, y)
    with pytest.raises(ValueError):
        element_adjacent("normalising", S4, 0, 3)


@settings(max_examples=25, deadline=None)
@given(G=st.sampled_from(SMALL), kind=st.sampled_from(KINDS), data=st.data())
def test_element_distance_matches_networkx(G, kind, data):
    x = data.draw(st.integers(1, G.order - 1))
    y = data.draw(st.integers(1, G.order - 1))
    g, t, _ = collapsed_graph(kind, G)
    ref = TableOracle.of(G).graph(kind.value)
    try:
        want = nx.shortest_path_length(ref, x, y)
    except nx.NetworkXNoPath:
        want = INF
    assert element_distance(g, t, x, y) == want


@settings(max_examples=15, deadline=None)
@given(G=st.sampled_from(SMALL), kind=st.sampled_from(KINDS))
def test_hierarchy_and_orbit_invariance(G, kind):
    t = build_table(G)
    od = orbits(t, G)
    g = build_collapsed_graph(kind, G, t, od)
    ecc = [eccentricity(g, v) for v in range(t.count)]
    for lab in range(od.count):
        assert len({ecc[v] for v in od.members(lab)}) == 1
    # conjugation is a graph automorphism
    for x in G.generators:
        img = t.member_index[G.conj(t.canonical_generator, x)]
        E = g.edges()
        moved = {tuple(sorted(e)) for e in img[E].tolist()}
        assert moved == g.edge_set()


def test_edge_containments_small():
    for G in SMALL:
        t = build_table(G)
        E = {k: build_collapsed_graph(k, G, t).edge_set() for k in KINDS}
        assert E[GraphKind.COMMUTING] <= E[GraphKind.NORMALISING] <= E[GraphKind.PERMUTING] <= E[GraphKind.SOLUBLE]
        assert E[GraphKind.NORMALISING] <= E[GraphKind.ENGEL]


# -- export, checkpoint, budget


def test_edge_list_round_trip(tmp_path, A4):
    g, t, _ = collapsed_graph("permuting", A4)
    p = tmp_path / "a4.edges"
    export_edge_list(g, p)
    kind, n, E = read_edge_list(p)
    assert kind == "permuting" and n == t.count
    assert np.array_equal(E, g.edges())
    first = p.read_text().splitlines()[0]
    assert first == f"permuting {t.count} {g.edge_count}"


def test_checkpoint_resume_and_corruption(tmp_path):
    G = direct_product(make_symmetric(4), make_cyclic(3))
    t = build_table(G)
    od = orbits(t, G)
    ref = build_collapsed_graph("normalising", G, t, od)
    ck = tmp_path / "ck.bin"
    calls = []
    build_collapsed_graph("normalising", G, t, od, checkpoint=ck, block_size=1, progress=lambda d, n: calls.append(d))
    assert ck.read_bytes()[:8] == b"NGCKPT01"
    assert calls[-1] == od.count
    # a resumed build does no further work and yields the same graph
    calls.clear()
    again = build_collapsed_graph("normalising", G, t, od, checkpoint=ck, block_size=1, progress=lambda d, n: calls.append(d))
    assert calls == []
    assert np.array_equal(again.indices, ref.indices)
    # wrong kind for this file
    with pytest.raises(CheckpointError):
        build_collapsed_graph("permuting", G, t, od, checkpoint=ck, block_size=1)
    data = bytearray(ck.read_bytes())
    data[:8] = b"XXXXXXXX"
    ck.write_bytes(bytes(data))
    with pytest.raises(CheckpointError):
        build_collapsed_graph("normalising", G, t, od, checkpoint=ck, block_size=1)
    ck.write_bytes(b"NGCKPT01\x05")
    with pytest.raises(CheckpointError):
        build_collapsed_graph("normalising", G, t, od, checkpoint=ck, block_size=1)


def test_partial_checkpoint_resume(tmp_path):
    G = direct_product(make_symmetric(4), make_cyclic(3))
    t = build_table(G)
    od = orbits(t, G)
    ref = build_collapsed_graph("permuting", G, t, od)
    ck = tmp_path / "ck.bin"

    class Stop(Exception):
        pass

    def stop_after_two(done, total):
        if done == 2:
            raise Stop

    with pytest.raises(Stop):
        build_collapsed_graph("permuting", G, t, od, checkpoint=ck, block_size=1, progress=stop_after_two)
    resumed = build_collapsed_graph("permuting", G, t, od, checkpoint=ck, block_size=1)
    assert np.array_equal(resumed.indptr, ref.indptr) and np.array_equal(resumed.indices, ref.indices)


def test_budget_exceeded_reports_partial(S4):
    t = build_table(S4)
    with pytest.raises(ResourceBudgetExceeded) as ei:
        build_collapsed_graph("soluble", S4, t, max_edges=5)
    assert "edges_so_far" in ei.value.partial


def test_thread_count_does_not_change_graph():
    G = semidirect_product(3, 2, [[[0, 1], [2, 0]], [[1, 0], [0, 2]]])
    t = build_table(G)
    a = build_collapsed_graph("permuting", G, t, threads=1)
    b = build_collapsed_graph("permuting", G, t, threads=4, block_size=1)
    assert np.array_equal(a.indices, b.indices)
