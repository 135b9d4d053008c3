import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from normgraphs import group_core as gc
from normgraphs.cyclic_collapse import build_table, conjugate_subgroup_id, euler_phi, orbits
from normgraphs.representations import direct_product, make_cyclic, make_dihedral, semidirect_product

from oracles import TableOracle


def el(G, *cycles):
    return G.element_from_cycles(list(cycles))


def test_counts(C6, S3, A4):
    t = build_table(C6)
    assert t.count == 3 and sorted(t.order.tolist()) == [2, 3, 6]
    t = build_table(S3)
    assert t.count == 4 and sorted(t.order.tolist()) == [2, 2, 2, 3]
    t = build_table(A4)
    assert t.count == 7 and sorted(t.order.tolist()) == [2, 2, 2, 3, 3, 3, 3]
    with pytest.raises(gc.GroupError):
        build_table(make_cyclic(1))


def test_conjugate_subgroup_id(S3):
    t = build_table(S3)
    c, tr = el(S3, [1, 2, 3]), el(S3, [1, 2])
    i = t.id_of(c)
    assert conjugate_subgroup_id(t, i, gc.IDENTITY) == i
    assert conjugate_subgroup_id(t, i, tr) == i
    assert conjugate_subgroup_id(t, t.id_of(tr), c) == t.id_of(el(S3, [2, 3]))


def test_orbit_examples(S3, A4):
    ab = direct_product(make_cyclic(4), make_cyclic(6))
    t = build_table(ab)
    assert orbits(t).count == t.count
    assert orbits(build_table(S3)).count == 2
    t = build_table(A4)
    od = orbits(t)
    assert od.count == 2
    for lab in range(od.count):
        assert len(set(t.order[od.members(lab)].tolist())) == 1


groups = st.sampled_from(
    [
        make_cyclic(30),
        make_dihedral(9),
        make_dihedral(12),
        semidirect_product(7, 1, [[[2]]]),
        semidirect_product(3, 2, [[[0, 1], [2, 0]]]),
        direct_product(make_dihedral(3), make_cyclic(4)),
    ]
)


@settings(max_examples=20, deadline=None)
@given(G=groups)
def test_table_invariants(G):
    t = build_table(G)
    o = TableOracle.of(G)
    subs = {o.cyclic(g) for g in range(1, G.order)}
    assert t.count == len(subs)
    assert {frozenset(t.elements(i).tolist()) for i in range(t.count)} == subs
    # every non-identity element is keyed to the subgroup it generates
    for g in range(1, G.order):
        i = t.member_index[g]
        assert frozenset(t.elements(i).tolist()) == o.cyclic(g)
        assert g in t.generators(i).tolist()
    assert t.member_index[gc.IDENTITY] == -1
    # canonical generator is the least generator
    for i in range(t.count):
        assert t.canonical_generator[i] == t.generators(i).min()
        assert t.generators(i).size == euler_phi(int(t.order[i]))
    # generator lists partition G^#
    allgens = np.sort(np.concatenate([t.generators(i) for i in range(t.count)]))
    assert np.array_equal(allgens, np.arange(1, G.order))


@settings(max_examples=20, deadline=None)
@given(G=groups, data=st.data())
def test_vectorised_membership(G, data):
    t = build_table(G)
    o = TableOracle.of(G)
    ids = np.arange(t.count)
    x = data.draw(st.integers(0, G.order - 1))
    got = t.contains(ids, np.full(ids.size, x))
    want = [x in o.cyclic(int(t.canonical_generator[i])) for i in ids]
    assert got.tolist() == want


@settings(max_examples=15, deadline=None)
@given(G=groups)
def test_orbits_are_conjugacy_classes_of_subgroups(G):
    t = build_table(G)
    od = orbits(t)
    o = TableOracle.of(G)
    for i in range(t.count):
        A = frozenset(t.elements(i).tolist())
        rep = int(od.representatives[od.orbit_of[i]])
        tr = int(od.transversal[i])
        R = frozenset(t.elements(rep).tolist())
        assert frozenset(o.conj(a, tr) for a in R) == A
    # orbit sizes equal conjugacy class sizes of the subgroups
    for lab in range(od.count):
        rep = int(od.representatives[lab])
        A = frozenset(t.elements(rep).tolist())
        conjs = {frozenset(o.conj(a, g) for a in A) for g in range(G.order)}
        assert len(conjs) == od.members(lab).size
