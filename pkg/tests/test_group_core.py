import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from normgraphs import group_core as gc
from normgraphs.representations import (
    direct_product,
    make_alternating,
    make_cyclic,
    make_dihedral,
    make_symmetric,
    semidirect_product,
)

from oracles import TableOracle, compose, perm_from_cycles


def el(G, *cycles):
    return G.element_from_cycles(list(cycles))


# -- element_order / cyclic_subgroup / conjugate


def test_element_order_examples(S3, C6):
    assert gc.element_order(S3, gc.IDENTITY) == 1
    assert gc.element_order(C6, 1) == 6
    assert gc.element_order(S3, el(S3, [1, 2, 3])) == 3


def test_cyclic_subgroup_examples(S3):
    assert gc.cyclic_subgroup(S3, gc.IDENTITY).order == 1
    A = gc.cyclic_subgroup(S3, el(S3, [1, 2, 3]))
    B = gc.cyclic_subgroup(S3, el(S3, [1, 3, 2]))
    assert A.order == 3 and A == B


def test_conjugate_examples(S3, A4):
    t, c = el(S3, [1, 2]), el(S3, [1, 2, 3])
    assert gc.conjugate(S3, t, gc.IDENTITY) == t
    assert gc.conjugate(S3, t, c) == el(S3, [2, 3])
    # independent check of the composition convention on raw tuples
    p, q = perm_from_cycles(3, [[1, 2]]), perm_from_cycles(3, [[1, 2, 3]])
    qi = tuple(np.argsort(q))
    assert compose(compose(qi, p), q) == perm_from_cycles(3, [[2, 3]])
    # central element is fixed
    for n in gc.center(make_dihedral(4)).elements.tolist():
        assert all(gc.conjugate(make_dihedral(4), n, k) == n for k in range(8))


# -- closure and normality


def test_closure_examples(S3, A4):
    assert gc.closure(S3, []).order == 1
    assert gc.closure(S3, [el(S3, [1, 2]), el(S3, [1, 2, 3])]).order == 6
    assert gc.closure(A4, [el(A4, [1, 2, 3]), el(A4, [1, 2], [3, 4])]).order == 12


def test_is_normal_examples(S3):
    assert gc.is_normal(S3, gc.trivial_subgroup(S3))
    assert gc.is_normal(S3, gc.cyclic_subgroup(S3, el(S3, [1, 2, 3])))
    assert not gc.is_normal(S3, gc.cyclic_subgroup(S3, el(S3, [1, 2])))


def test_normaliser_membership_examples(S3):
    t = el(S3, [1, 2])
    assert gc.normaliser_membership(S3, gc.IDENTITY, gc.cyclic_subgroup(S3, t))
    assert gc.normaliser_membership(S3, t, gc.cyclic_subgroup(S3, el(S3, [1, 2, 3])))
    assert not gc.normaliser_membership(S3, t, gc.cyclic_subgroup(S3, el(S3, [1, 3])))


def test_centralizer_examples(S3):
    assert gc.centralizer(S3, gc.IDENTITY).order == 6
    c = el(S3, [1, 2, 3])
    assert gc.centralizer(S3, c) == gc.cyclic_subgroup(S3, c)


def test_normal_closure_examples(S3, A4):
    assert gc.normal_closure(S3, gc.IDENTITY).order == 1
    assert gc.normal_closure(S3, el(S3, [1, 2])).order == 6
    V = gc.normal_closure(A4, el(A4, [1, 2], [3, 4]))
    assert V.order == 4 and gc.is_abelian(A4, V)


# -- series


def test_derived_series_examples(S3, C6):
    s = gc.derived_series(C6)
    assert [H.order for H in s] == [6, 1] and gc.is_soluble(C6)
    assert [H.order for H in gc.derived_series(S3)] == [6, 3, 1]
    assert gc.is_soluble(S3)


def test_s5_not_soluble():
    S5 = make_symmetric(5)
    series = gc.derived_series(S5)
    assert [H.order for H in series] == [120, 60]
    assert not gc.is_soluble(S5)


def test_s4_derived_series(S4):
    assert [H.order for H in gc.derived_series(S4)] == [24, 12, 4, 1]


def test_nilpotency_examples(S3, A4, D8):
    assert not gc.is_nilpotent(S3)
    lcs = gc.lower_central_series(S3)
    assert [H.order for H in lcs][:2] == [6, 3]
    V = gc.largest_normal_p_subgroup(A4, 2)
    assert gc.is_nilpotent(A4, V)
    assert gc.is_nilpotent(D8)
    Q8 = _quaternion()
    assert gc.is_nilpotent(Q8)
    assert gc.is_nilpotent(make_cyclic(32))


def _quaternion():
    from conftest import perm_group

    return perm_group(8, [[1, 2, 4, 7], [3, 6, 8, 5]], [[1, 3, 4, 8], [2, 5, 7, 6]])


def test_subgroup_commutator_examples(S3):
    A = gc.cyclic_subgroup(S3, el(S3, [1, 2, 3]))
    T = gc.cyclic_subgroup(S3, el(S3, [1, 2]))
    assert gc.subgroup_commutator(S3, A, gc.trivial_subgroup(S3)).order == 1
    assert gc.subgroup_commutator(S3, A, T) == A
    assert gc.subgroup_commutator(S3, A, A).order == 1


def test_subgroup_commutator_generator_fallback_matches_pairs():
    # |G|^2 = 331776 is past the all-pairs limit, so generator commutators are used
    G = direct_product(make_symmetric(4), make_symmetric(4))
    W = gc.whole_group(G)
    pairs = gc.subgroup_commutator(G, W, W)
    o = TableOracle.of(G)
    ref = o.commutator_subgroup(range(G.order), range(G.order))
    assert set(pairs.elements.tolist()) == set(ref)
    assert pairs.order == 144


# -- O_p, Fitting, minimal normal


def test_op_examples(S3, A4):
    assert gc.largest_normal_p_subgroup(S3, 5).order == 1
    assert gc.largest_normal_p_subgroup(A4, 2).order == 4
    assert gc.largest_normal_p_subgroup(S3, 3).order == 3
    assert gc.largest_normal_p_subgroup(A4, 3).order == 1


def test_fitting_examples(S3, A4, S4):
    G = make_cyclic(12)
    assert gc.fitting_subgroup(G).order == 12
    assert gc.fitting_subgroup(S3).order == 3
    assert gc.fitting_subgroup(A4).order == 4
    assert gc.fitting_subgroup(S4).order == 4


def test_minimal_normal_examples(S3, A4, C6):
    assert [M.order for M in gc.minimal_normal_subgroups(S3)] == [3]
    assert [M.order for M in gc.minimal_normal_subgroups(A4)] == [4]
    assert sorted(M.order for M in gc.minimal_normal_subgroups(C6)) == [2, 3]
    with pytest.raises(gc.GroupError):
        gc.minimal_normal_subgroups(make_cyclic(1))


def test_minimal_normal_against_oracle():
    for G in (make_dihedral(6), direct_product(make_symmetric(3), make_cyclic(2)), make_symmetric(4)):
        o = TableOracle.of(G)
        normals = {H for H in o.two_generated if o.is_normal(H)}
        # every normal subgroup of these groups is 2-generated; add joins of pairs
        normals |= {o.generated(A | B) for A in normals for B in normals}
        minimal = {H for H in normals if len(H) > 1 and not any(1 < len(K) < len(H) and K < H for K in normals)}
        got = {frozenset(M.elements.tolist()) for M in gc.minimal_normal_subgroups(G)}
        assert got == minimal


# -- property tests

small_groups = st.sampled_from(
    [
        make_cyclic(12),
        make_dihedral(5),
        make_dihedral(6),
        make_alternating(4),
        make_symmetric(4),
        semidirect_product(7, 1, [[[2]]]),
        semidirect_product(2, 2, [[[0, 1], [1, 1]]]),
        direct_product(make_symmetric(3), make_cyclic(2)),
    ]
)


@settings(max_examples=60, deadline=None)
@given(G=small_groups, data=st.data())
def test_group_axioms(G, data):
    a, b, c = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == gc.IDENTITY
    assert G.mul(gc.IDENTITY, a) == a == G.mul(a, gc.IDENTITY)
    assert G.order % gc.element_order(G, a) == 0
    # conjugation is a homomorphism
    assert G.conj(G.mul(a, b), c) == G.mul(G.conj(a, c), G.conj(b, c))


@settings(max_examples=40, deadline=None)
@given(G=small_groups, data=st.data())
def test_subgroup_constructions(G, data):
    g = data.draw(st.integers(0, G.order - 1))
    h = data.draw(st.integers(0, G.order - 1))
    H = gc.closure(G, [g, h])
    assert gc.is_subgroup(G, H.elements)
    assert G.order % H.order == 0
    Ncl = gc.normal_closure(G, g)
    assert gc.is_normal(G, Ncl) and g in Ncl
    C = gc.centralizer(G, g)
    assert gc.is_subgroup(G, C.elements)
    assert all(G.mul(x, g) == G.mul(g, x) for x in C.elements.tolist())
    Nm = gc.normaliser(G, H)
    assert H <= Nm and gc.is_normal_in(G, H, Nm)
    assert len(gc.conjugacy_class(G, g)) * C.order == G.order


@settings(max_examples=20, deadline=None)
@given(G=small_groups)
def test_fitting_is_nilpotent_normal_and_soluble_agrees(G):
    F = gc.fitting_subgroup(G)
    assert gc.is_normal(G, F) and gc.is_nilpotent(G, F)
    o = TableOracle.of(G)
    assert gc.is_soluble(G) == o.is_soluble(range(G.order))
    for M in gc.minimal_normal_subgroups(G):
        assert gc.is_elementary_abelian(G, M)
