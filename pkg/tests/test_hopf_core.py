"""Structure-constant Hopf algebra kernel: axiom checkers and tensor legs."""

import json

import pytest

from hopfrb.constructions import group_algebra, sweedler_h4, taft
from hopfrb.hopf_core import (MAX_DIM, AlgebraData, CoalgebraData, HopfData, LinearMap,
                              TensorElement, basis_vec, check_algebra, check_antipode,
                              check_bialgebra_compat, check_coalgebra, check_cobrace_compat,
                              check_hopf, delta_power, dense_to_sparse,
                              group_like_basis_indices, hopf_from_json, hopf_to_json,
                              is_algebra_morphism, is_coalgebra_morphism, is_cocommutative,
                              is_group_like, is_hopf_morphism, is_primitive, iterated_delta,
                              opposite_hopf, tensor_apply_counit, tensor_mul_legs,
                              tensor_outer, tensor_permute)
from hopfrb.rb_group import GroupTable
from hopfrb.scalars import FieldCtx

Q = FieldCtx.rationals()


def test_check_algebra_catches_nonassociative():
    # e1 is a unit, but e2*e2 = e2 with e2*e1 twisted breaks associativity
    one = Q.one
    mult = {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one},
            (1, 1): {0: one, 1: one}}
    A = AlgebraData(Q, 2, basis_vec(Q, 2, 0), mult)
    rep = check_algebra(A)
    assert rep.ok
    # now break it: e2*e2 = e1 only, and (e2 e2) e2 != e2 (e2 e2) fails
    mult_bad = dict(mult)
    mult_bad[(1, 1)] = {1: one}
    mult_bad[(0, 1)] = {1: one, 0: one}
    bad = check_algebra(AlgebraData(Q, 2, basis_vec(Q, 2, 0), mult_bad))
    assert not bad.ok
    assert bad.witness is not None


def test_check_algebra_unit_witness():
    one = Q.one
    mult = {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {0: one}, (1, 1): {1: one}}
    rep = check_algebra(AlgebraData(Q, 2, basis_vec(Q, 2, 0), mult))
    assert not rep.ok
    assert "unit" in rep.identity


def test_group_algebra_is_hopf():
    for G in (GroupTable.cyclic(4), GroupTable.symmetric(3)):
        H = group_algebra(G, Q)
        rep = check_hopf(H)
        assert rep.ok
        assert rep.stats["identities_checked"] > 0


def test_coassociativity_witness():
    one = Q.one
    # group-like g except Delta(g) = g (x) 1: coassociativity breaks
    delta = {0: {(0, 0): one}, 1: {(1, 0): one}}
    C = CoalgebraData(Q, 2, delta, [one, one])
    rep = check_coalgebra(C)
    assert not rep.ok
    assert rep.witness["indices"] == [1]


def test_counit_axiom_witness():
    one = Q.one
    delta = {0: {(0, 0): one}, 1: {(1, 1): one}}
    C = CoalgebraData(Q, 2, delta, [one, Q.zero])
    rep = check_coalgebra(C)
    assert not rep.ok
    assert "counit" in rep.identity


def test_bialgebra_compat_negative():
    H = group_algebra(GroupTable.cyclic(2), Q)
    one = Q.one
    # redefine Delta(g) additively: no longer multiplicative with the table
    delta = {0: {(0, 0): one}, 1: {(1, 0): one, (0, 1): one}}
    C = CoalgebraData(Q, 2, delta, list(H.coalgebra.counit), H.labels)
    rep = check_bialgebra_compat(HopfData(H.algebra, C, H.antipode))
    assert not rep.ok


def test_antipode_axiom_negative():
    H4 = sweedler_h4(Q)
    broken = HopfData(H4.algebra, H4.coalgebra, LinearMap.identity(Q, 4))
    rep = check_antipode(broken)
    assert not rep.ok
    assert rep.witness is not None


def test_delta_power_h4_oracle():
    H4 = sweedler_h4(Q)
    one = Q.one
    x = basis_vec(Q, 4, 2)
    # Delta(x) = x (x) 1 + g (x) x
    d2 = delta_power(H4, x, 2)
    assert d2 == TensorElement(Q, 2, {(2, 0): one, (1, 2): one})
    # one more leg: x11 + gx1 + ggx
    d3 = delta_power(H4, x, 3)
    assert d3 == TensorElement(Q, 3, {(2, 0, 0): one, (1, 2, 0): one, (1, 1, 2): one})
    with pytest.raises(ValueError):
        delta_power(H4, x, 4)
    assert iterated_delta(H4.coalgebra, {2: one}, 4).rank == 4


def test_tensor_leg_operations():
    one = Q.one
    two = Q.from_int(2)
    a = TensorElement(Q, 2, {(0, 1): one})
    b = TensorElement(Q, 1, {(2,): two})
    out = tensor_outer(a, b)
    assert out == TensorElement(Q, 3, {(0, 1, 2): two})
    assert tensor_permute(out, [2, 0, 1]) == TensorElement(Q, 3, {(2, 0, 1): two})
    H = group_algebra(GroupTable.cyclic(3), Q)
    prod = tensor_mul_legs(H.algebra, TensorElement(Q, 2, {(1, 2): two}), 0)
    assert prod == TensorElement(Q, 1, {(0,): two})


def test_counit_collapses_sweedler_leg():
    H4 = sweedler_h4(Q)
    for i in range(4):
        t = delta_power(H4, basis_vec(Q, 4, i), 2)
        left = tensor_apply_counit(H4.coalgebra, t, 0)
        assert left == TensorElement(Q, 1, {(i,): Q.one})


def test_group_like_and_primitive_detection():
    H4 = sweedler_h4(Q)
    assert group_like_basis_indices(H4) == [0, 1]
    g = basis_vec(Q, 4, 1)
    x = basis_vec(Q, 4, 2)
    assert is_group_like(H4, g)
    assert not is_group_like(H4, x)
    assert is_primitive(H4, x, g)
    assert not is_primitive(H4, g, g)


def test_cocommutativity():
    assert is_cocommutative(group_algebra(GroupTable.symmetric(3), Q))
    assert not is_cocommutative(taft(3, FieldCtx.cyclotomic(3)))


def test_opposite_hopf():
    H4 = sweedler_h4(Q)
    op = opposite_hopf(H4)
    assert check_hopf(op).ok
    # multiplication flipped: in H4, x*g = -g*x
    assert op.algebra.mul_basis(1, 2) == H4.algebra.mul_basis(2, 1)
    # the antipode of the opposite is the inverse of S
    assert op.antipode.compose(H4.antipode).cols == LinearMap.identity(Q, 4).cols


def test_opposite_requires_invertible_antipode():
    H = group_algebra(GroupTable.cyclic(2), Q)
    singular = LinearMap(Q, [[Q.one, Q.zero], [Q.one, Q.zero]])
    broken = HopfData(H.algebra, H.coalgebra, singular)
    with pytest.raises(ValueError):
        opposite_hopf(broken)


def test_antipode_is_morphism_into_opposite():
    H4 = sweedler_h4(Q)
    op4 = opposite_hopf(H4)
    assert is_algebra_morphism(H4.antipode, H4, op4).ok
    # S twists comultiplication, so it is not a coalgebra morphism here
    assert not is_coalgebra_morphism(H4.antipode, H4, op4).ok
    # on a cocommutative algebra S: H -> H^op is a full Hopf morphism
    H = group_algebra(GroupTable.symmetric(3), Q)
    assert is_hopf_morphism(H.antipode, H, opposite_hopf(H)).ok


def test_cobrace_compat():
    H = group_algebra(GroupTable.symmetric(3), Q)
    rep = check_cobrace_compat(H.algebra, H.coalgebra, H.coalgebra, H.antipode)
    assert rep.ok
    one = Q.one
    # second comultiplication sends g1 to g2 (x) g1: the first output slot
    # becomes g2 g1^-1 g2 on one side but g2 on the other
    bad = {i: {(i, i): one} for i in range(6)}
    bad[1] = {(2, 1): one}
    D2 = CoalgebraData(Q, 6, bad, list(H.coalgebra.counit))
    rep = check_cobrace_compat(H.algebra, H.coalgebra, D2, H.antipode)
    assert not rep.ok


def test_hopf_json_round_trip():
    H = taft(3, FieldCtx.cyclotomic(3))
    obj = hopf_to_json(H)
    back = hopf_from_json(obj)
    assert hopf_to_json(back) == obj
    assert json.dumps(hopf_to_json(back), sort_keys=True) == json.dumps(obj, sort_keys=True)
    assert check_hopf(back).ok


def test_dimension_cap():
    with pytest.raises(ValueError):
        AlgebraData(Q, MAX_DIM + 1, [Q.zero] * (MAX_DIM + 1), {})


def test_mul_vec_and_sparse_agree():
    H = group_algebra(GroupTable.cyclic(3), Q)
    a = [Q.from_int(2), Q.one, Q.zero]
    b = [Q.zero, Q.from_int(3), Q.one]
    dense = H.mul(a, b)
    sparse = H.algebra.mul_sparse(dense_to_sparse(a), dense_to_sparse(b))
    assert dense_to_sparse(dense) == sparse
