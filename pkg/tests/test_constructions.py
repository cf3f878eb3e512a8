"""Quantum binomials, the Sweedler and Taft algebras, the g,x family, automorphisms."""

import pytest

from hopfrb.constructions import (FamilyParams, antipode_closed_form, cauchy_check, family,
                                  family_aut_check, family_aut_report, family_aut_search,
                                  family_hypotheses, family_params_from_json, group_algebra,
                                  qbinom, qbinom_oracle, sweedler_h4, taft)
from hopfrb.hopf_core import LinearMap, check_hopf, dense_to_sparse, is_hopf_morphism
from hopfrb.rb_group import GroupTable
from hopfrb.scalars import FieldCtx

Q = FieldCtx.rationals()


def test_qbinom_frozen_oracle_values():
    # computed once with the skew-polynomial oracle, then frozen here
    assert qbinom_oracle(3, 1, Q.one) == Q.from_int(3)
    z3 = FieldCtx.cyclotomic(3)
    assert qbinom_oracle(2, 1, z3.zeta) == z3.one + z3.zeta
    assert qbinom(2, 1, Q.from_int(-1)).is_zero
    z4 = FieldCtx.cyclotomic(4)
    assert qbinom(4, 2, z4.zeta).is_zero
    # {6 choose 2} at -1 is the ordinary binomial C(3,1)
    assert qbinom(6, 2, Q.from_int(-1)) == Q.from_int(3)


def test_qbinom_matches_oracle():
    for ctx, zeta in ((Q, Q.one), (Q, Q.from_int(-1)),
                      (FieldCtx.cyclotomic(3), FieldCtx.cyclotomic(3).zeta),
                      (FieldCtx.prime(5), FieldCtx.prime(5).root_of_unity(4))):
        for p in range(0, 9):
            for q in range(0, p + 1):
                assert qbinom(p, q, zeta) == qbinom_oracle(p, q, zeta)


def test_qbinom_range_behaviour():
    with pytest.raises(ValueError):
        qbinom(3, 4, Q.one)
    with pytest.raises(ValueError):
        qbinom(3, -1, Q.one)
    assert qbinom_oracle(3, 4, Q.one).is_zero
    assert qbinom_oracle(3, -1, Q.one).is_zero


def test_qbinom_endpoint_and_ordinary_specialization():
    for p in range(7):
        assert qbinom(p, 0, Q.one) == Q.one
        assert qbinom(p, p, Q.one) == Q.one
    # at zeta = 1 the table is Pascal's triangle
    assert qbinom(6, 3, Q.one) == Q.from_int(20)


def test_cauchy_identity():
    assert cauchy_check(4, Q.from_int(-1)).ok
    z5 = FieldCtx.cyclotomic(5)
    assert cauchy_check(5, z5.zeta).ok
    f7 = FieldCtx.prime(7)
    assert cauchy_check(6, f7.root_of_unity(6)).ok


def test_group_algebra_antipode_is_inversion():
    G = GroupTable.symmetric(3)
    H = group_algebra(G, Q)
    for i in range(6):
        assert dense_to_sparse(H.antipode.cols[i]) == {G.inv[i]: Q.one}


def test_sweedler_h4_table_frozen():
    H = sweedler_h4(Q)
    one = Q.one
    assert H.labels == ["1", "g", "x", "gx"]
    assert H.algebra.mul_basis(1, 1) == {0: one}          # g^2 = 1
    assert H.algebra.mul_basis(2, 2) == {}                # x^2 = 0
    assert H.algebra.mul_basis(1, 2) == {3: one}          # g x = gx
    assert H.algebra.mul_basis(2, 1) == {3: -one}         # x g = -gx
    assert H.coalgebra.delta_basis(2) == {(2, 0): one, (1, 2): one}
    assert H.coalgebra.delta_basis(3) == {(3, 1): one, (0, 3): one}
    assert [str(c) for c in H.coalgebra.counit] == ["1", "1", "0", "0"]
    assert dense_to_sparse(H.antipode.cols[2]) == {3: -one}
    assert dense_to_sparse(H.antipode.cols[3]) == {2: one}
    assert check_hopf(H).ok


def test_sweedler_h4_rejects_characteristic_two():
    with pytest.raises(ValueError):
        sweedler_h4(FieldCtx.prime(2))


def test_family_reproduces_sweedler():
    params = FamilyParams(2, Q.from_int(-1), 2, None)
    H = family(params, Q)
    assert H.labels == ["g^0*x^0", "g^0*x^1", "g^1*x^0", "g^1*x^1"]
    H4 = sweedler_h4(Q)
    # family orders the basis 1, x, g, gx; permute into the Sweedler order
    perm = [0, 2, 1, 3]
    cols = [[Q.one if i == perm[j] else Q.zero for i in range(4)] for j in range(4)]
    iso = LinearMap(Q, cols)
    assert is_hopf_morphism(iso, H4, H).ok
    assert iso.is_invertible()


def test_family_params_validation():
    with pytest.raises(ValueError):
        FamilyParams(2, Q.from_int(-1), 0, None)
    with pytest.raises(ValueError) as exc:
        FamilyParams(2, Q.from_int(-1), None, None)
    assert "A_inf" in str(exc.value)
    with pytest.raises(ValueError):
        FamilyParams(3, Q.from_int(2), 3, None)  # 2 is not a root of unity in Q


def test_family_hypotheses_negative_cases():
    # l = 3 with zeta = -1: {3 choose 2} = 1 does not vanish
    rep = family_hypotheses(FamilyParams(2, Q.from_int(-1), 3, None))
    assert not rep.ok
    assert rep.identity == "top_binomials"
    assert rep.witness["q"] == 2
    # nonzero constant term
    rep = family_hypotheses(FamilyParams(2, Q.from_int(-1), 2, [Q.one]))
    assert rep.identity == "constant_term"
    # a degree breaking the grading is rejected at construction time already
    f3 = FieldCtx.prime(3)
    with pytest.raises(ValueError):
        FamilyParams(2, f3.from_int(-1), 6, [f3.zero, f3.zero, f3.zero, f3.one])
    # f = x^4 keeps the grading but {4 choose 2} = 2 != 0 mod 3 survives
    rep = family_hypotheses(FamilyParams(2, f3.from_int(-1), 6,
                                         [f3.zero, f3.zero, f3.zero, f3.zero, f3.one]))
    assert rep.identity == "f_term_binomials"


def test_delta_relation_is_authoritative():
    # m = 1, l = 2 over Q: every closed-form condition passes (the binomial
    # range is empty) but Delta(x)^2 keeps the cross term 2 x (x) x
    rep = family_hypotheses(FamilyParams(1, Q.one, 2, None))
    assert not rep.ok
    assert rep.identity == "delta_relation"
    for name in ("constant_term", "degree_congruence", "top_binomials",
                 "f_term_binomials"):
        assert rep.details[name]["status"] == "pass"


def test_family_f3_instances():
    f3 = FieldCtx.prime(3)
    flat = FamilyParams(2, f3.from_int(-1), 6, None)
    assert family_hypotheses(flat).ok
    H = family(flat, f3)
    assert H.dim == 12
    assert check_hopf(H).ok
    curled = FamilyParams(2, f3.from_int(-1), 6, [f3.zero, f3.zero, f3.from_int(4)])
    assert family_hypotheses(curled).ok
    H2 = family(curled, f3)
    assert check_hopf(H2).ok
    # x^6 = 4x^2 = x^2 in the table
    x_idx = flat.index(0, 1)
    top = H2.algebra.mul_basis(flat.index(0, 5), x_idx)
    assert top == {flat.index(0, 2): f3.one}


def test_family_errors():
    f3 = FieldCtx.prime(3)
    params = FamilyParams(2, f3.from_int(-1), 6, None)
    with pytest.raises(ValueError):
        family(params, Q)  # field mismatch
    with pytest.raises(ValueError) as exc:
        family(FamilyParams(2, Q.from_int(-1), 3, None), Q)
    assert "top_binomials" in str(exc.value)


def test_taft_instances():
    for m in (2, 3):
        ctx = FieldCtx.cyclotomic(m) if m > 2 else Q
        H = taft(m, ctx)
        assert H.dim == m * m
        assert check_hopf(H).ok


def antipode_matrix_matches_closed_form(params, H):
    ctx = H.ctx
    for p in range(params.m):
        for q in range(params.l):
            coeff, idx = antipode_closed_form(params, p, q)
            col = H.antipode.cols[params.index(p, q)]
            expect = {idx: coeff} if not coeff.is_zero else {}
            assert dense_to_sparse(col) == expect
    return True


def test_antipode_closed_form():
    z3 = FieldCtx.cyclotomic(3)
    params = FamilyParams(3, z3.zeta, 3, None)
    assert antipode_matrix_matches_closed_form(params, family(params, z3))
    f3 = FieldCtx.prime(3)
    curled = FamilyParams(2, f3.from_int(-1), 6, [f3.zero, f3.zero, f3.one])
    assert antipode_matrix_matches_closed_form(curled, family(curled, f3))
    with pytest.raises(ValueError):
        antipode_closed_form(params, 3, 0)


def test_aut_reports():
    params = FamilyParams(2, Q.from_int(-1), 2, None)
    good = family_aut_report(params, 1, [Q.zero, Q.from_int(5)])
    assert good.ok
    cond = good.details["theorem_conditions"]
    assert cond == {"k_coprime_to_m": True, "vanishing_binomials": True,
                    "k_squared_mod_d": True, "relation_divisibility": True}
    # psi(x) = 0 is not invertible
    zero = family_aut_report(params, 1, [Q.zero, Q.zero])
    assert not zero.ok
    assert not family_aut_check(params, 1, [Q.zero, Q.zero])
    with pytest.raises(ValueError):
        family_aut_report(params, 1, [Q.one, Q.one])  # c_0 with wrong congruence
    with pytest.raises(ValueError):
        family_aut_report(params, 1, [Q.zero])  # wrong length


def test_aut_taft3_lower_triangle():
    z3 = FieldCtx.cyclotomic(3)
    params = FamilyParams(3, z3.zeta, 3, None)
    bad = family_aut_report(params, 2, [z3.zero, z3.zero, z3.one])
    assert not bad.ok
    assert bad.details["theorem_conditions"]["vanishing_binomials"] is False
    hits = family_aut_search(params, [z3.zero, z3.one, z3.zeta])
    assert [(k, tuple(str(x) for x in c)) for k, c in hits] == [
        (1, ("0", "1", "0")), (1, ("0", "z3", "0"))]


def test_aut_search_h4_grid():
    params = FamilyParams(2, Q.from_int(-1), 2, None)
    grid = [Q.zero, Q.one, Q.from_int(-1), Q.from_int(2)]
    hits = family_aut_search(params, grid)
    assert all(k == 1 for k, _ in hits)
    assert sorted(str(c[1]) for _, c in hits) == ["-1", "1", "2"]
    assert family_aut_search(params, grid, jobs=2) == hits


def test_family_params_from_json():
    f3 = FieldCtx.prime(3)
    obj = {"m": 2, "zeta": "-1", "l": 6, "f": ["0", "0", "1"]}
    params = family_params_from_json(obj, f3)
    assert params.m == 2 and params.l == 6
    assert family_hypotheses(params).ok
    obj2 = {"m": 3, "zeta": {"order": 3}, "l": 3}
    z3 = FieldCtx.cyclotomic(3)
    params2 = family_params_from_json(obj2, z3)
    assert params2.zeta == z3.zeta
