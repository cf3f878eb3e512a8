"""Relative Rota-Baxter operators B: H -> G between Hopf algebras.

The data is a module-algebra action Phi of G on H plus the operator B;
checks cover the four defining conditions, the circle product a o b =
a_(1) * Phi_{B(a_(2))}(b), the derived Hopf algebra with antipode
S_B(a) = Phi_{S_G(B(a_(1)))}(S_H(a_(2))), the Hopf-brace identity, the
group-flavoured special case (adjoint action), and the exact-factorization
construction on group algebras.  All Sweedler legs are materialized as
sparse tensors and compared entry-wise.
"""

from __future__ import annotations

from .constructions import group_algebra
from .hopf_core import (AlgebraData, HopfData, LinearMap, TensorElement, basis_vec,
                        dense_to_sparse, group_like_basis_indices, is_coalgebra_morphism,
                        iterated_delta, opposite_hopf, sparse_to_dense, tensor_apply_delta,
                        tensor_apply_map, tensor_mul_legs, tensor_outer, tensor_permute,
                        vec_eq)
from .rb_group import GroupTable, is_subgroup
from .report import VerificationReport, merge_reports
from .scalars import FieldCtx


class ActionData:
    """Phi: G tensor H -> H by structure constants: phi[(g, h)] is the
    sparse expansion of Phi_{e_g}(e_h)."""

    __slots__ = ("ctx", "dim_g", "dim_h", "phi")

    def __init__(self, ctx: FieldCtx, dim_g: int, dim_h: int, phi: dict):
        self.ctx = ctx
        self.dim_g = dim_g
        self.dim_h = dim_h
        self.phi = {}
        for (g, h), terms in phi.items():
            assert 0 <= g < dim_g and 0 <= h < dim_h
            t = {k: c for k, c in terms.items() if not c.is_zero}
            if t:
                self.phi[(g, h)] = t

    def apply_basis(self, g: int, h: int) -> dict:
        return self.phi.get((g, h), {})

    def apply(self, gs: dict, hs: dict) -> dict:
        """Phi of a sparse G-vector on a sparse H-vector."""
        out: dict = {}
        for g, cg in gs.items():
            for h, ch in hs.items():
                c = cg * ch
                for k, ck in self.apply_basis(g, h).items():
                    out[k] = out.get(k, self.ctx.zero) + c * ck
        return {k: v for k, v in out.items() if not v.is_zero}

    def matrix_for(self, g: int) -> LinearMap:
        cols = [sparse_to_dense(self.ctx, self.dim_h, self.apply_basis(g, h))
                for h in range(self.dim_h)]
        return LinearMap(self.ctx, cols)

    def to_json(self) -> list:
        out = []
        for (g, h), terms in sorted(self.phi.items()):
            out.append({"g": g, "h": h,
                        "terms": [{"i": k, "c": c.to_json()} for k, c in sorted(terms.items())]})
        return out


def action_from_json(obj: list, ctx: FieldCtx, dim_g: int, dim_h: int) -> ActionData:
    from .scalars import scalar_from_json
    phi: dict = {}
    for row in obj:
        terms = {int(t["i"]): scalar_from_json(t["c"], ctx) for t in row["terms"]}
        phi[(int(row["g"]), int(row["h"]))] = terms
    return ActionData(ctx, dim_g, dim_h, phi)


class RelRBHopf:
    """The quadruple (H, G, Phi, B); nothing verified at construction."""

    __slots__ = ("H", "G", "phi", "B")

    def __init__(self, H: HopfData, G: HopfData, phi: ActionData, B: LinearMap):
        assert H.ctx == G.ctx == phi.ctx == B.ctx
        assert phi.dim_g == G.dim and phi.dim_h == H.dim
        assert B.domain_dim == H.dim and B.codomain_dim == G.dim
        self.H = H
        self.G = G
        self.phi = phi
        self.B = B


def _fail(identity: str, indices, lhs: str, rhs: str, checked: int,
          labels=None) -> VerificationReport:
    w = {"identity": identity, "indices": list(indices), "lhs": lhs, "rhs": rhs}
    if labels is not None:
        w["labels"] = labels
    return VerificationReport.failing(identity=identity, witness=w,
                                      identities_checked=checked)


def check_action(phi: ActionData, G: HopfData, H: HopfData) -> VerificationReport:
    """The four module-algebra laws, first failure witnessed."""
    assert phi.dim_g == G.dim and phi.dim_h == H.dim
    ctx = H.ctx
    checked = 0
    parts: dict = {}

    bad = None
    unit_g = dense_to_sparse(G.unit)
    for a in range(H.dim):
        checked += 1
        got = phi.apply(unit_g, {a: ctx.one})
        want = {a: ctx.one}
        if got != want:
            bad = _fail("unit_acts_trivially", (a,), str(got), str(want), checked,
                        [H.labels[a]])
            break
    parts["unit_acts_trivially"] = bad if bad is not None else VerificationReport.passing()

    bad = None
    for g in range(G.dim):
        for h in range(G.dim):
            gh = G.algebra.mul_basis(g, h)
            for a in range(H.dim):
                checked += 1
                lhs = phi.apply({g: ctx.one}, phi.apply_basis(h, a))
                rhs = phi.apply(gh, {a: ctx.one})
                if lhs != rhs:
                    bad = _fail("action_composition", (g, h, a), str(lhs), str(rhs), checked,
                                [G.labels[g], G.labels[h], H.labels[a]])
                    break
            if bad is not None:
                break
        if bad is not None:
            break
    parts["action_composition"] = bad if bad is not None else VerificationReport.passing()

    bad = None
    for g in range(G.dim):
        dg = G.coalgebra.delta_basis(g)
        for a in range(H.dim):
            for b in range(H.dim):
                checked += 1
                lhs = phi.apply({g: ctx.one}, H.algebra.mul_basis(a, b))
                rhs: dict = {}
                for (g1, g2), c in dg.items():
                    prod = H.algebra.mul_sparse(phi.apply_basis(g1, a),
                                                phi.apply_basis(g2, b))
                    for k, ck in prod.items():
                        rhs[k] = rhs.get(k, ctx.zero) + c * ck
                rhs = {k: v for k, v in rhs.items() if not v.is_zero}
                if lhs != rhs:
                    bad = _fail("action_multiplicative", (g, a, b), str(lhs), str(rhs),
                                checked, [G.labels[g], H.labels[a], H.labels[b]])
                    break
            if bad is not None:
                break
        if bad is not None:
            break
    parts["action_multiplicative"] = bad if bad is not None else VerificationReport.passing()

    bad = None
    unit_h = dense_to_sparse(H.unit)
    for g in range(G.dim):
        checked += 1
        lhs = phi.apply({g: ctx.one}, unit_h)
        eps = G.coalgebra.counit[g]
        want = {k: eps * c for k, c in unit_h.items() if not (eps * c).is_zero}
        if lhs != want:
            bad = _fail("action_on_unit", (g,), str(lhs), str(want), checked, [G.labels[g]])
            break
    parts["action_on_unit"] = bad if bad is not None else VerificationReport.passing()
    return merge_reports(parts, checked=checked)


def adjoint_action(H: HopfData) -> ActionData:
    """Phi_a(b) = a_(1) b S(a_(2)), the conjugation-style action of H on itself."""
    ctx = H.ctx
    phi: dict = {}
    for g in range(H.dim):
        dg = H.coalgebra.delta_basis(g)
        for h in range(H.dim):
            acc: dict = {}
            for (g1, g2), c in dg.items():
                sg2 = dense_to_sparse(H.antipode.cols[g2])
                prod = H.algebra.mul_sparse(H.algebra.mul_basis(g1, h), sg2)
                for k, ck in prod.items():
                    acc[k] = acc.get(k, ctx.zero) + c * ck
            phi[(g, h)] = acc
    return ActionData(ctx, H.dim, H.dim, phi)


def _action_join(phi: ActionData, t: TensorElement, gleg: int, hleg: int) -> TensorElement:
    """Consume legs (gleg, hleg) into Phi_{e_g}(e_h); the result sits where
    hleg was, with gleg removed."""
    assert gleg != hleg
    out = TensorElement(t.ctx, t.rank - 1)
    for tup, c in t.terms.items():
        for k, ck in phi.apply_basis(tup[gleg], tup[hleg]).items():
            lst = list(tup)
            lst[hleg] = k
            del lst[gleg]
            out.add_term(tuple(lst), c * ck)
    return out


def _delta_tensor(H: HopfData, i: int, legs: int) -> TensorElement:
    return iterated_delta(H.coalgebra, {i: H.ctx.one}, legs)


def _cond3_sides(data: RelRBHopf, a: int, b: int) -> tuple[TensorElement, TensorElement]:
    """Both sides of the compatibility equation for basis elements a, b."""
    H, G, phi, B = data.H, data.G, data.phi, data.B
    ctx = H.ctx
    # lhs: split a once, act on b, split the result, multiply a1 in
    t = _delta_tensor(H, a, 2)                       # [a1, a2]
    t = tensor_apply_map(B, t, 1)                    # [a1, B(a2)]
    bt = TensorElement(ctx, 1, {(b,): ctx.one})
    t = tensor_outer(t, bt)                          # [a1, B(a2), b]
    t = _action_join(phi, t, 1, 2)                   # [a1, u]
    t = tensor_apply_delta(H.coalgebra, t, 1)        # [a1, u1, u2]
    t = tensor_permute(t, [1, 0, 2])                 # [u1, a1, u2]
    lhs = tensor_mul_legs(H.algebra, t, 1)           # [u1, a1*u2]
    # rhs: split a thrice and b once
    t = tensor_outer(_delta_tensor(H, a, 3), _delta_tensor(H, b, 2))  # [a1,a2,a3,b1,b2]
    t = tensor_apply_map(B, t, 0)
    t = tensor_apply_map(B, t, 2)
    t = _action_join(phi, t, 0, 3)                   # [a2, Ba3, u, b2]
    t = _action_join(phi, t, 1, 3)                   # [a2, u, w]
    t = tensor_permute(t, [1, 0, 2])                 # [u, a2, w]
    rhs = tensor_mul_legs(H.algebra, t, 1)           # [u, a2*w]
    return lhs, rhs


def _cond3_remark_sides(data: RelRBHopf, a: int, b: int) -> tuple[TensorElement, TensorElement]:
    """The antipode-expanded form: Delta(Phi_{B(a)}(b)) against the four-leg
    expansion Phi_{B(a2)}(b1) (x) S(a1) * a3 * Phi_{B(a4)}(b2)."""
    H, phi, B = data.H, data.phi, data.B
    ctx = H.ctx
    u = phi.apply(dense_to_sparse(B.cols[a]), {b: ctx.one})
    lhs = TensorElement(ctx, 2)
    for i, c in u.items():
        for (u1, u2), ck in H.coalgebra.delta_basis(i).items():
            lhs.add_term((u1, u2), c * ck)
    t = tensor_outer(_delta_tensor(H, a, 4), _delta_tensor(H, b, 2))  # [a1..a4, b1, b2]
    t = tensor_apply_map(B, t, 1)
    t = tensor_apply_map(B, t, 3)
    t = tensor_apply_map(H.antipode, t, 0)           # [S(a1), B(a2), a3, B(a4), b1, b2]
    t = _action_join(phi, t, 1, 4)                   # [S(a1), a3, B(a4), u, b2]
    t = _action_join(phi, t, 2, 4)                   # [S(a1), a3, u, w]
    t = tensor_permute(t, [2, 0, 1, 3])              # [u, S(a1), a3, w]
    t = tensor_mul_legs(H.algebra, t, 1)
    rhs = tensor_mul_legs(H.algebra, t, 1)           # [u, S(a1)*a3*w]
    return lhs, rhs


def circle(data: RelRBHopf, a: list, b: list) -> list:
    """a o b = a_(1) * Phi_{B(a_(2))}(b)."""
    H, phi, B = data.H, data.phi, data.B
    ctx = H.ctx
    bs = dense_to_sparse(b)
    out: dict = {}
    for i, ai in enumerate(a):
        if ai.is_zero:
            continue
        for (a1, a2), c in H.coalgebra.delta_basis(i).items():
            u = phi.apply(dense_to_sparse(B.cols[a2]), bs)
            prod = H.algebra.mul_sparse({a1: ctx.one}, u)
            for k, ck in prod.items():
                out[k] = out.get(k, ctx.zero) + ai * c * ck
    return sparse_to_dense(ctx, H.dim, out)


def _circle_basis(data: RelRBHopf, i: int, j: int) -> dict:
    ctx = data.H.ctx
    return dense_to_sparse(circle(data, basis_vec(ctx, data.H.dim, i),
                                  basis_vec(ctx, data.H.dim, j)))


def check_rrbo(data: RelRBHopf, full: bool = False) -> VerificationReport:
    """Conditions 1-4 in order, stopping at the first failure unless full.

    Condition 3 is evaluated in two equivalent forms (the compatibility
    equation and its antipode-expanded variant) and the verdicts must agree.
    """
    H, G, phi, B = data.H, data.G, data.phi, data.B
    ctx = H.ctx
    parts: dict = {}
    checked = 0

    parts["condition_1_coalgebra"] = is_coalgebra_morphism(B, H, G)
    checked += parts["condition_1_coalgebra"].stats.get("identities_checked", 0)
    checked += 1
    parts["condition_1_unit"] = (
        VerificationReport.passing() if vec_eq(B.apply(H.unit), G.unit)
        else _fail("condition_1_unit", (), "B(1)", "1", 1))

    def done() -> bool:
        return not full and any(not p.ok for p in parts.values())

    if not done():
        parts["condition_2_action"] = check_action(phi, G, H)
        checked += parts["condition_2_action"].stats.get("identities_checked", 0)

    if not done():
        bad3 = bad_r = bad_agree = None
        for a in range(H.dim):
            for b in range(H.dim):
                checked += 1
                lhs, rhs = _cond3_sides(data, a, b)
                hold = lhs == rhs
                lhs_r, rhs_r = _cond3_remark_sides(data, a, b)
                hold_r = lhs_r == rhs_r
                if not hold and bad3 is None:
                    bad3 = _fail("condition_3_compat", (a, b), lhs.to_str(H.labels),
                                 rhs.to_str(H.labels), checked, [H.labels[a], H.labels[b]])
                if not hold_r and bad_r is None:
                    bad_r = _fail("condition_3_remark", (a, b), lhs_r.to_str(H.labels),
                                  rhs_r.to_str(H.labels), checked,
                                  [H.labels[a], H.labels[b]])
                if hold != hold_r and bad_agree is None:
                    bad_agree = _fail("condition_3_agreement", (a, b),
                                      f"compat {hold}", f"remark {hold_r}", checked,
                                      [H.labels[a], H.labels[b]])
        parts["condition_3_compat"] = bad3 if bad3 is not None else VerificationReport.passing()
        parts["condition_3_remark"] = bad_r if bad_r is not None else VerificationReport.passing()
        parts["condition_3_agreement"] = (
            bad_agree if bad_agree is not None else VerificationReport.passing())

    if not done():
        bad = None
        for a in range(H.dim):
            ba = dense_to_sparse(B.cols[a])
            for b in range(H.dim):
                checked += 1
                lhs = G.algebra.mul_sparse(ba, dense_to_sparse(B.cols[b]))
                rhs_vec = B.apply(sparse_to_dense(ctx, H.dim, _circle_basis(data, a, b)))
                rhs = dense_to_sparse(rhs_vec)
                if lhs != rhs:
                    bad = _fail("condition_4_rb", (a, b),
                                str({G.labels[k]: str(c) for k, c in lhs.items()}),
                                str({G.labels[k]: str(c) for k, c in rhs.items()}),
                                checked, [H.labels[a], H.labels[b]])
                    break
            if bad is not None:
                break
        parts["condition_4_rb"] = bad if bad is not None else VerificationReport.passing()

    return merge_reports(parts, checked=checked)


def derived_hopf(data: RelRBHopf) -> HopfData:
    """(H, o, Delta_H, eps_H, S_B): the Hopf algebra induced by the operator."""
    rep = check_rrbo(data)
    if not rep.ok:
        raise ValueError(f"not a relative Rota-Baxter operator: fails {rep.identity}")
    H, G, phi, B = data.H, data.G, data.phi, data.B
    ctx = H.ctx
    n = H.dim
    mult = {(i, j): _circle_basis(data, i, j) for i in range(n) for j in range(n)}
    alg = AlgebraData(ctx, n, H.unit, mult, H.labels)
    cols = []
    for a in range(n):
        acc: dict = {}
        for (a1, a2), c in H.coalgebra.delta_basis(a).items():
            sg = dense_to_sparse(G.antipode.apply(B.cols[a1]))
            sh = dense_to_sparse(H.antipode.cols[a2])
            for k, ck in phi.apply(sg, sh).items():
                acc[k] = acc.get(k, ctx.zero) + c * ck
        cols.append(sparse_to_dense(ctx, n, acc))
    sb = LinearMap(ctx, cols)
    return HopfData(alg, H.coalgebra, sb)


def check_hopf_brace(data: RelRBHopf) -> VerificationReport:
    """a o (b*c) = (a_(1) o b) * S_H(a_(2)) * (a_(3) o c) over all basis
    triples, plus invertibility of Phi_g for each group-like g of G."""
    H, G, phi = data.H, data.G, data.phi
    ctx = H.ctx
    n = H.dim
    checked = 0
    parts: dict = {}

    circ = {(i, j): _circle_basis(data, i, j) for i in range(n) for j in range(n)}
    bad = None
    for a in range(n):
        d2 = iterated_delta(H.coalgebra, {a: ctx.one}, 3)
        for b in range(n):
            for c in range(n):
                checked += 1
                bc = H.algebra.mul_basis(b, c)
                lhs_vec = circle(data, basis_vec(ctx, n, a),
                                 sparse_to_dense(ctx, n, bc))
                lhs = dense_to_sparse(lhs_vec)
                rhs: dict = {}
                for tup, ct in d2.terms.items():
                    a1, a2, a3 = tup
                    sa2 = dense_to_sparse(H.antipode.cols[a2])
                    part = H.algebra.mul_sparse(circ[(a1, b)], sa2)
                    part = H.algebra.mul_sparse(part, circ[(a3, c)])
                    for k, ck in part.items():
                        rhs[k] = rhs.get(k, ctx.zero) + ct * ck
                rhs = {k: v for k, v in rhs.items() if not v.is_zero}
                if lhs != rhs:
                    bad = _fail("hopf_brace", (a, b, c),
                                str({H.labels[k]: str(v) for k, v in lhs.items()}),
                                str({H.labels[k]: str(v) for k, v in rhs.items()}),
                                checked, [H.labels[a], H.labels[b], H.labels[c]])
                    break
            if bad is not None:
                break
        if bad is not None:
            break
    parts["hopf_brace"] = bad if bad is not None else VerificationReport.passing()

    grouplikes = group_like_basis_indices(G)
    inv_detail = {}
    bad = None
    for g in grouplikes:
        checked += 1
        ok = phi.matrix_for(g).is_invertible()
        inv_detail[G.labels[g]] = ok
        if not ok and bad is None:
            bad = _fail("phi_grouplike_invertible", (g,), "singular", "invertible",
                        checked, [G.labels[g]])
    parts["phi_grouplike_invertible"] = bad if bad is not None else VerificationReport.passing()
    out = merge_reports(parts, checked=checked)
    out.details["phi_invertibility"] = inv_detail
    return out


# ---------------------------------------------------------------------------
# constructions


def exact_factorization_rrb(G: GroupTable, A, L, ctx: FieldCtx) -> RelRBHopf:
    """From a group factoring uniquely as A*L: H = k[G], the G-side is
    k[L]^op, Phi_l(h) = l^-1 h l, B(a l) = l."""
    A = sorted(set(A))
    L = sorted(set(L))
    if not is_subgroup(G, A):
        raise ValueError("A is not a subgroup")
    if not is_subgroup(G, L):
        raise ValueError("L is not a subgroup")
    factor: dict = {}
    for a in A:
        for l in L:
            g = G.table[a][l]
            factor.setdefault(g, []).append((a, l))
    for g in range(G.n):
        fs = factor.get(g, [])
        if len(fs) != 1:
            raise ValueError(f"factorization not exact: element {g} has "
                             f"{len(fs)} factorizations {fs}")
    H = group_algebra(G, ctx)
    lpos = {l: i for i, l in enumerate(L)}
    sub = GroupTable([[lpos[G.table[a][b]] for b in L] for a in L], name="L")
    Gside = opposite_hopf(group_algebra(sub, ctx))
    phi: dict = {}
    for i, l in enumerate(L):
        linv = G.inv[l]
        for h in range(G.n):
            phi[(i, h)] = {G.table[G.table[linv][h]][l]: ctx.one}
    act = ActionData(ctx, len(L), G.n, phi)
    cols = [basis_vec(ctx, len(L), lpos[factor[g][0][1]]) for g in range(G.n)]
    B = LinearMap(ctx, cols)
    return RelRBHopf(H, Gside, act, B)


def _grbo_display_sides(data: RelRBHopf, a: int, b: int):
    """The one-line associativity condition for the adjoint-action case.

    The compact form nests Sweedler subscripts inside operator arguments;
    both sides are evaluated here as rank-7 tensors with the inner legs
    flattened into one iterated coproduct."""
    H, B = data.H, data.B
    SB = H.antipode.compose(B)
    t0 = tensor_outer(_delta_tensor(H, a, 5), _delta_tensor(H, b, 2))  # [t1..t5, b1, b2]
    # lhs: B(t2) b1 S(B(t5)) (x) t1 B(t3) b2 S(B(t4))
    t = tensor_apply_map(B, t0, 1)
    t = tensor_apply_map(B, t, 2)
    t = tensor_apply_map(SB, t, 3)
    t = tensor_apply_map(SB, t, 4)
    t = tensor_permute(t, [1, 5, 4, 0, 2, 6, 3])
    for _ in range(2):
        t = tensor_mul_legs(H.algebra, t, 0)
    for _ in range(3):
        t = tensor_mul_legs(H.algebra, t, 1)
    lhs = t
    # rhs: B(t1) b1 S(B(t2)) (x) t3 B(t4) b2 S(B(t5))
    t = tensor_apply_map(B, t0, 0)
    t = tensor_apply_map(SB, t, 1)
    t = tensor_apply_map(B, t, 3)
    t = tensor_apply_map(SB, t, 4)
    t = tensor_permute(t, [0, 5, 1, 2, 3, 6, 4])
    for _ in range(2):
        t = tensor_mul_legs(H.algebra, t, 0)
    for _ in range(3):
        t = tensor_mul_legs(H.algebra, t, 1)
    return lhs, t


def grbo_check(H: HopfData, B: LinearMap) -> VerificationReport:
    """B: H -> H against the adjoint action Phi_a(b) = a_(1) b S(a_(2)),
    plus the circle-associativity display specific to this case."""
    data = RelRBHopf(H, H, adjoint_action(H), B)
    parts = {"rrbo": check_rrbo(data)}
    checked = parts["rrbo"].stats.get("identities_checked", 0)
    bad = None
    for a in range(H.dim):
        for b in range(H.dim):
            checked += 1
            lhs, rhs = _grbo_display_sides(data, a, b)
            if lhs != rhs:
                bad = _fail("associativity_display", (a, b), lhs.to_str(H.labels),
                            rhs.to_str(H.labels), checked, [H.labels[a], H.labels[b]])
                break
        if bad is not None:
            break
    parts["associativity_display"] = bad if bad is not None else VerificationReport.passing()
    return merge_reports(parts, checked=checked)


def hrbo_action(H: HopfData) -> ActionData:
    """Phi_a(b) = S(a_(1)) b a_(2), an action of H^op on H."""
    ctx = H.ctx
    phi: dict = {}
    for g in range(H.dim):
        for h in range(H.dim):
            acc: dict = {}
            for (g1, g2), c in H.coalgebra.delta_basis(g).items():
                sg1 = dense_to_sparse(H.antipode.cols[g1])
                prod = H.algebra.mul_sparse(H.algebra.mul_sparse(sg1, {h: ctx.one}),
                                            {g2: ctx.one})
                for k, ck in prod.items():
                    acc[k] = acc.get(k, ctx.zero) + c * ck
            phi[(g, h)] = acc
    return ActionData(ctx, H.dim, H.dim, phi)


def _hrbo_display_sides(data: RelRBHopf, a: int, b: int):
    """The one-line compatibility condition of the H^op variant: b stays
    unsplit, the left side uses three a-legs and the right side five."""
    H, B = data.H, data.B
    ctx = H.ctx
    SB = H.antipode.compose(B)
    bt = TensorElement(ctx, 1, {(b,): ctx.one})
    # lhs: S(B(a2)) b B(a3) (x) S(B(a1))
    t = tensor_outer(_delta_tensor(H, a, 3), bt)     # [a1, a2, a3, b]
    t = tensor_apply_map(SB, t, 0)
    t = tensor_apply_map(SB, t, 1)
    t = tensor_apply_map(B, t, 2)
    t = tensor_permute(t, [1, 3, 2, 0])              # [SB(a2), b, B(a3), SB(a1)]
    t = tensor_mul_legs(H.algebra, t, 0)
    lhs = tensor_mul_legs(H.algebra, t, 0)
    # rhs: S(B(a2)) b B(a3) (x) S(a1) a4 S(B(a5))
    t = tensor_outer(_delta_tensor(H, a, 5), bt)     # [a1..a5, b]
    t = tensor_apply_map(H.antipode, t, 0)
    t = tensor_apply_map(SB, t, 1)
    t = tensor_apply_map(B, t, 2)
    t = tensor_apply_map(SB, t, 4)
    t = tensor_permute(t, [1, 5, 2, 0, 3, 4])        # [SB(a2), b, B(a3), S(a1), a4, SB(a5)]
    t = tensor_mul_legs(H.algebra, t, 0)
    t = tensor_mul_legs(H.algebra, t, 0)
    t = tensor_mul_legs(H.algebra, t, 1)
    rhs = tensor_mul_legs(H.algebra, t, 1)
    return lhs, rhs


def hrbo_check(H: HopfData, B: LinearMap) -> VerificationReport:
    """B: H -> H^op with Phi_a(b) = S(a_(1)) b a_(2): reports the one-line
    condition-3 form and the full relative check side by side."""
    data = RelRBHopf(H, opposite_hopf(H), hrbo_action(H), B)
    checked = 0
    bad = None
    for a in range(H.dim):
        for b in range(H.dim):
            checked += 1
            lhs, rhs = _hrbo_display_sides(data, a, b)
            if lhs != rhs:
                bad = _fail("display_condition_3", (a, b), lhs.to_str(H.labels),
                            rhs.to_str(H.labels), checked, [H.labels[a], H.labels[b]])
                break
        if bad is not None:
            break
    parts = {"display_condition_3": bad if bad is not None else VerificationReport.passing(),
             "rrbo": check_rrbo(data, full=True)}
    checked += parts["rrbo"].stats.get("identities_checked", 0)
    return merge_reports(parts, checked=checked)


# ---------------------------------------------------------------------------
# serialization


def rrb_to_json(data: RelRBHopf) -> dict:
    from .hopf_core import hopf_to_json
    return {"H": hopf_to_json(data.H), "G": hopf_to_json(data.G),
            "phi": data.phi.to_json(), "B": data.B.to_json()}


def rrb_from_json(obj: dict, base_dir: str = ".") -> RelRBHopf:
    """The H and G entries may be inline Hopf data or a path string."""
    import json
    import os

    from .hopf_core import hopf_from_json

    def load(side):
        if isinstance(side, str):
            with open(os.path.join(base_dir, side)) as fh:
                return hopf_from_json(json.load(fh))
        return hopf_from_json(side)

    H = load(obj["H"])
    G = load(obj["G"])
    if H.ctx != G.ctx:
        raise ValueError("H and G use different scalar fields")
    act = action_from_json(obj["phi"], H.ctx, G.dim, H.dim)
    B = LinearMap.from_json(obj["B"], H.ctx)
    return RelRBHopf(H, G, act, B)
