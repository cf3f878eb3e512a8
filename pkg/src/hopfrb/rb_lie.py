"""Relative Rota-Baxter operators of weight lambda on finite-dimensional
Lie algebras given by structure constants.

The relative identity for B: h -> g under an action phi: g -> Der(h) is

    [B(u), B(v)]_g = B( phi(B(u))v - phi(B(v))u + lambda*[u,v]_h )

and rescaling the bracket of h by lambda with phi = ad reduces it to the
plain weight-lambda Rota-Baxter identity on one algebra.
"""

from __future__ import annotations

from .hopf_core import LinearMap, basis_vec, dense_to_sparse, sparse_to_dense
from .report import VerificationReport, merge_reports
from .scalars import FieldCtx, Scalar, parse_field, scalar_from_json


class LieData:
    """Lie algebra by sparse brackets: brackets[(i, j)] expands [e_i, e_j].

    A missing (j, i) entry is filled in as the negative of (i, j); nothing
    else is verified at construction time, check_lie does that.
    """

    __slots__ = ("ctx", "dim", "labels", "brackets")

    def __init__(self, ctx: FieldCtx, dim: int, brackets: dict,
                 labels: list[str] | None = None):
        assert dim >= 1
        self.ctx = ctx
        self.dim = dim
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(dim)]
        assert len(self.labels) == dim
        self.brackets = {}
        for (i, j), terms in brackets.items():
            assert 0 <= i < dim and 0 <= j < dim
            t = {k: c for k, c in terms.items() if not c.is_zero}
            if t:
                self.brackets[(i, j)] = t
        for (i, j), terms in list(self.brackets.items()):
            if (j, i) not in self.brackets and i != j:
                self.brackets[(j, i)] = {k: -c for k, c in terms.items()}

    def bracket_basis(self, i: int, j: int) -> dict:
        return self.brackets.get((i, j), {})

    def bracket_sparse(self, sa: dict, sb: dict) -> dict:
        out: dict = {}
        for i, ca in sa.items():
            for j, cb in sb.items():
                c = ca * cb
                for k, ck in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, self.ctx.zero) + c * ck
        return {k: v for k, v in out.items() if not v.is_zero}

    def bracket_vec(self, a: list, b: list) -> list:
        s = self.bracket_sparse(dense_to_sparse(a), dense_to_sparse(b))
        return sparse_to_dense(self.ctx, self.dim, s)


def _fail(identity: str, indices, lhs: str, rhs: str, checked: int,
          labels=None) -> VerificationReport:
    w = {"identity": identity, "indices": list(indices), "lhs": lhs, "rhs": rhs}
    if labels is not None:
        w["labels"] = labels
    return VerificationReport.failing(identity=identity, witness=w,
                                      identities_checked=checked)


def _sp_str(L: LieData, s: dict) -> str:
    if not s:
        return "0"
    return " + ".join(f"({s[k]})*{L.labels[k]}" for k in sorted(s))


def check_lie(L: LieData) -> VerificationReport:
    """Antisymmetry (including [u,u] = 0) and the Jacobi identity."""
    ctx = L.ctx
    checked = 0
    parts: dict = {}

    bad = None
    for i in range(L.dim):
        for j in range(i, L.dim):
            checked += 1
            fwd = L.bracket_basis(i, j)
            if i == j:
                if fwd:
                    bad = _fail("antisymmetry", (i, i), _sp_str(L, fwd), "0", checked,
                                [L.labels[i]])
                    break
                continue
            back = L.bracket_basis(j, i)
            tot = dict(fwd)
            for k, c in back.items():
                tot[k] = tot.get(k, ctx.zero) + c
            if any(not c.is_zero for c in tot.values()):
                bad = _fail("antisymmetry", (i, j), _sp_str(L, fwd),
                            "-(" + _sp_str(L, back) + ")", checked,
                            [L.labels[i], L.labels[j]])
                break
        if bad is not None:
            break
    parts["antisymmetry"] = bad if bad is not None else VerificationReport.passing()

    bad = None
    for i in range(L.dim):
        for j in range(L.dim):
            for k in range(L.dim):
                checked += 1
                acc: dict = {}
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = L.bracket_basis(a, b)
                    for t, ct in L.bracket_sparse(inner, {c: ctx.one}).items():
                        acc[t] = acc.get(t, ctx.zero) + ct
                if any(not v.is_zero for v in acc.values()):
                    bad = _fail("jacobi", (i, j, k), _sp_str(L, acc), "0", checked,
                                [L.labels[i], L.labels[j], L.labels[k]])
                    break
            if bad is not None:
                break
        if bad is not None:
            break
    parts["jacobi"] = bad if bad is not None else VerificationReport.passing()
    return merge_reports(parts, checked=checked)


class DerivationAction:
    """phi: g -> Der(h) by one matrix per g-basis element."""

    __slots__ = ("ctx", "dim_g", "dim_h", "mats")

    def __init__(self, ctx: FieldCtx, mats: list[LinearMap]):
        assert mats
        self.ctx = ctx
        self.dim_g = len(mats)
        self.dim_h = mats[0].domain_dim
        for m in mats:
            assert m.ctx == ctx
            assert m.domain_dim == m.codomain_dim == self.dim_h
        self.mats = list(mats)

    def apply(self, gs: dict, hv: list) -> list:
        """phi(u)(v) for a sparse u in g and a dense v in h."""
        out = [self.ctx.zero] * self.dim_h
        for i, c in gs.items():
            img = self.mats[i].apply(hv)
            out = [a + c * b for a, b in zip(out, img)]
        return out


def adjoint_lie_action(L: LieData) -> DerivationAction:
    """phi = ad: phi(u)(v) = [u, v]."""
    mats = []
    for i in range(L.dim):
        cols = [sparse_to_dense(L.ctx, L.dim, L.bracket_basis(i, j))
                for j in range(L.dim)]
        mats.append(LinearMap(L.ctx, cols))
    return DerivationAction(L.ctx, mats)


def check_derivation_action(phi: DerivationAction, g: LieData, h: LieData) -> VerificationReport:
    """Each phi(e_i) derives the bracket of h, and phi is a Lie morphism
    into the commutator bracket on endomorphisms."""
    assert phi.dim_g == g.dim and phi.dim_h == h.dim
    ctx = g.ctx
    checked = 0
    parts: dict = {}

    bad = None
    for i in range(g.dim):
        m = phi.mats[i]
        for u in range(h.dim):
            for v in range(h.dim):
                checked += 1
                lhs = m.apply(sparse_to_dense(ctx, h.dim, h.bracket_basis(u, v)))
                rhs = [a + b for a, b in zip(
                    h.bracket_vec(m.cols[u], basis_vec(ctx, h.dim, v)),
                    h.bracket_vec(basis_vec(ctx, h.dim, u), m.cols[v]))]
                if lhs != rhs:
                    bad = _fail("derivation", (i, u, v), _sp_str(h, dense_to_sparse(lhs)),
                                _sp_str(h, dense_to_sparse(rhs)), checked,
                                [g.labels[i], h.labels[u], h.labels[v]])
                    break
            if bad is not None:
                break
        if bad is not None:
            break
    parts["derivation"] = bad if bad is not None else VerificationReport.passing()

    bad = None
    for i in range(g.dim):
        for j in range(g.dim):
            checked += 1
            mi, mj = phi.mats[i], phi.mats[j]
            comm_cols = [[a - b for a, b in zip(mi.apply(mj.cols[u]), mj.apply(mi.cols[u]))]
                         for u in range(h.dim)]
            lhs_cols = [[ctx.zero] * h.dim for _ in range(h.dim)]
            for k, c in g.bracket_basis(i, j).items():
                for u in range(h.dim):
                    lhs_cols[u] = [a + c * b for a, b in zip(lhs_cols[u], phi.mats[k].cols[u])]
            if lhs_cols != comm_cols:
                bad = _fail("lie_morphism", (i, j), "phi([u,v])", "[phi(u),phi(v)]",
                            checked, [g.labels[i], g.labels[j]])
                break
        if bad is not None:
            break
    parts["lie_morphism"] = bad if bad is not None else VerificationReport.passing()
    return merge_reports(parts, checked=checked)


def check_relative_rb_lie(g: LieData, h: LieData, phi: DerivationAction,
                          B: LinearMap, lam: Scalar) -> VerificationReport:
    """[B(u), B(v)]_g = B(phi(B(u))v - phi(B(v))u + lambda*[u,v]_h) on basis pairs."""
    act = check_derivation_action(phi, g, h)
    if not act.ok:
        raise ValueError(f"invalid derivation action: fails {act.identity}")
    assert B.domain_dim == h.dim and B.codomain_dim == g.dim
    ctx = g.ctx
    checked = 0
    for u in range(h.dim):
        bu = B.cols[u]
        for v in range(h.dim):
            checked += 1
            bv = B.cols[v]
            lhs = g.bracket_vec(bu, bv)
            arg = phi.apply(dense_to_sparse(bu), basis_vec(ctx, h.dim, v))
            sub = phi.apply(dense_to_sparse(bv), basis_vec(ctx, h.dim, u))
            arg = [a - b for a, b in zip(arg, sub)]
            lie = h.bracket_basis(u, v)
            arg = [a + lam * c for a, c in zip(arg, sparse_to_dense(ctx, h.dim, lie))]
            rhs = B.apply(arg)
            if lhs != rhs:
                return _fail("relative_rb_lie", (u, v), _sp_str(g, dense_to_sparse(lhs)),
                             _sp_str(g, dense_to_sparse(rhs)), checked,
                             [h.labels[u], h.labels[v]])
    return VerificationReport.passing(identities_checked=checked)


def rescale_bracket(L: LieData, lam: Scalar) -> LieData:
    scaled = {ij: {k: lam * c for k, c in terms.items()}
              for ij, terms in L.brackets.items()}
    return LieData(L.ctx, L.dim, scaled, L.labels)


def check_rb_lie_weight(g: LieData, B: LinearMap, lam: Scalar) -> VerificationReport:
    """[B(u), B(v)] = B([B(u),v] - [B(v),u] + lambda*[u,v]) on basis pairs.

    The verdict is asserted to agree with the relative form over the
    lambda-rescaled bracket and the adjoint action.
    """
    assert B.domain_dim == B.codomain_dim == g.dim
    ctx = g.ctx
    checked = 0
    out = None
    for u in range(g.dim):
        bu = B.cols[u]
        for v in range(g.dim):
            checked += 1
            bv = B.cols[v]
            lhs = g.bracket_vec(bu, bv)
            arg = g.bracket_vec(bu, basis_vec(ctx, g.dim, v))
            sub = g.bracket_vec(bv, basis_vec(ctx, g.dim, u))
            lie = sparse_to_dense(ctx, g.dim, g.bracket_basis(u, v))
            arg = [a - b + lam * c for a, b, c in zip(arg, sub, lie)]
            rhs = B.apply(arg)
            if lhs != rhs:
                out = _fail("rb_lie_weight", (u, v), _sp_str(g, dense_to_sparse(lhs)),
                            _sp_str(g, dense_to_sparse(rhs)), checked,
                            [g.labels[u], g.labels[v]])
                break
        if out is not None:
            break
    if out is None:
        out = VerificationReport.passing(identities_checked=checked)
    rel = check_relative_rb_lie(g, rescale_bracket(g, lam), adjoint_lie_action(g),
                                B, ctx.one)
    assert rel.ok == out.ok, "weight form disagrees with the relative form"
    return out


def sl2(ctx: FieldCtx) -> LieData:
    """Basis e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    two = ctx.from_int(2)
    brackets = {(1, 0): {0: two}, (1, 2): {2: -two}, (0, 2): {1: ctx.one}}
    return LieData(ctx, 3, brackets, ["e", "h", "f"])


def lie_to_json(L: LieData) -> dict:
    rows = []
    for (i, j), terms in sorted(L.brackets.items()):
        rows.append({"i": i, "j": j,
                     "terms": [{"k": k, "c": c.to_json()} for k, c in sorted(terms.items())]})
    return {"dim": L.dim, "field": L.ctx.name(), "brackets": rows, "labels": L.labels}


def lie_from_json(obj: dict) -> LieData:
    ctx = parse_field(obj["field"])
    dim = int(obj["dim"])
    brackets: dict = {}
    for row in obj["brackets"]:
        terms = {int(t["k"]): scalar_from_json(t["c"], ctx) for t in row["terms"]}
        brackets[(int(row["i"]), int(row["j"]))] = terms
    return LieData(ctx, dim, brackets, obj.get("labels"))
