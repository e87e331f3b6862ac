"""2-representations of Lie 2-algebras: validation, the adjoint, the
associated honest representation, and the semidirect product."""

from .numeric import Matrix, Q0, Q1
from .liealg import LieAlgebra, Representation, _unit
from .lie2 import (CrossedModuleAlg, TwoVectorSpace, validate_crossed_module,
                   lie2_arrows, _arrows_unchecked)


class TwoRep:
    """A morphism of Lie 2-algebras into gl(phi).

    rho1 assigns to each basis vector of g a map V -> W; rho0_w and
    rho0_v are the commuting representations of h on W and on V.
    """

    def __init__(self, source, target, rho1, rho0_w, rho0_v):
        self.source = source
        self.target = target
        assert len(rho1) == source.g.dim
        for m in rho1:
            assert m.rows == target.dim_w and m.cols == target.dim_v
        self.rho1 = list(rho1)
        assert rho0_w.algebra == source.h and rho0_w.space_dim == target.dim_w
        assert rho0_v.algebra == source.h and rho0_v.space_dim == target.dim_v
        self.rho0_w = rho0_w
        self.rho0_v = rho0_v

    def rho1_of(self, xvec):
        out = Matrix.zero(self.target.dim_w, self.target.dim_v)
        for c, m in zip(xvec, self.rho1):
            if c != 0:
                out = out + m.scale(c)
        return out

    @staticmethod
    def trivial(source, target):
        zero = Matrix.zero(target.dim_w, target.dim_v)
        return TwoRep(source, target,
                      [zero for _ in range(source.g.dim)],
                      Representation.trivial(source.h, target.dim_w),
                      Representation.trivial(source.h, target.dim_v))


def validate_two_rep(r):
    """Per-axiom violation list with basis witnesses; empty means valid."""
    bad = []
    x, t = r.source, r.target
    phi = t.phi
    from .liealg import validate_representation
    for (i, j) in validate_representation(r.rho0_w):
        bad.append(("rho0_w_homomorphism", (i, j)))
    for (i, j) in validate_representation(r.rho0_v):
        bad.append(("rho0_v_homomorphism", (i, j)))
    for b in range(x.h.dim):
        if not (phi * r.rho0_w.mats[b] - r.rho0_v.mats[b] * phi).is_zero():
            bad.append(("object_compatibility", (b,)))
    for a in range(x.g.dim):
        mu_a = x.mu.apply(_unit(x.g.dim, a))
        if not (r.rho0_v.act(mu_a) - phi * r.rho1[a]).is_zero():
            bad.append(("delta_rho1_V", (a,)))
        if not (r.rho0_w.act(mu_a) - r.rho1[a] * phi).is_zero():
            bad.append(("delta_rho1_W", (a,)))
    for a in range(x.g.dim):
        for b in range(a + 1, x.g.dim):
            lhs = r.rho1_of(x.g.basis_bracket(a, b))
            rhs = (r.rho1[a] * phi * r.rho1[b]
                   - r.rho1[b] * phi * r.rho1[a])
            if not (lhs - rhs).is_zero():
                bad.append(("rho1_homomorphism", (a, b)))
    for b in range(x.h.dim):
        for a in range(x.g.dim):
            lhs = r.rho1_of(x.action.mats[b].apply(_unit(x.g.dim, a)))
            rhs = (r.rho0_w.mats[b] * r.rho1[a]
                   - r.rho1[a] * r.rho0_v.mats[b])
            if not (lhs - rhs).is_zero():
                bad.append(("action_compatibility", (b, a)))
    return bad


def adjoint_rep(x):
    """The adjoint 2-representation of a Lie 2-algebra on mu: g -> h.

    ad_1(x)(u) = -L_u x, ad_0^1(y) = L_y on g, ad_0^0(y) = [y, -] on h.
    """
    assert not validate_crossed_module(x), "invalid crossed module"
    dg, dh = x.g.dim, x.h.dim
    target = TwoVectorSpace(dg, dh, x.mu)
    rho1 = []
    for a in range(dg):
        ea = _unit(dg, a)
        cols = [[-c for c in x.action.mats[b].apply(ea)] for b in range(dh)]
        rho1.append(Matrix(dg, dh, [[cols[j][i] for j in range(dh)]
                                    for i in range(dg)]))
    rho0_w = Representation(x.h, dg, [x.action.mats[b] for b in range(dh)])
    rho0_v = Representation(x.h, dh, [x.h.ad(_unit(dh, b)) for b in range(dh)])
    return TwoRep(x, target, rho1, rho0_w, rho0_v)


def bar_rho(r):
    """The honest representation of g (+)_L h on W (+) V induced by r:
    (x, y) -> [[rho0^1(y + mu x), rho1(x)], [0, rho0^0(y)]]."""
    assert not validate_two_rep(r), "invalid 2-representation"
    x, t = r.source, r.target
    arrows = lie2_arrows(x)
    dw, dv = t.dim_w, t.dim_v
    mats = []
    for i in range(arrows.dim):
        if i < x.g.dim:
            xv = _unit(x.g.dim, i)
            yv = [Q0] * x.h.dim
        else:
            xv = [Q0] * x.g.dim
            yv = _unit(x.h.dim, i - x.g.dim)
        top_left = r.rho0_w.act([a + b for a, b in zip(yv, x.mu.apply(xv))])
        top_right = r.rho1_of(xv)
        bottom = r.rho0_v.act(yv)
        m = Matrix.zero(dw + dv, dw + dv)
        for a in range(dw):
            for b in range(dw):
                m.data[a][b] = top_left.data[a][b]
            for b in range(dv):
                m.data[a][dw + b] = top_right.data[a][b]
        for a in range(dv):
            for b in range(dv):
                m.data[dw + a][dw + b] = bottom.data[a][b]
        mats.append(m)
    return Representation(arrows, dw + dv, mats)


def semidirect_2alg(x, r):
    """Semidirect product: g (+)_{rho0^1 mu} W --mu x phi--> h (+)_{rho0^0} V
    with action L_{(y,v)}(x,w) = (L_y x, rho0^1(y) w - rho1(x) v)."""
    assert r.source == x
    assert not validate_two_rep(r), "invalid 2-representation"
    t = r.target
    dg, dh, dw, dv = x.g.dim, x.h.dim, t.dim_w, t.dim_v

    g_brackets = {}
    dG = dg + dw
    for i in range(dG):
        for j in range(i + 1, dG):
            vec = _semi_bracket_g(x, r, _unit(dG, i), _unit(dG, j))
            if any(c != 0 for c in vec):
                g_brackets[(i, j)] = vec
    g_new = LieAlgebra(dG, g_brackets)

    h_brackets = {}
    dH = dh + dv
    for i in range(dH):
        for j in range(i + 1, dH):
            vec = _semi_bracket_h(x, r, _unit(dH, i), _unit(dH, j))
            if any(c != 0 for c in vec):
                h_brackets[(i, j)] = vec
    h_new = LieAlgebra(dH, h_brackets)

    mu_new = Matrix.zero(dH, dG)
    for a in range(dh):
        for b in range(dg):
            mu_new.data[a][b] = x.mu.data[a][b]
    for a in range(dv):
        for b in range(dw):
            mu_new.data[dh + a][dg + b] = t.phi.data[a][b]

    mats = []
    for b in range(dH):
        yv = _unit(dH, b)[:dh]
        vv = _unit(dH, b)[dh:]
        m = Matrix.zero(dG, dG)
        l_y = x.action.act(yv)
        rw = r.rho0_w.act(yv)
        for a in range(dg):
            for c in range(dg):
                m.data[a][c] = l_y.data[a][c]
        for a in range(dw):
            for c in range(dw):
                m.data[dg + a][dg + c] = rw.data[a][c]
        for c in range(dg):
            col = r.rho1[c].apply(vv)
            for a in range(dw):
                m.data[dg + a][c] = -col[a]
        mats.append(m)
    action = Representation(h_new, dG, mats)
    out = CrossedModuleAlg(g_new, h_new, mu_new, action)
    assert not validate_crossed_module(out), "semidirect product failed validation"
    return out


def _semi_bracket_g(x, r, u, v):
    dg, dw = x.g.dim, r.target.dim_w
    xu, wu = u[:dg], u[dg:]
    xv, wv = v[:dg], v[dg:]
    gx = x.g.bracket(xu, xv)
    mu_u = x.mu.apply(xu)
    mu_v = x.mu.apply(xv)
    ww = [a - b for a, b in zip(r.rho0_w.act(mu_u).apply(wv),
                                r.rho0_w.act(mu_v).apply(wu))]
    return gx + ww


def _semi_bracket_h(x, r, u, v):
    dh = x.h.dim
    yu, vu = u[:dh], u[dh:]
    yv, vv = v[:dh], v[dh:]
    hy = x.h.bracket(yu, yv)
    vv_out = [a - b for a, b in zip(r.rho0_v.act(yu).apply(vv),
                                    r.rho0_v.act(yv).apply(vu))]
    return hy + vv_out


def pullback_two_rep(r, x_big, proj_g, proj_h):
    """Pull a 2-representation back along a crossed-module map (projection
    given by matrices proj_g: g_big -> g, proj_h: h_big -> h)."""
    rho1 = [r.rho1_of(proj_g.col(a)) for a in range(x_big.g.dim)]
    rho0_w = Representation(x_big.h, r.target.dim_w,
                            [r.rho0_w.act(proj_h.col(b))
                             for b in range(x_big.h.dim)])
    rho0_v = Representation(x_big.h, r.target.dim_v,
                            [r.rho0_v.act(proj_h.col(b))
                             for b in range(x_big.h.dim)])
    return TwoRep(x_big, r.target, rho1, rho0_w, rho0_v)
