"""The H^2 <-> extension dictionary: 2-cocycles, the extension they build,
cocycle extraction from a splitting, cohomologousness, and the
trivial-coefficient central-extension construction."""

from .numeric import (Matrix, Q0, Q1, rank, rank_and_kernel, solve_linear,
                      vectors_matrix, increasing_tuples)
from .liealg import LieAlgebra, Representation, _unit
from .lie2 import CrossedModuleAlg, validate_crossed_module
from .tworep import TwoRep, validate_two_rep
from .lattice import LatticeContext, LatticeCochain, trivial_total_complex

# names of the cocycle equations, keyed by the lattice block where each
# component of nabla(omega0, alpha, phimap, omega1, 0, 0) must vanish
_EQUATION_OF_BLOCK = {
    (0, 3, 0): "i",     # delta omega0 = 0
    (0, 0, 3): "iii",   # omega1 is a cocycle for rho0^1 o mu
    (1, 2, 0): "iv",    # epsilon is a homomorphism / equivariant
    (0, 2, 1): "v",     # the action formula is an action
    (0, 1, 2): "vi",    # the action acts by derivations
    (2, 1, 0): "phi_h_independent",
    (1, 1, 1): "omega1_definition",
}


class TwoCocycle:
    """A triple (omega0, alpha, phimap) of lattice cochains at the indices
    (0,2,0), (0,1,1) and (1,1,0); phimap depends only on the g-slot.

    omega1 is derived: omega1(x0, x1) = rho1(x1) phi(x0) + alpha(mu x0; x1).
    """

    def __init__(self, ctx, omega0, alpha, phi_g):
        self.ctx = ctx
        dg, dh, dv = ctx.dg, ctx.dh, ctx.dv
        self.omega0 = LatticeCochain(ctx, 0, 2, 0, omega0)
        self.alpha = LatticeCochain(ctx, 0, 1, 1, alpha)
        assert phi_g.rows == dv and phi_g.cols == dg
        self.phi_g = phi_g
        self.phimap = LatticeCochain(ctx, 1, 1, 0, self._embed_phi())

    def _embed_phi(self):
        ctx = self.ctx
        space = ctx.space(1, 1, 0)
        vals = [Q0] * space.total_dim
        for a in range(ctx.dg):          # g-block of g_1 comes first
            pos = space.block((a,), ())
            for i in range(ctx.dv):
                vals[pos + i] = self.phi_g.data[i][a]
        return vals

    def phi_of(self, xvec):
        return self.phi_g.apply(xvec)

    def alpha_of(self, yvec, xvec):
        return self.alpha.evaluate([yvec], [xvec])

    def omega0_of(self, y0, y1):
        return self.omega0.evaluate([y0, y1], [])

    def derived_omega1(self, x0, x1):
        """rho1(x1) phi(x0) + alpha(mu x0; x1)."""
        ctx = self.ctx
        a = ctx.rep.rho1_of(x1).apply(self.phi_of(x0))
        b = self.alpha_of(ctx.x.mu.apply(x0), x1)
        return [p + q for p, q in zip(a, b)]

    def omega1_values(self):
        """The derived omega1 on increasing pairs, as a (0,0,2) cochain."""
        ctx = self.ctx
        vals = []
        for (a, b) in increasing_tuples(ctx.dg, 2):
            vals.extend(self.derived_omega1(_unit(ctx.dg, a),
                                            _unit(ctx.dg, b)))
        return vals

    def total_vector(self):
        """Embedding into C^2_tot with the v and lambda coordinates zero."""
        ctx = self.ctx
        offs, dim = ctx.block_offsets(2)
        vec = [Q0] * dim
        for block, payload in (((0, 2, 0), self.omega0.values),
                               ((0, 1, 1), self.alpha.values),
                               ((1, 1, 0), self.phimap.values),
                               ((0, 0, 2), self.omega1_values())):
            if block in offs:
                base = offs[block]
                for i, v in enumerate(payload):
                    vec[base + i] = v
        return vec

    def validate(self):
        """Violated cocycle equations, named after the proposition."""
        ctx = self.ctx
        bad = []
        for (a, b) in increasing_tuples(ctx.dg, 2):
            s = self.derived_omega1(_unit(ctx.dg, a), _unit(ctx.dg, b))
            t = self.derived_omega1(_unit(ctx.dg, b), _unit(ctx.dg, a))
            if any(p + q != 0 for p, q in zip(s, t)):
                bad.append(("ii", (a, b)))
        out = ctx.nabla(2).apply(self.total_vector())
        offs, _ = ctx.block_offsets(3)
        for block, base in offs.items():
            size = ctx.cochain_dim(*block)
            if any(out[base + i] != 0 for i in range(size)):
                bad.append((_EQUATION_OF_BLOCK.get(block, str(block)), block))
        return bad

    def values_triple(self):
        return (list(self.omega0.values), list(self.alpha.values),
                [row[:] for row in self.phi_g.data])

    def __eq__(self, other):
        return (isinstance(other, TwoCocycle)
                and self.values_triple() == other.values_triple())


def zero_cocycle(ctx):
    return TwoCocycle(ctx,
                      [Q0] * ctx.cochain_dim(0, 2, 0),
                      [Q0] * ctx.cochain_dim(0, 1, 1),
                      Matrix.zero(ctx.dv, ctx.dg))


def contexts_match(a, b):
    """Structural equality of two lattice contexts (same crossed module
    data and the same 2-representation matrices)."""
    if a is b:
        return True
    return (a.dg == b.dg and a.dh == b.dh and a.dw == b.dw and a.dv == b.dv
            and a.x.g.brackets == b.x.g.brackets
            and a.x.h.brackets == b.x.h.brackets
            and a.x.mu == b.x.mu
            and a.x.action.mats == b.x.action.mats
            and a.phi == b.phi
            and a.rep.rho1 == b.rep.rho1
            and a.rep.rho0_w.mats == b.rep.rho0_w.mats
            and a.rep.rho0_v.mats == b.rep.rho0_v.mats)


class ExtensionResult:
    """An extension of the base crossed module by the 2-vector space,
    with the inclusion/projection data of both exact rows."""

    def __init__(self, total, include_w, include_v, project_g, project_h,
                 omega1, base=None):
        self.total = total
        self.include_w = include_w
        self.include_v = include_v
        self.project_g = project_g
        self.project_h = project_h
        self.omega1 = omega1
        self.base = base

    def rows_exact(self):
        """include injective, project surjective, ker(project) = im(include)."""
        for inc, proj in ((self.include_w, self.project_g),
                          (self.include_v, self.project_h)):
            if rank(inc) != inc.cols:
                return False
            if rank(proj) != proj.rows:
                return False
            _, ker = rank_and_kernel(proj)
            img = [inc.col(j) for j in range(inc.cols)]
            if len(ker) != len(img):
                return False
            stacked = vectors_matrix(img + ker, dim=inc.rows)
            if rank(stacked) != len(img):
                return False
        return True


def extension_from_cocycle(c):
    """Build the extension crossed module defined by a valid 2-cocycle.

    e_1 = g (+) W and e_0 = h (+) V with the omega1- and omega0-twisted
    semidirect brackets, epsilon(x, w) = (mu x, phi w + phimap x), and
    action L_{(y,v)}(x,w) = (L_y x, rho0^1(y) w - rho1(x) v - alpha(y;x)).
    """
    bad = c.validate()
    if bad:
        raise ValueError("invalid 2-cocycle, violated equations: %s" % (bad,))
    ctx = c.ctx
    x, rep = ctx.x, ctx.rep
    dg, dh, dw, dv = ctx.dg, ctx.dh, ctx.dw, ctx.dv
    phi = rep.target.phi

    d1 = dg + dw
    e1_brackets = {}
    for i in range(d1):
        for j in range(i + 1, d1):
            xi, wi = _unit(d1, i)[:dg], _unit(d1, i)[dg:]
            xj, wj = _unit(d1, j)[:dg], _unit(d1, j)[dg:]
            gx = x.g.bracket(xi, xj)
            ww = [p - q - s for p, q, s in zip(
                rep.rho0_w.act(x.mu.apply(xi)).apply(wj),
                rep.rho0_w.act(x.mu.apply(xj)).apply(wi),
                c.derived_omega1(xi, xj))]
            vec = gx + ww
            if any(a != 0 for a in vec):
                e1_brackets[(i, j)] = vec
    e1 = LieAlgebra(d1, e1_brackets)

    d0 = dh + dv
    e0_brackets = {}
    for i in range(d0):
        for j in range(i + 1, d0):
            yi, vi = _unit(d0, i)[:dh], _unit(d0, i)[dh:]
            yj, vj = _unit(d0, j)[:dh], _unit(d0, j)[dh:]
            hy = x.h.bracket(yi, yj)
            vv = [p - q - s for p, q, s in zip(
                rep.rho0_v.act(yi).apply(vj),
                rep.rho0_v.act(yj).apply(vi),
                c.omega0_of(yi, yj))]
            vec = hy + vv
            if any(a != 0 for a in vec):
                e0_brackets[(i, j)] = vec
    e0 = LieAlgebra(d0, e0_brackets)

    eps = Matrix.zero(d0, d1)
    for a in range(dh):
        for b in range(dg):
            eps.data[a][b] = x.mu.data[a][b]
    for a in range(dv):
        for b in range(dw):
            eps.data[dh + a][dg + b] = phi.data[a][b]
        for b in range(dg):
            eps.data[dh + a][b] = c.phi_g.data[a][b]

    mats = []
    for bidx in range(d0):
        yv, vv = _unit(d0, bidx)[:dh], _unit(d0, bidx)[dh:]
        m = Matrix.zero(d1, d1)
        ly = x.action.act(yv)
        rw = rep.rho0_w.act(yv)
        for a in range(dg):
            for b in range(dg):
                m.data[a][b] = ly.data[a][b]
        for a in range(dw):
            for b in range(dw):
                m.data[dg + a][dg + b] = rw.data[a][b]
        for b in range(dg):
            col_r = rep.rho1[b].apply(vv)
            col_a = c.alpha_of(yv, _unit(dg, b))
            for a in range(dw):
                m.data[dg + a][b] = -col_r[a] - col_a[a]
        mats.append(m)
    action = Representation(e0, d1, mats)
    total = CrossedModuleAlg(e1, e0, eps, action)
    assert not validate_crossed_module(total), \
        "cocycle data failed to assemble into a crossed module"

    include_w = Matrix.zero(d1, dw)
    for a in range(dw):
        include_w.data[dg + a][a] = Q1
    include_v = Matrix.zero(d0, dv)
    for a in range(dv):
        include_v.data[dh + a][a] = Q1
    project_g = Matrix.zero(dg, d1)
    for a in range(dg):
        project_g.data[a][a] = Q1
    project_h = Matrix.zero(dh, d0)
    for a in range(dh):
        project_h.data[a][a] = Q1
    return ExtensionResult(total, include_w, include_v, project_g, project_h,
                           c.omega1_values(), base=ctx.x)


def canonical_splitting(e):
    """The block splittings z -> (z, 0) of a constructed extension."""
    sigma1 = Matrix.zero(e.total.g.dim, e.project_g.rows)
    for a in range(e.project_g.rows):
        sigma1.data[a][a] = Q1
    sigma0 = Matrix.zero(e.total.h.dim, e.project_h.rows)
    for a in range(e.project_h.rows):
        sigma0.data[a][a] = Q1
    return sigma0, sigma1


def cocycle_from_extension(e, sigma0, sigma1, base_x=None):
    """Extract (TwoRep, TwoCocycle) from an extension and linear sections.

    sigma0: h -> e_0 and sigma1: g -> e_1 must satisfy project o sigma = id.
    The induced representation is rho0^0(y) v = [sigma0 y, v], rho0^1(y) w
    = L_{sigma0 y} w, rho1(x) v = -L_v sigma1(x); the cocycle components
    are omega0(y0,y1) = sigma0[y0,y1] - [sigma0 y0, sigma0 y1],
    alpha(y;x) = sigma1(L_y x) - L_{sigma0 y} sigma1(x) and
    phimap(x) = eps(sigma1 x) - sigma0(mu x).
    """
    total = e.total
    pi1, pi0 = e.project_g, e.project_h
    j1, j0 = e.include_w, e.include_v
    dg, dh = pi1.rows, pi0.rows
    dw, dv = j1.cols, j0.cols
    assert (pi0 * sigma0 - Matrix.identity(dh)).is_zero(), "sigma0 not a section"
    assert (pi1 * sigma1 - Matrix.identity(dg)).is_zero(), "sigma1 not a section"

    def w_coords(vec):
        sol = solve_linear(j1, vec)
        assert sol is not None, "value not in W"
        return sol

    def v_coords(vec):
        sol = solve_linear(j0, vec)
        assert sol is not None, "value not in V"
        return sol

    if base_x is None:
        base_x = e.base
    assert base_x is not None, "extension carries no base crossed module"
    x = base_x

    rho0_v_mats, rho0_w_mats, rho1_mats = [], [], []
    for b in range(dh):
        s_y = sigma0.col(b)
        cols_v = [v_coords(total.h.bracket(s_y, j0.col(a)))
                  for a in range(dv)]
        rho0_v_mats.append(Matrix(dv, dv, [[cols_v[j][i] for j in range(dv)]
                                           for i in range(dv)]))
        act = total.action.act(s_y)
        cols_w = [w_coords(act.apply(j1.col(a))) for a in range(dw)]
        rho0_w_mats.append(Matrix(dw, dw, [[cols_w[j][i] for j in range(dw)]
                                           for i in range(dw)]))
    for a in range(dg):
        s_x = sigma1.col(a)
        cols = [w_coords([-t for t in total.action.act(j0.col(b)).apply(s_x)])
                for b in range(dv)]
        rho1_mats.append(Matrix(dw, dv, [[cols[j][i] for j in range(dv)]
                                         for i in range(dw)]))
    rep = TwoRep(x, _target_of(e), rho1_mats,
                 Representation(x.h, dw, rho0_w_mats),
                 Representation(x.h, dv, rho0_v_mats))
    assert not validate_two_rep(rep), "extracted 2-representation invalid"
    ctx = LatticeContext(x, rep)

    om0 = []
    from .numeric import increasing_tuples as inc
    for (a, b) in inc(dh, 2):
        ya, yb = _unit(dh, a), _unit(dh, b)
        val = [p - q for p, q in zip(
            sigma0.apply(x.h.bracket(ya, yb)),
            total.h.bracket(sigma0.apply(ya), sigma0.apply(yb)))]
        om0.extend(v_coords(val))
    alpha_vals = [Q0] * ctx.cochain_dim(0, 1, 1)
    space = ctx.space(0, 1, 1)
    for b in range(dh):
        act_s = total.action.act(sigma0.col(b))
        for a in range(dg):
            val = [p - q for p, q in zip(
                sigma1.apply(x.action.mats[b].apply(_unit(dg, a))),
                act_s.apply(sigma1.col(a)))]
            wc = w_coords(val)
            pos = space.block((b,), (a,))
            for i in range(dw):
                alpha_vals[pos + i] = wc[i]
    phi_cols = []
    for a in range(dg):
        val = [p - q for p, q in zip(
            total.mu.apply(sigma1.col(a)),
            sigma0.apply(x.mu.apply(_unit(dg, a))))]
        phi_cols.append(v_coords(val))
    phi_g = Matrix(dv, dg, [[phi_cols[j][i] for j in range(dg)]
                            for i in range(dv)])
    coc = TwoCocycle(ctx, om0, alpha_vals, phi_g)
    bad = coc.validate()
    assert not bad, "extracted cocycle failed validation: %s" % (bad,)
    return rep, coc


def _target_of(e):
    from .lie2 import TwoVectorSpace
    dw, dv = e.include_w.cols, e.include_v.cols
    # phi: W -> V through the extension: eps on the included W lands in V
    cols = []
    for a in range(dw):
        vec = e.total.mu.apply(e.include_w.col(a))
        sol = solve_linear(e.include_v, vec)
        assert sol is not None
        cols.append(sol)
    phi = Matrix(dv, dw, [[cols[j][i] for j in range(dw)]
                          for i in range(dv)])
    return TwoVectorSpace(dw, dv, phi)


def coboundary_solve(c1, c2):
    """Solve c2 - c1 = nabla(lambda0, lambda1) exactly.

    Returns (lambda0: h -> V, lambda1: g -> W) matrices, or None when the
    linear system is infeasible (the cocycles are not cohomologous).
    """
    assert contexts_match(c1.ctx, c2.ctx), "context mismatch"
    ctx = c1.ctx
    diff = [b - a for a, b in zip(c1.total_vector(), c2.total_vector())]
    sol = solve_linear(ctx.nabla(1), diff)
    if sol is None:
        return None
    offs, _ = ctx.block_offsets(1)
    dh, dv, dg, dw = ctx.dh, ctx.dv, ctx.dg, ctx.dw
    lam0 = Matrix.zero(dv, dh)
    if (0, 1, 0) in offs:
        base = offs[(0, 1, 0)]
        space = ctx.space(0, 1, 0)
        for b in range(dh):
            pos = space.block((b,), ())
            for i in range(dv):
                lam0.data[i][b] = sol[base + pos + i]
    lam1 = Matrix.zero(dw, dg)
    if (0, 0, 1) in offs:
        base = offs[(0, 0, 1)]
        space = ctx.space(0, 0, 1)
        for a in range(dg):
            pos = space.block((), (a,))
            for i in range(dw):
                lam1.data[i][a] = sol[base + pos + i]
    return lam0, lam1


def cocycle_from_slice(ctx, u):
    """Build a TwoCocycle from flat slice coordinates (omega0 | alpha |
    phimap-by-rows); no validation."""
    n0 = ctx.cochain_dim(0, 2, 0)
    n1 = ctx.cochain_dim(0, 1, 1)
    return TwoCocycle(
        ctx, u[:n0], u[n0:n0 + n1],
        Matrix(ctx.dv, ctx.dg,
               [[u[n0 + n1 + i * ctx.dg + j] for j in range(ctx.dg)]
                for i in range(ctx.dv)]))


def cocycle_space_basis(ctx):
    """Basis of the space of valid (omega0, alpha, phimap) triples, in the
    flat slice coordinates accepted by cocycle_from_slice."""
    n0 = ctx.cochain_dim(0, 2, 0)
    n1 = ctx.cochain_dim(0, 1, 1)
    n2 = ctx.dv * ctx.dg
    total = n0 + n1 + n2
    rows = []
    nabla2 = ctx.nabla(2)
    for k in range(total):
        u = [Q0] * total
        u[k] = Q1
        coc = cocycle_from_slice(ctx, u)
        col = nabla2.apply(coc.total_vector())
        # antisymmetry defect of the derived omega1 on increasing pairs
        anti = []
        for (a, b) in increasing_tuples(ctx.dg, 2):
            s = coc.derived_omega1(_unit(ctx.dg, a), _unit(ctx.dg, b))
            t = coc.derived_omega1(_unit(ctx.dg, b), _unit(ctx.dg, a))
            anti.extend([p + q for p, q in zip(s, t)])
        rows.append(col + anti)
    cond = Matrix(total, len(rows[0]), rows).transpose() \
        if rows else Matrix.zero(0, total)
    _, kernel = rank_and_kernel(cond)
    return kernel


def cocycle_slice_class_count(ctx):
    """dim of {valid (omega0, alpha, phimap) triples} modulo coboundaries,
    counted directly by linear algebra on the coordinate slice."""
    n0 = ctx.cochain_dim(0, 2, 0)
    n1 = ctx.cochain_dim(0, 1, 1)
    n2 = ctx.dv * ctx.dg
    total = n0 + n1 + n2
    z_dim = len(cocycle_space_basis(ctx))

    # coboundary image inside the slice coordinates
    n_l0 = ctx.cochain_dim(0, 1, 0)
    n_l1 = ctx.cochain_dim(0, 0, 1)
    offs1, dim1 = ctx.block_offsets(1)
    offs2, _ = ctx.block_offsets(2)
    nabla1 = ctx.nabla(1)
    cols = []
    for k in range(n_l0 + n_l1):
        u = [Q0] * dim1
        if k < n_l0:
            u[offs1[(0, 1, 0)] + k] = Q1
        else:
            u[offs1[(0, 0, 1)] + k - n_l0] = Q1
        img = nabla1.apply(u)
        piece = []
        piece += [img[offs2[(0, 2, 0)] + i] for i in range(n0)] \
            if (0, 2, 0) in offs2 else [Q0] * n0
        piece += [img[offs2[(0, 1, 1)] + i] for i in range(n1)] \
            if (0, 1, 1) in offs2 else [Q0] * n1
        # phimap slice coordinates from the (1,1,0) block, g-columns only
        if (1, 1, 0) in offs2:
            space = ctx.space(1, 1, 0)
            base = offs2[(1, 1, 0)]
            for i in range(ctx.dv):
                for j in range(ctx.dg):
                    piece.append(img[base + space.block((j,), ()) + i])
        else:
            piece += [Q0] * n2
        cols.append(piece)
    b_dim = rank(vectors_matrix(cols, dim=total)) if cols else 0
    return z_dim - b_dim


# ---------------------------------------------------------------------------
# Trivial coefficients: the mu_phi central extension.
# ---------------------------------------------------------------------------

def trivial_cocycle_defects(x, omega_vals, phi_vals):
    """The three cocycle conditions on (omega, phi) in Omega^2_tot(g_1):
    returns a dict of condition name -> defect vector (empty if holding)."""
    from .lattice import trivial_total_dim, _trivial_blocks, trivial_space_dim
    n2 = trivial_total_dim(x, 2)
    blocks = _trivial_blocks(x, 2)
    vec = [Q0] * n2
    pos = 0
    sizes = {}
    for b in blocks:
        sizes[b] = trivial_space_dim(x, *b)
        pos += sizes[b]
    offs = {}
    pos = 0
    for b in blocks:
        offs[b] = pos
        pos += sizes[b]
    assert len(omega_vals) == sizes.get((0, 2), 0)
    assert len(phi_vals) == sizes.get((1, 1), 0)
    for i, v in enumerate(omega_vals):
        vec[offs[(0, 2)] + i] = v
    for i, v in enumerate(phi_vals):
        vec[offs[(1, 1)] + i] = v
    out = trivial_total_complex(x, 2).apply(vec)
    blocks3 = _trivial_blocks(x, 3)
    offs3 = {}
    pos = 0
    for b in blocks3:
        offs3[b] = pos
        pos += trivial_space_dim(x, *b)
    names = {(0, 3): "delta_omega", (1, 2): "partial_omega_plus_delta_phi",
             (2, 1): "partial_phi"}
    defects = {}
    for b in blocks3:
        size = trivial_space_dim(x, *b)
        piece = out[offs3[b]:offs3[b] + size]
        if any(c != 0 for c in piece):
            defects[names[b]] = piece
    return defects


def trivial_coeff_extension(x, omega_vals, phi_vals):
    """The crossed module mu_phi: g -> h (+)^omega R for a trivial 2-cocycle.

    omega_vals: values of a 2-form on h on increasing basis pairs;
    phi_vals: a linear functional on g_1 = g (+) h (g-block first).
    """
    defects = trivial_cocycle_defects(x, omega_vals, phi_vals)
    if defects:
        raise ValueError("not a trivial-coefficient 2-cocycle: %s"
                         % sorted(defects))
    dg, dh = x.g.dim, x.h.dim
    pairs = increasing_tuples(dh, 2)
    omega = {pair: omega_vals[i] for i, pair in enumerate(pairs)}

    def omega_of(i, j):
        if i == j:
            return Q0
        if i < j:
            return omega.get((i, j), Q0)
        return -omega.get((j, i), Q0)

    d0 = dh + 1
    brackets = {}
    for i in range(dh):
        for j in range(i + 1, dh):
            vec = x.h.basis_bracket(i, j) + [-omega_of(i, j)]
            if any(c != 0 for c in vec):
                brackets[(i, j)] = vec
    h_ext = LieAlgebra(d0, brackets)

    mu_ext = Matrix(d0, dg)
    for a in range(dh):
        for b in range(dg):
            mu_ext.data[a][b] = x.mu.data[a][b]
    for b in range(dg):
        mu_ext.data[dh][b] = phi_vals[b]      # phi on the g-block

    mats = [x.action.mats[b] for b in range(dh)] + [Matrix.zero(dg, dg)]
    action = Representation(h_ext, dg, mats)
    out = CrossedModuleAlg(x.g, h_ext, mu_ext, action)
    assert not validate_crossed_module(out), \
        "mu_phi construction failed validation"
    return out
