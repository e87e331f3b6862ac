"""Finite-dimensional Lie algebras by structure constants, representations,
and the Chevalley-Eilenberg differential with coefficients."""

from .numeric import Matrix, Q0, Q1, rat, increasing_tuples


class LieAlgebra:
    """Lie algebra presented by structure constants on a fixed basis.

    ``brackets`` maps pairs (i, j) with i < j to the coefficient vector of
    [e_i, e_j]; antisymmetry is implicit and [x, x] = 0 by construction.
    The Jacobi identity is *not* enforced here; run validate_lie_algebra.
    """

    def __init__(self, dim, brackets=None):
        self.dim = dim
        self.brackets = {}
        self._sparse = {}
        if brackets:
            for (i, j), vec in brackets.items():
                assert 0 <= i < j < dim
                vec = [x if isinstance(x, (int,)) else rat(x) for x in vec]
                assert len(vec) == dim
                if any(x != 0 for x in vec):
                    self.brackets[(i, j)] = vec
                    self._sparse[(i, j)] = [(k, c) for k, c in enumerate(vec)
                                            if c != 0]

    @staticmethod
    def abelian(dim):
        return LieAlgebra(dim)

    @staticmethod
    def aff1():
        """[e0, e1] = e1."""
        return LieAlgebra(2, {(0, 1): [0, 1]})

    @staticmethod
    def heisenberg3():
        """[e0, e1] = e2, e2 central."""
        return LieAlgebra(3, {(0, 1): [0, 0, 1]})

    @staticmethod
    def sl2():
        """h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
        return LieAlgebra(3, {(0, 1): [0, 2, 0],
                              (0, 2): [0, 0, -2],
                              (1, 2): [1, 0, 0]})

    def __eq__(self, other):
        return (isinstance(other, LieAlgebra) and self.dim == other.dim
                and self.brackets == other.brackets)

    def __hash__(self):
        return hash((self.dim, tuple(sorted(
            (k, tuple(v)) for k, v in self.brackets.items()))))

    def basis_bracket(self, i, j):
        if i == j:
            return [0] * self.dim
        if i < j:
            return list(self.brackets.get((i, j), [0] * self.dim))
        return [-x for x in self.brackets.get((j, i), [0] * self.dim)]

    def bracket(self, u, v):
        """Bracket of coefficient vectors, extended bilinearly."""
        out = [0] * self.dim
        nz_u = [(i, c) for i, c in enumerate(u) if c != 0]
        nz_v = [(j, c) for j, c in enumerate(v) if c != 0]
        if not nz_u or not nz_v:
            return out
        sparse = self._sparse
        for i, cu in nz_u:
            for j, cv in nz_v:
                if i == j:
                    continue
                vec = sparse.get((i, j) if i < j else (j, i))
                if vec is None:
                    continue
                coeff = cu * cv if i < j else -cu * cv
                for k, c in vec:
                    out[k] += coeff * c
        return out

    def ad(self, u):
        """Matrix of ad_u = [u, -]."""
        cols = [self.bracket(u, _unit(self.dim, j)) for j in range(self.dim)]
        return Matrix(self.dim, self.dim,
                      [[cols[j][i] for j in range(self.dim)]
                       for i in range(self.dim)])

    def change_basis(self, t):
        """Structure constants in the new basis given by the columns of t."""
        tinv = _invert(t)
        d = self.dim
        cols = t.columns()
        brackets = {}
        for i in range(d):
            for j in range(i + 1, d):
                w = tinv.apply(self.bracket(cols[i], cols[j]))
                if any(x != 0 for x in w):
                    brackets[(i, j)] = w
        return LieAlgebra(d, brackets)


def _unit(dim, j):
    v = [Q0] * dim
    v[j] = Q1
    return v


def _invert(m):
    from .numeric import solve_linear
    cols = []
    for j in range(m.rows):
        x = solve_linear(m, _unit(m.rows, j))
        assert x is not None, "matrix not invertible"
        cols.append(x)
    return Matrix(m.rows, m.rows,
                  [[cols[j][i] for j in range(m.rows)] for i in range(m.rows)])


def validate_lie_algebra(g):
    """List of Jacobi violations (i, j, k, defect vector); empty means valid."""
    bad = []
    for i in range(g.dim):
        ei = _unit(g.dim, i)
        for j in range(i + 1, g.dim):
            ej = _unit(g.dim, j)
            for k in range(j + 1, g.dim):
                ek = _unit(g.dim, k)
                d = [a + b + c for a, b, c in
                     zip(g.bracket(g.bracket(ei, ej), ek),
                         g.bracket(g.bracket(ej, ek), ei),
                         g.bracket(g.bracket(ek, ei), ej))]
                if any(x != 0 for x in d):
                    bad.append((i, j, k, d))
    return bad


class Representation:
    """Linear action of a Lie algebra on Q^space_dim, one matrix per basis."""

    def __init__(self, algebra, space_dim, mats):
        self.algebra = algebra
        self.space_dim = space_dim
        assert len(mats) == algebra.dim
        for m in mats:
            assert m.rows == space_dim and m.cols == space_dim
        self.mats = list(mats)

    @staticmethod
    def trivial(algebra, space_dim):
        return Representation(algebra, space_dim,
                              [Matrix.zero(space_dim, space_dim)
                               for _ in range(algebra.dim)])

    @staticmethod
    def adjoint(algebra):
        return Representation(algebra, algebra.dim,
                              [algebra.ad(_unit(algebra.dim, i))
                               for i in range(algebra.dim)])

    def act(self, y):
        """Matrix of the action of a coefficient vector y."""
        out = Matrix.zero(self.space_dim, self.space_dim)
        for c, m in zip(y, self.mats):
            if c != 0:
                out = out + m.scale(c)
        return out


def validate_representation(rep):
    """Pairs (i, j) where rho([e_i, e_j]) != [rho(e_i), rho(e_j)]."""
    g = rep.algebra
    bad = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = rep.act(g.basis_bracket(i, j))
            rhs = rep.mats[i] * rep.mats[j] - rep.mats[j] * rep.mats[i]
            if not (lhs - rhs).is_zero():
                bad.append((i, j))
    return bad


def ce_differential(rep, q):
    """Matrix of d: Lambda^q g* (x) V -> Lambda^{q+1} g* (x) V.

    Basis: strictly increasing index tuples in lex order, tensor the
    standard basis of V.  (d w)(a_0..a_q) = sum_j (-1)^j rho(a_j) w(a(j))
    + sum_{m<n} (-1)^{m+n} w([a_m,a_n], a(m,n)), with a(j) and a(m,n) the
    deletion of the marked entries.
    """
    g, dv = rep.algebra, rep.space_dim
    src = increasing_tuples(g.dim, q)
    tgt = increasing_tuples(g.dim, q + 1)
    src_pos = {t: k for k, t in enumerate(src)}
    out = Matrix.zero(len(tgt) * dv, len(src) * dv)

    def add_eval(row_block, args, coeff_matrix, sign):
        # args: one generic vector (position gpos) among basis indices.
        gpos, vec, rest = args
        for idx, c in enumerate(vec):
            if c == 0:
                continue
            tup = rest[:gpos] + (idx,) + rest[gpos:]
            s, sorted_tup = _sort_sign(tup)
            if s == 0:
                continue
            col_block = src_pos[sorted_tup]
            val = c * sign * s
            if coeff_matrix is None:
                for a in range(dv):
                    out.data[row_block * dv + a][col_block * dv + a] += val
            else:
                for a in range(dv):
                    for b in range(dv):
                        x = coeff_matrix.data[a][b]
                        if x != 0:
                            out.data[row_block * dv + a][col_block * dv + b] \
                                += val * x

    for row_block, tup in enumerate(tgt):
        for j in range(q + 1):
            rest = tup[:j] + tup[j + 1:]
            if rest in src_pos:
                mat = rep.mats[tup[j]]
                col_block = src_pos[rest]
                sign = -1 if j % 2 else 1
                for a in range(dv):
                    for b in range(dv):
                        x = mat.data[a][b]
                        if x != 0:
                            out.data[row_block * dv + a][col_block * dv + b] \
                                += sign * x
        for m in range(q + 1):
            for n in range(m + 1, q + 1):
                br = g.basis_bracket(tup[m], tup[n])
                if all(x == 0 for x in br):
                    continue
                rest = tuple(tup[t] for t in range(q + 1) if t not in (m, n))
                sign = -1 if (m + n) % 2 else 1
                add_eval(row_block, (0, br, rest), None, sign)
    return out


def _sort_sign(tup):
    """Sign of the permutation sorting tup; 0 on repeated entries."""
    tup = list(tup)
    sign = 1
    for i in range(len(tup)):
        for j in range(len(tup) - 1 - i):
            if tup[j] > tup[j + 1]:
                tup[j], tup[j + 1] = tup[j + 1], tup[j]
                sign = -sign
            elif tup[j] == tup[j + 1]:
                return 0, None
    return sign, tuple(tup)
