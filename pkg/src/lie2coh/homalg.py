"""Bounded cochain complexes over Q, their cohomology and mapping cones."""

from .numeric import Matrix, rank, rank_and_kernel, vectors_matrix


class FinComplex:
    """A bounded complex of finite-dimensional rational vector spaces.

    ``dims`` maps each degree in [lo, hi] to a dimension; ``diffs`` holds
    the differential d_n: C^n -> C^{n+1} for lo <= n < hi.  d∘d = 0 is
    checked at construction.
    """

    def __init__(self, lo, hi, dims, diffs):
        assert lo <= hi
        self.lo = lo
        self.hi = hi
        self.dims = {n: dims.get(n, 0) for n in range(lo, hi + 1)}
        self.diffs = {}
        for n in range(lo, hi):
            d = diffs.get(n)
            if d is None:
                d = Matrix.zero(self.dim(n + 1), self.dim(n))
            assert d.cols == self.dim(n) and d.rows == self.dim(n + 1), \
                "differential at degree %d has wrong shape" % n
            self.diffs[n] = d
        for n in range(lo, hi - 1):
            assert (self.diffs[n + 1] * self.diffs[n]).is_zero(), \
                "d^2 != 0 at degree %d" % n

    def dim(self, n):
        return self.dims.get(n, 0)

    def d(self, n):
        """d_n: C^n -> C^{n+1} (zero matrix outside the stored range)."""
        if n in self.diffs:
            return self.diffs[n]
        return Matrix.zero(self.dim(n + 1), self.dim(n))

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def cocycles(self, n):
        """Basis of ker d_n."""
        return rank_and_kernel(self.d(n))[1]

    def coboundaries(self, n):
        """Spanning set of im d_{n-1} (columns of the differential)."""
        d = self.d(n - 1)
        return [d.col(j) for j in range(d.cols)]

    def cohomology_dim(self, n):
        if self.dim(n) == 0:
            return 0
        ker_dim = self.dim(n) - rank(self.d(n))
        return ker_dim - rank(self.d(n - 1))

    def cohomology_dims(self):
        return [(n, self.cohomology_dim(n)) for n in self.degrees()]


class ChainMap:
    """A degreewise map of complexes commuting with the differentials."""

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = {}
        lo = min(source.lo, target.lo)
        hi = max(source.hi, target.hi)
        for n in range(lo, hi + 1):
            f = components.get(n)
            if f is None:
                f = Matrix.zero(target.dim(n), source.dim(n))
            assert f.rows == target.dim(n) and f.cols == source.dim(n), \
                "component at degree %d has wrong shape" % n
            self.components[n] = f
        for n in range(lo, hi):
            lhs = self.target.d(n) * self.component(n)
            rhs = self.component(n + 1) * self.source.d(n)
            assert (lhs - rhs).is_zero(), \
                "chain map does not commute with d at degree %d" % n

    def component(self, n):
        if n in self.components:
            return self.components[n]
        return Matrix.zero(self.target.dim(n), self.source.dim(n))


def mapping_cone(f):
    """Cone(f)^n = A^{n+1} (+) B^n with differential [[-d_A, 0], [f, d_B]]."""
    a, b = f.source, f.target
    lo = min(a.lo - 1, b.lo)
    hi = max(a.hi - 1, b.hi)
    dims = {n: a.dim(n + 1) + b.dim(n) for n in range(lo, hi + 1)}
    diffs = {}
    for n in range(lo, hi):
        da = a.d(n + 1)
        db = b.d(n)
        fn = f.component(n + 1)
        top = (-da).hstack(Matrix.zero(a.dim(n + 2), b.dim(n)))
        bot = fn.hstack(db)
        diffs[n] = top.vstack(bot)
    return FinComplex(lo, hi, dims, diffs)


def induced_map_iso_injective(f, n):
    """(iso, injective) flags of H^n(f): H^n(A) -> H^n(B), by brute force."""
    a, b = f.source, f.target
    za = rank_and_kernel(a.d(n))[1]                      # cocycles of A
    ba = rank(a.d(n - 1))                                # dim of A-coboundaries
    zb = rank_and_kernel(b.d(n))[1]
    db = b.d(n - 1)
    dim_hb = len(zb) - rank(db)
    fn = f.component(n)
    fza = [fn.apply(v) for v in za]
    db_cols = [db.col(j) for j in range(db.cols)]
    rank_b = rank(vectors_matrix(db_cols, dim=b.dim(n)))
    image_dim = rank(vectors_matrix(db_cols + fza, dim=b.dim(n))) - rank_b
    # kernel of the induced map: cocycles z with f(z) exact, modulo im d_A
    if za:
        aug = vectors_matrix(fza, dim=b.dim(n)).hstack(
            vectors_matrix(db_cols, dim=b.dim(n)))
        hit = rank(aug) - rank_b          # rank of f(Z_A) modulo im d_B
        ker_induced = (len(za) - hit) - ba
    else:
        ker_induced = 0
    injective = ker_induced == 0
    surjective = image_dim == dim_hb
    return (injective and surjective, injective)


def cone_vanishing_equiv(f, k):
    """Both sides of the cone-vanishing criterion, computed independently.

    lhs: H^n(cone) = 0 for all n <= k.
    rhs: H^n(f) iso for n <= k and injective at n = k+1.
    """
    cone = mapping_cone(f)
    lhs = all(cone.cohomology_dim(n) == 0 for n in range(cone.lo, k + 1))
    a, b = f.source, f.target
    lo = min(a.lo, b.lo)
    rhs = True
    for n in range(lo, k + 1):
        iso, _ = induced_map_iso_injective(f, n)
        if not iso:
            rhs = False
            break
    if rhs:
        _, inj = induced_map_iso_injective(f, k + 1)
        rhs = inj
    return lhs, rhs
