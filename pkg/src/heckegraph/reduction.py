"""Standard representatives for the double cosets G(R-) \\ G(R+-) / G(R+).

Every matrix M over F_q[t, t^-1] whose determinant is a unit monomial c*t^k
factors as L^-1 * diag(t^d) * R^-1 with L invertible over F_q[t^-1] and R
invertible over F_q[t]; the descending tuple d is unique.  Two independent
routes compute d:

* `birkhoff_reduce` performs an explicit elimination and returns the witness
  (L, R, d), verified by multiplication on every call;
* `splitting_type_cohomology` never eliminates: it reads d off the dimension
  jumps of a family of truncated linear systems over F_q.

The elimination alternates two phases.  A Euclidean column pass over F_q[t]
makes the working matrix lower triangular; because the determinant is a unit
monomial, the diagonal is then forced to consist of monomials t^H_i.  A
cleaning pass removes every below-diagonal term with exponent <= H_(col) via
row operations over F_q[t^-1] and every term with exponent >= H_(row) via
column operations over F_q[t].  Any surviving term c*t^m (with
H_col < m < H_row) triggers a pivot that swaps the pair of diagonal
exponents toward (m, H_col + H_row - m), strictly balancing them, and the
loop repeats.  The iteration count is capped; the witness check, not the
loop, is the correctness contract.
"""

from .laurent import LaurentMat, LaurentPoly, is_glr_unit, mat_adjugate, mat_det, mat_mul


class ReductionError(Exception):
    pass


class Vertex(tuple):
    """Descending integer tuple; the canonical double-coset label."""

    def __new__(cls, vals):
        return super().__new__(cls, sorted(vals, reverse=True))

    def __repr__(self):
        return "(" + ",".join(str(d) for d in self) + ")"


class ReductionWitness:

    __slots__ = ("L", "R", "d")

    def __init__(self, L, R, d):
        self.L = L
        self.R = R
        self.d = d

    def verify(self, M):
        """Check L*M*R = diag(t^d) with L, R invertible over their rings."""
        if not is_glr_unit(self.L, "R-"):
            raise ReductionError("left witness is not invertible over F_q[t^-1]")
        if not is_glr_unit(self.R, "R+"):
            raise ReductionError("right witness is not invertible over F_q[t]")
        if mat_mul(mat_mul(self.L, M), self.R) != LaurentMat.diag_t(M.ctx, self.d):
            raise ReductionError("witness product is not the expected diagonal")

    def __repr__(self):
        return "ReductionWitness(d=%r)" % (self.d,)


def _require_unit_det(M):
    d = mat_det(M)
    um = d.unit_monomial()
    if um is None:
        raise ReductionError("matrix is not invertible over F_q[t, t^-1]")
    return um


def _column_triangularize(W, R, ctx, n):
    """Right Euclidean column pass: make W lower triangular, diagonal t^H_i."""
    neg = ctx.neg

    def col_axpy(dst, src, code, k):
        # col_dst -= code * t^k * col_src  (k >= 0 keeps the op over F_q[t])
        m = neg(code)
        for mat in (W, R):
            for row in mat:
                if row[src].c:
                    row[dst] = row[dst] + row[src].mono_mul(m, k)

    def col_swap(a, b):
        for mat in (W, R):
            for row in mat:
                row[a], row[b] = row[b], row[a]

    def col_scale(j, code):
        for mat in (W, R):
            for row in mat:
                row[j] = row[j].scale(code)

    H = []
    for i in range(n):
        while True:
            nz = [j for j in range(i, n) if W[i][j].c]
            if not nz:
                raise ReductionError("matrix is singular")
            piv = min(nz, key=lambda j: W[i][j].degree)
            if len(nz) == 1:
                if piv != i:
                    col_swap(i, piv)
                break
            pd = W[i][piv].degree
            pl = W[i][piv].c[-1]
            for j in nz:
                if j == piv:
                    continue
                e = W[i][j]
                col_axpy(j, piv, ctx.div(e.c[-1], pl), e.degree - pd)
        lead = W[i][i].c[-1]
        if lead != 1:
            col_scale(i, ctx.inv(lead))
        um = W[i][i].unit_monomial()
        if um is None:
            raise ReductionError("diagonal entry is not a monomial")
        H.append(um[1])
    return H


def _clean_pass(W, L, R, n, H):
    """Strip below-diagonal terms outside the open window (H_j, H_i)."""
    for j in range(n - 1, -1, -1):
        for i in range(j + 1, n):
            high = W[i][j].part_ge(H[i])
            if high.c:
                # col_j -= (high / t^H_i) * col_i, an op over F_q[t]
                mu = high.shift(-H[i])
                for mat in (W, R):
                    for row in mat:
                        if row[i].c:
                            row[j] = row[j] + (-mu) * row[i]
            low = W[i][j].part_le(H[j])
            if low.c:
                # row_i -= (low / t^H_j) * row_j, an op over F_q[t^-1]
                lam = low.shift(-H[j])
                nlam = -lam
                for mat in (W, L):
                    rj = mat[j]
                    ri = mat[i]
                    for k in range(n):
                        if rj[k].c:
                            ri[k] = ri[k] + nlam * rj[k]


def birkhoff_reduce(M, verify=True):
    """Factor M through a diagonal of t-powers; returns a verified witness."""
    _require_unit_det(M)
    ctx = M.ctx
    n = M.n
    zero = LaurentPoly.zero(ctx)
    one = LaurentPoly.one(ctx)
    W = [list(row) for row in M.rows]
    L = [[one if i == j else zero for j in range(n)] for i in range(n)]
    R = [[one if i == j else zero for j in range(n)] for i in range(n)]

    max_rounds = 100 + 10 * n * n
    for _ in range(max_rounds):
        H = _column_triangularize(W, R, ctx, n)
        _clean_pass(W, L, R, n, H)
        leftover = None
        for j in range(n):
            for i in range(j + 1, n):
                if W[i][j].c:
                    leftover = (i, j)
                    break
            if leftover:
                break
        if leftover is None:
            break
        i, j = leftover
        # pivot on the lowest surviving term c*t^m, H_j < m < H_i
        e = W[i][j]
        m = e.valuation
        c = e.c[0]
        lam = LaurentPoly.t_power(ctx, H[j] - m, ctx.neg(ctx.inv(c)))
        for mat in (W, L):
            rj = mat[j]
            ri = mat[i]
            for k in range(n):
                if ri[k].c:
                    rj[k] = rj[k] + lam * ri[k]
    else:
        raise ReductionError("elimination failed to converge")

    exps = []
    for i in range(n):
        um = W[i][i].unit_monomial()
        exps.append(um[1])
    d = Vertex(exps)
    # sort the diagonal descending with a constant permutation on both sides
    order = sorted(range(n), key=lambda i: exps[i], reverse=True)
    Lm = LaurentMat(ctx, [L[i] for i in order])
    Rm = LaurentMat(ctx, [[R[i][order[j]] for j in range(n)] for i in range(n)])
    wit = ReductionWitness(Lm, Rm, d)
    if verify:
        wit.verify(M)
    return wit


# -- independent oracle -------------------------------------------------------
#
# For X with unit-monomial determinant, let h(m) be the F_q-dimension of
# { g : deg g_i <= m, X*g polynomial }.  This dimension only depends on the
# class of X under left multiplication by GL_n(F_q[t]) and right
# multiplication by GL_n(F_q[t^-1]), and equals sum_i max(0, m + d_i + 1)
# when X = diag(t^d).  Applying this to the transpose of M reads off the
# splitting exponents of M from the jump sequence h(m) - h(m-1) = #{d_i >= -m}.


class _RankTracker:
    """Incremental column rank of a matrix over F_p (prime p)."""

    def __init__(self, p, nrows):
        self.p = p
        self.nrows = nrows
        self.pivots = []  # (position, packed or list vector), leading coeff 1
        self.rank = 0
        self._mask3 = int("1" * nrows, 16) if (p == 3 and nrows) else 0

    # packed layout: p=2 -> one bit per entry; p=3 -> one nibble per entry

    def _pack(self, entries):
        if self.p == 2:
            v = 0
            for pos, c in entries:
                v |= 1 << pos
            return v
        if self.p == 3:
            v = 0
            for pos, c in entries:
                v |= c << (4 * pos)
            return v
        vec = [0] * self.nrows
        for pos, c in entries:
            vec[pos] = c
        return vec

    @staticmethod
    def _mod3(v, mask):
        # per-nibble reduction of values <= 8 to values < 3
        m = ((v + 2 * mask) >> 3) & mask
        v -= 6 * m
        m = ((v + mask) >> 2) & mask
        return v - 3 * m

    def add_column(self, entries):
        """Insert one column (list of (row, coeff)); returns rank gain 0/1."""
        p = self.p
        vec = self._pack(entries)
        if p == 2:
            for pos, pv in self.pivots:
                if (vec >> pos) & 1:
                    vec ^= pv
            if not vec:
                return 0
            pos = vec.bit_length() - 1
        elif p == 3:
            mask = self._mask3
            for pos, pv in self.pivots:
                c = (vec >> (4 * pos)) & 15
                if c:
                    # vec -= c * pv  (nibble-wise mod 3)
                    sub = pv if c == 1 else self._mod3(pv + pv, mask)
                    negd = (sub | (sub >> 1)) & mask
                    neg = 3 * negd - sub
                    vec = self._mod3(vec + neg, mask)
            if not vec:
                return 0
            pos = (vec.bit_length() - 1) // 4
            lead = (vec >> (4 * pos)) & 15
            if lead == 2:
                vec = self._mod3(vec + vec, mask)
        else:
            for pos, pv in self.pivots:
                c = vec[pos]
                if c:
                    vec = [(a - c * b) % p for a, b in zip(vec, pv)]
            pos = None
            for k in range(self.nrows - 1, -1, -1):
                if vec[k]:
                    pos = k
                    break
            if pos is None:
                return 0
            inv = pow(vec[pos], -1, p)
            if inv != 1:
                vec = [(a * inv) % p for a in vec]
        self.pivots.append((pos, vec))
        self.rank += 1
        return 1


def splitting_type_cohomology(M):
    """Splitting exponents of M, computed without any elimination on M."""
    cu = _require_unit_det(M)
    ctx = M.ctx
    n = M.n
    detval = cu[1]
    # center the exponents: a scalar power of t shifts every d_i equally
    c = detval // n if n else 0
    Mc = M.scale_rows_by_t([-c] * n)
    Minv = mat_adjugate(Mc)
    dc = mat_det(Mc).unit_monomial()
    inv_scale = ctx.inv(dc[0])
    Minv = LaurentMat(ctx, [[x.mono_mul(inv_scale, -dc[1]) for x in row]
                            for row in Minv.rows])
    exps = [(_x.valuation, _x.degree) for row in list(Mc.rows) + list(Minv.rows)
            for _x in row if _x.c]
    lo = min(v for v, _ in exps)
    hi = max(d for _, d in exps)
    B = (hi - lo) + n

    X = Mc.transpose()
    # unknown exponents: e in [e_lo, ...]; any solution g = X^-1*(polynomial)
    # has valuation >= val(X^-1) = val(Minv), so lower exponents never matter
    e_lo = max(-B, min(x.valuation for row in Minv.rows for x in row if x.c))
    xval = min(x.valuation for row in X.rows for x in row if x.c)
    f_lo = e_lo + xval
    nrows_q = n * max(0, -f_lo)

    if ctx.e == 1:
        tracker = _RankTracker(ctx.p, nrows_q)
        expand = None
    else:
        tracker = _RankTracker(ctx.p, nrows_q * ctx.e)
        expand = [ctx.code_of(tuple(1 if k == t_ else 0 for k in range(ctx.e)))
                  for t_ in range(ctx.e)]

    def columns_for(j, e):
        """F_p columns of the unknown coefficient (g_j, exponent e)."""
        base_entries = []
        for i in range(n):
            x = X.rows[i][j]
            for k, v in x.terms().items():
                f = e + k
                if f_lo <= f <= -1:
                    base_entries.append((( -1 - f) * n + i, v))
        if ctx.e == 1:
            yield base_entries
            return
        for b in expand:
            col = []
            for pos, v in base_entries:
                code = ctx.mul(v, b)
                for comp, cc in enumerate(ctx.coeffs_of(code)):
                    if cc:
                        col.append((pos * ctx.e + comp, cc))
            yield col

    counts = {}
    prev_jump = 0
    seen = 0
    rank = 0
    m = e_lo - 1
    prev_h = 0
    unknowns = 0
    limit = B + 1
    while m < limit:
        m += 1
        for j in range(n):
            for col in columns_for(j, m):
                rank += tracker.add_column(col)
        unknowns += n * ctx.e
        h = unknowns - rank
        jump_scaled = h - prev_h
        prev_h = h
        if jump_scaled % ctx.e:
            raise ReductionError("dimension jump is not F_q-linear")
        jump = jump_scaled // ctx.e
        fresh = jump - prev_jump
        if fresh < 0:
            raise ReductionError("non-monotone dimension jumps")
        if fresh:
            counts[-m] = fresh
            seen += fresh
        prev_jump = jump
        if jump == n:
            break
    if seen != n:
        raise ReductionError("window too small to recover all exponents")
    out = []
    for val, cnt in counts.items():
        out.extend([val + c] * cnt)
    d = Vertex(out)
    if sum(d) != detval:
        raise ReductionError("exponents disagree with the determinant")
    return d
