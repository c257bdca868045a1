"""Laurent polynomials F_q[t, t^-1] and square matrices over them.

A LaurentPoly is kept in normal form: a valuation offset plus a dense tuple
of coefficient codes whose first and last entries are nonzero; the zero
polynomial has an empty tuple.  Matrices are immutable row tuples.  The unit
tests and the reduction module lean on `is_glr_unit`, which decides
membership in GL_n over F_q[t], F_q[t^-1] or F_q[t, t^-1].
"""


class LaurentPoly:

    __slots__ = ("ctx", "off", "c")

    def __init__(self, ctx, off, coeffs):
        # normalize: strip zero coefficients at both ends
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        self.ctx = ctx
        if lo == hi:
            self.off = 0
            self.c = ()
        else:
            self.off = off + lo
            self.c = tuple(coeffs[lo:hi])

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, 0, ())

    @classmethod
    def const(cls, ctx, code):
        return cls(ctx, 0, (code,))

    @classmethod
    def one(cls, ctx):
        return cls(ctx, 0, (1,))

    @classmethod
    def t_power(cls, ctx, k, code=1):
        return cls(ctx, k, (code,))

    @classmethod
    def from_terms(cls, ctx, terms):
        """Build from {exponent: coefficient code}."""
        if not terms:
            return cls.zero(ctx)
        lo = min(terms)
        hi = max(terms)
        c = [0] * (hi - lo + 1)
        for k, v in terms.items():
            c[k - lo] = v
        return cls(ctx, lo, c)

    # -- structure ------------------------------------------------------------

    def is_zero(self):
        return not self.c

    @property
    def valuation(self):
        if not self.c:
            raise ValueError("zero polynomial has no valuation")
        return self.off

    @property
    def degree(self):
        if not self.c:
            raise ValueError("zero polynomial has no degree")
        return self.off + len(self.c) - 1

    def coeff(self, k):
        if not self.c or not self.off <= k <= self.off + len(self.c) - 1:
            return 0
        return self.c[k - self.off]

    def terms(self):
        return {self.off + i: v for i, v in enumerate(self.c) if v}

    def is_constant(self):
        return not self.c or (self.off == 0 and len(self.c) == 1)

    def unit_monomial(self):
        """Return (code, exponent) when the polynomial is c*t^k, else None."""
        if len(self.c) == 1:
            return (self.c[0], self.off)
        return None

    def in_plus(self):
        # member of F_q[t]
        return not self.c or self.off >= 0

    def in_minus(self):
        # member of F_q[t^-1]
        return not self.c or self.off + len(self.c) - 1 <= 0

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LaurentPoly) or other.ctx != self.ctx:
            raise ValueError("mixed coefficient contexts")
        return other

    def __add__(self, other):
        self._check(other)
        if not self.c:
            return other
        if not other.c:
            return self
        lo = min(self.off, other.off)
        hi = max(self.off + len(self.c), other.off + len(other.c))
        out = [0] * (hi - lo)
        out[self.off - lo:self.off - lo + len(self.c)] = self.c
        add = self.ctx.add
        base = other.off - lo
        for i, v in enumerate(other.c):
            if v:
                out[base + i] = add(out[base + i], v)
        return LaurentPoly(self.ctx, lo, out)

    def __neg__(self):
        neg = self.ctx.neg
        return LaurentPoly(self.ctx, self.off, [neg(v) for v in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if not self.c or not other.c:
            return LaurentPoly.zero(self.ctx)
        mul = self.ctx.mul
        add = self.ctx.add
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    if y:
                        k = i + j
                        out[k] = add(out[k], mul(x, y))
        return LaurentPoly(self.ctx, self.off + other.off, out)

    def scale(self, code):
        if code == 0:
            return LaurentPoly.zero(self.ctx)
        if code == 1:
            return self
        mul = self.ctx.mul
        return LaurentPoly(self.ctx, self.off, [mul(code, v) for v in self.c])

    def shift(self, k):
        if not self.c:
            return self
        return LaurentPoly(self.ctx, self.off + k, self.c)

    def mono_mul(self, code, k):
        """Multiply by code*t^k."""
        return self.scale(code).shift(k)

    def part_ge(self, k):
        """Terms with exponent >= k."""
        if not self.c or self.off >= k:
            return self
        cut = k - self.off
        if cut >= len(self.c):
            return LaurentPoly.zero(self.ctx)
        return LaurentPoly(self.ctx, k, self.c[cut:])

    def part_le(self, k):
        """Terms with exponent <= k."""
        if not self.c or self.off + len(self.c) - 1 <= k:
            return self
        cut = k - self.off + 1
        if cut <= 0:
            return LaurentPoly.zero(self.ctx)
        return LaurentPoly(self.ctx, self.off, self.c[:cut])

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.ctx == other.ctx
                and self.off == other.off and self.c == other.c)

    def __hash__(self):
        return hash((self.ctx, self.off, self.c))

    def __repr__(self):
        return "LaurentPoly(%s)" % self.render()

    def render(self):
        if not self.c:
            return "0"
        parts = []
        for i, v in enumerate(self.c):
            if not v:
                continue
            k = self.off + i
            if self.ctx.e == 1:
                cs = str(v)
            else:
                cs = "[" + ",".join(str(d) for d in self.ctx.coeffs_of(v)) + "]"
            if k == 0:
                parts.append(cs)
            else:
                tp = "t" if k == 1 else "t^%d" % k
                parts.append(tp if (cs == "1" and self.ctx.e == 1) else cs + tp)
        return " + ".join(parts)


def lp_arith(op, a, b=None):
    """Dispatch {add|mul|neg} on LaurentPoly operands."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError("unknown op %r" % op)


class LaurentMat:

    __slots__ = ("ctx", "n", "rows")

    def __init__(self, ctx, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for x in r:
                if x.ctx != ctx:
                    raise ValueError("mixed coefficient contexts")
        self.ctx = ctx
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, ctx, n):
        one = LaurentPoly.one(ctx)
        zero = LaurentPoly.zero(ctx)
        return cls(ctx, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diag_t(cls, ctx, exps):
        zero = LaurentPoly.zero(ctx)
        n = len(exps)
        return cls(ctx, [[LaurentPoly.t_power(ctx, exps[i]) if i == j else zero
                          for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self):
        return LaurentMat(self.ctx, zip(*self.rows))

    def scale_rows_by_t(self, exps):
        """Left-multiply by diag(t^exps)."""
        return LaurentMat(self.ctx, [[x.shift(exps[i]) for x in row]
                                     for i, row in enumerate(self.rows)])

    def __eq__(self, other):
        return (isinstance(other, LaurentMat) and self.ctx == other.ctx
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ctx, self.rows))

    def __repr__(self):
        body = "; ".join("[" + ", ".join(x.render() for x in row) + "]"
                         for row in self.rows)
        return "LaurentMat(%s)" % body


def mat_mul(A, B):
    if A.ctx != B.ctx or A.n != B.n:
        raise ValueError("size or context mismatch")
    n = A.n
    zero = LaurentPoly.zero(A.ctx)
    rows = []
    for i in range(n):
        arow = A.rows[i]
        out = []
        for j in range(n):
            acc = zero
            for k in range(n):
                x = arow[k]
                y = B.rows[k][j]
                if x.c and y.c:
                    acc = acc + x * y
            out.append(acc)
        rows.append(out)
    return LaurentMat(A.ctx, rows)


def mat_det(A):
    """Exact determinant by column-subset minor expansion."""
    n = A.n
    zero = LaurentPoly.zero(A.ctx)
    rows = A.rows
    # memo[(i, mask)] = det of rows i.. on the columns in mask
    memo = {}

    def minor(i, mask):
        if i == n:
            return LaurentPoly.one(A.ctx)
        key = (i, mask)
        got = memo.get(key)
        if got is not None:
            return got
        acc = zero
        sign = 0
        m = mask
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            x = rows[i][j]
            if x.c:
                sub = minor(i + 1, mask & ~(1 << j))
                if sub.c:
                    term = x * sub
                    acc = acc + (term if sign % 2 == 0 else -term)
            sign += 1
        memo[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


def mat_adjugate(A):
    """Adjugate matrix: adj(A)[i][j] = (-1)^(i+j) * minor_ji."""
    n = A.n
    if n == 1:
        return LaurentMat.identity(A.ctx, 1)
    out = [[None] * n for _ in range(n)]
    idx = list(range(n))
    for i in range(n):
        for j in range(n):
            sub = LaurentMat(A.ctx, [[A.rows[r][c] for c in idx if c != i]
                                     for r in idx if r != j])
            d = mat_det(sub)
            out[i][j] = d if (i + j) % 2 == 0 else -d
    return LaurentMat(A.ctx, out)


def is_glr_unit(A, which):
    """Invertibility of A over F_q[t] ("R+"), F_q[t^-1] ("R-") or both ("R+-").

    For R+ and R- the determinant must be a nonzero constant; over the full
    Laurent ring any nonzero monomial c*t^k is a unit.
    """
    if which in ("R+", "R-"):
        member = LaurentPoly.in_plus if which == "R+" else LaurentPoly.in_minus
        if not all(member(x) for row in A.rows for x in row):
            return False
        d = mat_det(A)
        return bool(d.c) and d.is_constant()
    if which in ("R+-", "R±", "Rpm"):
        d = mat_det(A)
        return d.unit_monomial() is not None
    raise ValueError("unknown ring tag %r" % which)
