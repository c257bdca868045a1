"""Exact arithmetic and enumeration for small finite fields F_q, q = p^e.

Elements are stored internally as integer codes 0 <= v < q, where v encodes
the coefficient vector (c_0, ..., c_{e-1}) of the polynomial representation
via v = c_0 + c_1*p + ... + c_{e-1}*p^(e-1).  The reducing modulus is the
lexicographically smallest monic irreducible polynomial of degree e over F_p
(coefficients read low-to-high), so two fields built with the same (p, e)
always carry identical arithmetic.
"""

from itertools import product

DEFAULT_CARD_BOUND = 1 << 16

_FIELD_CACHE = {}


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- dense polynomials over F_p, coefficient lists low-to-high ---------------

def _ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a, m, p):
    # remainder of a modulo monic m
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, y in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * y) % p
        a.pop()
    return _ptrim(a)


def _is_irreducible(m, p):
    # trial division by every monic polynomial of degree 1..deg(m)//2
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            div = list(tail) + [1]
            if not _pmod(m, div, p):
                return False
    return True


def _canonical_modulus(p, e):
    # smallest monic irreducible of degree e, lexicographic on (c_0,...,c_{e-1})
    for tail in product(range(p), repeat=e):
        m = list(tail) + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise ArithmeticError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """Arithmetic context for F_q acting on integer element codes."""

    __slots__ = ("p", "e", "q", "modulus", "_exp", "_log", "_mul_table",
                 "_add_table", "_inv_table")

    def __init__(self, p, e, modulus):
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, q = self.p, self.q
        # discrete-log tables from a multiplicative generator
        for g in range(1, q):
            if g == 0:
                continue
            exp = [1]
            x = 1
            while True:
                x = self._mul_slow(x, g)
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                break
        else:
            raise ArithmeticError("no generator found")
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        self._exp = exp
        self._log = log
        self._inv_table = [0] + [exp[(q - 1 - log[a]) % (q - 1)] for a in range(1, q)]
        if q <= 256:
            self._add_table = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
            self._mul_table = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_table = None
            self._mul_table = None

    def _digits(self, v):
        p = self.p
        out = []
        for _ in range(self.e):
            v, r = divmod(v, p)
            out.append(r)
        return out

    def _undigits(self, c):
        v = 0
        for x in reversed(c):
            v = v * self.p + x
        return v

    def _add_slow(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def _mul_slow(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        prod_ = _pmul(_ptrim(self._digits(a)), _ptrim(self._digits(b)), self.p)
        red = _pmod(prod_, list(self.modulus), self.p)
        return self._undigits(red + [0] * (self.e - len(red)))

    # -- code-level operations (the hot path) --------------------------------

    def add(self, a, b):
        t = self._add_table
        if t is not None:
            return t[a][b]
        return self._add_slow(a, b)

    def neg(self, a):
        if self.e == 1:
            return (-a) % self.p
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        t = self._mul_table
        if t is not None:
            return t[a][b]
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return self._inv_table[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("inversion of zero")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def element_codes(self):
        # lexicographic on coefficient vectors (c_0, ..., c_{e-1}), zero first
        if self.e == 1:
            return list(range(self.p))
        return [self._undigits(list(c)) for c in product(range(self.p), repeat=self.e)]

    def coeffs_of(self, code):
        return tuple(self._digits(code))

    def code_of(self, coeffs):
        if len(coeffs) != self.e or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError("coefficient vector does not fit this field")
        return self._undigits(list(coeffs))

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((FieldCtx, self.p, self.e))

    def __repr__(self):
        return "FieldCtx(p=%d, e=%d)" % (self.p, self.e)

    def __reduce__(self):
        return (make_field, (self.p, self.e))


class FieldElem:
    """Element of F_q; a thin wrapper over an integer code in a FieldCtx."""

    __slots__ = ("ctx", "val")

    def __init__(self, ctx, val):
        self.ctx = ctx
        self.val = val

    @property
    def coeffs(self):
        return self.ctx.coeffs_of(self.val)

    def _check(self, other):
        if not isinstance(other, FieldElem) or other.ctx != self.ctx:
            raise ValueError("mixed field contexts")
        return other

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.val, self._check(other).val))

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.val, self._check(other).val))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.val))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.val, self._check(other).val))

    def __truediv__(self, other):
        return FieldElem(self.ctx, self.ctx.div(self.val, self._check(other).val))

    def __pow__(self, k):
        return FieldElem(self.ctx, self.ctx.pow(self.val, k))

    def inv(self):
        return FieldElem(self.ctx, self.ctx.inv(self.val))

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        return (isinstance(other, FieldElem)
                and self.ctx == other.ctx and self.val == other.val)

    def __hash__(self):
        return hash((self.ctx, self.val))

    def __repr__(self):
        if self.ctx.e == 1:
            return str(self.val)
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


def make_field(p, e, card_bound=DEFAULT_CARD_BOUND):
    """Build (or fetch the cached) F_{p^e} context with the canonical modulus."""
    key = (p, e)
    ctx = _FIELD_CACHE.get(key)
    if ctx is not None:
        return ctx
    if not _is_prime(p):
        raise ValueError("p = %r is not prime" % (p,))
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p ** e > card_bound:
        raise ValueError("field cardinality %d exceeds bound %d" % (p ** e, card_bound))
    modulus = _canonical_modulus(p, e) if e > 1 else (0, 1)
    ctx = FieldCtx(p, e, modulus)
    _FIELD_CACHE[key] = ctx
    return ctx


def field_arith(ctx, op, a, b=None):
    """Dispatch {add|sub|mul|inv|neg} on FieldElem operands."""
    for x in (a, b):
        if x is not None and x.ctx != ctx:
            raise ValueError("mixed field contexts")
    if op in ("add", "sub", "mul"):
        if b is None:
            raise ValueError("binary op %r needs two operands" % op)
        return {"add": a + b, "sub": a - b, "mul": a * b}[op]
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    raise ValueError("unknown op %r" % op)


def enumerate_elements(ctx):
    """All q elements, ordered lexicographically on coefficient vectors."""
    return [FieldElem(ctx, v) for v in ctx.element_codes()]
