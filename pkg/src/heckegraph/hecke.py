"""Neighborhoods of Hecke operators on rank-n bundles over the projective
line, the operator algebra on their graphs, the delta invariants with the
edge-window test, and polynomial-in-q multiplicity interpolation.

A vertex is a descending integer n-tuple d, standing for the double-coset
representative diag(t^d_1, ..., t^d_n), equivalently the bundle
O(-d_1) + ... + O(-d_n).  The neighbors of d under the operator with
parameters (q, n, r, dx) are obtained by reducing diag(t^d) * delta over all
coset representatives delta; equal targets aggregate, total mass is the
Gaussian binomial [n choose n-r] at q^dx, and every target gains r*dx in
coordinate sum.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .field import make_field
from .grassmann import enumerate_delta_matrices, gaussian_binomial
from .reduction import Vertex, birkhoff_reduce


class InvariantError(Exception):
    pass


@dataclass(frozen=True)
class HeckeParams:
    ctx: object
    n: int
    r: int
    dx: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be >= 1")
        if not 1 <= self.r <= self.n:
            raise ValueError("need 1 <= r <= n")
        if self.dx < 1:
            raise ValueError("place degree must be >= 1")

    @property
    def q(self):
        return self.ctx.q

    def total_mass(self):
        return gaussian_binomial(self.n - self.r, self.n, self.q ** self.dx)


class Edge(tuple):

    __slots__ = ()

    def __new__(cls, src, dst, mult):
        return super().__new__(cls, (Vertex(src), Vertex(dst), mult))

    src = property(lambda self: self[0])
    dst = property(lambda self: self[1])
    mult = property(lambda self: self[2])

    def __repr__(self):
        return "Edge(%r -> %r : %s)" % (self.src, self.dst, self.mult)


@lru_cache(maxsize=None)
def _delta_mats(ctx, n, r, dx):
    return tuple(d.mat for d in enumerate_delta_matrices(ctx, n, r, dx))


@lru_cache(maxsize=None)
def _neighbor_map(params, v):
    acc = {}
    for mat in _delta_mats(params.ctx, params.n, params.r, params.dx):
        d = birkhoff_reduce(mat.scale_rows_by_t(v)).d
        acc[d] = acc.get(d, 0) + 1
    mass = params.total_mass()
    if sum(acc.values()) != mass:
        raise InvariantError("edge mass %d != %d" % (sum(acc.values()), mass))
    gain = params.r * params.dx
    for dst in acc:
        if sum(dst) != sum(v) + gain:
            raise InvariantError("target %r breaks degree additivity" % (dst,))
    return acc


def neighbor_multiplicities(params, v):
    """Aggregated target -> multiplicity map for one vertex."""
    v = Vertex(v)
    if len(v) != params.n:
        raise ValueError("vertex length %d != rank %d" % (len(v), params.n))
    return dict(_neighbor_map(params, v))


def neighbors(params, v):
    """The outgoing edges at v, targets sorted lexicographically."""
    v = Vertex(v)
    acc = neighbor_multiplicities(params, v)
    return tuple(Edge(v, dst, m) for dst, m in sorted(acc.items()))


def phi_n_inverse_neighbors(params, v):
    """Edges of the inverse of the full-rank operator: a pure shift."""
    if params.r != params.n:
        raise ValueError("the inverse shift exists only for r = n")
    v = Vertex(v)
    return (Edge(v, tuple(d - params.dx for d in v), 1),)


# -- operator algebra ---------------------------------------------------------

class NeighborFn:
    """A Hecke operator's graph as a lazily evaluated Vertex -> EdgeSet map."""

    def __init__(self, kind, params=None, children=(), scalar=None):
        self.kind = kind
        self.params = params
        self.children = tuple(children)
        self.scalar = scalar

    def _key(self):
        if self.params is not None:
            return (self.params.ctx.p, self.params.ctx.e, self.params.n)
        for ch in self.children:
            k = ch._key()
            if k is not None:
                return k
        return None

    def evaluate(self, v):
        """Return {target: multiplicity} with zero totals dropped."""
        v = Vertex(v)
        kind = self.kind
        if kind == "zero":
            return {}
        if kind == "identity":
            return {v: Fraction(1)}
        if kind == "generator":
            return {d: Fraction(m) for d, m in neighbor_multiplicities(self.params, v).items()}
        if kind == "inverse-shift":
            (edge,) = phi_n_inverse_neighbors(self.params, v)
            return {edge.dst: Fraction(1)}
        if kind == "scale":
            return {d: self.scalar * m for d, m in self.children[0].evaluate(v).items()}
        if kind == "add":
            acc = {}
            for ch in self.children:
                for d, m in ch.evaluate(v).items():
                    acc[d] = acc.get(d, Fraction(0)) + m
            return {d: m for d, m in acc.items() if m}
        if kind == "convolve":
            first, second = self.children
            acc = {}
            for u, m1 in first.evaluate(v).items():
                for w, m2 in second.evaluate(u).items():
                    acc[w] = acc.get(w, Fraction(0)) + m1 * m2
            return {d: m for d, m in acc.items() if m}
        raise ValueError("unknown operator kind %r" % kind)

    def __call__(self, v):
        return self.evaluate(v)

    def edge_set(self, v):
        v = Vertex(v)
        return tuple(Edge(v, d, m) for d, m in sorted(self.evaluate(v).items()))

    def __repr__(self):
        if self.kind == "generator":
            p = self.params
            return "Phi(q=%d,n=%d,r=%d,dx=%d)" % (p.q, p.n, p.r, p.dx)
        return "NeighborFn(%s)" % self.kind


def hecke_operator(params):
    return NeighborFn("generator", params=params)


def hecke_inverse(params):
    return NeighborFn("inverse-shift", params=params)


def op_algebra(kind, *args):
    """Combinators: zero(), identity(), add(F, G, ...), scale(c, F),
    convolve(F, G)."""
    if kind == "zero":
        return NeighborFn("zero")
    if kind == "identity":
        return NeighborFn("identity")
    if kind == "add":
        _check_compatible(args)
        return NeighborFn("add", children=args)
    if kind == "scale":
        c, fn = args
        c = Fraction(c)
        if not c:
            raise ValueError("scale factor must be nonzero")
        return NeighborFn("scale", children=(fn,), scalar=c)
    if kind == "convolve":
        _check_compatible(args)
        return NeighborFn("convolve", children=args)
    raise ValueError("unknown operator kind %r" % kind)


def _check_compatible(fns):
    keys = {fn._key() for fn in fns if fn._key() is not None}
    if len(keys) > 1:
        raise ValueError("operators live on different graphs: %r" % (keys,))


# -- sheaf-side invariants ----------------------------------------------------

def sheaf_degrees(v):
    """Splitting degrees of the bundle attached to a vertex: sort_desc(-d)."""
    return tuple(sorted((-d for d in v), reverse=True))


def delta_k(e, k):
    """n*(e_1+...+e_k) - k*(e_1+...+e_n) for descending degrees e."""
    n = len(e)
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    return n * sum(e[:k]) - k * sum(e)


def check_delta_constraint(params, edge, k):
    """Window test for one edge: the target's delta_k must sit in
    {delta_k(src) - k*dx*(n-r) + j*n : j >= 0} cut off at delta_k(src) + k*dx*r."""
    n, r, dx = params.n, params.r, params.dx
    a = delta_k(sheaf_degrees(edge.src), k)
    b = delta_k(sheaf_degrees(edge.dst), k)
    base = a - k * dx * (n - r)
    return b >= base and (b - base) % n == 0 and b <= a + k * dx * r


def subset_twist_support(params, v):
    """Every r-subset twist of v must appear among its neighbors."""
    v = Vertex(v)
    acc = neighbor_multiplicities(params, v)
    for subset in combinations(range(params.n), params.r):
        target = Vertex(d + (params.dx if i in subset else 0) for i, d in enumerate(v))
        if acc.get(target, 0) < 1:
            return False
    return True


# -- polynomial interpolation of multiplicities -------------------------------

class InterpolationError(Exception):
    pass


def parse_shape(shape, n):
    """Parse "d1>d2=d3" into the list of relations between consecutive slots."""
    rels = []
    rest = shape.replace(" ", "")
    for i in range(1, n + 1):
        tag = "d%d" % i
        if not rest.startswith(tag):
            raise ValueError("shape %r must name d1..d%d in order" % (shape, n))
        rest = rest[len(tag):]
        if i < n:
            if not rest or rest[0] not in ">=":
                raise ValueError("shape %r needs '>' or '=' after d%d" % (shape, i))
            rels.append(rest[0])
            rest = rest[1:]
    if rest:
        raise ValueError("trailing junk in shape %r" % (shape,))
    return rels


def shape_vertex(shape, n, gap):
    """A representative vertex for a gap pattern, with generic gaps."""
    rels = parse_shape(shape, n)
    vals = [0]
    for rel in rels:
        vals.append(vals[-1] - (gap if rel == ">" else 0))
    return Vertex(vals)


def _prime_power_field(Q):
    p = 2
    while p * p <= Q:
        if Q % p == 0:
            e = 0
            m = Q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError("%d is not a prime power" % Q)
            return make_field(p, e)
        p += 1
    return make_field(Q, 1)


def _lagrange_fit(points):
    """Exact interpolating polynomial through (x, y) pairs; coefficients
    low-to-high as Fractions."""
    coeffs = [Fraction(0)] * len(points)
    for xi, yi in points:
        # basis polynomial prod_{xj != xi} (x - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            denom *= xi - xj
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            basis = nxt
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def format_poly(coeffs, var="q"):
    if not any(coeffs):
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "1" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
        if k == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = "%s%s" % (abs(c), mono)
        parts.append(("- " if c < 0 else "+ ") + body)
    return _join_signed(parts)


def _join_signed(parts):
    out = []
    for i, part in enumerate(parts):
        if i == 0:
            out.append(part[2:] if part.startswith("+ ") else part)
        else:
            out.append(part if part.startswith(("+ ", "- ")) else "+ " + part)
    return " ".join(out)


def interpolate_multiplicities(n, r, dx, shape, prime_powers, holdout=None):
    """Fit each target offset's multiplicity as an integer polynomial in q.

    Neighborhoods of a generic representative of the gap pattern are computed
    at every supplied prime power; each target's multiplicities are
    Lagrange-interpolated and then validated against a held-out point (the
    next prime after the largest sample when not given).  A failed holdout is
    an error, never a silent acceptance.
    """
    degree_bound = (n - r) * r * dx
    if len(prime_powers) < degree_bound + 1:
        raise InterpolationError("need at least %d sample points, got %d"
                                 % (degree_bound + 1, len(prime_powers)))
    if len(set(prime_powers)) != len(prime_powers):
        raise InterpolationError("sample points must be distinct")
    if holdout is None:
        holdout = max(prime_powers) + 1
        while not _is_prime_int(holdout):
            holdout += 1
    gap = dx * r + 1
    v = shape_vertex(shape, n, gap)

    def offsets_at(Q):
        params = HeckeParams(_prime_power_field(Q), n, r, dx)
        return {tuple(dst[i] - v[i] for i in range(n)): m
                for dst, m in neighbor_multiplicities(params, v).items()}

    samples = {Q: offsets_at(Q) for Q in prime_powers}
    held = offsets_at(holdout)
    targets = sorted(set().union(*samples.values()) | set(held))
    out = {}
    for off in targets:
        pts = [(Q, samples[Q].get(off, 0)) for Q in prime_powers]
        coeffs = _lagrange_fit(pts)
        if len(coeffs) - 1 > degree_bound:
            raise InterpolationError("offset %r: degree %d exceeds bound %d"
                                     % (off, len(coeffs) - 1, degree_bound))
        if any(c.denominator != 1 for c in coeffs):
            raise InterpolationError("offset %r: non-integer coefficients %r"
                                     % (off, coeffs))
        ints = [int(c) for c in coeffs]
        if poly_eval(ints, holdout) != held.get(off, 0):
            raise InterpolationError("offset %r: held-out point q=%d disagrees"
                                     % (off, holdout))
        out[off] = tuple(ints)
    return out


def _is_prime_int(x):
    if x < 2:
        return False
    d = 2
    while d * d <= x:
        if x % d == 0:
            return False
        d += 1
    return True
