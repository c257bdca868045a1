"""Schubert index sets, Grassmannian point counts, and the upper-triangular
coset representatives attached to a place of degree dx.

A representative matrix is upper triangular with diagonal entry 1 at the
positions listed in a Schubert index lambda (a strictly increasing tuple of
k = n - r positions) and t^dx elsewhere.  An off-diagonal entry (i, j) with
i < j is allowed to be nonzero only when diagonal(i) = t^dx and
diagonal(j) = 1, and is then a free polynomial of degree < dx over F_q.  The
number of such matrices is the Gaussian binomial [n choose n-r] at q^dx.
"""

from itertools import combinations, product

from .laurent import LaurentMat, LaurentPoly


def schubert_indices(k, n):
    """All strictly increasing k-tuples in [1, n], lexicographically."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return [tuple(c) for c in combinations(range(1, n + 1), k)]


def gaussian_binomial(k, n, Q):
    """#Gr(k, n)(F_Q) = prod_{i<k} (Q^(n-i) - 1) / (Q^(k-i) - 1), exactly."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if Q < 2:
        raise ValueError("Q must be at least 2")
    num = 1
    den = 1
    for i in range(k):
        num *= Q ** (n - i) - 1
        den *= Q ** (k - i) - 1
    count, rem = divmod(num, den)
    assert rem == 0
    return count


class DeltaMatrix:
    """One coset representative: the matrix plus its combinatorial data."""

    __slots__ = ("mat", "lam", "free_coeffs")

    def __init__(self, mat, lam, free_coeffs):
        self.mat = mat
        self.lam = lam
        self.free_coeffs = free_coeffs

    def __repr__(self):
        return "DeltaMatrix(lam=%r, free=%r)" % (self.lam, self.free_coeffs)


def enumerate_delta_matrices(ctx, n, r, dx):
    """All representatives for rank n, coset type r, place degree dx.

    Deterministic order: Schubert index first (lexicographic), then the free
    coefficient vectors (lexicographic on the element codes of each entry's
    low-to-high polynomial coefficients).
    """
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    if dx < 1:
        raise ValueError("place degree must be >= 1")
    k = n - r
    codes = ctx.element_codes()
    zero = LaurentPoly.zero(ctx)
    out = []
    for lam in schubert_indices(k, n):
        ones = set(lam)
        free_pos = [(i, j) for i in range(1, n + 1) if i not in ones
                    for j in range(i + 1, n + 1) if j in ones]
        diag = [LaurentPoly.one(ctx) if i in ones else LaurentPoly.t_power(ctx, dx)
                for i in range(1, n + 1)]
        slots = len(free_pos) * dx
        for choice in product(codes, repeat=slots):
            rows = [[diag[i] if i == j else zero for j in range(n)] for i in range(n)]
            free = {}
            for idx, (i, j) in enumerate(free_pos):
                cs = choice[idx * dx:(idx + 1) * dx]
                free[(i, j)] = cs
                rows[i - 1][j - 1] = LaurentPoly(ctx, 0, cs)
            out.append(DeltaMatrix(LaurentMat(ctx, rows), lam, free))
    expected = gaussian_binomial(k, n, ctx.q ** dx)
    if len(out) != expected:
        raise AssertionError("representative count %d != %d" % (len(out), expected))
    return out
