import random

import pytest
from hypothesis import given, settings, strategies as st

from heckegraph.field import make_field
from heckegraph.laurent import LaurentMat, LaurentPoly, mat_mul
from heckegraph.reduction import (ReductionError, Vertex, birkhoff_reduce,
                                  splitting_type_cohomology)

F2 = make_field(2, 1)
F3 = make_field(3, 1)


def lmat(ctx, rows):
    return LaurentMat(ctx, [[LaurentPoly(ctx, off, tuple(cs)) for off, cs in row]
                            for row in rows])


Z = (0, ())
ONE = (0, (1,))
T = (1, (1,))
T2 = (2, (1,))


def test_vertex_sorts_descending():
    assert tuple(Vertex((0, 2, -1))) == (2, 0, -1)
    assert repr(Vertex((1, 0))) == "(1,0)"


def test_diagonal_is_fixed_point():
    M = LaurentMat.diag_t(F3, (3, 1, -2))
    w = birkhoff_reduce(M)
    assert tuple(w.d) == (3, 1, -2)
    assert splitting_type_cohomology(M) == w.d


def test_upper_unipotent_collapses():
    M = lmat(F2, [[T, ONE], [Z, ONE]])
    assert tuple(birkhoff_reduce(M).d) == (1, 0)


def test_pivot_balances_exponents():
    # [[t, 1], [0, t]] splits as (1, 1), not as its diagonal (2, 0)
    M = lmat(F2, [[T, ONE], [Z, T]])
    assert tuple(birkhoff_reduce(M).d) == (1, 1)
    assert tuple(splitting_type_cohomology(M)) == (1, 1)


def test_mixed_linear_entry_balances():
    # [[t^2, 1 + t], [0, 1]]: the degree-one part forces the balanced type
    M = lmat(F2, [[T2, (0, (1, 1))], [Z, ONE]])
    assert tuple(birkhoff_reduce(M).d) == (1, 1)
    assert tuple(splitting_type_cohomology(M)) == (1, 1)


def test_constant_entry_does_not_balance():
    M = lmat(F2, [[T2, ONE], [Z, ONE]])
    assert tuple(birkhoff_reduce(M).d) == (2, 0)


def test_witness_verifies_product():
    # det = t*(2 + t^-1) - 1 = 2t over F_3, a unit monomial
    M = lmat(F3, [[T, ONE], [ONE, (-1, (1, 2))]])
    w = birkhoff_reduce(M)
    w.verify(M)  # must not raise
    prod = mat_mul(mat_mul(w.L, M), w.R)
    assert prod == LaurentMat.diag_t(F3, w.d)


def test_singular_matrix_rejected():
    M = lmat(F2, [[ONE, ONE], [ONE, ONE]])
    with pytest.raises(ReductionError):
        birkhoff_reduce(M)
    # nonzero polynomial determinant that is not a monomial
    M2 = lmat(F2, [[(0, (1, 1)), Z], [Z, ONE]])
    with pytest.raises(ReductionError):
        birkhoff_reduce(M2)


def _unimodular(ctx, n, rng, side):
    """Random product of elementary matrices over F_q[t] or F_q[t^-1]."""
    one = LaurentPoly.one(ctx)
    zero = LaurentPoly.zero(ctx)
    rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    M = LaurentMat(ctx, rows)
    sgn = 1 if side == "+" else -1
    for _ in range(rng.randint(2, 6)):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        k = sgn * rng.randint(0, 2)
        c = rng.choice(ctx.element_codes()[1:])
        E = [[one if a == b else zero for b in range(n)] for a in range(n)]
        E[i][j] = LaurentPoly.t_power(ctx, k, c)
        M = mat_mul(M, LaurentMat(ctx, E))
    return M


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 30), st.sampled_from([2, 3, 4, 5]))
def test_recovers_planted_exponents(seed, q):
    rng = random.Random(seed)
    ctx = make_field(2, 2) if q == 4 else make_field(q, 1)
    n = rng.randint(1, 3)
    d = sorted((rng.randint(-3, 3) for _ in range(n)), reverse=True)
    A = _unimodular(ctx, n, rng, "-")
    B = _unimodular(ctx, n, rng, "+")
    M = mat_mul(mat_mul(A, LaurentMat.diag_t(ctx, d)), B)
    w = birkhoff_reduce(M)
    assert tuple(w.d) == tuple(d)
    assert splitting_type_cohomology(M) == w.d


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 30))
def test_left_right_stability(seed):
    # multiplying by unimodular factors never changes the exponents
    rng = random.Random(seed)
    ctx = F3
    n = 2
    M = None
    while M is None:
        cand = LaurentMat(ctx, [[LaurentPoly(ctx, rng.randint(-2, 2),
                                             tuple(rng.randrange(3) for _ in range(rng.randint(0, 3))))
                                 for _ in range(n)] for _ in range(n)])
        try:
            birkhoff_reduce(cand)
            M = cand
        except ReductionError:
            pass
    base = birkhoff_reduce(M).d
    A = _unimodular(ctx, n, rng, "-")
    B = _unimodular(ctx, n, rng, "+")
    assert birkhoff_reduce(mat_mul(mat_mul(A, M), B)).d == base


def test_exponent_sum_equals_det_valuation():
    rng = random.Random(7)
    ctx = F2
    for _ in range(20):
        A = _unimodular(ctx, 3, rng, "-")
        B = _unimodular(ctx, 3, rng, "+")
        d = [rng.randint(-2, 2) for _ in range(3)]
        M = mat_mul(mat_mul(A, LaurentMat.diag_t(ctx, d)), B)
        assert sum(birkhoff_reduce(M).d) == sum(d)


def test_extension_field_oracle_agreement():
    ctx = make_field(2, 2)
    rng = random.Random(11)
    for _ in range(10):
        A = _unimodular(ctx, 2, rng, "-")
        B = _unimodular(ctx, 2, rng, "+")
        d = sorted((rng.randint(-2, 2) for _ in range(2)), reverse=True)
        M = mat_mul(mat_mul(A, LaurentMat.diag_t(ctx, d)), B)
        assert tuple(splitting_type_cohomology(M)) == tuple(d)
