"""Closed-form neighbor tables for small parameter cases.

For small (n, r, dx) the multiplicity of each target offset is a fixed
integer polynomial in q on each chamber (gap pattern) of the source vertex.
These tables drive the replay suite of the CLI and the regression tests;
polynomials are coefficient tuples, low-to-high.
"""

from .hecke import poly_eval
from .reduction import Vertex

ONE = (1,)
Q = (0, 1)
Q_PLUS_1 = (1, 1)
Q_MINUS_1 = (-1, 1)
Q2 = (0, 0, 1)
Q2_PLUS_Q = (0, 1, 1)
Q2_PLUS_Q_PLUS_1 = (1, 1, 1)
Q2_MINUS_Q = (0, -1, 1)
Q2_MINUS_Q_PLUS_1 = (1, -1, 1)
Q3_MINUS_2Q2_PLUS_2Q_MINUS_1 = (-1, 2, -2, 1)
Q4_MINUS_Q3_PLUS_Q2_MINUS_Q_PLUS_1 = (1, -1, 1, -1, 1)

# (n, r, dx) -> shape -> {target offset: multiplicity polynomial}
CHAMBER_TABLES = {
    (2, 1, 1): {
        "d1>d2": {(0, 1): Q, (1, 0): ONE},
        "d1=d2": {(1, 0): Q_PLUS_1},
    },
    (3, 2, 1): {
        "d1=d2=d3": {(1, 1, 0): Q2_PLUS_Q_PLUS_1},
        "d1=d2>d3": {(1, 0, 1): Q2_PLUS_Q, (1, 1, 0): ONE},
        "d1>d2=d3": {(0, 1, 1): Q2, (1, 1, 0): Q_PLUS_1},
        "d1>d2>d3": {(0, 1, 1): Q2, (1, 0, 1): Q, (1, 1, 0): ONE},
    },
    # Equal exponents with a degree-2 place: a free entry a0 + a1*t with
    # a1 != 0 lands on the balanced target regardless of a0, e.g.
    # (E * [[t^2, 1+t], [0, 1]] * E') = diag(t, t) for elementary E, E'
    # with constant determinants.  Hence q^2-q and q+1 below.
    (2, 1, 2): {
        "d1=d2": {(1, 1): Q2_MINUS_Q, (2, 0): Q_PLUS_1},
        "d1>d2": {(0, 2): Q2_MINUS_Q_PLUS_1, (1, 1): Q_MINUS_1, (2, 0): ONE},
    },
    (3, 2, 2): {
        "d1>d2>d3": {
            (0, 2, 2): Q4_MINUS_Q3_PLUS_Q2_MINUS_Q_PLUS_1,
            (1, 1, 2): Q3_MINUS_2Q2_PLUS_2Q_MINUS_1,
            (2, 0, 2): Q2_MINUS_Q_PLUS_1,
            (2, 2, 0): ONE,
            (1, 2, 1): Q2_MINUS_Q,
            (2, 1, 1): Q_MINUS_1,
        },
    },
}


def expected_neighbors(n, r, dx, shape, v, q):
    """Evaluate a chamber table at q for a concrete source vertex v.

    The caller must supply a v that realizes the shape with gaps wide enough
    to be generic (every '>' gap at least dx suffices for these tables).
    """
    table = CHAMBER_TABLES[(n, r, dx)][shape]
    out = {}
    for off, poly in table.items():
        m = poly_eval(poly, q)
        if m:
            out[Vertex(vi + oi for vi, oi in zip(v, off))] = m
    return out
