import pickle

import pytest
from hypothesis import given, settings, strategies as st

from heckegraph.field import FieldElem, make_field


def test_rejects_nonprime_characteristic():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(1, 1)


def test_rejects_oversized_cardinality():
    with pytest.raises(ValueError):
        make_field(2, 17)


def test_canonical_modulus_f4():
    # lex-smallest monic irreducible over F_2 of degree 2 is x^2 + x + 1
    assert make_field(2, 2).modulus == (1, 1, 1)


def test_canonical_modulus_f8():
    # x^3 + x^2 + 1 beats x^3 + x + 1 on low-to-high lexicographic order
    assert make_field(2, 3).modulus == (1, 0, 1, 1)


def test_element_codes_order():
    assert list(make_field(3, 1).element_codes()) == [0, 1, 2]
    # lex on coefficient tuples (c0, c1); code = c0 + 2*c1
    assert list(make_field(2, 2).element_codes()) == [0, 2, 1, 3]


def test_field_cache_identity():
    assert make_field(5, 1) is make_field(5, 1)


def test_pickle_roundtrip():
    ctx = make_field(3, 2)
    clone = pickle.loads(pickle.dumps(ctx))
    assert clone is ctx


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)])
def test_field_axioms_exhaustive(p, e):
    ctx = make_field(p, e)
    codes = ctx.element_codes()
    assert len(codes) == p ** e
    for a in codes:
        assert ctx.add(a, 0) == a
        assert ctx.mul(a, 1) == a
        assert ctx.add(a, ctx.neg(a)) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
    for a in codes:
        for b in codes:
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(a, b) == ctx.mul(b, a)
            for c in codes:
                assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


def test_multiplicative_group_is_cyclic():
    ctx = make_field(2, 2)
    # some element generates all q-1 nonzero codes
    for g in ctx.element_codes()[1:]:
        seen = set()
        x = 1
        for _ in range(ctx.q - 1):
            x = ctx.mul(x, g)
            seen.add(x)
        if len(seen) == ctx.q - 1:
            return
    raise AssertionError("no generator found")


def test_pow_matches_repeated_multiplication():
    ctx = make_field(3, 2)
    for a in ctx.element_codes()[1:]:
        acc = 1
        for k in range(10):
            assert ctx.pow(a, k) == acc
            acc = ctx.mul(acc, a)


def test_elem_wrapper_arithmetic():
    ctx = make_field(5, 1)
    a = FieldElem(ctx, 2)
    b = FieldElem(ctx, 4)
    assert (a + b).val == 1
    assert (a * b).val == 3
    assert (a - b).val == 3
    assert (a / b).val == ctx.mul(2, ctx.inv(4))
    assert (-a).val == 3


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 48), st.integers(0, 48), st.integers(0, 48))
def test_f49_associativity(a, b, c):
    ctx = make_field(7, 2)
    assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
    assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
