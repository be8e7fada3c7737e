import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import rand_poly
from lcaexp.laurent import (
    NEG_INF,
    POS_INF,
    LaurentParseError,
    LaurentPoly,
    deg_minus,
    deg_plus,
    format_poly,
    parse,
    reduce_mod,
)
from lcaexp.modarith import ModulusMismatchError


def P(text, m=5):
    return parse(text, m)


@pytest.mark.parametrize(
    "text, expected",
    [("X^-3 + X^-2", -2), ("X^-3 + X^-2 + 1", 0), ("X^-3 + X^-2 + 1 + X^4", 4), ("1", 0)],
)
def test_deg_plus_examples(text, expected):
    assert deg_plus(P(text)) == expected


@pytest.mark.parametrize(
    "text, expected",
    [("X^3 + X^2", 2), ("X^3 + X^2 + 1", 0), ("X^-3 + 1 + X^4", -3), ("1", 0)],
)
def test_deg_minus_examples(text, expected):
    assert deg_minus(P(text)) == expected


def test_degrees_of_zero():
    z = LaurentPoly.zero(3)
    assert deg_plus(z) == NEG_INF
    assert deg_minus(z) == POS_INF
    assert NEG_INF < -10**9 < 10**9 < POS_INF
    with pytest.raises(ArithmeticError):
        NEG_INF + POS_INF


def test_products_and_cancellation():
    s = P("X + X^-1", 2)
    assert s * s == P("X^2 + X^-2", 2)
    assert P("2X + 3", 6) + P("4X + 3", 6) == 0
    a = rand_poly(random.Random(1), 7)
    assert a * LaurentPoly.one(7) == a


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        P("X", 2) + P("X", 3)


def test_reduce_mod():
    a = P("2X + 3", 6)
    assert reduce_mod(a, 2) == LaurentPoly.one(2)
    assert reduce_mod(a, 3) == P("2X", 3)
    assert reduce_mod(LaurentPoly.zero(6), 3).is_zero()
    with pytest.raises(ValueError):
        reduce_mod(a, 1)


def test_parse_forms():
    assert P("0").is_zero()
    assert P("1 + X^2") == LaurentPoly(5, {0: 1, 2: 1})
    assert P("  X^-3+X^-2 ") == LaurentPoly(5, {-3: 1, -2: 1})
    assert P("X + X + X", 2) == P("X", 2)
    assert P("3X^2 + 4X^2", 5) == P("2X^2", 5)


@pytest.mark.parametrize("text, column", [("X^", 3), ("1 + + X", 5), ("Y", 1), ("X^-", 4), ("", 1)])
def test_parse_errors_report_column(text, column):
    with pytest.raises(LaurentParseError) as info:
        parse(text, 3)
    assert info.value.column == column


def test_format():
    assert format_poly(LaurentPoly.zero(2)) == "0"
    assert format_poly(P("X^-3 + 2X + 4")) == "X^-3 + 4 + 2X"


polys = st.builds(
    lambda m, d: LaurentPoly(m, d),
    st.just(5),
    st.dictionaries(st.integers(-4, 4), st.integers(0, 4), max_size=5),
)


@settings(max_examples=300, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a + LaurentPoly.zero(5) == a


@settings(max_examples=300, deadline=None)
@given(polys)
def test_parse_print_roundtrip(a):
    assert parse(format_poly(a), 5) == a


def test_degree_laws_seeded():
    # over a prime modulus there are no zero divisors, so degrees add exactly
    rng = random.Random(7)
    for _ in range(10_000):
        p = rng.choice([2, 3, 5])
        a, b = rand_poly(rng, p, -3, 3), rand_poly(rng, p, -3, 3)
        if a.is_zero() or b.is_zero():
            assert (a * b).is_zero()
            continue
        assert deg_plus(a * b) == deg_plus(a) + deg_plus(b)
        assert deg_minus(a * b) == deg_minus(a) + deg_minus(b)
        s = a + b
        if not s.is_zero():
            assert deg_plus(s) <= max(deg_plus(a), deg_plus(b))
            assert deg_minus(s) >= min(deg_minus(a), deg_minus(b))


def test_reduce_mod_composes():
    rng = random.Random(3)
    for _ in range(500):
        a = rand_poly(rng, 36, -3, 3)
        assert reduce_mod(reduce_mod(a, 12), 2) == reduce_mod(a, 2)
        b = rand_poly(rng, 36, -3, 3)
        assert reduce_mod(a * b, 6) == reduce_mod(a, 6) * reduce_mod(b, 6)


def test_shift_and_reflect():
    a = P("X^-1 + 3X^2")
    assert a.shift(2) == P("X + 3X^4")
    assert a.reflect() == P("X + 3X^-2")
