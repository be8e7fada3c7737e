import random

import pytest

from helpers import rand_poly
from lcaexp.laurent import LaurentPoly, parse
from lcaexp.ratfunc import RatFunc, deg_minus_frac, deg_plus_frac, denominator_lcm, normalize


def P(text, p=2):
    return parse(text, p)


def test_normalize_examples():
    f = normalize(P("X^2 + X"), P("X"))
    assert (f.num, f.den) == (P("X + 1"), P("1"))
    z = normalize(LaurentPoly.zero(2), P("X + 1"))
    assert (z.num, z.den) == (LaurentPoly.zero(2), P("1"))
    one = normalize(P("X + 1"), P("X + 1"))
    assert (one.num, one.den) == (P("1"), P("1"))


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(P("1"), LaurentPoly.zero(2))
    with pytest.raises(ZeroDivisionError):
        RatFunc(LaurentPoly.zero(3)).inverse()


def test_inverse_of_x_is_a_laurent_monomial():
    f = RatFunc(P("X")).inverse()
    assert (f.num, f.den) == (P("X^-1"), P("1"))
    assert f.is_laurent()


def test_sum_cancels():
    den = P("X + 1")
    s = RatFunc(P("1"), den) + RatFunc(P("X"), den)
    assert s == 1


def test_frac_degrees():
    assert deg_plus_frac(RatFunc(P("X^2 + 1"), P("X"))) == 1
    assert deg_plus_frac(RatFunc(P("1"), P("X + 1"))) == -1
    assert deg_plus_frac(RatFunc(P("X^-1"))) == -1
    assert deg_minus_frac(RatFunc(P("X^-1 + X^3"))) == -1
    with pytest.raises(ValueError):
        deg_plus_frac(RatFunc(LaurentPoly.zero(2)))


def test_representative_independence():
    rng = random.Random(11)
    for _ in range(1000):
        p = rng.choice([2, 3, 5])
        num, den = rand_poly(rng, p), rand_poly(rng, p)
        c = rand_poly(rng, p, -2, 2)
        if den.is_zero() or c.is_zero():
            continue
        a = RatFunc(num, den)
        b = RatFunc(num * c, den * c)
        assert a == b and (a.num, a.den) == (b.num, b.den)
        if not a.is_zero():
            assert a * a.inverse() == 1
            assert deg_plus_frac(a) == deg_plus_frac(b)
            assert deg_minus_frac(a) == deg_minus_frac(b)


def test_field_axioms_seeded():
    rng = random.Random(5)
    for _ in range(300):
        p = 3
        xs = []
        for _ in range(3):
            den = rand_poly(rng, p) or LaurentPoly.one(p)
            xs.append(RatFunc(rand_poly(rng, p), den))
        a, b, c = xs
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == 0
        if b:
            assert (a / b) * b == a


def test_denominator_lcm():
    fr = [RatFunc(P("1"), P("X + 1")), RatFunc(P("X"), P("X^2 + 1"))]
    # over F_2, X^2 + 1 = (X + 1)^2
    assert denominator_lcm(fr, 2) == P("X^2 + 1")
