"""Fractions of Laurent polynomials over Z/pZ (p prime).

Canonical form of ``num/den``: ``gcd(num, den) = 1``, and ``den`` is an
ordinary monic polynomial in X with nonzero constant term, so every unit
``c X^k`` lives in the numerator.
"""

from __future__ import annotations

from .laurent import LaurentPoly, deg_minus, deg_plus
from .modarith import ModulusMismatchError, is_prime

# Dense polynomials over GF(p): lists of ints, low degree first, no trailing zeros.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = r[-1] * inv % p
        q[shift] = c
        for i, bi in enumerate(b):
            r[i + shift] = (r[i + shift] - c * bi) % p
        _trim(r)
    return _trim(q), r


def _monic(a: list[int], p: int) -> list[int]:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd in GF(p)[X]."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p)


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def lcm(a: list[int], b: list[int], p: int) -> list[int]:
    g = gcd(a, b, p)
    return _monic(_mul(a, _divmod(b, g, p)[0], p), p)


def _to_dense(a: LaurentPoly) -> tuple[int, list[int]]:
    """Split ``a`` as X^shift * P(X) with P ordinary and P(0) != 0."""
    lo = deg_minus(a)
    hi = deg_plus(a)
    dense = [0] * (hi - lo + 1)
    for d, v in a.items():
        dense[d - lo] = v
    return lo, dense


def _from_dense(p: int, dense: list[int], shift: int = 0) -> LaurentPoly:
    return LaurentPoly(p, {i + shift: v for i, v in enumerate(dense) if v})


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        p = num.modulus
        if den is None:
            den = LaurentPoly.one(p)
        if den.modulus != p:
            raise ModulusMismatchError("numerator and denominator moduli differ")
        if not is_prime(p):
            raise ValueError(f"fractions need a prime modulus, got {p}")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def from_laurent(cls, a: LaurentPoly) -> "RatFunc":
        return cls._raw(a, LaurentPoly.one(a.modulus))

    @property
    def modulus(self) -> int:
        return self.num.modulus

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == LaurentPoly.one(self.modulus)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (LaurentPoly, int)):
            return self.is_laurent() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc.from_laurent(other)
        if isinstance(other, int):
            return RatFunc.from_laurent(LaurentPoly.const(self.modulus, other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    p = num.modulus
    if num.is_zero():
        return num, LaurentPoly.one(p)
    a, n_dense = _to_dense(num)
    b, d_dense = _to_dense(den)
    g = gcd(n_dense, d_dense, p)
    if len(g) > 1:
        n_dense = _divmod(n_dense, g, p)[0]
        d_dense = _divmod(d_dense, g, p)[0]
    inv = pow(d_dense[-1], -1, p)
    n_dense = [x * inv % p for x in n_dense]
    d_dense = [x * inv % p for x in d_dense]
    return _from_dense(p, n_dense, a - b), _from_dense(p, d_dense)


def normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    return RatFunc(num, den)


def deg_plus_frac(phi: RatFunc) -> int:
    if phi.is_zero():
        raise ValueError("positive degree of the zero fraction is undefined")
    return deg_plus(phi.num) - deg_plus(phi.den)


def deg_minus_frac(phi: RatFunc) -> int:
    if phi.is_zero():
        raise ValueError("negative degree of the zero fraction is undefined")
    return deg_minus(phi.num) - deg_minus(phi.den)


def denominator_lcm(fracs, p: int) -> LaurentPoly:
    """Monic lcm of the denominators of ``fracs`` as a Laurent polynomial."""
    acc = [1]
    for f in fracs:
        if not f.is_laurent():
            acc = lcm(acc, _to_dense(f.den)[1], p)
    return _from_dense(p, acc)
