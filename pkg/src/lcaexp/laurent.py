"""Laurent polynomials over Z/mZ.

A :class:`LaurentPoly` is a sparse, immutable mapping from integer degree to a
nonzero residue. ``deg_plus`` / ``deg_minus`` return the largest / smallest
degree of the support; for the zero polynomial they return ``NEG_INF`` /
``POS_INF`` respectively.

The textual form accepted by :func:`parse` is::

    poly  := term (('+'|'-') term)*
    term  := coeff | coeff? 'X' ('^' int)?
    coeff := nonneg-int
    int   := '-'? digits

Whitespace is ignored and repeated degrees are summed.
"""

from __future__ import annotations

import functools
from typing import Iterable, Mapping

from .modarith import ModulusMismatchError, check_modulus


@functools.total_ordering
class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self):
        return "+inf" if self.sign > 0 else "-inf"

    __str__ = __repr__

    def __eq__(self, other):
        return isinstance(other, _Infinity) and other.sign == self.sign

    def __hash__(self):
        return hash(("inf", self.sign))

    def __lt__(self, other):
        if isinstance(other, _Infinity):
            return self.sign < other.sign
        if isinstance(other, int):
            return self.sign < 0
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, _Infinity):
            return self.sign > other.sign
        if isinstance(other, int):
            return self.sign > 0
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, _Infinity):
            if other.sign != self.sign:
                raise ArithmeticError("undefined sum of +inf and -inf")
            return self
        if isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return NEG_INF if self.sign > 0 else POS_INF

    def __sub__(self, other):
        if isinstance(other, (_Infinity, int)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other


POS_INF = _Infinity(+1)
NEG_INF = _Infinity(-1)

# An extended degree is an int, POS_INF or NEG_INF.
ExtDegree = "int | _Infinity"


class LaurentParseError(ValueError):
    def __init__(self, message: str, column: int, text: str = ""):
        super().__init__(f"{message} at column {column}")
        self.column = column
        self.text = text


class LaurentPoly:
    __slots__ = ("modulus", "_c", "_hash")

    def __init__(self, modulus: int, coeffs: Mapping[int, int] | Iterable = ()):
        check_modulus(modulus)
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for d, v in items:
            v = (c.get(d, 0) + int(v)) % modulus
            if v:
                c[d] = v
            else:
                c.pop(d, None)
        self.modulus = modulus
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, modulus: int, c: dict[int, int]) -> "LaurentPoly":
        # c must already be canonical
        obj = cls.__new__(cls)
        obj.modulus = modulus
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, modulus: int) -> "LaurentPoly":
        return cls(modulus)

    @classmethod
    def one(cls, modulus: int) -> "LaurentPoly":
        return cls(modulus, {0: 1})

    @classmethod
    def const(cls, modulus: int, c: int) -> "LaurentPoly":
        return cls(modulus, {0: c})

    @classmethod
    def monomial(cls, modulus: int, degree: int, c: int = 1) -> "LaurentPoly":
        return cls(modulus, {degree: c})

    # -- inspection --------------------------------------------------------

    def coeff(self, degree: int) -> int:
        return self._c.get(degree, 0)

    def items(self):
        """(degree, coefficient) pairs in increasing degree."""
        return sorted(self._c.items())

    @property
    def support(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.modulus == other.modulus and self._c == other._c
        if isinstance(other, int):
            return self == LaurentPoly.const(self.modulus, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.modulus, tuple(sorted(self._c.items()))))
        return self._hash

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(
                    f"Laurent polynomials over Z/{self.modulus} and Z/{other.modulus}"
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.modulus, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = self.modulus
        c = dict(self._c)
        for d, v in other._c.items():
            s = (c.get(d, 0) + v) % m
            if s:
                c[d] = s
            else:
                c.pop(d, None)
        return LaurentPoly._raw(m, c)

    __radd__ = __add__

    def __neg__(self):
        m = self.modulus
        return LaurentPoly._raw(m, {d: m - v for d, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = self.modulus
        c: dict[int, int] = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                d = d1 + d2
                c[d] = (c.get(d, 0) + v1 * v2) % m
        return LaurentPoly._raw(m, {d: v for d, v in c.items() if v})

    __rmul__ = __mul__

    def scalar_mul(self, k: int) -> "LaurentPoly":
        m = self.modulus
        return LaurentPoly._raw(
            m, {d: v * k % m for d, v in self._c.items() if v * k % m}
        )

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are only defined for units")
        result = LaurentPoly.one(self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by X^k."""
        return LaurentPoly._raw(self.modulus, {d + k: v for d, v in self._c.items()})

    def reflect(self) -> "LaurentPoly":
        """Substitute X -> X^-1."""
        return LaurentPoly._raw(self.modulus, {-d: v for d, v in self._c.items()})

    def reduce_mod(self, q: int) -> "LaurentPoly":
        return reduce_mod(self, q)

    # -- text --------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r}, mod {self.modulus})"


def deg_plus(a: LaurentPoly):
    """Largest degree in the support; ``NEG_INF`` for the zero polynomial."""
    return max(a._c) if a._c else NEG_INF


def deg_minus(a: LaurentPoly):
    """Smallest degree in the support; ``POS_INF`` for the zero polynomial."""
    return min(a._c) if a._c else POS_INF


def reduce_mod(a: LaurentPoly, q: int) -> LaurentPoly:
    """Take every coefficient of ``a`` modulo ``q``; the result lives over Z/qZ."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"reduction modulus must be >= 2, got {q!r}")
    return LaurentPoly(q, {d: v % q for d, v in a._c.items()})


def format_poly(a: LaurentPoly) -> str:
    if not a._c:
        return "0"
    terms = []
    for d, v in sorted(a._c.items()):
        if d == 0:
            terms.append(str(v))
            continue
        coef = "" if v == 1 else str(v)
        terms.append(f"{coef}X" if d == 1 else f"{coef}X^{d}")
    return " + ".join(terms)


def parse(text: str, modulus: int) -> LaurentPoly:
    """Parse a Laurent polynomial over Z/modulus from ``text``."""
    check_modulus(modulus)
    src = text
    pos = 0
    n = len(src)

    def skip_ws():
        nonlocal pos
        while pos < n and src[pos].isspace():
            pos += 1

    def read_digits() -> int | None:
        nonlocal pos
        start = pos
        while pos < n and src[pos].isdigit():
            pos += 1
        return int(src[start:pos]) if pos > start else None

    def fail(msg):
        raise LaurentParseError(msg, pos + 1, src)

    def term() -> tuple[int, int]:
        nonlocal pos
        skip_ws()
        coef = read_digits()
        skip_ws()
        if pos < n and src[pos] == "*" and coef is not None:
            pos += 1
            skip_ws()
        if pos < n and src[pos] in "Xx":
            pos += 1
            skip_ws()
            degree = 1
            if pos < n and src[pos] == "^":
                pos += 1
                skip_ws()
                sign = 1
                if pos < n and src[pos] == "-":
                    sign = -1
                    pos += 1
                    skip_ws()
                digits = read_digits()
                if digits is None:
                    fail("expected exponent")
                degree = sign * digits
            return (1 if coef is None else coef), degree
        if coef is None:
            fail("expected coefficient or 'X'")
        return coef, 0

    coeffs: list[tuple[int, int]] = []
    skip_ws()
    sign = 1
    if pos < n and src[pos] == "-":
        sign = -1
        pos += 1
    c, d = term()
    coeffs.append((d, sign * c))
    while True:
        skip_ws()
        if pos >= n:
            break
        if src[pos] not in "+-":
            fail(f"unexpected character {src[pos]!r}")
        sign = 1 if src[pos] == "+" else -1
        pos += 1
        c, d = term()
        coeffs.append((d, sign * c))
    return LaurentPoly(modulus, coeffs)
