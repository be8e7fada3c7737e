"""Residue arithmetic modulo m and prime-power factorization of m."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class InvalidModulusError(ValueError):
    pass


class ModulusMismatchError(ValueError):
    pass


def check_modulus(m: int) -> int:
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise InvalidModulusError(f"modulus must be an integer >= 2, got {m!r}")
    return m


class PrimePower(NamedTuple):
    p: int
    k: int

    @property
    def value(self) -> int:
        return self.p**self.k


def factor(m: int) -> list[PrimePower]:
    """Factor ``m`` into prime powers with strictly increasing primes.

    Trial division; moduli here are small and user supplied.
    """
    check_modulus(m)
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            k = 0
            while m % d == 0:
                m //= d
                k += 1
            out.append(PrimePower(d, k))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(PrimePower(m, 1))
    return out


def is_prime(m: int) -> bool:
    return m >= 2 and factor(m) == [PrimePower(m, 1)]


def valuation(x: int, p: int) -> int:
    """Exponent of ``p`` in ``x`` (``x`` nonzero)."""
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


@dataclass(frozen=True)
class Residue:
    """Element of Z/mZ stored canonically in [0, m)."""

    value: int
    modulus: int

    def __post_init__(self):
        check_modulus(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _other(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(
                    f"residues modulo {self.modulus} and {other.modulus}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"
