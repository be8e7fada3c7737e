"""Matrices over Laurent polynomials and polynomials in t.

``charpoly`` uses Berkowitz's division-free recurrence, so it is exact over
Z/mZ for composite m. ``invariant_factors`` runs a Smith normal form of
``tI - A`` over F_p(X)[t].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .laurent import LaurentPoly, deg_minus, deg_plus, parse
from .modarith import ModulusMismatchError, check_modulus, is_prime
from .ratfunc import RatFunc, denominator_lcm


class DimensionError(ValueError):
    pass


class TPoly:
    """Polynomial in t; ``coeffs[i]`` multiplies t^i. Trailing zeros are stripped."""

    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs: Sequence, zero=None):
        coeffs = list(coeffs)
        if zero is None:
            if not coeffs:
                raise ValueError("zero element required for an empty TPoly")
            zero = coeffs[0] - coeffs[0]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.zero = zero

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.zero

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == 1

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _one(self):
        return self.zero + 1

    def __add__(self, other):
        n = max(len(self), len(other))
        return TPoly([self[i] + other[i] for i in range(n)], self.zero)

    def __neg__(self):
        return TPoly([-c for c in self.coeffs], self.zero)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TPoly):
            return TPoly([c * other for c in self.coeffs], self.zero)
        if not self or not other:
            return TPoly([], self.zero)
        out = [self.zero] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return TPoly(out, self.zero)

    def scale(self, c) -> "TPoly":
        return TPoly([x * c for x in self.coeffs], self.zero)

    def divmod(self, other: "TPoly") -> tuple["TPoly", "TPoly"]:
        """Euclidean division; the leading coefficient of ``other`` must be invertible."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        inv = other.lead.inverse()
        rem = list(self.coeffs)
        dq = len(rem) - len(other)
        quot = [self.zero] * max(dq + 1, 0)
        while len(rem) >= len(other) and rem:
            shift = len(rem) - len(other)
            c = rem[-1] * inv
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[i + shift] = rem[i + shift] - c * b
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return TPoly(quot, self.zero), TPoly(rem, self.zero)

    def monic(self) -> "TPoly":
        return self.scale(self.lead.inverse())

    def map(self, fn: Callable, zero) -> "TPoly":
        return TPoly([fn(c) for c in self.coeffs], zero)

    def reduce_mod(self, q: int) -> "TPoly":
        return self.map(lambda c: c.reduce_mod(q), LaurentPoly.zero(q))

    def __str__(self):
        return format_tpoly(self)

    def __repr__(self):
        return f"TPoly({format_tpoly(self)!r})"


def format_tpoly(f: TPoly) -> str:
    if not f:
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f[i]
        if not c:
            continue
        power = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if i and c == 1:
            terms.append(power)
        else:
            terms.append(f"({c}){power}")
    return " + ".join(terms)


class LaMatrix:
    """Square matrix with ``LaurentPoly`` entries over a common modulus."""

    __slots__ = ("modulus", "rows")

    def __init__(self, rows: Sequence[Sequence[LaurentPoly]], modulus: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if not rows:
            raise DimensionError("matrix must have at least one row")
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise DimensionError(
                    f"matrix is not square: {n} rows but a row of length {len(r)}"
                )
        if modulus is None:
            modulus = rows[0][0].modulus
        check_modulus(modulus)
        for r in rows:
            for e in r:
                if e.modulus != modulus:
                    raise ModulusMismatchError("matrix entries over different moduli")
        self.modulus = modulus
        self.rows = rows

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], modulus: int) -> "LaMatrix":
        return cls([[parse(s, modulus) for s in r] for r in rows], modulus)

    @classmethod
    def from_coefficients(cls, mats: dict[int, np.ndarray], modulus: int) -> "LaMatrix":
        """Assemble sum_z M_z X^(-z) from offset -> integer matrix."""
        n = len(next(iter(mats.values())))
        acc = [[{} for _ in range(n)] for _ in range(n)]
        for z, M in mats.items():
            for i in range(n):
                for j in range(n):
                    v = int(M[i][j]) % modulus
                    if v:
                        acc[i][j][-z] = (acc[i][j].get(-z, 0) + v) % modulus
        return cls([[LaurentPoly(modulus, e) for e in r] for r in acc], modulus)

    @classmethod
    def identity(cls, n: int, modulus: int) -> "LaMatrix":
        one, zero = LaurentPoly.one(modulus), LaurentPoly.zero(modulus)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], modulus)

    @classmethod
    def scalar(cls, n: int, a: LaurentPoly) -> "LaMatrix":
        zero = LaurentPoly.zero(a.modulus)
        return cls([[a if i == j else zero for j in range(n)] for i in range(n)], a.modulus)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, LaMatrix):
            return self.modulus == other.modulus and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus, self.rows))

    def transpose(self) -> "LaMatrix":
        return LaMatrix(list(zip(*self.rows)), self.modulus)

    def reduce_mod(self, q: int) -> "LaMatrix":
        return LaMatrix([[e.reduce_mod(q) for e in r] for r in self.rows], q)

    def reflect(self) -> "LaMatrix":
        """Substitute X -> X^-1 entrywise (mirror image of the automaton)."""
        return LaMatrix([[e.reflect() for e in r] for r in self.rows], self.modulus)

    def __matmul__(self, other: "LaMatrix") -> "LaMatrix":
        if other.n != self.n:
            raise DimensionError("matrix dimensions differ")
        n = self.n
        zero = LaurentPoly.zero(self.modulus)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return LaMatrix(out, self.modulus)

    def permute(self, perm: Sequence[int]) -> "LaMatrix":
        """Return P A P^T where P maps basis vector j to perm[j]."""
        n = self.n
        inv = [0] * n
        for j, pj in enumerate(perm):
            inv[pj] = j
        return LaMatrix(
            [[self.rows[inv[i]][inv[j]] for j in range(n)] for i in range(n)], self.modulus
        )

    @property
    def radius(self) -> int:
        r = 0
        for row in self.rows:
            for e in row:
                if e:
                    r = max(r, abs(deg_plus(e)), abs(deg_minus(e)))
        return r

    def offset_coefficients(self) -> np.ndarray:
        """Array ``C`` of shape (2r+1, n, n) with ``C[z + r]`` the coefficient of X^(-z).

        With this layout one step of the automaton reads
        ``F(c)_i = sum_z C[z + r] @ c_{i+z}``.
        """
        r = self.radius
        n = self.n
        C = np.zeros((2 * r + 1, n, n), dtype=np.int64)
        for i, row in enumerate(self.rows):
            for j, e in enumerate(row):
                for d, v in e.items():
                    C[-d + r, i, j] = v
        return C

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.rows]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_strings()) + "]"

    def __repr__(self):
        return f"LaMatrix({self}, mod {self.modulus})"


def transpose(A: LaMatrix) -> LaMatrix:
    return A.transpose()


def apply(A: LaMatrix, v: Sequence[LaurentPoly]) -> list[LaurentPoly]:
    """Matrix-vector product over L_m."""
    if len(v) != A.n:
        raise DimensionError(f"vector of length {len(v)} for a {A.n}x{A.n} matrix")
    zero = LaurentPoly.zero(A.modulus)
    out = []
    for row in A.rows:
        acc = zero
        for a, x in zip(row, v):
            acc = acc + a * x
        out.append(acc)
    return out


def _berkowitz(rows, one, zero) -> list:
    """Coefficients of det(tI - A), highest power of t first."""
    n = len(rows)
    poly = [one]
    for k in range(n):
        a = rows[k][k]
        if k == 0:
            poly = [one, -a]
            continue
        R = rows[k][:k]
        C = [rows[i][k] for i in range(k)]
        M = [row[:k] for row in rows[:k]]
        # v = [1, -a, -R C, -R M C, ..., -R M^(k-1) C]
        v = [one, -a]
        x = C
        for _ in range(k):
            s = zero
            for ri, xi in zip(R, x):
                s = s + ri * xi
            v.append(-s)
            x = [sum((mij * xj for mij, xj in zip(mrow, x)), zero) for mrow in M]
        new = []
        for i in range(k + 2):
            s = zero
            for j in range(max(0, i - k - 1), min(i, k) + 1):
                s = s + v[i - j] * poly[j]
            new.append(s)
        poly = new
    return poly


def charpoly(A: LaMatrix) -> TPoly:
    """det(tI - A) as a monic polynomial in t with coefficients in L_m."""
    one = LaurentPoly.one(A.modulus)
    zero = LaurentPoly.zero(A.modulus)
    hi_first = _berkowitz(A.rows, one, zero)
    return TPoly(list(reversed(hi_first)), zero)


def det(A: LaMatrix) -> LaurentPoly:
    alpha0 = charpoly(A)[0]
    return alpha0 if A.n % 2 == 0 else -alpha0


# -- Smith normal form over F_p(X)[t] -------------------------------------


@dataclass(frozen=True)
class InvariantFactors:
    """Nonconstant monic invariant factors of tI - A, each dividing the next."""

    factors: tuple[TPoly, ...]
    modulus: int

    def product(self) -> TPoly:
        one = RatFunc.from_laurent(LaurentPoly.one(self.modulus))
        acc = TPoly([one])
        for f in self.factors:
            acc = acc * f
        return acc

    def product_equals(self, chi: TPoly) -> bool:
        zero = RatFunc.from_laurent(LaurentPoly.zero(self.modulus))
        return self.product() == chi.map(RatFunc.from_laurent, zero)

    def is_divisibility_chain(self) -> bool:
        for a, b in zip(self.factors, self.factors[1:]):
            if b.divmod(a)[1]:
                return False
        return True

    def denominator_free(self) -> bool:
        return all(c.is_laurent() for f in self.factors for c in f.coeffs)

    def as_laurent(self) -> tuple[TPoly, ...]:
        """The factors with coefficients moved back into L_p."""
        if not self.denominator_free():
            raise ValueError("invariant factor has a non-trivial denominator")
        zero = LaurentPoly.zero(self.modulus)
        return tuple(f.map(lambda c: c.num, zero) for f in self.factors)


def _t_minus(A: LaMatrix) -> list[list[TPoly]]:
    p = A.modulus
    zero = RatFunc.from_laurent(LaurentPoly.zero(p))
    one = RatFunc.from_laurent(LaurentPoly.one(p))
    out = []
    for i, row in enumerate(A.rows):
        out.append(
            [
                TPoly([-RatFunc.from_laurent(e), one] if i == j else [-RatFunc.from_laurent(e)], zero)
                for j, e in enumerate(row)
            ]
        )
    return out


def _clear_denominators(M: list[list[TPoly]], p: int) -> None:
    for i, row in enumerate(M):
        fracs = [c for e in row for c in e.coeffs]
        scale = denominator_lcm(fracs, p)
        if scale != 1:
            s = RatFunc.from_laurent(scale)
            M[i] = [e.scale(s) for e in row]


def smith_diagonal(A: LaMatrix) -> list[TPoly]:
    """Diagonal of a Smith normal form of tI - A over F_p(X)[t], made monic."""
    p = A.modulus
    if not is_prime(p):
        raise ValueError(f"invariant factors need a prime modulus, got {p}")
    M = _t_minus(A)
    n = len(M)
    for k in range(n):
        while True:
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    if M[i][j] and (best is None or M[i][j].degree < M[best[0]][best[1]].degree):
                        best = (i, j)
            if best is None:
                break
            i, j = best
            M[k], M[i] = M[i], M[k]
            for row in M:
                row[k], row[j] = row[j], row[k]
            pivot = M[k][k]
            clean = True
            for i in range(k + 1, n):
                if M[i][k]:
                    q, r = M[i][k].divmod(pivot)
                    M[i] = [a - b * q for a, b in zip(M[i], M[k])]
                    clean = clean and not r
            for j in range(k + 1, n):
                if M[k][j]:
                    q, r = M[k][j].divmod(pivot)
                    for row in M:
                        row[j] = row[j] - row[k] * q
                    clean = clean and not r
            _clear_denominators(M, p)
            if not clean:
                continue
            pivot = M[k][k]
            bad = next(
                (i for i in range(k + 1, n) for j in range(k + 1, n) if M[i][j].divmod(pivot)[1]),
                None,
            )
            if bad is None:
                break
            M[k] = [a + b for a, b in zip(M[k], M[bad])]
    return [M[k][k].monic() for k in range(n) if M[k][k]]


def invariant_factors(A: LaMatrix) -> InvariantFactors:
    diag = smith_diagonal(A)
    return InvariantFactors(tuple(f for f in diag if f.degree > 0), A.modulus)
