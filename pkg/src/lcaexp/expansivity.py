"""Expansive polynomials and matrices over L_m."""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import deg_minus, deg_plus
from .matpoly import LaMatrix, TPoly, charpoly


class NotMonicError(ValueError):
    pass


@dataclass(frozen=True)
class Expansivity:
    """Outcome of the expansive-polynomial test.

    ``clause`` names the first violated condition (``None`` when expansive):
    ``"alpha0-nonzero"``, ``"deg+-positive"``, ``"deg+-dominant"``,
    ``"deg--negative"`` or ``"deg--dominant"``. ``index`` is the offending
    coefficient index for the dominance clauses.
    """

    expansive: bool
    clause: str | None = None
    index: int | None = None
    detail: str = ""

    def __bool__(self):
        return self.expansive


def is_expansive_poly(pi: TPoly) -> Expansivity:
    if not pi or not pi.is_monic():
        raise NotMonicError(f"expected a monic polynomial, got {pi}")
    n = pi.degree
    if n < 1:
        raise ValueError("expansivity is defined for polynomials of degree >= 1")
    a0 = pi[0]
    if not a0:
        return Expansivity(False, "alpha0-nonzero", 0, "constant coefficient is 0")
    top = deg_plus(a0)
    if not top > 0:
        return Expansivity(False, "deg+-positive", 0, f"deg+(alpha_0) = {top} is not > 0")
    for i in range(1, n):
        d = deg_plus(pi[i])
        if not top > d:
            return Expansivity(
                False, "deg+-dominant", i, f"deg+(alpha_{i}) = {d} >= deg+(alpha_0) = {top}"
            )
    bottom = deg_minus(a0)
    if not bottom < 0:
        return Expansivity(False, "deg--negative", 0, f"deg-(alpha_0) = {bottom} is not < 0")
    for i in range(1, n):
        d = deg_minus(pi[i])
        if not bottom < d:
            return Expansivity(
                False, "deg--dominant", i, f"deg-(alpha_{i}) = {d} <= deg-(alpha_0) = {bottom}"
            )
    return Expansivity(True)


def is_expansive_matrix(A: LaMatrix) -> Expansivity:
    return is_expansive_poly(charpoly(A))
