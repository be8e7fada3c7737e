"""Positive expansivity of linear CA over (Z/mZ)^n.

The verdict is the conjunction, over the primes p dividing m, of the
expansive-matrix test applied to ``A mod p``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .expansivity import Expansivity, is_expansive_poly
from .matpoly import LaMatrix, TPoly, charpoly, det
from .modarith import factor


@dataclass(frozen=True)
class LcaRule:
    A: LaMatrix

    @property
    def modulus(self) -> int:
        return self.A.modulus

    @property
    def n(self) -> int:
        return self.A.n

    @property
    def radius(self) -> int:
        return self.A.radius


@dataclass(frozen=True)
class PrimeVerdict:
    p: int
    k: int
    charpoly: TPoly
    expansive: bool
    explanation: Expansivity
    surjective: bool  # det(A mod p) != 0


@dataclass(frozen=True)
class Verdict:
    positively_expansive: bool
    per_prime: tuple[PrimeVerdict, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.positively_expansive


def _as_matrix(rule) -> LaMatrix:
    return rule.A if isinstance(rule, LcaRule) else rule


def _decide_prime(A: LaMatrix, p: int, k: int) -> PrimeVerdict:
    Ap = A.reduce_mod(p)
    chi = charpoly(Ap)
    exp = is_expansive_poly(chi)
    return PrimeVerdict(p, k, chi, exp.expansive, exp, bool(det(Ap)))


def decide_lca(rule: LcaRule | LaMatrix, workers: int = 1) -> Verdict:
    """Decide positive expansivity; every prime is evaluated, even after a failure."""
    A = _as_matrix(rule)
    primes = factor(A.modulus)
    if workers > 1 and len(primes) > 1:
        with ThreadPoolExecutor(workers) as pool:
            per = list(pool.map(lambda pk: _decide_prime(A, *pk), primes))
    else:
        per = [_decide_prime(A, p, k) for p, k in primes]
    return Verdict(all(v.expansive for v in per), tuple(per))
