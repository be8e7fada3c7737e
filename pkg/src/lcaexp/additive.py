"""Additive CA over a finite abelian group Z/o_1 x ... x Z/o_N.

A rule is given by one integer matrix per offset z; column j of ``M_z`` is
``f_z(e_j)`` and entry (i, j) is read modulo ``o_i``. One step is
``F(c)_i = sum_z f_z(c_{i+z})``.

Each primary component (the p-part, with exponents sorted nonincreasing) is
embedded into ``(Z/p^k1)^n`` by ``psi(h)^i = h^i p^(k1 - k_i)`` and carries an
associated linear CA with matrix ``sum_z A_z X^(-z)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .decider import LcaRule, Verdict, decide_lca
from .laurent import LaurentPoly
from .matpoly import LaMatrix, apply
from .modarith import factor, valuation


class InvalidRuleError(ValueError):
    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation


@dataclass(frozen=True)
class GroupSpec:
    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(o) for o in self.cyclic_orders)
        if not orders:
            raise ValueError("group needs at least one cyclic factor")
        for o in orders:
            if o < 2:
                raise ValueError(f"cyclic order must be >= 2, got {o}")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    def elements(self):
        """All group elements (small groups only)."""
        import itertools

        return itertools.product(*(range(o) for o in self.cyclic_orders))


@dataclass(frozen=True)
class PrimaryComponent:
    """p-part of the group. ``factors[i]`` is the index of the cyclic factor whose
    p-part is coordinate i; ``exponents`` are nonincreasing."""

    p: int
    exponents: tuple[int, ...]
    factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p ** self.exponents[0]

    @property
    def n(self) -> int:
        return len(self.exponents)

    def elements(self):
        import itertools

        return itertools.product(*(range(self.p**k) for k in self.exponents))


def primary_decompose(group: GroupSpec) -> list[PrimaryComponent]:
    parts: dict[int, list[tuple[int, int]]] = {}
    for idx, o in enumerate(group.cyclic_orders):
        for p, k in factor(o):
            parts.setdefault(p, []).append((k, idx))
    out = []
    for p in sorted(parts):
        # stable sort keeps the input order among equal exponents
        ordered = sorted(parts[p], key=lambda ki: -ki[0])
        out.append(
            PrimaryComponent(p, tuple(k for k, _ in ordered), tuple(i for _, i in ordered))
        )
    return out


@dataclass(frozen=True)
class AdditiveRule:
    group: GroupSpec
    endos: Mapping[int, np.ndarray]
    radius: int = field(default=-1)

    def __post_init__(self):
        N = self.group.rank
        endos = {}
        for z, M in self.endos.items():
            M = np.asarray(M, dtype=np.int64)
            if M.shape != (N, N):
                raise ValueError(f"endomorphism at offset {z} has shape {M.shape}, expected {(N, N)}")
            orders = np.asarray(self.group.cyclic_orders, dtype=np.int64)[:, None]
            endos[int(z)] = M % orders
        object.__setattr__(self, "endos", endos)
        r = max((abs(z) for z in endos), default=0)
        if self.radius < 0:
            object.__setattr__(self, "radius", r)
        elif self.radius < r:
            raise ValueError(f"offset outside radius {self.radius}")

    def matrix(self, z: int) -> np.ndarray:
        N = self.group.rank
        return self.endos.get(z, np.zeros((N, N), dtype=np.int64))


@dataclass(frozen=True)
class Violation:
    offset: int
    row: int
    col: int
    value: int
    required_divisor: int

    def __str__(self):
        return (
            f"offset {self.offset}, entry ({self.row + 1},{self.col + 1}) = {self.value} "
            f"is not divisible by {self.required_divisor}"
        )


def validate_rule(rule: AdditiveRule) -> Violation | None:
    """Return ``None`` if every f_z is an endomorphism, else the first violation.

    Entry (i, j) is a map Z/o_j -> Z/o_i, so it must be divisible by
    ``o_i / gcd(o_i, o_j)``; prime by prime this is p^max(0, k_i - k_j).
    """
    orders = rule.group.cyclic_orders
    for z in sorted(rule.endos):
        M = rule.endos[z]
        for i, oi in enumerate(orders):
            for j, oj in enumerate(orders):
                need = oi // np.gcd(oi, oj)
                if int(M[i, j]) % need:
                    return Violation(z, i, j, int(M[i, j]), int(need))
    return None


def project(component: PrimaryComponent, g: Sequence[int]) -> tuple[int, ...]:
    """Coordinates of the p-part of a full-group element ``g``."""
    return tuple(int(g[f]) % component.p**k for f, k in zip(component.factors, component.exponents))


def psi(component: PrimaryComponent, h: Sequence[int]) -> tuple[int, ...]:
    p, ks = component.p, component.exponents
    mod = p ** ks[0]
    return tuple(int(x) * p ** (ks[0] - k) % mod for x, k in zip(h, ks))


def component_matrix(component: PrimaryComponent, rule: AdditiveRule, z: int) -> np.ndarray:
    """f_z restricted to the component, in its coordinates (entries mod p^k_i)."""
    M = rule.matrix(z)
    idx = list(component.factors)
    sub = M[np.ix_(idx, idx)]
    mods = np.asarray([component.p**k for k in component.exponents], dtype=np.int64)[:, None]
    return sub % mods


def associated_matrices(component: PrimaryComponent, rule: AdditiveRule) -> dict[int, np.ndarray]:
    """Offset -> A_z over Z/p^k1 with a_ij = p^(k_j - k_i) * f_z(e_j)^i."""
    violation = validate_rule(rule)
    if violation is not None:
        raise InvalidRuleError(f"not an endomorphism: {violation}", violation)
    p, ks = component.p, component.exponents
    mod = p ** ks[0]
    n = component.n
    out = {}
    for z in sorted(rule.endos):
        F = component_matrix(component, rule, z)
        A = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                x = int(F[i, j])
                e = ks[j] - ks[i]
                if e >= 0:
                    A[i, j] = x * p**e % mod
                else:
                    q, rem = divmod(x, p**-e)
                    assert rem == 0, "validated rule must be divisible"
                    A[i, j] = q % mod
        out[z] = A
    return out


def associated_lca(component: PrimaryComponent, rule: AdditiveRule) -> LcaRule:
    mats = associated_matrices(component, rule)
    mod = component.order
    if not mats:
        mats = {0: np.zeros((component.n, component.n), dtype=np.int64)}
    return LcaRule(LaMatrix.from_coefficients(mats, mod))


# -- configurations ---------------------------------------------------------

GroupConfig = dict  # position -> tuple of residues; zero entries omitted


def _clean(c: dict, orders) -> dict:
    out = {}
    for pos, g in c.items():
        g = tuple(int(x) % o for x, o in zip(g, orders))
        if any(g):
            out[pos] = g
    return out


def apply_additive(rule: AdditiveRule, c: Mapping[int, Sequence[int]]) -> dict:
    """One step of the additive CA on a finite-support configuration."""
    orders = np.asarray(rule.group.cyclic_orders, dtype=np.int64)
    acc: dict[int, np.ndarray] = {}
    for pos, g in c.items():
        g = np.asarray(g, dtype=np.int64)
        for z, M in rule.endos.items():
            img = M @ g
            if not img.any():
                continue
            target = pos - z  # F(c)_i picks up f_z(c_{i+z})
            acc[target] = acc.get(target, 0) + img
    return _clean({pos: tuple(v % orders) for pos, v in acc.items()}, orders)


def embed_config(component: PrimaryComponent, c: Mapping[int, Sequence[int]]) -> dict:
    """Psi applied positionwise to the p-part of ``c``."""
    out = {}
    for pos, g in c.items():
        img = psi(component, project(component, g))
        if any(img):
            out[pos] = img
    return out


def config_to_vector(c: Mapping[int, Sequence[int]], n: int, modulus: int) -> list[LaurentPoly]:
    return [
        LaurentPoly(modulus, {pos: g[i] for pos, g in c.items() if g[i] % modulus})
        for i in range(n)
    ]


def vector_to_config(v: Sequence[LaurentPoly]) -> dict:
    positions = sorted({d for e in v for d in e.support})
    return {d: tuple(e.coeff(d) for e in v) for d in positions if any(e.coeff(d) for e in v)}


def apply_lca(rule: LcaRule, c: Mapping[int, Sequence[int]]) -> dict:
    return vector_to_config(apply(rule.A, config_to_vector(c, rule.n, rule.modulus)))


@dataclass(frozen=True)
class ComponentVerdict:
    component: PrimaryComponent
    lca: LcaRule
    verdict: Verdict


@dataclass(frozen=True)
class AdditiveVerdict:
    positively_expansive: bool
    components: tuple[ComponentVerdict, ...]

    def __bool__(self):
        return self.positively_expansive


def decide_additive(rule: AdditiveRule) -> AdditiveVerdict:
    violation = validate_rule(rule)
    if violation is not None:
        raise InvalidRuleError(f"not an endomorphism: {violation}", violation)
    parts = []
    for comp in primary_decompose(rule.group):
        lca = associated_lca(comp, rule)
        parts.append(ComponentVerdict(comp, lca, decide_lca(lca)))
    return AdditiveVerdict(all(cv.verdict.positively_expansive for cv in parts), tuple(parts))
