"""Brute-force dynamical cross-check of the decider.

The oracle never looks at characteristic polynomials. It works with finite
configurations and with windows of top coefficients of vector series:

* :func:`verify_window` certifies positive expansivity by showing that, for a
  uniform bound ``lhat``, every series with top position 0 has a nonzero
  coefficient at some position >= 1 within ``lhat`` steps (and symmetrically
  for the bottom position). By locality, positions >= 1 of ``A^l v`` only
  depend on positions >= 1 - l*r of ``v``, so a finite window decides this for
  every infinite tail.
* :func:`falsify` looks for finite configurations whose orbit stays bounded on
  one side for a fixed number of steps. That is evidence, not a proof.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from ..decider import LcaRule
from ..laurent import NEG_INF, POS_INF, LaurentPoly
from ..matpoly import LaMatrix
from ._backend import backend_name, get_kernels

__all__ = [
    "FiniteConfig",
    "SeriesWindow",
    "VerifiedExpansive",
    "RefutedByWitness",
    "Inconclusive",
    "step",
    "deg_plus_config",
    "deg_minus_config",
    "verify_window",
    "falsify",
    "backend_name",
]

DEFAULT_LHAT = 8
DEFAULT_WIDTH = 4
DEFAULT_STEPS = 16
EXHAUSTIVE_LIMIT = 10**6
RANDOM_SAMPLES = 100_000


@dataclass(frozen=True)
class FiniteConfig:
    """Finite-support configuration over (Z/mZ)^n; zero cells are not stored."""

    modulus: int
    n: int
    cells: Mapping[int, tuple[int, ...]]

    def __post_init__(self):
        m = self.modulus
        cells = {}
        for pos, v in self.cells.items():
            v = tuple(int(x) % m for x in v)
            if len(v) != self.n:
                raise ValueError(f"cell at {pos} has {len(v)} components, expected {self.n}")
            if any(v):
                cells[int(pos)] = v
        object.__setattr__(self, "cells", dict(sorted(cells.items())))

    @classmethod
    def unit(cls, modulus: int, n: int, component: int = 0, position: int = 0) -> "FiniteConfig":
        v = [0] * n
        v[component] = 1
        return cls(modulus, n, {position: tuple(v)})

    def __eq__(self, other):
        if not isinstance(other, FiniteConfig):
            return NotImplemented
        return (self.modulus, self.n, self.cells) == (other.modulus, other.n, other.cells)

    def __hash__(self):
        return hash((self.modulus, self.n, tuple(self.cells.items())))

    def __bool__(self):
        return bool(self.cells)

    def to_vector(self) -> list[LaurentPoly]:
        return [
            LaurentPoly(self.modulus, {p: v[i] for p, v in self.cells.items()})
            for i in range(self.n)
        ]

    @classmethod
    def from_vector(cls, v: Sequence[LaurentPoly]) -> "FiniteConfig":
        m = v[0].modulus
        positions = sorted({d for e in v for d in e.support})
        return cls(m, len(v), {d: tuple(e.coeff(d) for e in v) for d in positions})

    def restrict(self, lo=None, hi=None) -> "FiniteConfig":
        return FiniteConfig(
            self.modulus,
            self.n,
            {
                p: v
                for p, v in self.cells.items()
                if (lo is None or p >= lo) and (hi is None or p <= hi)
            },
        )


@dataclass(frozen=True)
class SeriesWindow:
    """Top coefficients of a vector series: ``columns[t]`` sits at position -t."""

    columns: tuple[tuple[int, ...], ...]
    modulus: int

    def __post_init__(self):
        if not self.columns or not any(self.columns[0]):
            raise ValueError("window top column must be nonzero")

    @property
    def width(self) -> int:
        return len(self.columns)

    def to_config(self, top: int = 0, direction: int = -1) -> FiniteConfig:
        n = len(self.columns[0])
        return FiniteConfig(
            self.modulus, n, {top + direction * t: c for t, c in enumerate(self.columns)}
        )


@dataclass(frozen=True)
class VerifiedExpansive:
    lhat: int
    left_lhat: int
    right_lhat: int


@dataclass(frozen=True)
class Witness:
    side: str  # "left" or "right"
    config: FiniteConfig


@dataclass(frozen=True)
class RefutedByWitness:
    """Bounded-orbit witnesses found by a bounded search (evidence, not proof)."""

    witnesses: tuple[Witness, ...]
    steps: int
    exhaustive: bool

    @property
    def side(self) -> str:
        return "both" if len(self.witnesses) > 1 else self.witnesses[0].side

    @property
    def config(self) -> FiniteConfig:
        return self.witnesses[0].config


@dataclass(frozen=True)
class Inconclusive:
    budget: int
    side: str | None = None
    window: SeriesWindow | None = None


OracleResult = VerifiedExpansive | RefutedByWitness | Inconclusive


def _matrix(rule) -> LaMatrix:
    return rule.A if isinstance(rule, LcaRule) else rule


# -- exact simulation -------------------------------------------------------


def step(rule: LcaRule | LaMatrix, c: FiniteConfig) -> FiniteConfig:
    """One step F(c)_i = sum_z A_z c_{i+z} of the linear CA."""
    A = _matrix(rule)
    if A.modulus != c.modulus or A.n != c.n:
        raise ValueError("configuration does not match the rule")
    m = A.modulus
    C = A.offset_coefficients()
    r = (C.shape[0] - 1) // 2
    acc: dict[int, np.ndarray] = {}
    for pos, v in c.cells.items():
        v = np.asarray(v, dtype=np.int64)
        for kk in range(C.shape[0]):
            img = C[kk] @ v
            if img.any():
                target = pos - (kk - r)
                acc[target] = acc.get(target, 0) + img
    return FiniteConfig(m, c.n, {p: tuple(int(x) for x in v % m) for p, v in acc.items()})


def orbit(rule, c: FiniteConfig, steps: int) -> list[FiniteConfig]:
    out = [c]
    for _ in range(steps):
        c = step(rule, c)
        out.append(c)
    return out


def deg_plus_config(c: FiniteConfig):
    return max(c.cells) if c.cells else NEG_INF


def deg_minus_config(c: FiniteConfig):
    return min(c.cells) if c.cells else POS_INF


# -- window verifier ----------------------------------------------------------


def _shards(lo: int, hi: int, k: int) -> list[tuple[int, int]]:
    k = max(1, min(k, hi - lo))
    bounds = np.linspace(lo, hi, k + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(bounds, bounds[1:]) if b > a]


def _max_escape(coef, m, lhat, kernels, workers):
    n = coef.shape[1]
    base = m**n
    shards = _shards(1, base, workers)
    if workers > 1 and len(shards) > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(
                pool.map(lambda ab: kernels.max_escape_time(coef, m, lhat, *ab), shards)
            )
    else:
        results = [kernels.max_escape_time(coef, m, lhat, a, b) for a, b in shards]
    # first failing shard holds the lexicographically smallest failing window
    for M, window in results:
        if M < 0:
            return -1, window
    return max(M for M, _ in results), None


def verify_window(
    rule: LcaRule | LaMatrix,
    lhat_max: int = DEFAULT_LHAT,
    *,
    backend: str | None = None,
    workers: int = 1,
) -> OracleResult:
    """Search for a uniform escape bound lhat <= lhat_max on both sides.

    Returns :class:`VerifiedExpansive` with the smallest such bound, or
    :class:`Inconclusive` carrying a window (padded to width lhat_max*r + 1)
    that fails to escape within the budget.
    """
    if lhat_max < 1:
        raise ValueError("lhat_max must be >= 1")
    A = _matrix(rule)
    kernels = get_kernels(backend)
    m = A.modulus
    coef = np.ascontiguousarray(A.offset_coefficients())
    r = (coef.shape[0] - 1) // 2
    width = lhat_max * r + 1
    found = {}
    for side, C in (("left", coef), ("right", np.ascontiguousarray(coef[::-1]))):
        M, window = _max_escape(C, m, lhat_max, kernels, workers)
        if M < 0:
            cols = [tuple(int(x) for x in col) for col in window]
            cols += [(0,) * A.n] * (width - len(cols))
            return Inconclusive(lhat_max, side, SeriesWindow(tuple(cols), m))
        found[side] = M
    return VerifiedExpansive(max(found.values()), found["left"], found["right"])


# -- bounded falsifier ------------------------------------------------------------


def _decode(indices: np.ndarray, base: int, W: int, m: int, n: int) -> np.ndarray:
    """Index -> window digits; the top column is the most significant digit and is nonzero."""
    cols = np.empty((len(indices), W), dtype=np.int64)
    rest = indices.copy()
    for t in range(W - 1, 0, -1):
        cols[:, t] = rest % base
        rest //= base
    cols[:, 0] = rest + 1
    out = np.empty((len(indices), W, n), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        out[:, :, i] = cols % m
        cols //= m
    return out


def _search_side(coef, m, n, W, steps, kernels, rng_seed, samples):
    base = m**n
    total = (base - 1) * base ** (W - 1)
    if total <= EXHAUSTIVE_LIMIT:
        chunk = 1 << 16
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            configs = _decode(idx, base, W, m, n)
            hit = kernels.first_bounded(coef, m, configs, steps)
            if hit >= 0:
                return configs[hit], True
        return None, True
    rng = np.random.default_rng(rng_seed)
    configs = rng.integers(0, m, size=(samples, W, n), dtype=np.int64)
    top = rng.integers(1, base, size=samples, dtype=np.int64)
    configs[:, 0, :] = _decode(top - 1, base, 1, m, n)[:, 0, :]
    flat = configs.reshape(samples, -1)
    order = np.lexsort(flat.T[::-1])
    configs = np.ascontiguousarray(configs[order])
    hit = kernels.first_bounded(coef, m, configs, steps)
    return (configs[hit] if hit >= 0 else None), False


def falsify(
    rule: LcaRule | LaMatrix,
    width: int = DEFAULT_WIDTH,
    steps: int = DEFAULT_STEPS,
    *,
    seed: int = 0,
    samples: int = RANDOM_SAMPLES,
    backend: str | None = None,
) -> OracleResult:
    """Look for configurations whose orbit never crosses position 0 in ``steps`` steps.

    Left side: support in [-width+1, 0] with a nonzero cell at 0; a witness keeps
    every cell at positions <= 0. Right side is the mirror image. Exhaustive when
    there are at most 10^6 candidates per side, otherwise a seeded sample.
    """
    if width < 1 or steps < 1:
        raise ValueError("width and steps must be >= 1")
    A = _matrix(rule)
    kernels = get_kernels(backend)
    m, n = A.modulus, A.n
    coef = np.ascontiguousarray(A.offset_coefficients())
    witnesses = []
    exhaustive = True
    for side, C, sign in (("left", coef, -1), ("right", np.ascontiguousarray(coef[::-1]), 1)):
        cols, exh = _search_side(C, m, n, width, steps, kernels, seed, samples)
        exhaustive &= exh
        if cols is not None:
            cfg = FiniteConfig(m, n, {sign * t: tuple(int(x) for x in c) for t, c in enumerate(cols)})
            witnesses.append(Witness(side, cfg))
    if witnesses:
        return RefutedByWitness(tuple(witnesses), steps, exhaustive)
    return Inconclusive(steps)
