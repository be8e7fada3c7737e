"""Random generators and brute-force reference implementations shared by the tests."""

from __future__ import annotations

import itertools
import random

from lcaexp.laurent import LaurentPoly
from lcaexp.matpoly import LaMatrix, TPoly


def rand_poly(rng: random.Random, m: int, lo: int = -2, hi: int = 2, density: float = 0.5) -> LaurentPoly:
    return LaurentPoly(m, {d: rng.randrange(1, m) for d in range(lo, hi + 1) if rng.random() < density})


def rand_matrix(rng: random.Random, n: int, m: int, lo: int = -1, hi: int = 1, density: float = 0.5) -> LaMatrix:
    return LaMatrix([[rand_poly(rng, m, lo, hi, density) for _ in range(n)] for _ in range(n)], m)


def rand_monic(rng: random.Random, p: int, degree: int, lo: int = -2, hi: int = 2) -> TPoly:
    zero = LaurentPoly.zero(p)
    coeffs = [rand_poly(rng, p, lo, hi) for _ in range(degree)]
    return TPoly(coeffs + [LaurentPoly.one(p)], zero)


def rand_expansive_monic(rng: random.Random, p: int, degree: int) -> TPoly:
    """Monic polynomial biased towards expansivity: a wide alpha0 and narrow middle terms."""
    zero = LaurentPoly.zero(p)
    a = rng.randint(1, 2)
    b = rng.randint(1, 2)
    alpha0 = LaurentPoly(p, {-a: rng.randrange(1, p), b: rng.randrange(1, p)}) + rand_poly(
        rng, p, -a + 1, b - 1
    )
    middle = [rand_poly(rng, p, -a + 1, b - 1) for _ in range(degree - 1)]
    return TPoly([alpha0] + middle + [LaurentPoly.one(p)], zero)


def _sign(perm) -> int:
    s = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def leibniz_charpoly(A: LaMatrix) -> TPoly:
    """det(tI - A) by the permutation expansion, over L_m[t]."""
    m, n = A.modulus, A.n
    zero = LaurentPoly.zero(m)
    one = LaurentPoly.one(m)
    entry = [
        [TPoly([-A[i, j], one] if i == j else [-A[i, j]], zero) for j in range(n)] for i in range(n)
    ]
    total = TPoly([], zero)
    for perm in itertools.permutations(range(n)):
        term = TPoly([one], zero)
        for i, j in enumerate(perm):
            term = term * entry[i][j]
        total = total + term if _sign(perm) > 0 else total - term
    return total


def rand_endo(rng: random.Random, orders) -> list[list[int]]:
    """A random endomorphism matrix of prod Z/o_i: entry (i, j) is a multiple of o_i/gcd(o_i, o_j)."""
    from math import gcd

    N = len(orders)
    M = [[0] * N for _ in range(N)]
    for i, oi in enumerate(orders):
        for j, oj in enumerate(orders):
            step = oi // gcd(oi, oj)
            M[i][j] = step * rng.randrange(oi // step)
    return M


def rand_group_config(rng: random.Random, orders, lo: int = -4, hi: int = 4) -> dict:
    return {
        pos: tuple(rng.randrange(o) for o in orders)
        for pos in range(lo, hi + 1)
        if rng.random() < 0.5
    }
