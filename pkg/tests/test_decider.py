import itertools
import random

from helpers import rand_matrix
from lcaexp.decider import LcaRule, decide_lca
from lcaexp.laurent import LaurentPoly
from lcaexp.matpoly import LaMatrix


def M(rows, m):
    return LaMatrix.from_strings(rows, m)


def test_examples():
    assert decide_lca(M([["0", "1"], ["X + X^-1", "0"]], 2))
    B = M([["0", "1"], ["X + X^-1 + 2X^5", "2"]], 4)
    v = decide_lca(LcaRule(B))
    assert v and [pv.p for pv in v.per_prime] == [2]
    assert decide_lca(M([["X + X^-1"]], 6))
    v = decide_lca(M([["3X + 2X^-1"]], 6))
    assert not v
    by_p = {pv.p: pv for pv in v.per_prime}
    # mod 2 leaves X, mod 3 leaves 2X^-1: each fails on a different side
    assert by_p[2].explanation.clause == "deg--negative"
    assert by_p[3].explanation.clause == "deg+-positive"


def test_shift_is_never_expansive():
    for m in (2, 3, 4, 6, 12):
        for n in (1, 2, 3):
            A = LaMatrix.scalar(n, LaurentPoly.monomial(m, 1))
            assert not decide_lca(A)


def test_per_prime_records():
    v = decide_lca(M([["X + X^-1", "1"], ["0", "X^-1 + X"]], 12))
    assert [(pv.p, pv.k) for pv in v.per_prime] == [(2, 2), (3, 1)]
    assert all(pv.charpoly.is_monic() for pv in v.per_prime)


def test_structural_invariances():
    rng = random.Random(8)
    for k in range(300):
        m = [2, 3, 4, 6][k % 4]
        n = 1 + k % 3
        A = rand_matrix(rng, n, m)
        v = decide_lca(A)
        assert bool(decide_lca(A.transpose())) == bool(v)
        assert bool(decide_lca(A.permute(rng.sample(range(n), n)))) == bool(v)
        if v:
            assert all(pv.surjective for pv in v.per_prime)


def test_n1_classical_mod5():
    # scalar rule: expansive iff a nonzero coefficient on both sides of 0
    for coeffs in itertools.product(range(2), repeat=5):
        a = LaurentPoly(5, dict(zip(range(-2, 3), coeffs)))
        expected = any(coeffs[:2]) and any(coeffs[3:])
        assert bool(decide_lca(LaMatrix([[a]], 5))) == expected


def test_workers_do_not_change_verdict():
    A = M([["X + 2", "X^-1"], ["1", "X^-1 + X"]], 30)
    assert decide_lca(A, workers=3) == decide_lca(A)
