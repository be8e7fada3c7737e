import pytest

from lcaexp.modarith import (
    InvalidModulusError,
    ModulusMismatchError,
    Residue,
    factor,
    is_prime,
    valuation,
)


@pytest.mark.parametrize(
    "m, expected",
    [(6, [(2, 1), (3, 1)]), (12, [(2, 2), (3, 1)]), (2, [(2, 1)]), (360, [(2, 3), (3, 2), (5, 1)])],
)
def test_factor(m, expected):
    assert factor(m) == expected


@pytest.mark.parametrize("m", [0, 1, -4])
def test_factor_rejects_small_modulus(m):
    with pytest.raises(InvalidModulusError):
        factor(m)


def test_factor_roundtrip():
    for m in range(2, 2000):
        fs = factor(m)
        prod = 1
        for p, k in fs:
            assert is_prime(p) and k >= 1
            prod *= p**k
        assert prod == m
        assert [p for p, _ in fs] == sorted(p for p, _ in fs)


def test_residue_ops():
    assert int(Residue(3, 6) + Residue(5, 6)) == 2
    assert int(Residue(2, 6) * Residue(3, 6)) == 0
    assert int(-Residue(0, 7)) == 0
    assert int(Residue(1, 5) - Residue(3, 5)) == 3
    assert Residue(9, 4) == Residue(1, 4)


def test_residue_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        Residue(1, 4) + Residue(1, 6)


def test_valuation():
    assert valuation(48, 2) == 4
    assert valuation(7, 2) == 0
