import itertools
import random

import numpy as np
import pytest

from helpers import rand_endo, rand_group_config
from lcaexp.additive import (
    AdditiveRule,
    GroupSpec,
    InvalidRuleError,
    apply_additive,
    apply_lca,
    associated_lca,
    associated_matrices,
    decide_additive,
    embed_config,
    primary_decompose,
    project,
    psi,
    validate_rule,
)
from lcaexp.laurent import parse


def rule(orders, endos, radius=-1):
    return AdditiveRule(GroupSpec(tuple(orders)), {z: np.array(M) for z, M in endos.items()}, radius)


@pytest.mark.parametrize(
    "orders, expected",
    [([4, 2], [(2, [2, 1])]), ([6], [(2, [1]), (3, [1])]), ([8, 12], [(2, [3, 2]), (3, [1])])],
)
def test_primary_decompose(orders, expected):
    got = [(c.p, list(c.exponents)) for c in primary_decompose(GroupSpec(tuple(orders)))]
    assert got == expected


def test_decompose_sorts_exponents():
    (c,) = primary_decompose(GroupSpec((2, 8, 4)))
    assert list(c.exponents) == [3, 2, 1]
    assert c.order == 8


def test_decomposition_roundtrip():
    # the projections of an element determine it (Chinese remainder)
    for orders in [(6,), (12, 4), (8, 12), (9, 6, 2)]:
        G = GroupSpec(orders)
        comps = primary_decompose(G)
        images = {tuple(project(c, g) for c in comps) for g in G.elements()}
        assert len(images) == int(np.prod(orders))


def test_validate_rule():
    assert validate_rule(rule([4, 2], {0: [[0, 2], [1, 0]]})) is None
    v = validate_rule(rule([4, 2], {0: [[0, 1], [1, 0]]}))
    assert (v.offset, v.row, v.col) == (0, 0, 1)
    assert "entry (1,2)" in str(v)
    for orders in [(4, 2), (9, 3, 3), (6,)]:
        assert validate_rule(rule(orders, {0: np.eye(len(orders), dtype=int)})) is None


def test_validate_rule_matches_homomorphism_check():
    # brute force: the matrix is well defined on G iff images of order-respecting relations vanish
    G = (4, 2)
    for entries in itertools.product(range(4), range(4), range(2), range(2)):
        M = [[entries[0], entries[1]], [entries[2], entries[3]]]
        ok = all(
            (M[i][j] * G[j]) % G[i] == 0 for i in range(2) for j in range(2)
        )
        assert (validate_rule(rule(G, {0: M})) is None) == ok


def test_psi():
    (c,) = primary_decompose(GroupSpec((4, 2)))
    assert psi(c, (1, 1)) == (1, 2)
    assert psi(c, (3, 1)) == (3, 2)
    assert psi(c, (0, 0)) == (0, 0)


def test_psi_injective():
    for orders in [(4, 2), (8, 2), (8, 4, 2), (9, 3), (2, 2, 2, 2, 2, 2), (16, 4)]:
        for c in primary_decompose(GroupSpec(orders)):
            imgs = {psi(c, g) for g in c.elements()}
            assert len(imgs) == int(np.prod([c.p**k for k in c.exponents]))


def test_associated_lca_examples():
    G = (4, 2)
    (c,) = primary_decompose(GroupSpec(G))
    mats = associated_matrices(c, rule(G, {0: [[0, 2], [1, 0]]}))
    assert mats[0].tolist() == [[0, 1], [2, 0]]
    lca = associated_lca(c, rule(G, {0: [[1, 0], [0, 1]]}))
    assert lca.modulus == 4 and lca.A.to_strings() == [["1", "0"], ["0", "1"]]
    lca = associated_lca(c, rule(G, {0: [[0, 0], [0, 0]]}))
    assert lca.A.to_strings() == [["0", "0"], ["0", "0"]]
    with pytest.raises(InvalidRuleError):
        associated_lca(c, rule(G, {0: [[0, 1], [1, 0]]}))


def test_apply_additive_examples():
    G = (2,)
    ident = rule(G, {0: [[1]]})
    c = {0: (1,), 3: (1,)}
    assert apply_additive(ident, c) == c
    assert apply_additive(rule(G, {0: [[0]]}), c) == {}
    spread = rule(G, {-1: [[1]], 1: [[1]], 0: [[0]]})
    assert apply_additive(spread, {0: (1,)}) == {-1: (1,), 1: (1,)}


def test_offset_sign_matches_laurent_matrix():
    # f_{-1} = id alone: F(c)_i = c_{i-1}, a right shift, i.e. multiplication by X
    shift = rule((3,), {-1: [[1]]})
    (c,) = primary_decompose(shift.group)
    lca = associated_lca(c, shift)
    assert lca.A[0, 0] == parse("X", 3)
    assert apply_additive(shift, {0: (2,)}) == {1: (2,)}


def test_decide_additive_examples():
    spread = {-1: [[1]], 1: [[1]], 0: [[0]]}
    assert decide_additive(rule((2,), spread))
    assert not decide_additive(rule((4, 2), {0: [[1, 0], [0, 1]]}))
    v = decide_additive(rule((6,), spread))
    assert v and len(v.components) == 2
    with pytest.raises(InvalidRuleError):
        decide_additive(rule((4, 2), {0: [[0, 1], [1, 0]]}))


def test_commuting_diagram_seeded():
    rng = random.Random(12)
    for orders in [(4, 2), (8, 2), (9, 3), (12, 2)]:
        G = GroupSpec(orders)
        for _ in range(20):
            r = rng.randint(0, 2)
            R = AdditiveRule(G, {z: np.array(rand_endo(rng, orders)) for z in range(-r, r + 1)}, r)
            for comp in primary_decompose(G):
                lca = associated_lca(comp, R)
                for _ in range(10):
                    c = rand_group_config(rng, orders)
                    lhs = embed_config(comp, apply_additive(R, c))
                    rhs = apply_lca(lca, embed_config(comp, c))
                    assert lhs == rhs
