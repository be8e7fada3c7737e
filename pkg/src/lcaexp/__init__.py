"""Decide positive expansivity of linear and additive cellular automata."""

from .additive import (
    AdditiveRule,
    GroupSpec,
    PrimaryComponent,
    associated_lca,
    decide_additive,
    primary_decompose,
    psi,
    validate_rule,
)
from .decider import LcaRule, Verdict, decide_lca
from .expansivity import Expansivity, is_expansive_matrix, is_expansive_poly
from .laurent import NEG_INF, POS_INF, LaurentPoly, deg_minus, deg_plus, parse
from .matpoly import LaMatrix, TPoly, charpoly, det, invariant_factors
from .modarith import factor

__version__ = "0.1.0"
