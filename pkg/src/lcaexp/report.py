"""Report documents: plain dicts with a fixed key order, rendered as JSON or text."""

from __future__ import annotations

import json

from . import oracle
from .additive import AdditiveVerdict, ComponentVerdict, PrimaryComponent
from .decider import PrimeVerdict, Verdict
from .matpoly import InvariantFactors, LaMatrix, TPoly

WITNESS_NOTE = "witness (bounded search): evidence of non-expansivity, not a proof"


def tpoly_coeffs(f: TPoly) -> list[str]:
    """Coefficients alpha_0 .. alpha_n as strings."""
    return [str(c) for c in f.coeffs]


def prime_verdict(v: PrimeVerdict) -> dict:
    return {
        "p": v.p,
        "k": v.k,
        "charpoly": tpoly_coeffs(v.charpoly),
        "charpoly_text": str(v.charpoly),
        "expansive": v.expansive,
        "failed_clause": v.explanation.clause,
        "failed_index": v.explanation.index,
        "detail": v.explanation.detail,
        "surjective": v.surjective,
    }


def verdict(v: Verdict) -> dict:
    return {
        "positively_expansive": v.positively_expansive,
        "per_prime": [prime_verdict(pv) for pv in v.per_prime],
    }


def matrix(A: LaMatrix) -> dict:
    return {"modulus": A.modulus, "n": A.n, "radius": A.radius, "entries": A.to_strings()}


def component(c: PrimaryComponent) -> dict:
    return {"p": c.p, "exponents": list(c.exponents), "cyclic_factors": list(c.factors)}


def component_verdict(cv: ComponentVerdict) -> dict:
    return {
        "component": component(cv.component),
        "lca": matrix(cv.lca.A),
        **verdict(cv.verdict),
    }


def additive_verdict(v: AdditiveVerdict) -> dict:
    return {
        "positively_expansive": v.positively_expansive,
        "components": [component_verdict(cv) for cv in v.components],
    }


def invariants(inv: InvariantFactors, chi: TPoly) -> dict:
    return {
        "p": inv.modulus,
        "factors": [[str(c) for c in f.coeffs] for f in inv.factors],
        "factors_text": [str(f) for f in inv.factors],
        "divisibility_chain": inv.is_divisibility_chain(),
        "product_equals_charpoly": inv.product_equals(chi),
        "denominator_free": inv.denominator_free(),
    }


def config(c: oracle.FiniteConfig) -> dict:
    return {str(p): list(v) for p, v in c.cells.items()}


def oracle_result(res) -> dict:
    if isinstance(res, oracle.VerifiedExpansive):
        return {
            "outcome": "verified_expansive",
            "lhat": res.lhat,
            "left_lhat": res.left_lhat,
            "right_lhat": res.right_lhat,
        }
    if isinstance(res, oracle.RefutedByWitness):
        return {
            "outcome": "refuted_by_witness",
            "note": WITNESS_NOTE,
            "side": res.side,
            "steps": res.steps,
            "exhaustive": res.exhaustive,
            "witnesses": [{"side": w.side, "config": config(w.config)} for w in res.witnesses],
        }
    out = {"outcome": "inconclusive", "budget": res.budget}
    if getattr(res, "window", None) is not None:
        out["side"] = res.side
        out["window"] = [list(c) for c in res.window.columns]
    return out


def to_structured(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def _text(v, indent: int, lines: list[str]) -> None:
    pad = "  " * indent
    if isinstance(v, dict):
        for k, x in v.items():
            if isinstance(x, (dict, list)) and not (
                isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x)
            ):
                lines.append(f"{pad}{k}:")
                _text(x, indent + 1, lines)
            else:
                lines.append(f"{pad}{k}: {_scalar(x)}")
    elif isinstance(v, list):
        for x in v:
            if isinstance(x, (dict, list)):
                lines.append(f"{pad}-")
                _text(x, indent + 1, lines)
            else:
                lines.append(f"{pad}- {_scalar(x)}")
    else:
        lines.append(f"{pad}{_scalar(v)}")


def to_text(doc: dict) -> str:
    lines: list[str] = []
    _text(doc, 0, lines)
    return "\n".join(lines) + "\n"
