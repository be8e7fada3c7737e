"""Command-line front end.

A job is a JSON document, read from a path or stdin::

    {"kind": "lca", "modulus": 2, "n": 2, "matrix": [["0", "1"], ["X + X^-1", "0"]]}
    {"kind": "additive", "group": [4, 2], "radius": 0, "rules": {"0": [[0, 2], [1, 0]]}}

Exit status: 0 when the command ran, 1 on usage or input errors, 2 when
``crosscheck`` finds an internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import oracle, report
from .additive import (
    AdditiveRule,
    GroupSpec,
    InvalidRuleError,
    associated_lca,
    decide_additive,
    primary_decompose,
    psi,
    validate_rule,
)
from .decider import LcaRule, decide_lca
from .expansivity import is_expansive_poly
from .laurent import LaurentParseError, parse
from .matpoly import DimensionError, LaMatrix, charpoly, invariant_factors
from .modarith import InvalidModulusError, factor

SUBCOMMANDS = ("decide", "charpoly", "invariants", "oracle", "embed", "crosscheck")


class JobError(ValueError):
    """Malformed job specification."""


@dataclass
class Options:
    lhat: int = oracle.DEFAULT_LHAT
    width: int = oracle.DEFAULT_WIDTH
    steps: int = oracle.DEFAULT_STEPS
    seed: int = 0
    format: str = "text"
    workers: int = 1


@dataclass
class JobSpec:
    kind: str
    lca: LcaRule | None = None
    additive: AdditiveRule | None = None
    options: Options = field(default_factory=Options)


def _int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise JobError(f"{what} must be an integer, got {value!r}")
    return value


def _parse_lca(doc: dict) -> LcaRule:
    m = _int(doc.get("modulus"), "modulus")
    if m < 2:
        raise JobError(f"modulus must be >= 2, got {m}")
    rows = doc.get("matrix")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise JobError("matrix must be a non-empty list of rows")
    n = doc.get("n", len(rows))
    n = _int(n, "n")
    lengths = {len(r) for r in rows}
    if len(rows) != n or lengths != {n}:
        raise JobError(
            f"dimension mismatch: n = {n}, {len(rows)} rows of lengths {sorted(lengths)}"
        )
    entries = []
    for i, row in enumerate(rows):
        out = []
        for j, s in enumerate(row):
            if isinstance(s, int) and not isinstance(s, bool):
                s = str(s)
            if not isinstance(s, str):
                raise JobError(f"matrix[{i}][{j}] must be a string, got {s!r}")
            try:
                out.append(parse(s, m))
            except LaurentParseError as exc:
                raise JobError(
                    f"matrix[{i}][{j}]: syntax error at column {exc.column} in {s!r}"
                ) from None
        entries.append(out)
    return LcaRule(LaMatrix(entries, m))


def _parse_additive(doc: dict) -> AdditiveRule:
    group = doc.get("group")
    if not isinstance(group, list) or not group:
        raise JobError("group must be a non-empty list of cyclic orders")
    try:
        G = GroupSpec(tuple(_int(o, "cyclic order") for o in group))
    except ValueError as exc:
        raise JobError(str(exc)) from None
    N = G.rank
    r = _int(doc.get("radius", 0), "radius")
    if r < 0:
        raise JobError("radius must be >= 0")
    rules = doc.get("rules", {})
    if not isinstance(rules, dict):
        raise JobError("rules must map offsets to integer matrices")
    endos = {}
    for key, M in rules.items():
        try:
            z = int(key)
        except ValueError:
            raise JobError(f"offset {key!r} is not an integer") from None
        if abs(z) > r:
            raise JobError(f"offset {z} outside [-{r}, {r}]")
        if (
            not isinstance(M, list)
            or len(M) != N
            or any(not isinstance(row, list) or len(row) != N for row in M)
        ):
            raise JobError(f"dimension mismatch: rule at offset {z} must be {N}x{N}")
        for row in M:
            for x in row:
                _int(x, f"entry of rule {z}")
        endos[z] = np.asarray(M, dtype=np.int64)
    rule = AdditiveRule(G, endos, r)
    violation = validate_rule(rule)
    if violation is not None:
        raise JobError(f"invalid endomorphism: {violation}")
    return rule


def parse_job(text: str) -> JobSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise JobError("job must be a JSON object")
    kind = doc.get("kind")
    opts = Options()
    for key, attr in (("lhat", "lhat"), ("width", "width"), ("steps", "steps"), ("seed", "seed")):
        if key in doc.get("options", {}):
            setattr(opts, attr, _int(doc["options"][key], key))
    if kind == "lca":
        return JobSpec("lca", lca=_parse_lca(doc), options=opts)
    if kind == "additive":
        return JobSpec("additive", additive=_parse_additive(doc), options=opts)
    raise JobError(f"kind must be 'lca' or 'additive', got {kind!r}")


# -- subcommands -----------------------------------------------------------------


def _lcas(job: JobSpec) -> list[tuple[dict, LcaRule]]:
    """The linear CA a job reduces to, each with a label for the report."""
    if job.kind == "lca":
        return [({}, job.lca)]
    out = []
    for comp in primary_decompose(job.additive.group):
        out.append(({"component": report.component(comp)}, associated_lca(comp, job.additive)))
    return out


def _header(job: JobSpec, sub: str) -> dict:
    doc = {"subcommand": sub, "kind": job.kind}
    if job.kind == "lca":
        doc["rule"] = report.matrix(job.lca.A)
    else:
        rule = job.additive
        doc["group"] = list(rule.group.cyclic_orders)
        doc["radius"] = rule.radius
        doc["rules"] = {str(z): rule.endos[z].tolist() for z in sorted(rule.endos)}
    return doc


def _decide(job: JobSpec) -> dict:
    if job.kind == "lca":
        return report.verdict(decide_lca(job.lca, workers=job.options.workers))
    return report.additive_verdict(decide_additive(job.additive))


def _charpoly(job: JobSpec) -> list[dict]:
    out = []
    for label, lca in _lcas(job):
        A = lca.A
        entry = dict(label)
        entry["modulus"] = A.modulus
        entry["charpoly"] = report.tpoly_coeffs(charpoly(A))
        entry["charpoly_text"] = str(charpoly(A))
        entry["per_prime"] = [
            {"p": p, "charpoly": report.tpoly_coeffs(chi), "charpoly_text": str(chi)}
            for p, _ in factor(A.modulus)
            for chi in [charpoly(A.reduce_mod(p))]
        ]
        out.append(entry)
    return out


def _invariants(job: JobSpec) -> tuple[list[dict], list[str]]:
    out, problems = [], []
    for label, lca in _lcas(job):
        for p, _ in factor(lca.modulus):
            Ap = lca.A.reduce_mod(p)
            chi = charpoly(Ap)
            inv = invariant_factors(Ap)
            entry = dict(label)
            entry.update(report.invariants(inv, chi))
            expansive = bool(is_expansive_poly(chi))
            if inv.denominator_free():
                by_factor = all(bool(is_expansive_poly(f)) for f in inv.as_laurent())
            else:
                by_factor = None
            entry["charpoly_expansive"] = expansive
            entry["factors_all_expansive"] = by_factor
            out.append(entry)
            where = f"p={p}" + (f" component {label['component']['p']}" if label else "")
            if not entry["divisibility_chain"]:
                problems.append(f"{where}: invariant factors do not form a divisibility chain")
            if not entry["product_equals_charpoly"]:
                problems.append(f"{where}: product of invariant factors differs from charpoly")
            if not entry["denominator_free"]:
                problems.append(f"{where}: invariant factor with a denominator")
            if by_factor is not None and by_factor != expansive:
                problems.append(f"{where}: expansivity of charpoly disagrees with its factors")
    return out, problems


def _oracle(job: JobSpec) -> list[dict]:
    o = job.options
    out = []
    for label, lca in _lcas(job):
        entry = dict(label)
        entry["verify"] = report.oracle_result(
            oracle.verify_window(lca, o.lhat, workers=o.workers)
        )
        entry["falsify"] = report.oracle_result(
            oracle.falsify(lca, o.width, o.steps, seed=o.seed)
        )
        out.append(entry)
    return out


def _embed(job: JobSpec) -> list[dict]:
    if job.kind != "additive":
        raise JobError("embed needs an additive job")
    rule = job.additive
    out = []
    for comp in primary_decompose(rule.group):
        lca = associated_lca(comp, rule)
        gens = []
        for j in range(comp.n):
            e = [0] * comp.n
            e[j] = 1
            gens.append({"generator": e, "psi": list(psi(comp, e))})
        C = lca.A.offset_coefficients()
        r = (C.shape[0] - 1) // 2
        out.append(
            {
                "component": report.component(comp),
                "modulus": comp.order,
                "generators": gens,
                "offset_matrices": {str(z): C[z + r].tolist() for z in range(-r, r + 1)},
                "matrix": report.matrix(lca.A),
            }
        )
    return out


def run(sub: str, job: JobSpec) -> tuple[dict, int]:
    """Run a subcommand; returns (report document, exit status)."""
    doc = _header(job, sub)
    status = 0
    if sub == "decide":
        doc["verdict"] = _decide(job)
    elif sub == "charpoly":
        doc["charpoly"] = _charpoly(job)
    elif sub == "invariants":
        doc["invariants"] = _invariants(job)[0]
    elif sub == "oracle":
        doc["oracle"] = _oracle(job)
    elif sub == "embed":
        doc["embedding"] = _embed(job)
    elif sub == "crosscheck":
        verdict = _decide(job)
        per_lca = verdict.get("components") or [verdict]
        oracles = _oracle(job)
        invs, problems = _invariants(job)
        for v, o in zip(per_lca, oracles):
            decided = v["positively_expansive"]
            if o["verify"]["outcome"] == "verified_expansive" and not decided:
                problems.append("oracle verified expansivity but the decider says false")
            if o["falsify"]["outcome"] == "refuted_by_witness" and decided:
                problems.append("oracle found a bounded witness but the decider says true")
        doc["verdict"] = verdict
        doc["oracle"] = oracles
        doc["invariants"] = invs
        doc["disagreements"] = problems
        doc["consistent"] = not problems
        status = 2 if problems else 0
    else:
        raise JobError(f"unknown subcommand {sub!r}")
    return doc, status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lcaexp", description=__doc__.splitlines()[0])
    ap.add_argument("subcommand", choices=SUBCOMMANDS)
    ap.add_argument("job", nargs="?", default="-", help="job file (default: stdin)")
    ap.add_argument("--budget-lhat", type=int, default=None, metavar="N")
    ap.add_argument("--budget-width", type=int, default=None, metavar="W")
    ap.add_argument("--budget-steps", type=int, default=None, metavar="L")
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    ap.add_argument("--seed", type=int, default=None, metavar="S")
    ap.add_argument("--workers", type=int, default=1, metavar="K")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    try:
        if args.job == "-":
            text = sys.stdin.read()
        else:
            with open(args.job, encoding="utf-8") as fh:
                text = fh.read()
        job = parse_job(text)
        o = job.options
        for flag, attr in (
            ("budget_lhat", "lhat"),
            ("budget_width", "width"),
            ("budget_steps", "steps"),
            ("seed", "seed"),
        ):
            if getattr(args, flag) is not None:
                setattr(o, attr, getattr(args, flag))
        if min(o.lhat, o.width, o.steps) < 1:
            raise JobError("budgets must be >= 1")
        o.format = args.format
        o.workers = max(1, args.workers)
        doc, status = run(args.subcommand, job)
    except (OSError, JobError, InvalidRuleError, InvalidModulusError, DimensionError) as exc:
        print(f"lcaexp: error: {exc}", file=sys.stderr)
        return 1
    render = report.to_structured if args.format == "structured" else report.to_text
    sys.stdout.write(render(doc))
    return status


if __name__ == "__main__":
    sys.exit(main())
