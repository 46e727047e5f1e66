"""Batch command-line front end.

Structured JSON goes to stdout, diagnostics to stderr. Exit codes:
0 success / verification pass, 1 verification fail, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, Optional

from . import catalog, io as eio
from .cartan import cartan_check, killing_form
from .lie import (
    FreeLieAlgebra,
    classical_algebra,
    derived_series,
    is_abelian,
    is_nilpotent,
    is_solvable,
    negated_commutator,
    lower_central_series,
    verify_axioms,
)
from .lift import (
    LiftEliminationError,
    dependence_via_lift,
    free_elt_lift,
    puiseux_elt_lift,
    verify_lift_laws,
    z2_nat_lift,
)
from .linalg import GRIDS, unit_vector
from .pbw import PbwAssertionError, pbw_counterexample
from .io import FormatError

BUILTIN_ALGEBRAS = {
    "sl2": catalog.sl2,
    "sl2-layered": catalog.sl2_layered,
    "pbw": catalog.disproof_algebra,
    "heisenberg": catalog.heisenberg_algebra,
}


def _emit(payload: Dict) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _fail_input(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _load_algebra(args) -> FreeLieAlgebra:
    if getattr(args, "builtin", None):
        name = args.builtin
        if name not in BUILTIN_ALGEBRAS:
            raise FormatError(
                f"unknown builtin {name!r}; choose from {sorted(BUILTIN_ALGEBRAS)}"
            )
        return BUILTIN_ALGEBRAS[name]()
    if not args.file:
        raise FormatError("provide a structure-constant file or --builtin")
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {args.file}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON in {args.file}: line {exc.lineno}, column {exc.colno}") from None
    return eio.algebra_from_json(data)


def _verdict_json(v) -> Dict:
    return {
        "decided": v.decided,
        "value": v.value if v.decided else None,
        "step": v.step,
        "reason": v.reason,
    }


def cmd_eval(args) -> int:
    value = eio.eval_scalar_expression(args.expression)
    _emit(eio.scalar_to_json(value))
    return 0


def cmd_lie_check(args) -> int:
    alg = _load_algebra(args)
    report = verify_axioms(alg)
    payload = {
        "dim": alg.dim,
        "base": list(alg.labels),
        "antisymmetry_ok": not report.antisymmetry_violations,
        "alternating_ok": not report.alternating_violations,
        "jacobi_ok": not report.jacobi_violations,
        "passed": report.passed,
        "violations": {
            "antisymmetry": sorted(report.antisymmetry_violations),
            "alternating": sorted(report.alternating_violations),
            "jacobi": sorted(report.jacobi_violations),
        },
    }
    if alg.dim == 3:
        payload["cyclic_sums_123"] = [
            eio.scalar_to_json(s) for s in report.sums_for_triple(1, 2, 3)
        ]
    _emit(payload)
    return 0 if report.passed else 1


def cmd_lie_series(args) -> int:
    alg = _load_algebra(args)
    series_fn = derived_series if args.kind == "derived" else lower_central_series
    steps = series_fn(alg, args.kmax)
    verdict = (
        is_solvable(alg, args.kmax)
        if args.kind == "derived"
        else is_nilpotent(alg, args.kmax)
    )
    payload = {
        "dim": alg.dim,
        "kind": args.kind,
        "kmax": args.kmax,
        "abelian": is_abelian(alg),
        "steps": [
            {
                "step": k,
                "generators": [eio.vector_to_json(g) for g in s.gens],
                "all_quasi_zero": s.all_quasi_zero(),
            }
            for k, s in enumerate(steps)
        ],
        "verdict": _verdict_json(verdict),
    }
    _emit(payload)
    return 0


def cmd_lie_killing(args) -> int:
    alg = _load_algebra(args)
    grid = GRIDS[args.grid]
    data = killing_form(alg)
    report = cartan_check(alg, grid, ideal_samples=args.samples, seed=args.seed)
    payload = {
        "dim": alg.dim,
        "gram": eio.matrix_to_json(data.gram),
        "essential_gram": eio.matrix_to_json(data.essential_gram),
        "verdict": {
            "degeneracy_witness": (
                eio.vector_to_json(report.probe.witnesses[0])
                if report.probe.degenerate
                else None
            ),
            "abelian_ideal_witness": (
                [eio.vector_to_json(g) for g in report.abelian_ideal_witness]
                if report.abelian_ideal_witness
                else None
            ),
            "criterion_applicable": report.applicable,
            "consistent": report.consistent,
            "ideals_checked": report.ideals_checked,
        },
    }
    _emit(payload)
    return 0 if report.consistent else 1


def cmd_lie_classical(args) -> int:
    family = classical_algebra(args.kind, args.n)
    payload = {
        "kind": family.kind,
        "rank": family.rank,
        "matrix_size": family.size,
        "generator_count": len(family.generators),
        "labels": family.labels,
        "generators": [eio.matrix_to_json(g) for g in family.generators],
    }
    closed = all(
        family.membership(negated_commutator(a, b))
        for a in family.generators[:6]
        for b in family.generators[:6]
    )
    payload["bracket_closure_sample_ok"] = closed
    _emit(payload)
    return 0 if closed else 1


def cmd_lift_demo(args) -> int:
    if args.suite == "laws":
        reports = [
            verify_lift_laws(contract, args.samples, seed=args.seed)
            for contract in (puiseux_elt_lift(), free_elt_lift(), z2_nat_lift())
        ]
        payload = {
            "suite": "laws",
            "samples": args.samples,
            "results": [
                {
                    "lift": r.name,
                    "passed": r.passed,
                    "failed_laws": r.failed_laws(),
                }
                for r in reports
            ],
        }
        _emit(payload)
        return 0 if all(r.passed for r in reports) else 1

    if args.file:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise FormatError(f"cannot read {args.file}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise FormatError(
                f"malformed JSON in {args.file}: line {exc.lineno}, column {exc.colno}"
            ) from None
        if not isinstance(data, list):
            raise FormatError("dependence input must be a list of vectors")
        vectors = [eio.vector_from_json(v) for v in data]
    else:
        # e1, e2, e1 + e2 in the rank-2 free module
        e1 = unit_vector(2, 0)
        e2 = unit_vector(2, 1)
        vectors = [e1, e2, e1 + e2]
    try:
        cert = dependence_via_lift(vectors, order=args.order, seed=args.seed)
    except LiftEliminationError as exc:
        print(f"elimination failed: {exc}", file=sys.stderr)
        return 1
    payload = {
        "suite": "dependence",
        "coefficients": [eio.scalar_to_json(c) for c in cert.coefficients],
        "combination": eio.vector_to_json(cert.combination()),
        "verified_quasi_zero": cert.verify(),
    }
    _emit(payload)
    return 0 if cert.verify() else 1


def cmd_pbw(args) -> int:
    try:
        report = pbw_counterexample(samples=args.samples, seed=args.seed)
    except PbwAssertionError as exc:
        print(str(exc), file=sys.stderr)
        _emit({"failed_step": exc.step})
        return 1
    _emit(
        {
            "y1": eio.vector_to_json(report.y1),
            "y2": eio.vector_to_json(report.y2),
            "surpass_y2_y1": report.surpass_y2_y1,
            "equal": report.equal,
            "strong_jacobi_in_free": report.strong_jacobi_in_free,
            "partial_order_samples": report.partial_order_checked,
            "conclusion": report.conclusion,
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eltlie",
        description="Exact layered-tropical algebra: scalars, lifts, Lie machinery.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a scalar expression")
    p.add_argument("expression", help="e.g. '(3,2)+(1,5)' or '~(5,3)*(0,1)'")
    p.set_defaults(func=cmd_eval)

    def add_algebra_source(p):
        p.add_argument("file", nargs="?", help="structure-constant JSON file")
        p.add_argument(
            "--builtin",
            choices=sorted(BUILTIN_ALGEBRAS),
            help="use a packaged algebra instead of a file",
        )

    p = sub.add_parser("lie-check", help="verify the Lie axioms on structure constants")
    add_algebra_source(p)
    p.set_defaults(func=cmd_lie_check)

    p = sub.add_parser("lie-series", help="derived / lower central series")
    add_algebra_source(p)
    p.add_argument("--kind", choices=("derived", "lower"), default="derived")
    p.add_argument("--kmax", type=int, default=6)
    p.set_defaults(func=cmd_lie_series)

    p = sub.add_parser("lie-killing", help="Killing forms and the criterion check")
    add_algebra_source(p)
    p.add_argument("--grid", choices=sorted(GRIDS), default="default")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_lie_killing)

    p = sub.add_parser("lie-classical", help="classical matrix families")
    p.add_argument("kind", choices=("gl", "A", "B", "C", "D"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_lie_classical)

    p = sub.add_parser("lift-demo", help="lift law suites / dependence certificates")
    p.add_argument("--suite", choices=("laws", "dependence"), default="laws")
    p.add_argument("--file", help="JSON list of n+1 vectors (dependence suite)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", default="1", help="perturbation exponent budget")
    p.set_defaults(func=cmd_lift_demo)

    p = sub.add_parser("pbw", help="run the enveloping-algebra counterexample")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_pbw)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        return _fail_input(str(exc))
    except (ValueError, OSError) as exc:
        return _fail_input(str(exc))


if __name__ == "__main__":
    sys.exit(main())
