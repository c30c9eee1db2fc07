"""Command-line front end.

Verbs:
  build         analyse one configuration and print the full report
  verify-paper  replay the seven bundled reference examples and diff them
  sample        draw random configurations and tabulate singularity types
  scan          compare located singular points against a brute-force scan

Exit codes: 0 success, 1 reference or oracle mismatch, 2 field error,
3 input validation error, 4 scan budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import (
    BudgetExceededError,
    DuplicateRamificationPointError,
    InfinityNotSupportedError,
    UnsupportedFieldError,
)
from .field import Field, is_prime, prime_field, rational_field
from .report import analyze, render_text, to_json
from .reference import run_reference_checks
from .sampling import sample_types
from .sextic import build_model, validate
from .singular import brute_force_singular_scan, rational_point_set, singular_points

SCAN_PRIME_LIMIT = 97

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_FIELD = 2
EXIT_INPUT = 3
EXIT_BUDGET = 4


class FieldArgumentError(Exception):
    pass


def parse_field(text: str) -> Field:
    if text == "rational":
        return rational_field()
    if text.startswith("p="):
        body = text[2:]
        try:
            p = int(body)
        except ValueError:
            raise FieldArgumentError(f"not an integer modulus: {body!r}") from None
        if not is_prime(p):
            raise FieldArgumentError(f"{p} is not prime")
        if p < 5:
            raise FieldArgumentError("the construction needs characteristic 0 or >= 5")
        return prime_field(p)
    raise FieldArgumentError(f"unrecognised field {text!r}; use p=<prime> or rational")


_INFINITY_TOKENS = {"inf", "infinity", "oo", "+inf", "-inf"}


def parse_points(field: Field, text: str, what: str):
    """Comma-separated field elements: integers, or n/d fractions over Q."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"--{what} needs exactly 4 comma-separated values")
    out = []
    for part in parts:
        if part.lower() in _INFINITY_TOKENS:
            raise InfinityNotSupportedError(
                f"{what} value {part!r}: branch values must be finite; apply a"
                " Moebius normalisation first"
            )
        if field.kind == "rational":
            out.append(field(Fraction(part)))
        else:
            out.append(field(int(part)))
    return out


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_build(args) -> int:
    field = parse_field(args.field)
    alphas = parse_points(field, args.alpha, "alpha")
    betas = parse_points(field, args.beta, "beta")
    rd = validate(alphas, betas)
    report = analyze(rd, args.seed)
    if args.json:
        print(to_json(report))
    else:
        print(render_text(report))
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    outcomes = run_reference_checks(args.seed)
    payload = {
        "schema": 1,
        "examples": [
            {"name": o.name, "passed": o.passed, "diffs": o.diffs} for o in outcomes
        ],
        "passed": sum(o.passed for o in outcomes),
        "total": len(outcomes),
    }
    lines = []
    for o in outcomes:
        lines.append(f"{o.name}: {'pass' if o.passed else 'FAIL'}")
        for d in o.diffs:
            lines.append(f"    {d}")
    lines.append(f"{payload['passed']}/{payload['total']} reference examples match")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if payload["passed"] == payload["total"] else EXIT_MISMATCH


def cmd_sample(args) -> int:
    field = parse_field(args.field)
    if field.kind != "prime":
        raise FieldArgumentError("sampling draws uniform elements; use a prime field")
    summary = sample_types(field, args.count, args.seed)
    payload = {"schema": 1, "field": {"kind": "prime", "p": field.p}}
    payload.update(summary.as_dict())
    lines = [f"sampled {summary.count} configurations over F_{field.p} (seed {summary.seed})"]
    for label in ("I-1", "I-2", "I-3", "II-1", "II-2", "II-3", "II-4"):
        n = summary.type_counts.get(label, 0)
        if n:
            lines.append(f"  {label}: {n}")
    lines.append(
        "  with 4 double points: "
        f"{summary.total_counts.get(4, 0)} ({summary.fraction_with_four:.4f})"
    )
    lines.append(f"  irreducibility failures: {summary.irreducibility_failures}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_scan(args) -> int:
    field = parse_field(args.field)
    if field.kind != "prime" or field.p > SCAN_PRIME_LIMIT:
        raise BudgetExceededError(
            f"scan enumerates the projective plane; the field must be prime with"
            f" p <= {SCAN_PRIME_LIMIT}"
        )
    alphas = parse_points(field, args.alpha, "alpha")
    betas = parse_points(field, args.beta, "beta")
    rd = validate(alphas, betas)
    model = build_model(rd)
    located = singular_points(rd, args.seed, model)
    symbolic = rational_point_set(located)
    scanned = set(brute_force_singular_scan(model.F))
    agree = symbolic == scanned
    payload = {
        "schema": 1,
        "field": {"kind": "prime", "p": field.p},
        "symbolic": sorted(symbolic),
        "scan": sorted(scanned),
        "agree": agree,
    }
    lines = [
        f"symbolic rational points: {sorted(symbolic)}",
        f"scan found:               {sorted(scanned)}",
        "agreement: " + ("yes" if agree else "NO"),
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if agree else EXIT_MISMATCH


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="howe",
        description=(
            "Plane sextic models for the genus-5 curves glued from two"
            " genus-1 double covers: construction, singularity"
            " classification, and irreducibility certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, points: bool):
        p.add_argument("--field", required=True, help="p=<prime> or rational")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if points:
            p.add_argument("--alpha", required=True, help="a1,a2,a3,a4")
            p.add_argument("--beta", required=True, help="b1,b2,b3,b4")

    p_build = sub.add_parser("build", help="analyse one configuration")
    common(p_build, points=True)
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser(
        "verify-paper", help="replay the bundled reference examples"
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify_paper)

    p_sample = sub.add_parser("sample", help="type distribution of random draws")
    common(p_sample, points=False)
    p_sample.add_argument("--count", type=int, required=True)
    p_sample.set_defaults(func=cmd_sample)

    p_scan = sub.add_parser("scan", help="brute-force oracle comparison")
    common(p_scan, points=True)
    p_scan.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FieldArgumentError, UnsupportedFieldError) as exc:
        print(f"field error: {exc}", file=sys.stderr)
        return EXIT_FIELD
    except DuplicateRamificationPointError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InfinityNotSupportedError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, TypeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
