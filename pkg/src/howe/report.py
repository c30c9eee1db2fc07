"""Full analysis pipeline and its serialisable report.

One call runs: validation, coefficient formulas, the polynomial-arithmetic
cross-check, singularity classification and location with multiplicity
certificates, the irreducibility searches, and the structural invariants
(Euler relation, square restriction to y = 0, genus bound).  The JSON form
is key-ordered and timing-free so equal inputs serialise byte-identically.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import HomPoly
from .field import Field, FieldElement
from .irreducible import IrreducibilityVerdict, is_absolutely_irreducible
from .sextic import (
    RamificationData,
    SexticModel,
    assemble_sextic,
    build_model,
)
from .singular import (
    SingularityType,
    SingularPoint,
    classify,
    genus_bound_check,
    h1_poly,
    singular_points,
)
from .unipoly import UniPoly

SCHEMA_VERSION = 1


def euler_relation_holds(F: HomPoly) -> bool:
    """deg(F) * F = x F_x + y F_y + z F_z as a polynomial identity."""
    lhs = F.scale(F.field(F.degree))
    rhs = F.partial("x").times_var("x")
    rhs = rhs + F.partial("y").times_var("y")
    rhs = rhs + F.partial("z").times_var("z")
    return lhs == rhs


@dataclass(frozen=True)
class AnalysisReport:
    rd: RamificationData
    model: SexticModel
    h1: UniPoly
    classification: SingularityType
    points: tuple
    verdict: IrreducibilityVerdict
    checks: dict
    seed: int
    elapsed_ms: float

    @property
    def all_checks_pass(self) -> bool:
        return all(self.checks.values())


def analyze(rd: RamificationData, seed: int = 0) -> AnalysisReport:
    t0 = time.perf_counter()
    model = build_model(rd, cross_check=True)
    h1 = h1_poly(rd)
    kind = classify(rd)
    points = tuple(singular_points(rd, seed, model))
    verdict = is_absolutely_irreducible(rd)
    checks = {
        "assembly_matches_formulas": model.f == assemble_sextic(rd),
        "euler_relation": euler_relation_holds(model.F),
        "y0_restriction_is_h1_squared": model.f.y_slice(0) == h1 * h1,
        "constants_c42_c04": model.coeffs.c42 == rd.field(-4)
        and model.coeffs.c04 == rd.field.one,
        "total_singularities_in_range": kind.total in (2, 3, 4),
        "genus_bound": genus_bound_check(kind),
        "irreducible": verdict.irreducible,
    }
    elapsed = (time.perf_counter() - t0) * 1000.0
    return AnalysisReport(rd, model, h1, kind, points, verdict, checks, seed, elapsed)


# -- serialisation -----------------------------------------------------------


def element_json(v: FieldElement):
    val = v.val
    if isinstance(val, int):
        return val
    if isinstance(val, Fraction):
        return str(val)
    return list(val)  # extension field coefficient vector


def field_json(field: Field) -> dict:
    if field.kind == "prime":
        return {"kind": "prime", "p": field.p}
    if field.kind == "extension":
        return {"kind": "extension", "p": field.p, "degree": field.k,
                "modulus": list(field.modulus)}
    return {"kind": "rational"}


def point_json(pt: SingularPoint) -> dict:
    cert = {
        "partial": pt.certificate.partial,
        "value": None if pt.certificate.value is None else element_json(pt.certificate.value),
    }
    if pt.certificate.note:
        cert["note"] = pt.certificate.note
    return {
        "coords": None if pt.coords is None else [element_json(c) for c in pt.coords],
        "at_infinity": pt.at_infinity,
        "extension_degree": pt.extension_degree,
        "minimal_poly": None if pt.minimal_poly is None else str(pt.minimal_poly),
        "conjugates": pt.conjugate_count,
        "multiplicity": pt.multiplicity,
        "certificate": cert,
    }


def report_json(report: AnalysisReport) -> dict:
    rd = report.rd
    c = report.model.coeffs
    kind = report.classification
    verdict = report.verdict
    singularity = {
        "type": kind.label,
        "affine_count": kind.affine_count,
        "infinity_count": kind.infinity_count,
        "total": kind.total,
        "resultant_h1_h1prime": _opt(kind.res_h1_h1p),
        "resultant_h1prime_h1doubleprime": _opt(kind.res_h1p_h1pp),
        "discriminant_h1": _opt(kind.disc_h1),
        "points": [point_json(p) for p in report.points],
    }
    irreducibility = {
        "irreducible": verdict.irreducible,
        "shape_a_witness": None
        if verdict.shape_a_witness is None
        else {"h1": str(verdict.shape_a_witness.h1), "h2": str(verdict.shape_a_witness.h2)},
        "shape_b_witness": None
        if verdict.shape_b_witness is None
        else {
            "case": verdict.shape_b_witness.case,
            "coefficients": [element_json(a) for a in verdict.shape_b_witness.coefficients],
            "h1": str(verdict.shape_b_witness.h1),
            "h2": str(verdict.shape_b_witness.h2),
        },
        "shape_b_residuals": {
            case.case: [element_json(r) for r in case.residuals]
            for case in verdict.shape_b_residuals
        },
    }
    return {
        "schema": SCHEMA_VERSION,
        "field": field_json(rd.field),
        "input": {
            "alpha": [element_json(a) for a in rd.alphas],
            "beta": [element_json(b) for b in rd.betas],
            "seed": report.seed,
        },
        "symmetric_functions": {
            "sigma": [element_json(s) for s in rd.sigma],
            "tau": [element_json(t) for t in rd.tau],
        },
        "coefficients": {k: element_json(v) for k, v in c.as_dict().items()},
        "sextic": str(report.model.f),
        "projective_closure": str(report.model.F),
        "h1": str(report.h1),
        "singularity": singularity,
        "irreducibility": irreducibility,
        "checks": dict(report.checks),
    }


def _opt(v):
    return None if v is None else element_json(v)


def to_json(report: AnalysisReport) -> str:
    return json.dumps(report_json(report), indent=2)


def render_text(report: AnalysisReport) -> str:
    rd = report.rd
    kind = report.classification
    lines = []
    lines.append(f"field: {rd.field}")
    lines.append(f"alpha: ({', '.join(str(a) for a in rd.alphas)})")
    lines.append(f"beta:  ({', '.join(str(b) for b in rd.betas)})")
    lines.append(f"sigma: ({', '.join(str(s) for s in rd.sigma)})")
    lines.append(f"tau:   ({', '.join(str(t) for t in rd.tau)})")
    lines.append("")
    lines.append(f"sextic f = {report.model.f}")
    lines.append(f"h1 = {report.h1}")
    lines.append("")
    lines.append(
        f"singularity type {kind.label}: {kind.affine_count} affine + "
        f"{kind.infinity_count} at infinity = {kind.total} double points"
    )
    if kind.res_h1_h1p is not None:
        lines.append(f"  Res(h1, h1') = {kind.res_h1_h1p}")
    if kind.res_h1p_h1pp is not None:
        lines.append(f"  Res(h1', h1'') = {kind.res_h1p_h1pp}")
    if kind.disc_h1 is not None:
        lines.append(f"  disc(h1) = {kind.disc_h1}")
    for pt in report.points:
        if pt.coords is not None:
            x, y, z = pt.coords
            loc = f"({x}:{y}:{z})"
        else:
            loc = f"{pt.conjugate_count} conjugate points, min poly {pt.minimal_poly}"
        cert = pt.certificate
        cval = cert.value if cert.value is not None else cert.note
        lines.append(
            f"  {loc}  multiplicity {pt.multiplicity}, degree {pt.extension_degree},"
            f" certificate {cert.partial} = {cval}"
        )
    lines.append("")
    lines.append(f"absolutely irreducible: {report.verdict.irreducible}")
    for name, ok in report.checks.items():
        lines.append(f"check {name}: {'ok' if ok else 'FAILED'}")
    lines.append(f"elapsed: {report.elapsed_ms:.2f} ms")
    return "\n".join(lines)
