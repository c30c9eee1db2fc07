"""Absolute-irreducibility certificates for the constructed sextic.

A sextic of this shape (quartic and monic in y, even in y, x^4 y^2
coefficient -4, nonzero restriction to y = 0) can only factor in one of
two ways:

  shape A:  (y^2 + q2(x)) * (y^2 + q4(x))     with deg q2 <= 2,
            which exists exactly when 16*phi1*phi2, the discriminant of f
            as a quadratic in y^2, is the square of a polynomial;

  shape B:  (y^2 + (2x^2 + a1 x + a2) y + g(x))
          * (y^2 - (2x^2 + a1 x + a2) y + g(x))   with a cubic g.

For shape B the outer coefficients pin a3^2 = c60 and a6^2 = c00, both
literal squares of symmetric-function differences, so all candidate
coefficients live in the base field and the test needs no field extension;
failure is certified by the residual values q1..q5 of the five remaining
coefficient comparisons.  Branch data is translated so that alpha1 = 0
before testing, which forces a6 != 0 and keeps every division defined;
a found witness is translated back.

For every admissible configuration of eight distinct branch values both
searches come up empty, so the verdict doubles as an executable proof of
irreducibility for the instance at hand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly
from .errors import ZeroPolynomialError
from .field import Field, FieldElement
from .sextic import RamificationData, build_model
from .unipoly import is_perfect_square


@dataclass(frozen=True)
class ShapeAWitness:
    h1: BiPoly
    h2: BiPoly


@dataclass(frozen=True)
class ShapeBWitness:
    case: str
    coefficients: tuple  # a1..a6
    h1: BiPoly
    h2: BiPoly


@dataclass(frozen=True)
class CaseResiduals:
    """Residuals q1..q5 of one sign case; all five vanish iff f factors."""

    case: str
    coefficients: tuple  # the attempted a1..a6
    residuals: tuple

    @property
    def a3(self) -> FieldElement:
        return self.coefficients[2]

    @property
    def a6(self) -> FieldElement:
        return self.coefficients[5]


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool
    shape_a_witness: ShapeAWitness | None
    shape_b_witness: ShapeBWitness | None
    shape_b_residuals: tuple


def _shape_grid(f: BiPoly) -> dict:
    """Coefficient grid of a shape-valid sextic, keyed like c_ij."""
    if f.degree_y() != 4 or not f.coefficient(0, 4) == f.field.one:
        raise ValueError("expected a monic quartic in y")
    if any(j % 2 for (_i, j) in f.terms):
        raise ValueError("expected a polynomial even in y")
    if f.coefficient(4, 2) != f.field(-4):
        raise ValueError("expected x^4 y^2 coefficient -4")
    if f.y_slice(0).is_zero:
        raise ZeroPolynomialError("the restriction f(x, 0) must not vanish")
    grid = {}
    for (i, j), c in f.terms.items():
        if j == 2 and i > 4 or j == 4 and i > 0 or j == 0 and i > 6:
            raise ValueError("not a sextic of the expected shape")
        grid[(i, j)] = c
    return grid


def _c(grid: dict, i: int, j: int, field: Field) -> FieldElement:
    return grid.get((i, j), field.zero)


def shape_a_witness(f: BiPoly) -> ShapeAWitness | None:
    """Search for a factorization into two even quadratics in y.

    Solving (y^2 + q2)(y^2 + q4) = y^4 + B y^2 + C needs q2, q4 =
    (B -+ g) / 2 where g^2 = B^2 - 4C.  The discriminant has degree 8 with
    leading coefficient 16, so its monic square root (when it exists)
    always yields base-field q2, q4.
    """
    _shape_grid(f)
    field = f.field
    B = f.y_slice(2)
    C = f.y_slice(0)
    disc = B * B - C.scale(field(4))
    sq = is_perfect_square(disc)
    if sq is None:
        return None
    g_monic, _lead = sq
    g = g_monic.scale(field(4))  # disc = 16 * (monic part), sqrt(16) = 4
    two_inv = field(2).inverse()
    q2 = (B + g).scale(two_inv)
    q4 = (B - g).scale(two_inv)
    if q2.degree > 2:
        q2, q4 = q4, q2
    if q2.degree > 2:
        return None
    H1 = BiPoly(field, {(0, 2): field.one}) + BiPoly.from_unipoly(q2, "x", 0)
    H2 = BiPoly(field, {(0, 2): field.one}) + BiPoly.from_unipoly(q4, "x", 0)
    if H1 * H2 != f:
        return None
    return ShapeAWitness(H1, H2)


def shape_a_test(rd: RamificationData) -> ShapeAWitness | None:
    """Shape-A search on the model of the given branch data.

    phi1 * phi2 has eight distinct roots, so its square test fails for every
    admissible configuration; a witness here would disprove irreducibility.
    """
    return shape_a_witness(build_model(rd, cross_check=False).f)


def _sqrt_candidates(field: Field, value: FieldElement, seed: int = 0):
    """Both square roots of a field element, empty when none exist.

    Finite fields use the field's own square root; over Q an exact
    perfect-square test on numerator and denominator suffices.
    """
    if value.is_zero:
        return [field.zero]
    if field.kind == "rational":
        fr: Fraction = value.val
        if fr < 0:
            return []
        num, den = fr.numerator, fr.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn != num or rd * rd != den:
            return []
        r = field(Fraction(rn, rd))
        return [r, -r]
    pair = field.sqrt(value, seed)
    return [] if pair is None else list(pair)


def _shape_b_cases(f: BiPoly, a3_options, a6_options, a4_options_zero):
    """Iterate the sign cases of the shape-B recipe and collect residuals.

    a4 follows from the x^5 coefficient when a3 != 0 and from the square
    root of c40 otherwise; a5 from the x coefficient when a6 != 0 and from
    c20 otherwise.  a1, a2 are always determined linearly.  Residuals are
    the five remaining coefficient comparisons.
    """
    field = f.field
    grid = _shape_grid(f)

    def c(i, j):
        return _c(grid, i, j, field)

    four_inv = field(4).inverse()
    two = field(2)
    cases = []
    seen = []
    for label_a3, a3 in a3_options:
        if a3.is_zero:
            if not c(5, 0).is_zero:
                continue  # x^5 coefficient 2*a3*a4 cannot match
            a4_opts = a4_options_zero
        else:
            a4_opts = [("", c(5, 0) / (two * a3))]
        for label_a4, a4 in a4_opts:
            for label_a6, a6 in a6_options:
                if (a3, a4, a6) in seen:
                    continue
                seen.append((a3, a4, a6))
                if a6.is_zero:
                    if not c(1, 0).is_zero:
                        continue
                    a5_opts = _sqrt_candidates(field, c(2, 0))
                    if not a5_opts:
                        continue
                else:
                    a5_opts = [c(1, 0) / (two * a6)]
                label = f"B{label_a3}{label_a4}{label_a6}"
                for a5 in a5_opts:
                    a1 = -(c(3, 2) - two * a3) * four_inv
                    a2 = (two * a4 - a1 * a1 - c(2, 2)) * four_inv
                    residuals = (
                        two * a3 * a5 + a4 * a4 - c(4, 0),
                        two * a3 * a6 + two * a4 * a5 - c(3, 0),
                        -two * a1 * a2 + two * a5 - c(1, 2),
                        two * a4 * a6 + a5 * a5 - c(2, 0),
                        -a2 * a2 + two * a6 - c(0, 2),
                    )
                    cases.append(
                        CaseResiduals(label, (a1, a2, a3, a4, a5, a6), residuals)
                    )
    return cases


def _witness_from_case(f: BiPoly, case: CaseResiduals) -> ShapeBWitness | None:
    field = f.field
    a1, a2, a3, a4, a5, a6 = case.coefficients
    two = field(2)
    linear = BiPoly(field, {(2, 0): two, (1, 0): a1, (0, 0): a2})
    cubic = BiPoly(field, {(3, 0): a3, (2, 0): a4, (1, 0): a5, (0, 0): a6})
    y = BiPoly(field, {(0, 1): field.one})
    y2 = BiPoly(field, {(0, 2): field.one})
    H1 = y2 + linear * y + cubic
    H2 = y2 - linear * y + cubic
    if H1 * H2 != f:
        return None
    return ShapeBWitness(case.case, case.coefficients, H1, H2)


def shape_b_witness(f: BiPoly, seed: int = 0):
    """Direct shape-B search on a shape-valid sextic over its base field.

    Returns (witness or None, residuals per attempted case).  Used on
    synthetic inputs; branch data goes through :func:`shape_b_test`, which
    supplies the exact square roots and the normalising translation.
    """
    field = f.field
    grid = _shape_grid(f)
    a3_roots = _sqrt_candidates(field, _c(grid, 6, 0, field), seed)
    a6_roots = _sqrt_candidates(field, _c(grid, 0, 0, field), seed)
    a4_roots = _sqrt_candidates(field, _c(grid, 4, 0, field), seed)
    a3_options = [(str(i + 1), v) for i, v in enumerate(a3_roots)]
    a6_options = [(f".{i + 1}", v) for i, v in enumerate(a6_roots)]
    a4_options = [(f"'{i + 1}", v) for i, v in enumerate(a4_roots)]
    if not a3_options or not a6_options:
        return None, ()
    cases = _shape_b_cases(f, a3_options, a6_options, a4_options)
    for case in cases:
        if all(r.is_zero for r in case.residuals):
            witness = _witness_from_case(f, case)
            if witness is not None:
                return witness, tuple(cases)
    return None, tuple(cases)


def shape_b_test(rd: RamificationData):
    """Shape-B search for branch data, after the normalising translation.

    Shifting every branch value by -alpha1 zeroes sigma4 while keeping tau4
    nonzero, so a6 = +-(sigma4 - tau4) never vanishes and a5 = c10/(2 a6) is
    defined in all four sign cases.  Case labels: B1..B4 for the sign
    choices of (a3, a6) when a3 != 0, and B0.xy variants when sigma1 = tau1
    forces a3 = 0 (then a4 = +-(sigma2 - tau2) instead).
    """
    shift = rd.alphas[0]
    rd0 = rd.translated(-shift)
    f0 = build_model(rd0, cross_check=False).f
    field = rd.field
    d1 = rd0.sigma[0] - rd0.tau[0]
    d2 = rd0.sigma[1] - rd0.tau[1]
    d4 = rd0.sigma[3] - rd0.tau[3]

    if d1.is_zero:
        a3_options = [("0", field.zero)]
        if d2.is_zero:
            a4_zero = [(".1", field.zero)]
        else:
            a4_zero = [(".1", d2), (".2", -d2)]
        a6_options = [(".1", d4), (".2", -d4)]
    else:
        a3_options = [("+", d1), ("-", -d1)]
        a4_zero = []
        a6_options = [("+", d4), ("-", -d4)]

    cases = _shape_b_cases(f0, a3_options, a6_options, a4_zero)
    cases = _relabel_proof_cases(cases, d1, d4)
    for case in cases:
        if all(r.is_zero for r in case.residuals):
            witness0 = _witness_from_case(f0, case)
            if witness0 is not None:
                # translate the witness back to the original coordinates
                H1 = witness0.h1.shift_x(-shift)
                H2 = witness0.h2.shift_x(-shift)
                f = build_model(rd, cross_check=False).f
                if H1 * H2 == f:
                    return (
                        ShapeBWitness(witness0.case, witness0.coefficients, H1, H2),
                        tuple(cases),
                    )
    return None, tuple(cases)


def _relabel_proof_cases(cases, d1, d4):
    """Name the four nonzero-a3 cases B1..B4 by their sign pattern."""
    if d1.is_zero:
        return [
            CaseResiduals(f"B0.{i + 1}", case.coefficients, case.residuals)
            for i, case in enumerate(cases)
        ]
    names = {(True, True): "B1", (False, True): "B2",
             (True, False): "B3", (False, False): "B4"}
    out = []
    for case in cases:
        key = (case.a3 == d1, case.a6 == d4)
        out.append(CaseResiduals(names[key], case.coefficients, case.residuals))
    return out


def is_absolutely_irreducible(rd: RamificationData) -> IrreducibilityVerdict:
    """Run both shape searches; irreducible exactly when both come up empty.

    Every factorization of a sextic of this shape over any extension of the
    base field is of shape A or shape B, and the candidate coefficients for
    both shapes already lie in the base field, so an empty search certifies
    absolute irreducibility.
    """
    model = build_model(rd, cross_check=False)
    if model.f.y_slice(0).is_zero:
        raise ZeroPolynomialError("f(x, 0) = 0; branch data must be invalid")
    wa = shape_a_witness(model.f)
    wb, residuals = shape_b_test(rd)
    return IrreducibilityVerdict(
        irreducible=wa is None and wb is None,
        shape_a_witness=wa,
        shape_b_witness=wb,
        shape_b_residuals=residuals,
    )
