"""Singular locus of the projective sextic: classification and location.

At y = 0 the sextic restricts to the square of the cubic-or-lower polynomial

    h1 = (s1 - t1) x^3 - (s2 - t2) x^2 + (s3 - t3) x - (s4 - t4)

in the symmetric-function differences, so the affine singular points are
exactly the distinct roots of h1.  At infinity, (0:1:0) is always singular
and (1:0:0) is singular precisely when s1 = t1.  The classification below
branches on resultants of h1 and its derivatives at their true degrees and
reproduces the (affine, infinity) count table:

    label   condition                                      (m, n)
    I-1     deg h1 = 3, Res(h1, h1') != 0                  (3, 1)
    I-2     deg h1 = 3, Res(h1, h1') = 0, Res(h1', h1'')!=0 (2, 1)
    I-3     deg h1 = 3, both resultants zero               (1, 1)
    II-1    deg h1 = 2, Res(h1, h1') != 0                  (2, 2)
    II-2    deg h1 = 2, Res(h1, h1') = 0                   (1, 2)
    II-3    deg h1 = 1                                     (1, 2)
    II-4    deg h1 = 0                                     (0, 2)

Every singular point has multiplicity exactly 2, certified by a nonzero
second partial.  A brute-force projective scanner doubles as an
independent oracle over small finite fields.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .bipoly import HomPoly
from .errors import (
    BudgetExceededError,
    ConstructionMismatchError,
    MultiplicityExceedsTwoError,
    NotSingularError,
    UnsupportedFieldError,
)
from .field import ExtensionField, Field, FieldElement
from .unipoly import UniPoly, factor_rational, gcd, resultant, roots
from .sextic import RamificationData, SexticModel, build_model

TYPE_TABLE = {
    "I-1": (3, 1),
    "I-2": (2, 1),
    "I-3": (1, 1),
    "II-1": (2, 2),
    "II-2": (1, 2),
    "II-3": (1, 2),
    "II-4": (0, 2),
}


def h1_poly(rd: RamificationData) -> UniPoly:
    """The difference polynomial phi2 - phi1, written in the table's sign
    convention; its distinct roots are the affine singular x-coordinates."""
    s1, s2, s3, s4 = rd.sigma
    t1, t2, t3, t4 = rd.tau
    return UniPoly.from_coeffs(
        rd.field, (-(s4 - t4), s3 - t3, -(s2 - t2), s1 - t1)
    )


@dataclass(frozen=True)
class SingularityType:
    """Classification outcome plus the resultant values the branch used."""

    label: str
    affine_count: int
    infinity_count: int
    res_h1_h1p: FieldElement | None = None
    res_h1p_h1pp: FieldElement | None = None
    disc_h1: FieldElement | None = None

    @property
    def total(self) -> int:
        return self.affine_count + self.infinity_count


def classify(rd: RamificationData) -> SingularityType:
    """Branch on the degree of h1 and the resultant criteria."""
    h1 = h1_poly(rd)
    h1p = h1.derivative()
    if h1.degree == 3:
        r1 = resultant(h1, h1p)
        if not r1.is_zero:
            return SingularityType("I-1", 3, 1, res_h1_h1p=r1)
        r2 = resultant(h1p, h1p.derivative())
        if not r2.is_zero:
            return SingularityType("I-2", 2, 1, res_h1_h1p=r1, res_h1p_h1pp=r2)
        return SingularityType("I-3", 1, 1, res_h1_h1p=r1, res_h1p_h1pp=r2)
    if h1.degree == 2:
        # resultant of the genuine quadratic, equivalently its discriminant
        a, b, c = h1[2], h1[1], h1[0]
        disc = b * b - field_four(rd.field) * a * c
        r1 = resultant(h1, h1p)
        if not r1.is_zero:
            return SingularityType("II-1", 2, 2, res_h1_h1p=r1, disc_h1=disc)
        return SingularityType("II-2", 1, 2, res_h1_h1p=r1, disc_h1=disc)
    if h1.degree == 1:
        return SingularityType("II-3", 1, 2)
    # h1 is a nonzero constant: s4 != t4 because the branch values are distinct
    return SingularityType("II-4", 0, 2)


def field_four(field: Field) -> FieldElement:
    return field(4)


@dataclass(frozen=True)
class Certificate:
    """A second partial that does not vanish at the singular point."""

    partial: str
    value: FieldElement | None
    note: str = ""


@dataclass(frozen=True)
class SingularPoint:
    """One singular point of the projective closure (or a conjugate packet
    over Q, described by the minimal polynomial of its x-coordinate)."""

    coords: tuple | None
    at_infinity: bool
    extension_degree: int
    certificate: Certificate
    minimal_poly: UniPoly | None = None
    conjugate_count: int = 1
    multiplicity: int = dc_field(default=2)

    def is_rational(self) -> bool:
        return self.coords is not None and self.extension_degree == 1


def _point_at_infinity(model: SexticModel, which: str) -> SingularPoint:
    field = model.field
    if which == "y":
        coords = (field.zero, field.one, field.zero)
        cert = verify_multiplicity_two(model.F, coords)
    else:
        coords = (field.one, field.zero, field.zero)
        cert = verify_multiplicity_two(model.F, coords)
    return SingularPoint(coords, True, 1, cert)


def _affine_point(model: SexticModel, xi: FieldElement, degree: int) -> SingularPoint:
    field = xi.field
    coords = (xi, field.zero, field.one)
    cert = verify_multiplicity_two(model.F, coords)
    minimal = None
    if degree == 1:
        minimal = UniPoly.from_coeffs(model.field, (-xi, model.field.one)) \
            if xi.field == model.field else None
    elif isinstance(field, ExtensionField):
        minimal = UniPoly.from_coeffs(field.base, field.modulus)
    return SingularPoint(coords, False, degree, cert, minimal_poly=minimal)


def singular_points(rd: RamificationData, rng_seed: int = 0,
                    model: SexticModel | None = None):
    """All singular points of the projective closure, certificates included.

    (0:1:0) is always present; (1:0:0) joins exactly when s1 = t1.  Affine
    points are the distinct roots of h1: closed forms for the unique-root
    types (I-3, II-2, II-3), root finding in extensions of degree <= 3 over
    finite fields, and minimal-polynomial packets over Q.
    """
    if model is None:
        model = build_model(rd, cross_check=False)
    field = rd.field
    kind = classify(rd)
    h1 = h1_poly(rd)
    s1, s2, s3, s4 = rd.sigma
    t1, t2, t3, t4 = rd.tau

    affine: list[SingularPoint] = []
    if kind.label == "I-3":
        xi = (s2 - t2) / (field(3) * (s1 - t1))
        affine.append(_affine_point(model, xi, 1))
    elif kind.label == "II-2":
        xi = (s3 - t3) / (field(2) * (s2 - t2))
        affine.append(_affine_point(model, xi, 1))
    elif kind.label == "II-3":
        xi = (s4 - t4) / (s3 - t3)
        affine.append(_affine_point(model, xi, 1))
    elif kind.label != "II-4":
        if field.kind == "rational":
            affine.extend(_rational_affine_points(model, h1))
        else:
            for root in roots(h1, 3, rng_seed):
                affine.append(_affine_point(model, root.value, root.extension_degree))

    affine.sort(key=lambda p: (p.extension_degree,
                               p.coords[0].sort_key() if p.coords else
                               tuple(c.val for c in p.minimal_poly.coeffs)))
    points = list(affine)
    points.append(_point_at_infinity(model, "y"))
    if kind.infinity_count == 2:
        points.append(_point_at_infinity(model, "x"))

    got_affine = sum(p.conjugate_count for p in affine)
    if got_affine != kind.affine_count:
        raise ConstructionMismatchError(
            f"located {got_affine} affine singular points, expected {kind.affine_count}"
        )
    return points


def _rational_affine_points(model: SexticModel, h1: UniPoly):
    """Over Q: rational roots become explicit points, irrational ones are
    reported through the irreducible factors of h1, verified by divisibility."""
    out = []
    _, factors = factor_rational(h1)
    for g, _mult in factors:
        if g.degree == 1:
            xi = -g[0] / g[1]
            out.append(_affine_point(model, xi, 1))
        else:
            cert = _divisibility_certificate(model, g.monic())
            out.append(
                SingularPoint(None, False, g.degree, cert,
                              minimal_poly=g, conjugate_count=g.degree)
            )
    return out


def _divisibility_certificate(model: SexticModel, m: UniPoly) -> Certificate:
    """Certify a conjugate packet of affine singular points symbolically.

    All candidate points have y = 0, so the first-order conditions reduce to
    m dividing F, F_x and F_z restricted to y = 0, and multiplicity 2 to the
    restricted f_yy being coprime to m.
    """
    F = model.F
    for name in ("", "x", "z"):
        poly = F if name == "" else F.partial(name)
        restricted = _restrict_y0(poly, model.field)
        if not (restricted % m).is_zero:
            raise NotSingularError(f"minimal polynomial does not divide F_{name or 'itself'}")
    fyy = model.f.partial("y").partial("y").y_slice(0)
    if gcd(fyy, m).degree != 0:
        raise MultiplicityExceedsTwoError("f_yy shares a root with the minimal polynomial")
    return Certificate("f_yy", None, "nonzero: coprime to the minimal polynomial")


def _restrict_y0(F: HomPoly, field: Field) -> UniPoly:
    """F(x, 0, 1) as a univariate polynomial."""
    deg = max((i for (i, j, k) in F.terms if j == 0), default=-1)
    coeffs = [field.zero] * (deg + 1)
    for (i, j, k), c in F.terms.items():
        if j == 0:
            coeffs[i] = coeffs[i] + c
    return UniPoly.from_coeffs(field, coeffs)


def verify_multiplicity_two(F: HomPoly, coords: tuple) -> Certificate:
    """Check the defining conditions of a double point at explicit coordinates.

    F and all first partials must vanish; the designated second partial
    (F_zz at (0:1:0), F_yy elsewhere) must not.  If the designated one
    vanishes, the remaining second partials are scanned before concluding
    that the multiplicity exceeds two.
    """
    x, y, z = coords
    values = [F.eval(x, y, z)]
    for var in "xyz":
        values.append(F.partial(var).eval(x, y, z))
    if any(not v.is_zero for v in values):
        raise NotSingularError(
            f"point ({x}:{y}:{z}) fails the first-order vanishing conditions"
        )
    if y.is_zero and z.is_zero:
        designated = "yy"
    elif z.is_zero:
        designated = "zz"
    else:
        designated = "yy"
    val = F.partial(designated[0]).partial(designated[1]).eval(x, y, z)
    if not val.is_zero:
        return Certificate(f"F_{designated}", val)
    for pair in ("xx", "xy", "xz", "yy", "yz", "zz"):
        v = F.partial(pair[0]).partial(pair[1]).eval(x, y, z)
        if not v.is_zero:
            return Certificate(f"F_{pair}", v, "designated partial vanished")
    raise MultiplicityExceedsTwoError(
        f"all second partials vanish at ({x}:{y}:{z})"
    )


# -- brute-force oracle ------------------------------------------------------


def brute_force_singular_scan(F: HomPoly, budget: int = 10**6):
    """All singular points of F = 0 in the projective plane over a finite field.

    Enumerates the three standard charts with deduplication: (x : y : 1),
    then (x : 1 : 0), then (1 : 0 : 0).  Raises when the plane has more
    points than the evaluation budget allows.  Returns canonical coordinate
    triples of raw values, sorted.
    """
    field = F.field
    if field.kind == "rational":
        raise UnsupportedFieldError("the scan enumerates finite planes only")
    q = field.order
    if q * q + q + 1 > budget:
        raise BudgetExceededError(
            f"projective plane over F_{q} has {q * q + q + 1} points, budget {budget}"
        )
    if field.kind == "prime":
        return _scan_prime(F)
    return _scan_generic(F)


def _scan_prime(F: HomPoly):
    """Integer-arithmetic scan over a prime field.

    For each x the four polynomials restrict to quartics in y with at most
    five coefficients, so the inner loop over y costs a few multiplications
    per point.
    """
    p = F.field.p

    def y_slices(poly: HomPoly):
        # rows[j][i] = integer coefficient of x^i y^j in poly(x, y, 1)
        deg = max(poly.degree, 0)
        rows = [[0] * (deg + 1) for _ in range(deg + 1)]
        for (i, j, _k), c in poly.terms.items():
            rows[j][i] = c.val
        return rows

    Fx = F.partial("x")
    Fy = F.partial("y")
    Fz = F.partial("z")
    tables = [y_slices(poly) for poly in (F, Fx, Fy, Fz)]

    width = max(len(t) for t in tables)
    hits = []
    for x in range(p):
        xs = [1] * width
        for i in range(1, width):
            xs[i] = xs[i - 1] * x % p
        # per-polynomial coefficients of the restricted polynomial in y
        slices = []
        for rows in tables:
            slices.append(
                [sum(r[i] * xs[i] for i in range(len(r)) if r[i]) % p for r in rows]
            )
        for y in range(p):
            ok = True
            for q in slices:
                acc = 0
                ypow = 1
                for c in q:
                    if c:
                        acc += c * ypow
                    ypow = ypow * y % p
                if acc % p:
                    ok = False
                    break
            if ok:
                hits.append((x, y, 1))
    # chart z = 0, y = 1: substitute and test each x
    fld = F.field
    one, zero = fld.one, fld.zero
    for x in range(p):
        xe = fld(x)
        if all(
            poly.eval(xe, one, zero).is_zero
            for poly in (F, Fx, Fy, Fz)
        ):
            hits.append((x, 1, 0))
    if all(poly.eval(one, zero, zero).is_zero for poly in (F, Fx, Fy, Fz)):
        hits.append((1, 0, 0))
    return sorted(hits)


def _scan_generic(F: HomPoly):
    field = F.field
    Fx, Fy, Fz = (F.partial(v) for v in "xyz")
    one, zero = field.one, field.zero
    elements = _all_elements(field)
    hits = []
    for x in elements:
        for y in elements:
            if all(p.eval(x, y, one).is_zero for p in (F, Fx, Fy, Fz)):
                hits.append((x.val, y.val, one.val))
    for x in elements:
        if all(p.eval(x, one, zero).is_zero for p in (F, Fx, Fy, Fz)):
            hits.append((x.val, one.val, zero.val))
    if all(p.eval(one, zero, zero).is_zero for p in (F, Fx, Fy, Fz)):
        hits.append((one.val, zero.val, zero.val))
    return sorted(hits)


def _all_elements(field: Field):
    if field.kind == "prime":
        return [field(i) for i in range(field.p)]
    out = []
    p, k = field.p, field.k
    for n in range(p**k):
        digits = []
        v = n
        for _ in range(k):
            digits.append(v % p)
            v //= p
        out.append(field(tuple(digits)))
    return out


def rational_point_set(points) -> set:
    """Canonical coordinate triples of the base-field-rational points."""
    out = set()
    for pt in points:
        if pt.coords is None or pt.extension_degree != 1:
            continue
        out.add(tuple(c.val for c in pt.coords))
    return out


def no_offaxis_singularities_check(F: HomPoly, budget: int = 10**6) -> bool:
    """True when the scan finds no singular point with y != 0 off the two
    admissible points at infinity."""
    one = F.field.one.val
    zero = F.field.zero.val
    for (x, y, z) in brute_force_singular_scan(F, budget):
        if z == one:
            if y != zero:
                return False
        elif (x, y, z) not in ((zero, one, zero), (one, zero, zero)):
            return False
    return True


def genus_bound_check(t: SingularityType) -> bool:
    """Arithmetic genus 10 minus one per double point must still cover genus 5."""
    return 10 - t.total >= 5
