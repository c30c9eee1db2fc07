"""Dense univariate polynomial algebra over any supported field.

Provides arithmetic, gcd, formal derivatives, resultants (Sylvester
determinant convention, rows of the first argument on top), squarefree
decomposition in characteristic 0 and p, a perfect-square test, root
finding over finite fields by distinct-degree plus seeded equal-degree
splitting, and complete factorization over Q at small degree.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BothZeroError,
    MixedFieldsError,
    UnsupportedFieldError,
    ZeroPolynomialError,
)
from .field import (
    ExtensionField,
    Field,
    FieldElement,
    is_prime,
    prime_field,
)


class UniPoly:
    """Polynomial with dense coefficients, constant term first.

    The zero polynomial has an empty coefficient tuple and degree -1;
    otherwise the leading coefficient is nonzero.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def from_coeffs(cls, field: Field, coeffs) -> "UniPoly":
        elems = [c if isinstance(c, FieldElement) else field(c) for c in coeffs]
        for c in elems:
            if c.field != field:
                raise MixedFieldsError("coefficient from a different field")
        while elems and elems[-1].is_zero:
            elems.pop()
        return cls(field, tuple(elems))

    @classmethod
    def zero(cls, field: Field) -> "UniPoly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "UniPoly":
        return cls(field, (field.one,))

    @classmethod
    def constant(cls, c: FieldElement) -> "UniPoly":
        return cls.from_coeffs(c.field, (c,))

    @classmethod
    def x(cls, field: Field) -> "UniPoly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def from_roots(cls, roots, field: Field | None = None) -> "UniPoly":
        """Monic product of (x - r) over the given roots; 1 for no roots."""
        roots = list(roots)
        if field is None:
            if not roots:
                raise ValueError("field required for an empty root list")
            field = roots[0].field
        f = cls.one(field)
        for r in roots:
            f = f * cls.from_coeffs(field, (-field(r), field.one))
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> FieldElement:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _check(self, other: "UniPoly"):
        if self.field != other.field:
            raise MixedFieldsError("polynomials over different fields")

    def __add__(self, other):
        if isinstance(other, FieldElement):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly.from_coeffs(self.field, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        if isinstance(other, FieldElement):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly.from_coeffs(self.field, [self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return UniPoly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(self.field(other))
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly.from_coeffs(self.field, out)

    __rmul__ = __mul__

    def scale(self, c: FieldElement) -> "UniPoly":
        if c.is_zero:
            return UniPoly.zero(self.field)
        return UniPoly(self.field, tuple(a * c for a in self.coeffs))

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        acc = UniPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def divmod(self, other: "UniPoly"):
        self._check(other)
        if other.is_zero:
            raise ZeroPolynomialError("polynomial division by zero")
        if self.degree < other.degree:
            return UniPoly.zero(self.field), self
        rem = list(self.coeffs)
        q = [self.field.zero] * (len(rem) - len(other.coeffs) + 1)
        inv_lead = other.lc().inverse()
        d = other.degree
        for shift in range(len(rem) - len(other.coeffs), -1, -1):
            c = rem[shift + d] * inv_lead
            if c.is_zero:
                continue
            q[shift] = c
            for j, b in enumerate(other.coeffs):
                rem[shift + j] = rem[shift + j] - c * b
        return (
            UniPoly.from_coeffs(self.field, q),
            UniPoly.from_coeffs(self.field, rem[:d]),
        )

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lead = self.lc()
        if lead == self.field.one:
            return self
        return self.scale(lead.inverse())

    def derivative(self) -> "UniPoly":
        if self.degree < 1:
            return UniPoly.zero(self.field)
        return UniPoly.from_coeffs(
            self.field, [self.coeffs[i] * i for i in range(1, len(self.coeffs))]
        )

    def __call__(self, x: FieldElement) -> FieldElement:
        """Horner evaluation; accepts points in an extension of a prime base."""
        target = x.field
        if target != self.field:
            emb = _embedding(self.field, target)
            acc = target.zero
            for c in reversed(self.coeffs):
                acc = acc * x + emb(c)
            return acc
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a: FieldElement) -> "UniPoly":
        """Substitute x -> x + a."""
        lin = UniPoly.from_coeffs(self.field, (self.field(a), self.field.one))
        acc = UniPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * lin + UniPoly.constant(c)
        return acc

    def map_field(self, target: Field) -> "UniPoly":
        """Coefficient-wise image under the embedding into ``target``."""
        emb = _embedding(self.field, target)
        return UniPoly.from_coeffs(target, [emb(c) for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == UniPoly.from_coeffs(self.field, (other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.field._key(), self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "0"
        out = ""
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if i == 0:
                term = cs
            else:
                var = "x" if i == 1 else f"x^{i}"
                term = var if cs == "1" else f"{cs}*{var}"
            if not out:
                out = ("-" if neg else "") + term
            else:
                out += (" - " if neg else " + ") + term
        return out

    __str__ = __repr__


def _embedding(src: Field, target: Field):
    """Coefficient embedding src -> target, identity when the fields agree."""
    if src == target:
        return lambda c: c
    if (
        isinstance(target, ExtensionField)
        and src.kind == "prime"
        and target.p == src.p
    ):
        return target.embed
    raise MixedFieldsError(f"no embedding of {src} into {target}")


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor; gcd(f, 0) = monic(f)."""
    if f.is_zero and g.is_zero:
        raise BothZeroError("gcd(0, 0) is undefined")
    if not f.is_zero and not g.is_zero:
        f._check(g)
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def sylvester_matrix(f: UniPoly, g: UniPoly):
    """Sylvester matrix of (f, g): deg(g) rows of f above deg(f) rows of g."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("Sylvester matrix of a zero polynomial")
    m, n = f.degree, g.degree
    size = m + n
    zero = f.field.zero
    rows = []
    fc = [f.coeffs[m - i] for i in range(m + 1)]  # leading first
    gc = [g.coeffs[n - i] for i in range(n + 1)]
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - i - n - 1))
    return rows


def resultant(f: UniPoly, g: UniPoly) -> FieldElement:
    """Resultant of (f, g), equal to the Sylvester determinant with f-rows first.

    Equivalently lc(f)^deg(g) * prod g(r) over the roots r of f counted with
    multiplicity.  Finite fields use the Euclidean remainder recurrence; over
    Q the computation clears denominators and runs the integer subresultant
    remainder sequence, which controls coefficient growth.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant of a zero polynomial")
    f._check(g)
    if f.field.kind == "rational":
        return _resultant_rational(f, g)
    return _resultant_prs(f, g)


def _resultant_prs(f: UniPoly, g: UniPoly) -> FieldElement:
    field = f.field
    m, n = f.degree, g.degree
    if m == 0:
        return f.lc() ** n
    if n == 0:
        return g.lc() ** m
    sign = field.one
    if m < n:
        f, g = g, f
        if (m * n) % 2 == 1:
            sign = -sign
    acc = field.one
    while True:
        # invariant: deg f >= deg g >= 1
        r = f % g
        if r.is_zero:
            return field.zero
        if (f.degree * g.degree) % 2 == 1:
            sign = -sign
        acc = acc * g.lc() ** (f.degree - r.degree)
        f, g = g, r
        if g.degree == 0:
            return acc * sign * g.lc() ** f.degree


def _resultant_rational(f: UniPoly, g: UniPoly) -> FieldElement:
    field = f.field
    fa, cf = _int_primitive(f)
    ga, cg = _int_primitive(g)
    res = _int_subresultant_res(fa, ga)
    return field(cf**g.degree * cg**f.degree * res)


def _int_primitive(f: UniPoly):
    """Integer coefficient list and rational content c with f = c * list."""
    dens = [c.val.denominator for c in f.coeffs]
    lcm = 1
    for d in dens:
        lcm = lcm * d // math.gcd(lcm, d)
    ints = [int(c.val * lcm) for c in f.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    g = g or 1
    if ints[-1] < 0:
        g = -g
    return [v // g for v in ints], Fraction(g, lcm)


def _int_prem(a, b):
    """Pseudo-remainder R with lc(b)^(deg a - deg b + 1) * a = q*b + R, over Z."""
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - 1 - db + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        scale = lb**e
        r = [scale * c for c in r]
    return r


def _int_subresultant_res(a, b):
    """Resultant of two integer polynomials by the subresultant PRS."""
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da * db) % 2 == 1:
            s = -s
    g, h = 1, 1
    while True:
        delta = da - db
        if (da * db) % 2 == 1:
            s = -s
        r = _int_prem(a, b)
        if not r:
            return 0
        denom = g * h**delta
        a, da = b, db
        b = [c // denom for c in r]
        db = len(b) - 1
        g = a[-1]
        h = h if delta == 0 else (g**delta // h ** (delta - 1) if delta > 1 else g)
        if db == 0:
            break
    h = b[0] ** da // h ** (da - 1) if da > 1 else b[0] ** da
    return s * h


def squarefree_decomposition(f: UniPoly):
    """Leading coefficient and list of (monic squarefree factor, multiplicity).

    Pairwise coprime factors, multiplicities ascending; handles multiplicity
    divisible by the characteristic via p-th root extraction.
    """
    if f.is_zero:
        raise ZeroPolynomialError("squarefree decomposition of zero")
    lead = f.lc()
    f = f.monic()
    if f.field.kind == "rational":
        return lead, _sqf_yun(f)
    return lead, _sqf_char_p(f)


def _sqf_yun(f: UniPoly):
    if f.degree < 1:
        return []
    factors = []
    d = f.derivative()
    a = gcd(f, d)
    b = f // a
    c = d // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            factors.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return factors


def _sqf_char_p(f: UniPoly):
    field = f.field
    p = field.characteristic
    one = UniPoly.one(field)
    factors = []
    n = 1
    while f.degree >= 1:
        d = f.derivative()
        if not d.is_zero:
            g = gcd(f, d)
            h = f // g
            i = 1
            while h != one:
                gg = gcd(g, h)
                hh = h // gg
                if hh.degree > 0:
                    factors.append((hh, i * n))
                g = g // gg
                h = gg
                i += 1
            if g == one:
                break
            f = g
        # here every exponent of f is divisible by p: take the p-th root
        f = _pth_root(f)
        n *= p
    factors.sort(key=lambda t: (t[1], t[0].degree))
    return factors


def _pth_root(f: UniPoly) -> UniPoly:
    field = f.field
    p = field.characteristic
    k = getattr(field, "k", 1)
    coeffs = []
    for i in range(0, f.degree + 1, p):
        c = f[i]
        # p-th root of c in F_{p^k} is c^(p^(k-1))
        coeffs.append(c if k == 1 else c ** (p ** (k - 1)))
    return UniPoly.from_coeffs(field, coeffs)


def squarefree_part(f: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero:
        raise ZeroPolynomialError("squarefree part of zero")
    _, factors = squarefree_decomposition(f)
    out = UniPoly.one(f.field)
    for g, _ in factors:
        out = out * g
    return out


def is_perfect_square(f: UniPoly):
    """(g, c) with f = c * g^2 for monic g and scalar c = lc(f), else None.

    The monic part of f is a square exactly when every multiplicity in its
    squarefree decomposition is even.
    """
    if f.is_zero:
        raise ZeroPolynomialError("perfect-square test of zero")
    lead, factors = squarefree_decomposition(f)
    if any(e % 2 for _, e in factors):
        return None
    g = UniPoly.one(f.field)
    for h, e in factors:
        g = g * h ** (e // 2)
    return g, lead


def _finite_order(field: Field) -> int:
    if field.kind == "prime":
        return field.p
    if field.kind == "extension":
        return field.order
    raise UnsupportedFieldError(f"{field} is not a finite field")


def _pow_mod(base: UniPoly, e: int, mod: UniPoly) -> UniPoly:
    acc = UniPoly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            acc = acc * base % mod
        base = base * base % mod
        e >>= 1
    return acc


def is_irreducible(f: UniPoly) -> bool:
    """Rabin irreducibility test over a finite field."""
    q = _finite_order(f.field)
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    f = f.monic()
    x = UniPoly.x(f.field)
    # x^(q^n) = x mod f, and x^(q^(n/l)) - x coprime to f for prime l | n
    w = x
    for _ in range(n):
        w = _pow_mod(w, q, f)
    if w != x % f:
        return False
    for ell in _prime_divisors(n):
        w = x
        for _ in range(n // ell):
            w = _pow_mod(w, q, f)
        if gcd((w - x) % f, f).degree != 0:
            return False
    return True


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class Root:
    """One root of a polynomial, tagged with multiplicity and the minimal
    extension degree over the base field that contains it."""

    value: FieldElement
    multiplicity: int
    extension_degree: int

    def minimal_poly(self):
        """Minimal polynomial over the base prime field (None for degree 1)."""
        if self.extension_degree == 1:
            return None
        fld = self.value.field
        return UniPoly.from_coeffs(prime_field(fld.p), fld.modulus)


def roots(f: UniPoly, up_to_degree: int, rng_seed: int = 0):
    """All roots of f in extensions of degree <= up_to_degree of the base.

    Distinct-degree factorization followed by seeded Cantor-Zassenhaus
    equal-degree splitting.  Roots of an irreducible factor h of degree
    d > 1 are realised inside F_p[t]/(h) as the class of t and its Frobenius
    conjugates, so each returned element knows its own minimal polynomial.
    Deterministic for a fixed seed.  Degree > 1 factors over an extension
    base field are out of scope (tower flattening is not implemented).
    """
    field = f.field
    q = _finite_order(field)
    if f.is_zero:
        raise ZeroPolynomialError("root finding on the zero polynomial")
    if up_to_degree < 1:
        raise ValueError("up_to_degree must be >= 1")
    rng = random.Random(rng_seed)
    out = []
    _, squarefree = squarefree_decomposition(f)
    for g, mult in squarefree:
        rem = g
        x = UniPoly.x(field)
        w = x
        d = 0
        while d < up_to_degree and rem.degree >= 1:
            d += 1
            if rem.degree < 2 * d:
                # the remaining cofactor is a single irreducible factor
                if rem.degree <= up_to_degree:
                    out.extend(_materialise(rem, rem.degree, mult))
                    rem = UniPoly.one(field)
                break
            w = _pow_mod(w, q, rem)
            part = gcd(rem, (w - x) % rem)
            if part.degree > 0:
                for h in _equal_degree_split(part, d, rng):
                    out.extend(_materialise(h, d, mult))
                rem = rem // part
                if rem.degree >= 1:
                    w = w % rem
    out.sort(key=lambda r: (r.extension_degree, r.multiplicity, r.value.sort_key()))
    return out


def _equal_degree_split(f: UniPoly, d: int, rng: random.Random):
    if f.degree == d:
        return [f.monic()]
    field = f.field
    q = _finite_order(field)
    e = (q**d - 1) // 2
    while True:
        r = UniPoly.from_coeffs(
            field, [field.random_element(rng) for _ in range(f.degree)]
        )
        if r.degree < 1:
            continue
        h = _pow_mod(r, e, f)
        g = gcd(f, h - UniPoly.one(field))
        if 0 < g.degree < f.degree:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def _materialise(h: UniPoly, d: int, mult: int):
    field = h.field
    if d == 1:
        h = h.monic()
        return [Root(-h[0], mult, 1)]
    if field.kind != "prime":
        raise UnsupportedFieldError(
            "roots in proper extensions are only materialised over prime base fields"
        )
    ext = ExtensionField(field.p, tuple(c.val for c in h.monic().coeffs), check_irreducible=False)
    conj = ext.generator()
    found = []
    for _ in range(d):
        found.append(Root(conj, mult, d))
        conj = conj**field.p
    return found


# -- factorization over Q ---------------------------------------------------


def factor_rational(f: UniPoly):
    """Complete factorization over Q.

    Returns (content, factors) where factors is a list of (g, multiplicity)
    with g primitive over Z, positive leading coefficient and irreducible
    over Q, and f = content * prod g^multiplicity.

    Linear factors come from the rational root theorem; residual squarefree
    parts of degree 2 or 3 are irreducible outright, and higher degrees are
    resolved by factoring modulo one sufficiently large prime and testing
    divisibility of recombined factor subsets over Z (adequate at the small
    degrees and coefficient sizes this package works with).
    """
    field = f.field
    if field.kind != "rational":
        raise UnsupportedFieldError("factor_rational expects a polynomial over Q")
    if f.is_zero:
        raise ZeroPolynomialError("factorization of zero")
    ints, content = _int_primitive(f)
    if len(ints) == 1:
        return field(content * ints[0]), []
    prim = UniPoly.from_coeffs(field, ints)
    factors = []
    for g, mult in _sqf_yun(prim.monic()):
        gi, _ = _int_primitive(g)
        for h in _factor_squarefree_int(gi):
            factors.append((UniPoly.from_coeffs(field, h), mult))
    factors.sort(key=lambda t: (t[0].degree, [c.val for c in t[0].coeffs]))
    return field(content), factors


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _factor_squarefree_int(h: list):
    """Irreducible primitive factors of a squarefree primitive int polynomial."""
    out = []
    if h[-1] < 0:
        h = [-c for c in h]
    # split off x
    if h[0] == 0:
        out.append([0, 1])
        h = h[1:]
    # rational roots p/q give primitive linear factors q*x - p
    changed = True
    while changed and len(h) > 2:
        changed = False
        for num in _divisors(h[0]):
            for den in _divisors(h[-1]):
                if math.gcd(num, den) != 1:
                    continue
                for sign in (1, -1):
                    r = Fraction(sign * num, den)
                    if _eval_int_at(h, r) == 0:
                        lin = [-sign * num, den]
                        h = _int_exact_div(h, lin)
                        out.append(lin)
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    deg = len(h) - 1
    if deg == 0:
        pass  # unit; primitivity makes it 1
    elif deg <= 3:
        out.append(h)  # no rational root at degree <= 3 means irreducible
    else:
        out.extend(_factor_big_prime(h))
    out.sort(key=lambda g: (len(g), g))
    return out


def _eval_int_at(h, r: Fraction):
    acc = Fraction(0)
    for c in reversed(h):
        acc = acc * r + c
    return acc


def _int_exact_div(a, b):
    """Exact division of integer polynomials (raises if not exact)."""
    out = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1]
        if c % b[-1] != 0:
            raise ValueError("division is not exact")
        c //= b[-1]
        out[shift] = c
        for j, bj in enumerate(b):
            rem[shift + j] -= c * bj
    if any(rem[: len(b) - 1]):
        raise ValueError("division is not exact")
    return out


def _factor_big_prime(h: list):
    """Factor a squarefree primitive int polynomial of degree >= 4.

    Chooses one prime larger than twice the Mignotte-style factor bound, so
    any true factor of lc(h) * (monic product of modular factors) is
    recovered by centring coefficients once, with no Hensel lifting.
    """
    n = len(h) - 1
    height = max(abs(c) for c in h)
    bound = 2 * abs(h[-1]) * height * (2**n) * (math.isqrt(n + 1) + 1) + 1
    p = max(bound, 5) | 1
    while True:
        p += 2
        if not is_prime(p) or h[-1] % p == 0:
            continue
        fp = prime_field(p)
        hp = UniPoly.from_coeffs(fp, h)
        if gcd(hp, hp.derivative()).degree == 0:
            break
    modular = _factor_monic_finite(hp.monic())
    return _recombine(h, modular, fp)


def _factor_monic_finite(f: UniPoly):
    """Monic irreducible factors of a squarefree monic poly over a prime field."""
    field = f.field
    q = field.p
    rng = random.Random(0xC0FFEE)
    out = []
    x = UniPoly.x(field)
    w = x
    d = 0
    rem = f
    while rem.degree >= 1:
        d += 1
        if rem.degree < 2 * d:
            out.append(rem.monic())
            break
        w = _pow_mod(w, q, rem)
        part = gcd(rem, (w - x) % rem)
        if part.degree > 0:
            out.extend(_equal_degree_split(part, d, rng))
            rem = rem // part
            if rem.degree >= 1:
                w = w % rem
    return out


def _recombine(h: list, modular: list, fp):
    """Find true integer factors as subsets of the modular factorization."""
    p = fp.p
    found = []
    remaining = list(modular)
    current = list(h)
    size = 1
    while 2 * size <= len(remaining):
        hit = None
        for combo in itertools.combinations(range(len(remaining)), size):
            prod = UniPoly.constant(fp(current[-1]))
            for idx in combo:
                prod = prod * remaining[idx]
            cand = [_centre(c.val, p) for c in prod.coeffs]
            g = 0
            for c in cand:
                g = math.gcd(g, c)
            cand = [c // g for c in cand]
            if cand[-1] < 0:
                cand = [-c for c in cand]
            try:
                quo = _int_exact_div(current, cand)
            except ValueError:
                continue
            hit = (combo, cand, quo)
            break
        if hit is None:
            size += 1
            continue
        combo, cand, quo = hit
        found.append(cand)
        current = quo
        remaining = [g for i, g in enumerate(remaining) if i not in combo]
    if len(current) > 1:
        g = 0
        for c in current:
            g = math.gcd(g, c)
        current = [c // g for c in current]
        if current[-1] < 0:
            current = [-c for c in current]
        found.append(current)
    return found


def _centre(v: int, p: int) -> int:
    return v - p if v > p // 2 else v
