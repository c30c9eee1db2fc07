"""Irreducibility machinery: empty searches on valid data, witness recovery
on synthetic reducible sextics, and closed-form residual identities."""

import random
from fractions import Fraction

import pytest

from howe import (
    BiPoly,
    build_model,
    is_absolutely_irreducible,
    prime_field,
    shape_a_test,
    shape_a_witness,
    shape_b_test,
    shape_b_witness,
)
from howe.reference import REFERENCE_EXAMPLES, reference_data
from howe.unipoly import UniPoly

from conftest import random_branch_data


def even_quadratic(field, coeffs):
    """y^2 + (polynomial in x)."""
    f = BiPoly(field, {(0, 2): field.one})
    return f + BiPoly.from_unipoly(UniPoly.from_coeffs(field, coeffs), "x", 0)


def shape_b_pair(field, a):
    a1, a2, a3, a4, a5, a6 = (field(v) for v in a)
    lin = BiPoly(field, {(2, 0): field(2), (1, 0): a1, (0, 0): a2})
    cub = BiPoly(field, {(3, 0): a3, (2, 0): a4, (1, 0): a5, (0, 0): a6})
    y = BiPoly(field, {(0, 1): field.one})
    y2 = BiPoly(field, {(0, 2): field.one})
    return y2 + lin * y + cub, y2 - lin * y + cub


class TestValidDataIsIrreducible:
    def test_reference_examples(self):
        for ex in REFERENCE_EXAMPLES:
            verdict = is_absolutely_irreducible(reference_data(ex))
            assert verdict.irreducible
            assert verdict.shape_a_witness is None
            assert verdict.shape_b_witness is None
            for case in verdict.shape_b_residuals:
                assert any(not r.is_zero for r in case.residuals)

    def test_random_f31(self):
        rng = random.Random(1)
        for _ in range(150):
            rd = random_branch_data(prime_field(31), rng)
            assert is_absolutely_irreducible(rd).irreducible

    def test_random_f1009(self):
        rng = random.Random(2)
        for _ in range(100):
            rd = random_branch_data(prime_field(1009), rng)
            assert is_absolutely_irreducible(rd).irreducible

    def test_random_rational(self, QQ):
        rng = random.Random(3)
        for _ in range(60):
            rd = random_branch_data(QQ, rng, span=50)
            assert is_absolutely_irreducible(rd).irreducible

    def test_shape_tests_individually_absent(self):
        rng = random.Random(4)
        for _ in range(40):
            rd = random_branch_data(prime_field(31), rng)
            assert shape_a_test(rd) is None
            witness, cases = shape_b_test(rd)
            assert witness is None
            assert cases  # residual diagnostics retained


class TestShapeAWitness:
    def test_recovers_synthetic_factorization(self, F31):
        q2 = [1, 0, 1]  # x^2 + 1
        q4 = [1, 0, 0, 0, -4]  # -4x^4 + 1
        H1 = even_quadratic(F31, q2)
        H2 = even_quadratic(F31, q4)
        f = H1 * H2
        got = shape_a_witness(f)
        assert got is not None
        assert got.h1 * got.h2 == f
        assert {str(got.h1), str(got.h2)} == {str(H1), str(H2)}

    def test_random_synthetic_over_q(self, QQ):
        rng = random.Random(5)
        for _ in range(25):
            q2 = [rng.randint(-6, 6) for _ in range(3)]
            q4 = [rng.randint(-6, 6) for _ in range(4)] + [-4]
            f = even_quadratic(QQ, q2) * even_quadratic(QQ, q4)
            if f.y_slice(0).is_zero:
                continue
            got = shape_a_witness(f)
            assert got is not None
            assert got.h1 * got.h2 == f

    def test_irreducible_shape_gives_none(self, F31):
        rd = reference_data(REFERENCE_EXAMPLES[0])
        f = build_model(rd).f
        assert shape_a_witness(f) is None


class TestShapeBWitness:
    def test_recovers_chosen_coefficients(self, F31):
        chosen = (3, 5, 2, 7, 11, 13)
        H1, H2 = shape_b_pair(F31, chosen)
        f = H1 * H2
        got, cases = shape_b_witness(f)
        assert got is not None
        assert got.h1 * got.h2 == f
        got_a = tuple(v.val for v in got.coefficients)
        # the two factors can come back swapped: a1, a2 flip sign together
        neg = (31 - 3, 31 - 5, 2, 7, 11, 13)
        assert got_a in (chosen, neg)

    def test_random_synthetic_over_q(self, QQ):
        rng = random.Random(6)
        hits = 0
        for _ in range(30):
            a = tuple(rng.randint(-5, 5) for _ in range(6))
            H1, H2 = shape_b_pair(QQ, a)
            f = H1 * H2
            if f.y_slice(0).is_zero:
                continue
            got, _ = shape_b_witness(f)
            assert got is not None
            assert got.h1 * got.h2 == f
            hits += 1
        assert hits >= 20

    def test_translation_invariance(self, F31):
        rng = random.Random(7)
        for _ in range(25):
            rd = random_branch_data(prime_field(31), rng)
            shift = F31(rng.randrange(31))
            base = is_absolutely_irreducible(rd)
            moved = is_absolutely_irreducible(rd.translated(shift))
            assert base.irreducible == moved.irreducible


class TestResidualIdentities:
    def test_case_b2_q3_factorization(self, QQ):
        # in the a3 = -(s1 - t1) case the third residual collapses to
        # -1/2 (a1-a2-a3+a4)(a1-a2+a3-a4)(a1+a2-a3-a4) in the alpha values
        rng = random.Random(8)
        checked = 0
        for _ in range(40):
            rd = random_branch_data(QQ, rng, span=20)
            if (rd.sigma[0] - rd.tau[0]).is_zero:
                continue
            _, cases = shape_b_test(rd)
            b2 = [c for c in cases if c.case == "B2"]
            assert len(b2) == 1
            a1, a2, a3, a4 = (v.val for v in rd.alphas)
            brackets = (
                (a1 - a2 - a3 + a4) * (a1 - a2 + a3 - a4) * (a1 + a2 - a3 - a4)
            )
            expected = QQ(Fraction(-1, 2) * brackets)
            assert b2[0].residuals[2] == expected
            checked += 1
        assert checked >= 30

    def test_case_b1_q3_q5_closed_forms(self, QQ):
        # mirror identities in the symmetric functions of the translated data
        rng = random.Random(9)
        for _ in range(20):
            rd = random_branch_data(QQ, rng, span=15)
            if (rd.sigma[0] - rd.tau[0]).is_zero:
                continue
            rd0 = rd.translated(-rd.alphas[0])
            _, cases = shape_b_test(rd)
            b1 = [c for c in cases if c.case == "B1"][0]
            s3 = rd0.sigma[2].val
            s4 = rd0.sigma[3].val
            t1, t2 = rd0.tau[0].val, rd0.tau[1].val
            q3_expected = Fraction(-1, 2) * (8 * s3 + t1 * (t1 * t1 - 4 * t2))
            q5_expected = Fraction(-1, 16) * ((t1 * t1 - 4 * t2) ** 2 - 64 * s4)
            assert b1.residuals[2].val == q3_expected
            assert b1.residuals[4].val == q5_expected


class TestGuards:
    def test_shape_validation_rejects_wrong_grid(self, F31):
        # x^4 y^2 coefficient must be -4
        f = BiPoly(F31, {(0, 4): 1, (4, 2): -3, (0, 0): 1})
        with pytest.raises(ValueError):
            shape_a_witness(f)

    def test_zero_y0_restriction_rejected(self, F31):
        f = BiPoly(F31, {(0, 4): 1, (4, 2): -4, (0, 2): 1})
        with pytest.raises(Exception):
            shape_a_witness(f)
