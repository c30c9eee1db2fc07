"""Shared fixtures and independent oracles used across the test suite."""

from __future__ import annotations

import random

import pytest

from howe import prime_field, rational_field, validate


@pytest.fixture(scope="session")
def F31():
    return prime_field(31)


@pytest.fixture(scope="session")
def F7():
    return prime_field(7)


@pytest.fixture(scope="session")
def F1009():
    return prime_field(1009)


@pytest.fixture(scope="session")
def QQ():
    return rational_field()


def random_branch_data(field, rng: random.Random, span=None):
    """A valid configuration with uniformly drawn distinct values."""
    while True:
        if span is None:
            vals = [field.random_element(rng) for _ in range(8)]
        else:
            vals = [field(rng.randint(-span, span)) for _ in range(8)]
        if len({v.val for v in vals}) == 8:
            return validate(vals[:4], vals[4:])


def determinant(rows):
    """Exact determinant by Gaussian elimination over any field.

    Independent of the resultant code: used as the oracle pinning the
    Sylvester-determinant convention.
    """
    n = len(rows)
    m = [list(r) for r in rows]
    field = rows[0][0].field
    det = field.one
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not m[r][col].is_zero:
                pivot = r
                break
        if pivot is None:
            return field.zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if m[r][col].is_zero:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] = m[r][c] - factor * m[col][c]
    return det


def naive_poly_mul(field, a, b):
    """Convolution product of coefficient lists, independent of UniPoly."""
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def expand_from_roots(field, roots):
    """Naive expansion of prod (x - r): the oracle for from_roots."""
    coeffs = [field.one]
    for r in roots:
        coeffs = naive_poly_mul(field, coeffs, [-field(r), field.one])
    return coeffs
