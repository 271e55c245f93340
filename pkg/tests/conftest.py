"""Shared exact-matrix helpers for the test suite."""

from fractions import Fraction

import pytest

from diracsym import ExactMatrix, ExactScalar


def first_nonzero(m: ExactMatrix):
    for row in m.rows:
        for v in row:
            if v:
                return v
    return None


def proj_equal(a: ExactMatrix, b: ExactMatrix) -> bool:
    """a == lambda * b for some nonzero scalar lambda."""
    vb = first_nonzero(b)
    va = first_nonzero(a)
    if vb is None or va is None:
        return vb is None and va is None
    lam = va / vb
    return a == b.scale(lam)


def mat(entries) -> ExactMatrix:
    return ExactMatrix(
        [
            [
                e if isinstance(e, ExactScalar) else ExactScalar(*e)
                if isinstance(e, tuple)
                else ExactScalar(Fraction(e))
                for e in row
            ]
            for row in entries
        ]
    )


@pytest.fixture
def frac():
    return Fraction
