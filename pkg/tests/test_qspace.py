# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license

"""Quantity and dimension tests."""

from fractions import Fraction

import pytest

from piforge.const import INT64_MAX
from piforge.qspace import (
    DimensionMismatchError,
    DimExp,
    InvalidBasisError,
    LocalBasis,
    NotExpandableError,
    NotInvertibleError,
    Quantity,
    expand,
    independent,
    qty_invert,
    reconstruct,
)
from piforge.zlinalg import ExponentOverflowError

L = DimExp((1, 0))
T = DimExp((0, 1))
ONE = DimExp.identity(2)


def test_dimension_group():
    """Test products, powers and inverses of dimensions"""
    assert L * T == DimExp((1, 1))
    assert (L * T) ** -2 == DimExp((-2, -2))
    assert (L * L.inverse()).is_identity
    assert ONE.is_identity
    assert not L.is_identity


def test_dimension_mismatch():
    """Test dimensions over different base counts do not combine"""
    with pytest.raises(DimensionMismatchError):
        L * DimExp((1, 0, 0))


def test_exponent_overflow():
    """Test exponents are checked against the 64-bit range"""
    with pytest.raises(ExponentOverflowError):
        DimExp((INT64_MAX,)) * DimExp((1,))
    with pytest.raises(ExponentOverflowError):
        DimExp((2**62,)) ** 4


def test_quantity_arithmetic():
    """Test coefficient and dimension travel together"""
    q = Quantity(3, L)
    assert q.coeff == Fraction(3)
    assert q * Quantity(Fraction(1, 2), T) == Quantity(Fraction(3, 2), L * T)
    assert q**2 == Quantity(9, L**2)
    assert q**-1 == Quantity(Fraction(1, 3), L.inverse())
    assert Quantity.one(2) * q == q


def test_zero_quantity():
    """Test zero quantities keep their dimension and do not invert"""
    zero = Quantity.zero(L)
    assert zero.is_zero
    assert (zero * Quantity(5, T)).dim == L * T
    with pytest.raises(NotInvertibleError):
        qty_invert(zero)
    with pytest.raises(NotInvertibleError):
        zero**-1


def test_expand():
    """Test measure and exponents against a local basis"""
    basis = LocalBasis((Quantity(2, L), Quantity(3, T)))
    mu, exps = expand(Quantity(6, DimExp((2, -1))), basis)
    assert mu == Fraction(9, 2)
    assert exps == (2, -1)


def test_expand_dimensionless_and_zero():
    """Test dimensionless measures and the zero quantity"""
    basis = LocalBasis((Quantity(2, L), Quantity(3, T)))
    assert expand(Quantity(5, ONE), basis) == (Fraction(5), (0, 0))
    assert expand(Quantity(0, L), LocalBasis((Quantity(1, L),))) == (Fraction(0), (1,))


def test_expand_errors():
    """Test dimensions outside the integer span are rejected"""
    with pytest.raises(NotExpandableError):
        expand(Quantity(1, T), LocalBasis((Quantity(1, L),)))
    with pytest.raises(NotExpandableError):
        expand(Quantity(1, L), LocalBasis((Quantity(1, L**2),)))
    with pytest.raises(NotExpandableError):
        expand(Quantity(1, L), LocalBasis(()))


def test_invalid_basis():
    """Test zero and dependent members are rejected"""
    with pytest.raises(InvalidBasisError):
        LocalBasis((Quantity(0, L),))
    with pytest.raises(InvalidBasisError):
        LocalBasis((Quantity(1, L), Quantity(2, L**2)))
    assert independent([L, T])
    assert not independent([L, L**3])


def test_round_trip():
    """Test reconstruct inverts expand"""
    basis = LocalBasis((Quantity(Fraction(7, 3), L * T), Quantity(-2, T)))
    q = Quantity(Fraction(-11, 5), DimExp((3, -4)))
    mu, exps = expand(q, basis)
    assert reconstruct(mu, exps, basis) == q
    assert reconstruct(Fraction(4), (), LocalBasis(()), size=2) == Quantity(4, ONE)


def test_measure_multiplicative():
    """Test the measure of a product is the product of measures"""
    basis = LocalBasis((Quantity(2, L), Quantity(5, T)))
    q1 = Quantity(3, DimExp((1, 2)))
    q2 = Quantity(Fraction(1, 7), DimExp((-3, 1)))
    assert expand(q1 * q2, basis)[0] == expand(q1, basis)[0] * expand(q2, basis)[0]


def test_dimensionless_measure_basis_independent():
    """Test dimensionless measures agree across bases"""
    q = Quantity(Fraction(5, 4), ONE)
    first = LocalBasis((Quantity(2, L), Quantity(3, T)))
    second = LocalBasis((Quantity(9, L * T), Quantity(Fraction(1, 2), T)))
    assert expand(q, first)[0] == expand(q, second)[0] == Fraction(5, 4)
