# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
"""Quantities and dimensions in expanded normal form.

A dimension is an integer exponent vector over the declared base
dimensions; a quantity is an exact rational coefficient paired with a
dimension. A coefficient of zero is the zero quantity of that dimension.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from piforge.errors import PiforgeError
from piforge.zlinalg import (
    DependentColumnsError,
    IntMatrix,
    NoSolutionError,
    checked,
    rank,
    solve_integer,
)

_LOGGER = logging.getLogger(__name__)

Rational = Union[Fraction, int]


class DimensionMismatchError(PiforgeError):
    """Raised when combining dimensions over different base dimension counts"""


class NotInvertibleError(PiforgeError):
    """Raised when inverting a zero quantity"""


class NotExpandableError(PiforgeError):
    """Raised when a dimension is not an integer product of basis dimensions"""


class InvalidBasisError(PiforgeError):
    """Raised when a local basis has zero or dependent members"""


@dataclass(frozen=True)
class DimExp:
    """Element of the free abelian group of dimensions"""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        for value in self.exponents:
            checked(value)

    @classmethod
    def identity(cls, size: int) -> DimExp:
        """The dimension of dimensionless quantities"""
        return cls((0,) * size)

    def __len__(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: DimExp) -> DimExp:
        return dim_mul(self, other)

    def __pow__(self, n: int) -> DimExp:
        return dim_pow(self, n)

    def inverse(self) -> DimExp:
        """Group inverse"""
        return dim_pow(self, -1)

    @property
    def is_identity(self) -> bool:
        """True for the all-zeros dimension"""
        return not any(self.exponents)


def dim_mul(a: DimExp, b: DimExp) -> DimExp:
    """Product of two dimensions (componentwise sum of exponents)"""
    if len(a) != len(b):
        raise DimensionMismatchError(
            f"cannot multiply dimensions of length {len(a)} and {len(b)}"
        )
    return DimExp(tuple(checked(x + y) for x, y in zip(a.exponents, b.exponents)))


def dim_pow(a: DimExp, n: int) -> DimExp:
    """Integer power of a dimension"""
    return DimExp(tuple(checked(n * x) for x in a.exponents))


@dataclass(frozen=True)
class Quantity:
    """Exact rational coefficient paired with a dimension"""

    coeff: Fraction
    dim: DimExp

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    @classmethod
    def one(cls, size: int) -> Quantity:
        """The unit quantity 1_Q"""
        return cls(Fraction(1), DimExp.identity(size))

    @classmethod
    def zero(cls, dim: DimExp) -> Quantity:
        """The zero quantity of a dimension"""
        return cls(Fraction(0), dim)

    @property
    def is_zero(self) -> bool:
        """True for the zero quantity of its dimension"""
        return self.coeff == 0

    def __mul__(self, other: Quantity) -> Quantity:
        return qty_mul(self, other)

    def __pow__(self, n: int) -> Quantity:
        if n < 0:
            return qty_pow(qty_invert(self), -n)
        return qty_pow(self, n)


def qty_mul(a: Quantity, b: Quantity) -> Quantity:
    """Product of quantities; a zero factor gives the zero of the product dimension"""
    return Quantity(a.coeff * b.coeff, dim_mul(a.dim, b.dim))


def qty_pow(a: Quantity, n: int) -> Quantity:
    """Non-negative integer power"""
    if n < 0:
        raise ValueError("use qty_invert for negative powers")
    return Quantity(a.coeff**n, dim_pow(a.dim, n))


def qty_invert(a: Quantity) -> Quantity:
    """Inverse of a non-zero quantity"""
    if a.is_zero:
        raise NotInvertibleError("the zero quantity is not invertible")
    return Quantity(1 / a.coeff, dim_pow(a.dim, -1))


def dims_matrix(dims: Sequence[DimExp], size: int | None = None) -> IntMatrix:
    """Dimensional matrix with one column per dimension"""
    lengths = {len(d) for d in dims}
    if len(lengths) > 1:
        raise DimensionMismatchError("dimensions have different lengths")
    return IntMatrix.from_columns([d.exponents for d in dims], rows=size)


def independent(dims: Sequence[DimExp]) -> bool:
    """True when no non-trivial integer combination of ``dims`` is the identity"""
    if not dims:
        return True
    return rank(dims_matrix(dims)) == len(dims)


@dataclass(frozen=True)
class LocalBasis:
    """Non-zero quantities with independent dimensions"""

    members: tuple[Quantity, ...]

    def __post_init__(self) -> None:
        if any(e.is_zero for e in self.members):
            raise InvalidBasisError("local basis members must be non-zero")
        if not independent([e.dim for e in self.members]):
            raise InvalidBasisError("local basis members have dependent dimensions")


def expand(q: Quantity, basis: LocalBasis) -> tuple[Fraction, tuple[int, ...]]:
    """Unique expansion ``q = mu * prod(e_j ** exps_j)``.

    Returns:
        The measure ``mu`` and the integer exponents, one per basis member.

    Raises:
        NotExpandableError: ``q.dim`` is not an integer product of the basis
        dimensions
    """
    cols = [e.dim.exponents for e in basis.members]
    if any(len(c) != len(q.dim) for c in cols):
        raise DimensionMismatchError("quantity and basis use different base dimensions")
    try:
        exps = solve_integer(q.dim.exponents, cols)
    except NoSolutionError as error:
        raise NotExpandableError(str(error)) from error
    except DependentColumnsError as error:
        raise InvalidBasisError(str(error)) from error
    if exps is None:
        raise NotExpandableError("dimension needs fractional basis exponents")

    unit = Fraction(1)
    for member, exp in zip(basis.members, exps):
        unit *= member.coeff**exp
    mu = q.coeff / unit
    _LOGGER.debug("Expanded %s as %s * %s", q, mu, exps)
    return mu, tuple(checked(e) for e in exps)


def reconstruct(
    mu: Rational, exps: Sequence[int], basis: LocalBasis, size: int | None = None
) -> Quantity:
    """Inverse of :func:`expand`.

    ``size`` (the base dimension count) is only needed for an empty basis.
    """
    if len(exps) != len(basis.members):
        raise ValueError("one exponent per basis member is required")
    if basis.members:
        size = len(basis.members[0].dim)
    result = Quantity(Fraction(mu), DimExp.identity(size or 0))
    for member, exp in zip(basis.members, exps):
        result = result * member**exp
    return result
