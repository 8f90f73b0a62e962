# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
"""Exact integer linear algebra on dimensional matrices."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Sequence

import sympy

from piforge.const import INT64_MAX, INT64_MIN
from piforge.errors import PiforgeError

_LOGGER = logging.getLogger(__name__)


class ExponentOverflowError(PiforgeError):
    """Raised when an exponent leaves the signed 64-bit range"""


class NoSolutionError(PiforgeError):
    """Raised when a target column lies outside the rational span of a basis"""


class NotPseudocircuitError(PiforgeError):
    """Raised when a column set does not have a kernel of rank exactly one"""


class DependentColumnsError(PiforgeError):
    """Raised when columns expected to be independent are dependent"""


def checked(value: int) -> int:
    """Return ``value`` if it fits a signed 64-bit exponent"""
    if not INT64_MIN <= value <= INT64_MAX:
        raise ExponentOverflowError(f"exponent {value} overflows 64 bits")
    return value


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major.

    Columns are the exponent vectors of the variables, rows the base
    dimensions, as in a dimensional matrix.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must not be negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        for value in self.entries:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"matrix entries must be integers, got {value!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """Build a matrix from a list of rows"""
        ncols = len(rows[0]) if rows else (cols or 0)
        entries: list[int] = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            entries.extend(row)
        return cls(len(rows), ncols, tuple(entries))

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[int]], rows: int | None = None
    ) -> IntMatrix:
        """Build a matrix from a list of columns.

        Args:
            columns: column vectors, all of the same length
            rows: row count, required only when ``columns`` is empty
        """
        nrows = len(columns[0]) if columns else (rows or 0)
        if any(len(col) != nrows for col in columns):
            raise ValueError("ragged columns")
        entries = tuple(columns[j][i] for i in range(nrows) for j in range(len(columns)))
        return cls(nrows, len(columns), entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        """Zero matrix of the given shape"""
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        """Return row ``i``"""
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        """Return column ``j``"""
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self, indices: Iterable[int]) -> IntMatrix:
        """Column submatrix in the given index order"""
        return IntMatrix.from_columns([self.column(j) for j in indices], rows=self.rows)

    def transpose(self) -> IntMatrix:
        """Return the transposed matrix"""
        return IntMatrix.from_columns([self.row(i) for i in range(self.rows)], rows=self.cols)

    def is_zero(self) -> bool:
        """True when every entry is zero"""
        return not any(self.entries)

    def mul_vector(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product"""
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum(self[i, j] * vec[j] for j in range(self.cols)) for i in range(self.rows)
        )

    def to_sympy(self) -> sympy.Matrix:
        """Exact sympy copy of the matrix"""
        return sympy.Matrix(self.rows, self.cols, list(self.entries))


@dataclass(frozen=True)
class CanonicalExponents:
    """The gcd-normalized tuple (k, kj...) with k > 0.

    Describes ``C^k = prod(E_j^kj)`` for one column against a set of
    independent columns.
    """

    k: int
    kj: tuple[int, ...]

    def __post_init__(self) -> None:
        for value in (self.k, *self.kj):
            checked(value)
        if self.k <= 0:
            raise ValueError("canonical exponent k must be positive")
        if gcd(self.k, *self.kj) != 1:
            raise ValueError("canonical exponents must have gcd 1")

    def as_tuple(self) -> tuple[int, ...]:
        """Return ``(k, kj_1, ..., kj_r)``"""
        return (self.k, *self.kj)


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries"""
    divisor = gcd(*vec) if vec else 0
    if divisor in (0, 1):
        return tuple(vec)
    return tuple(v // divisor for v in vec)


def _clear_denominators(values: Iterable[sympy.Rational]) -> tuple[int, list[int]]:
    values = list(values)
    scale = lcm(*(int(sympy.Rational(v).q) for v in values)) if values else 1
    return scale, [int(sympy.Rational(v) * scale) for v in values]


def rank(m: IntMatrix) -> int:
    """Rank over the rationals"""
    if m.rows == 0 or m.cols == 0:
        return 0
    return int(m.to_sympy().rank())


def canonical_solve(
    target: Sequence[int], basis_cols: Sequence[Sequence[int]], kappa: int = 1
) -> CanonicalExponents:
    """Solve ``kappa * k * target = sum(kj * basis_col)`` for the canonical exponents.

    The returned ``k`` is the smallest positive integer admitting an integer
    solution; ``gcd(k, kj...) == 1``.

    Raises:
        NoSolutionError: ``target`` is outside the rational span of the columns
        DependentColumnsError: the basis columns are dependent
    """
    if kappa <= 0:
        raise ValueError("kappa must be a positive integer")
    if not basis_cols:
        if any(target):
            raise NoSolutionError("non-identity target against an empty basis")
        return CanonicalExponents(1, ())

    basis = IntMatrix.from_columns(basis_cols)
    if len(target) != basis.rows:
        raise ValueError("target length does not match basis column length")
    if rank(basis) != basis.cols:
        raise DependentColumnsError("basis columns are not independent")

    rhs = sympy.Matrix([kappa * t for t in target])
    try:
        solution, _ = basis.to_sympy().gauss_jordan_solve(rhs)
    except ValueError as error:
        raise NoSolutionError(f"{tuple(target)} is not in the span of the basis") from error

    k, kj = _clear_denominators(solution)
    exps = primitive((k, *kj))
    _LOGGER.debug("Canonical exponents for %s (kappa=%d): %s", tuple(target), kappa, exps)
    return CanonicalExponents(exps[0], tuple(exps[1:]))


def solve_integer(
    target: Sequence[int], basis_cols: Sequence[Sequence[int]]
) -> tuple[int, ...] | None:
    """Unique integer coordinates of ``target`` in ``basis_cols``, if integral.

    Returns ``None`` when the rational coordinates are not all integers.
    """
    exps = canonical_solve(target, basis_cols)
    if exps.k != 1:
        return None
    return exps.kj


def primitive_kernel(m: IntMatrix, designated: int | None = None) -> tuple[int, ...]:
    """Primitive integer generator of a rank-one kernel.

    The sign makes the ``designated`` entry positive; when that entry is
    zero (or no index is given) the first non-zero entry is positive.

    Raises:
        NotPseudocircuitError: the nullity of ``m`` is not exactly one
    """
    if m.cols == 0:
        raise NotPseudocircuitError("matrix has no columns")
    if m.rows == 0 or m.is_zero():
        basis = [[int(i == j) for i in range(m.cols)] for j in range(m.cols)]
    else:
        basis = [list(v) for v in m.to_sympy().nullspace()]
    if len(basis) != 1:
        raise NotPseudocircuitError(f"kernel has rank {len(basis)}, expected 1")

    _, ints = _clear_denominators(basis[0])
    vec = primitive(ints)
    if designated is not None and vec[designated] != 0:
        lead = vec[designated]
    else:
        lead = next(v for v in vec if v != 0)
    if lead < 0:
        vec = tuple(-v for v in vec)
    return vec
