# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
"""Column matroid of a dimensional matrix.

Bases are maximal independent variable sets ("repeating variables"),
pseudocircuits are bases extended by one variable, and every pseudocircuit
carries a pi-monomial: the primitive generator of the kernel of its
columns.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

from piforge.const import MAX_VARIABLES
from piforge.zlinalg import IntMatrix, NotPseudocircuitError, checked, primitive_kernel, rank

_LOGGER = logging.getLogger(__name__)

IndexSet = tuple[int, ...]

GREEK = "αβγδεζηθικλμνξοπρστυφχψω"


def basis_label(index: int) -> str:
    """Spreadsheet style labels: A..Z, AA, AB, ..."""
    label = ""
    index += 1
    while index:
        index, rem = divmod(index - 1, 26)
        label = chr(ord("A") + rem) + label
    return label


def pseudocircuit_label(index: int) -> str:
    """Greek labels, primed once the alphabet runs out"""
    rounds, rem = divmod(index, len(GREEK))
    return GREEK[rem] + "′" * rounds


@dataclass(frozen=True)
class PiMonomial:
    """Monomial over all variables of a problem, stored as an exponent vector.

    ``lead`` is the variable whose exponent was made positive. Variables
    with exponent zero stay in the vector and are skipped when rendered.
    """

    exponents: tuple[int, ...]
    lead: int

    def __post_init__(self) -> None:
        for value in self.exponents:
            checked(value)

    @property
    def support(self) -> IndexSet:
        """Indices of the variables with a non-zero exponent"""
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def exponent(self, index: int) -> int:
        """Exponent of one variable"""
        return self.exponents[index]

    def inverse(self) -> PiMonomial:
        """The other member of the pi-monomial pair"""
        return PiMonomial(tuple(-e for e in self.exponents), self.lead)

    def dimension(self, matrix: IntMatrix) -> tuple[int, ...]:
        """Dimension exponents of the monomial (all zero when dimensionless)"""
        return matrix.mul_vector(self.exponents)

    def is_dimensionless(self, matrix: IntMatrix) -> bool:
        """True when the monomial multiplies to the identity dimension"""
        return not any(self.dimension(matrix))

    def items(self, order: Sequence[int] | None = None) -> list[tuple[int, int]]:
        """Non-zero ``(index, exponent)`` pairs, lead variable first"""
        order = order if order is not None else range(len(self.exponents))
        rest = [(i, self.exponents[i]) for i in order if i != self.lead and self.exponents[i]]
        if self.exponents[self.lead]:
            return [(self.lead, self.exponents[self.lead])] + rest
        return rest


@dataclass(frozen=True)
class IncidenceTable:
    """Membership marks of variables in bases and pseudocircuits"""

    variables: tuple[str, ...]
    basis_labels: tuple[str, ...]
    pseudocircuit_labels: tuple[str, ...]
    basis_marks: tuple[tuple[bool, ...], ...]
    pseudocircuit_marks: tuple[tuple[bool, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        """(rows, columns)"""
        return len(self.variables), len(self.basis_labels) + len(self.pseudocircuit_labels)

    def rows(self) -> list[tuple[str, str]]:
        """Rows as ``(variable, marks)`` with ``+/-`` for bases and ``*/o`` for
        pseudocircuits"""
        out = []
        for name, bmarks, pmarks in zip(
            self.variables, self.basis_marks, self.pseudocircuit_marks
        ):
            marks = "".join("+" if m else "-" for m in bmarks)
            marks += "".join("*" if m else "o" for m in pmarks)
            out.append((name, marks))
        return out


@dataclass(frozen=True)
class ColumnMatroid:
    """Matroid of the columns of an integer matrix"""

    matrix: IntMatrix
    var_names: tuple[str, ...]
    rank: int = field(init=False)

    def __post_init__(self) -> None:
        if len(self.var_names) != self.matrix.cols:
            raise ValueError("one variable name per matrix column is required")
        if self.matrix.cols > MAX_VARIABLES:
            raise ValueError(f"at most {MAX_VARIABLES} variables can be enumerated")
        object.__setattr__(self, "rank", rank(self.matrix))

    @property
    def size(self) -> int:
        """Number of variables"""
        return self.matrix.cols

    def subset_rank(self, indices: Sequence[int]) -> int:
        """Rank of a column subset"""
        if not indices:
            return 0
        return rank(self.matrix.columns(indices))

    def is_basis(self, indices: Sequence[int]) -> bool:
        """True for r independent columns"""
        return len(indices) == self.rank and self.subset_rank(indices) == self.rank

    def is_pseudocircuit(self, indices: Sequence[int]) -> bool:
        """True for r+1 columns containing a basis"""
        return len(indices) == self.rank + 1 and self.subset_rank(indices) == self.rank

    @cached_property
    def _bases(self) -> tuple[IndexSet, ...]:
        found = tuple(
            subset
            for subset in combinations(range(self.size), self.rank)
            if self.subset_rank(subset) == self.rank
        )
        _LOGGER.debug("Enumerated %d bases of rank %d", len(found), self.rank)
        return found

    @cached_property
    def _pseudocircuits(self) -> tuple[IndexSet, ...]:
        if self.rank + 1 > self.size:
            return ()
        return tuple(
            subset
            for subset in combinations(range(self.size), self.rank + 1)
            if self.subset_rank(subset) == self.rank
        )

    @cached_property
    def _circuits(self) -> tuple[IndexSet, ...]:
        found = []
        for size in range(1, min(self.rank + 1, self.size) + 1):
            for subset in combinations(range(self.size), size):
                if self.subset_rank(subset) != size - 1:
                    continue
                # minimal: dropping any element leaves an independent set
                if all(
                    self.subset_rank(subset[:i] + subset[i + 1 :]) == size - 1
                    for i in range(size)
                ):
                    found.append(subset)
        return tuple(sorted(found))


def bases(m: ColumnMatroid) -> list[IndexSet]:
    """All bases in lexicographic order of sorted index tuples"""
    return list(m._bases)


def pseudocircuits(m: ColumnMatroid) -> list[IndexSet]:
    """All pseudocircuits in lexicographic order"""
    return list(m._pseudocircuits)


def circuits(m: ColumnMatroid) -> list[IndexSet]:
    """All minimal dependent sets in lexicographic order"""
    return list(m._circuits)


def pi_monomial(m: ColumnMatroid, pc: Sequence[int], positive_var: int) -> PiMonomial:
    """Pi-monomial of a pseudocircuit with ``positive_var`` given a positive exponent.

    When ``positive_var`` has exponent zero the first non-zero exponent is
    made positive instead.

    Raises:
        NotPseudocircuitError: ``pc`` is not a pseudocircuit of ``m``
    """
    pc = tuple(sorted(pc))
    if positive_var not in pc:
        raise ValueError("positive_var must belong to the pseudocircuit")
    if not m.is_pseudocircuit(pc):
        raise NotPseudocircuitError(f"{pc} is not a pseudocircuit")
    kernel = primitive_kernel(m.matrix.columns(pc), designated=pc.index(positive_var))
    exponents = [0] * m.size
    for index, exp in zip(pc, kernel):
        exponents[index] = exp
    lead = positive_var if exponents[positive_var] else pc[kernel.index(next(k for k in kernel if k))]
    return PiMonomial(tuple(exponents), lead)


def incidence_table(m: ColumnMatroid) -> IncidenceTable:
    """Bases (A, B, ...) and pseudocircuits (α, β, ...) against the variables"""
    found_bases = bases(m) if m.size else []
    found_pcs = pseudocircuits(m)
    return IncidenceTable(
        variables=m.var_names,
        basis_labels=tuple(basis_label(i) for i in range(len(found_bases))),
        pseudocircuit_labels=tuple(pseudocircuit_label(i) for i in range(len(found_pcs))),
        basis_marks=tuple(
            tuple(v in b for b in found_bases) for v in range(m.size)
        ),
        pseudocircuit_marks=tuple(
            tuple(v in pc for pc in found_pcs) for v in range(m.size)
        ),
    )


def basis_pi_groups(m: ColumnMatroid) -> list[tuple[IndexSet, list[PiMonomial]]]:
    """For every basis, the pi-monomials of the pseudocircuits containing it.

    Each group is the argument list of an implicit relation
    ``F(pi_1, ..., pi_(n-r)) = 0``; the monomial of ``B + {w}`` has ``w``
    positive.
    """
    groups = []
    for basis in bases(m):
        members = set(basis)
        monomials = [
            pi_monomial(m, tuple(sorted(basis + (w,))), w)
            for w in range(m.size)
            if w not in members
        ]
        groups.append((basis, monomials))
    return groups


def pi_monomial_classes(m: ColumnMatroid) -> list[tuple[PiMonomial, list[int]]]:
    """Pseudocircuits grouped by equal pi-monomial up to inversion.

    Returns ``(monomial, pseudocircuit positions)`` pairs in first-seen order;
    the monomial has its first non-zero exponent positive.
    """
    classes: dict[tuple[int, ...], list[int]] = {}
    monomials: dict[tuple[int, ...], PiMonomial] = {}
    for position, pc in enumerate(pseudocircuits(m)):
        monomial = pi_monomial(m, pc, pc[0])
        classes.setdefault(monomial.exponents, []).append(position)
        monomials.setdefault(monomial.exponents, monomial)
    return [(monomials[key], positions) for key, positions in classes.items()]
