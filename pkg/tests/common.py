# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
from __future__ import annotations

from typing import Sequence

from piforge.engine import Problem, Variable
from piforge.matroid import ColumnMatroid
from piforge.qspace import DimExp
from piforge.report.problemfile import parse_problem
from piforge.zlinalg import IntMatrix


def load(text: str, **overrides) -> Problem:
    """Parse a corpus problem, optionally overriding mode or kappa"""
    return parse_problem(text, filename="<test>", **overrides)


def matroid_of(columns: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> ColumnMatroid:
    """Column matroid of explicit columns named q0, q1, ... by default"""
    names = names or [f"q{i}" for i in range(len(columns))]
    rows = len(columns[0]) if columns else 0
    return ColumnMatroid(IntMatrix.from_columns(columns, rows=rows), tuple(names))


def problem_of(columns: Sequence[Sequence[int]], **kwargs) -> Problem:
    """Problem over base dimensions D0, D1, ... with variables q0, q1, ..."""
    rows = len(columns[0])
    return Problem(
        base_dims=tuple(f"D{i}" for i in range(rows)),
        variables=tuple(
            Variable(f"q{i}", DimExp(tuple(col))) for i, col in enumerate(columns)
        ),
        **kwargs,
    )
