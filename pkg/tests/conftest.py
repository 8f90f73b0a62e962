# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
import pytest

from .common import load
from .data import PROBLEM_PENDULUM, PROBLEM_TWO_BODY


@pytest.fixture(name="two_body")
def two_body_problem():
    """The two-body orbit problem, t dependent"""
    return load(PROBLEM_TWO_BODY)


@pytest.fixture(name="pendulum")
def pendulum_problem():
    """The simple pendulum, t dependent"""
    return load(PROBLEM_PENDULUM)

