# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license

"""Column matroid tests."""

import pytest

from piforge.matroid import (
    PiMonomial,
    basis_label,
    basis_pi_groups,
    bases,
    circuits,
    incidence_table,
    pi_monomial,
    pi_monomial_classes,
    pseudocircuit_label,
    pseudocircuits,
)
from piforge.zlinalg import ExponentOverflowError, NotPseudocircuitError

from .common import matroid_of
from .data import (
    TWO_BODY_BASES,
    TWO_BODY_COLUMNS,
    TWO_BODY_PSEUDOCIRCUITS,
    TWO_BODY_TABLE,
)

SMALL_COLUMNS = [(1, 0), (1, 1), (1, 1)]


@pytest.fixture(name="two_body_matroid")
def two_body_matroid_fixture():
    """Matroid of the two-body dimensional matrix"""
    return matroid_of(TWO_BODY_COLUMNS, ["t", "M", "m", "d", "G"])


def test_two_body_bases(two_body_matroid):
    """Test the seven bases in lexicographic order"""
    assert two_body_matroid.rank == 3
    assert bases(two_body_matroid) == TWO_BODY_BASES
    assert all(two_body_matroid.is_basis(b) for b in TWO_BODY_BASES)
    assert not two_body_matroid.is_basis((0, 1, 2))


def test_two_body_pseudocircuits(two_body_matroid):
    """Test the five pseudocircuits"""
    assert pseudocircuits(two_body_matroid) == TWO_BODY_PSEUDOCIRCUITS
    assert all(len(pc) == two_body_matroid.rank + 1 for pc in TWO_BODY_PSEUDOCIRCUITS)


def test_two_body_circuits(two_body_matroid):
    """Test {M, m} and the two four-element circuits"""
    assert circuits(two_body_matroid) == [(0, 1, 3, 4), (0, 2, 3, 4), (1, 2)]


def test_small_example():
    """Test a circuit that is not a pseudocircuit and vice versa"""
    m = matroid_of(SMALL_COLUMNS, ["a", "b", "c"])
    assert bases(m) == [(0, 1), (0, 2)]
    assert pseudocircuits(m) == [(0, 1, 2)]
    assert circuits(m) == [(1, 2)]
    assert pi_monomial(m, (0, 1, 2), 1).exponents == (0, 1, -1)


def test_dimensionless_columns():
    """Test the empty set is the only basis of a rank zero matrix"""
    m = matroid_of([(0, 0)])
    assert bases(m) == [()]
    assert pseudocircuits(m) == [(0,)]
    assert circuits(m) == [(0,)]


def test_independent_columns_have_no_circuits():
    """Test independent columns"""
    m = matroid_of([(1, 0), (0, 1)])
    assert circuits(m) == []
    assert pseudocircuits(m) == []


def test_pi_monomials(two_body_matroid):
    """Test the pi-monomials of the pseudocircuits"""
    gamma = pi_monomial(two_body_matroid, (0, 1, 3, 4), 0)
    delta = pi_monomial(two_body_matroid, (0, 2, 3, 4), 0)
    alpha = pi_monomial(two_body_matroid, (0, 1, 2, 3), 1)

    assert gamma.exponents == (2, 1, 0, -3, 1)
    assert delta.exponents == (2, 0, 1, -3, 1)
    assert alpha.exponents == (0, 1, -1, 0, 0)
    assert alpha.support == (1, 2)
    assert alpha.inverse().exponents == (0, -1, 1, 0, 0)
    for pi in (alpha, gamma, delta):
        assert pi.is_dimensionless(two_body_matroid.matrix)


def test_pi_monomial_lead_fallback(two_body_matroid):
    """Test a zero exponent on the requested variable falls back to the first non-zero"""
    alpha = pi_monomial(two_body_matroid, (0, 1, 2, 3), 0)
    assert alpha.exponents == (0, 1, -1, 0, 0)
    assert alpha.lead == 1


def test_pi_monomial_errors(two_body_matroid):
    """Test non pseudocircuits are rejected"""
    with pytest.raises(NotPseudocircuitError):
        pi_monomial(two_body_matroid, (0, 1, 3), 0)
    with pytest.raises(ValueError):
        pi_monomial(two_body_matroid, (0, 1, 2, 3), 4)


def test_pi_monomial_overflow():
    """Test pi-monomial exponents are checked against 64 bits"""
    assert PiMonomial((2**63 - 1, 0), 0).exponent(0) == 2**63 - 1
    with pytest.raises(ExponentOverflowError):
        PiMonomial((2**63, -1), 0)


def test_pi_monomial_classes(two_body_matroid):
    """Test alpha, beta and epsilon share one pi-monomial"""
    classes = pi_monomial_classes(two_body_matroid)
    assert [(pi.exponents, pos) for pi, pos in classes] == [
        ((0, 1, -1, 0, 0), [0, 1, 4]),
        ((2, 1, 0, -3, 1), [2]),
        ((2, 0, 1, -3, 1), [3]),
    ]


def test_basis_pi_groups(two_body_matroid):
    """Test every basis carries n - r pi-monomials"""
    groups = basis_pi_groups(two_body_matroid)
    assert [basis for basis, _ in groups] == TWO_BODY_BASES
    assert all(len(group) == 2 for _, group in groups)
    basis, group = groups[5]
    assert basis == (1, 3, 4)
    assert [pi.exponents for pi in group] == [(2, 1, 0, -3, 1), (0, -1, 1, 0, 0)]


def test_incidence_table(two_body_matroid):
    """Test the two-body incidence table"""
    table = incidence_table(two_body_matroid)
    assert table.shape == (5, 12)
    assert table.basis_labels == tuple("ABCDEFG")
    assert table.pseudocircuit_labels == tuple("αβγδε")
    assert table.rows() == TWO_BODY_TABLE


def test_incidence_table_small_and_empty():
    """Test table shapes of the small example and no variables"""
    assert incidence_table(matroid_of(SMALL_COLUMNS, ["a", "b", "c"])).shape == (3, 3)
    assert incidence_table(matroid_of([], [])).shape == (0, 0)


def test_labels():
    """Test labels past the end of the alphabets"""
    assert basis_label(0) == "A"
    assert basis_label(25) == "Z"
    assert basis_label(26) == "AA"
    assert basis_label(27) == "AB"
    assert pseudocircuit_label(0) == "α"
    assert pseudocircuit_label(24) == "α′"


def test_basis_exchange(two_body_matroid):
    """Test the basis exchange axiom on the enumerated family"""
    family = set(bases(two_body_matroid))
    for first in family:
        for second in family:
            for x in set(first) - set(second):
                assert any(
                    tuple(sorted((set(first) - {x}) | {y})) in family
                    for y in set(second) - set(first)
                )
