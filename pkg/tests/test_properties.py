# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license

"""Property tests against brute force oracles."""

from itertools import combinations

import numpy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from piforge.engine import analyze_unbalanced, dimensional_matrix, prebases
from piforge.matroid import bases, circuits, pi_monomial, pseudocircuits
from piforge.qspace import DimExp, LocalBasis, Quantity, expand, reconstruct
from piforge.zlinalg import IntMatrix, canonical_solve, primitive_kernel, rank

from .common import matroid_of, problem_of

KAPPA_LIMIT = 12
BOX = 6

PROPERTY_SETTINGS = settings(max_examples=200, deadline=None)


def column_lists(min_rows=1, max_rows=4, max_cols=7, bound=3):
    """Lists of equal length integer columns"""
    return st.integers(min_rows, max_rows).flatmap(
        lambda rows: st.lists(
            st.tuples(*[st.integers(-bound, bound)] * rows), min_size=1, max_size=max_cols
        )
    )


@st.composite
def unimodular(draw, size):
    """Random product of row swaps, sign flips and shears"""
    u = numpy.identity(size, dtype=numpy.int64)
    for _ in range(draw(st.integers(1, 8))):
        i = draw(st.integers(0, size - 1))
        j = draw(st.integers(0, size - 1))
        op = draw(st.sampled_from(["swap", "negate", "shear"]))
        if op == "swap":
            u[[i, j]] = u[[j, i]]
        elif op == "negate":
            u[i] = -u[i]
        elif i != j:
            u[j] += draw(st.integers(-3, 3)) * u[i]
    return u


def greedy_basis(columns):
    """Indices of a maximal independent column set, scanning left to right"""
    chosen = []
    for j in range(len(columns)):
        trial = chosen + [j]
        if rank(IntMatrix.from_columns([columns[i] for i in trial])) == len(trial):
            chosen = trial
    return chosen


def brute_canonical(target, basis_cols):
    """Smallest k <= KAPPA_LIMIT with integer coordinates, or None"""
    a = numpy.array(basis_cols, dtype=float).T
    for k in range(1, KAPPA_LIMIT + 1):
        x, *_ = numpy.linalg.lstsq(a, k * numpy.array(target, dtype=float), rcond=None)
        ints = [int(round(v)) for v in x]
        if all(
            sum(col[i] * c for col, c in zip(basis_cols, ints)) == k * target[i]
            for i in range(len(target))
        ):
            return (k, *ints)
    return None


def subset_rank(matrix, subset):
    """Floating point rank of a column subset"""
    if not subset:
        return 0
    return int(numpy.linalg.matrix_rank(matrix[:, list(subset)]))


@PROPERTY_SETTINGS
@given(column_lists())
def test_canonical_solve_matches_search(columns):
    """Test canonical exponents against a search over k"""
    basis = greedy_basis(columns)
    assume(basis)
    basis_cols = [columns[j] for j in basis]
    for j in range(len(columns)):
        if j in basis:
            continue
        result = canonical_solve(columns[j], basis_cols)
        for i in range(len(columns[j])):
            combined = sum(col[i] * c for col, c in zip(basis_cols, result.kj))
            assert combined == result.k * columns[j][i]
        oracle = brute_canonical(columns[j], basis_cols)
        if result.k <= KAPPA_LIMIT:
            assert oracle == result.as_tuple()
        else:
            assert oracle is None


@settings(max_examples=100, deadline=None)
@given(
    column_lists(min_rows=4, max_rows=4, max_cols=4, bound=2),
    st.lists(st.integers(-2, 2), min_size=4, max_size=4),
    st.randoms(use_true_random=False),
)
def test_primitive_kernel_matches_box_search(columns, coeffs, rnd):
    """Test the kernel generator against every vector of a small box"""
    assume(rank(IntMatrix.from_columns(columns)) == len(columns))
    dependent = tuple(
        sum(c * col[i] for c, col in zip(coeffs, columns)) for i in range(4)
    )
    columns = columns + [dependent]
    rnd.shuffle(columns)
    n = len(columns)

    grids = numpy.meshgrid(*[numpy.arange(-BOX, BOX + 1)] * n, indexing="ij")
    candidates = numpy.stack([g.ravel() for g in grids], axis=1)
    matrix = numpy.array(columns).T
    kernel = candidates[(candidates @ matrix.T == 0).all(axis=1)]
    kernel = kernel[(kernel != 0).any(axis=1)]
    kernel = kernel[numpy.gcd.reduce(kernel, axis=1) == 1]
    kernel = [row for row in kernel if row[(row != 0).argmax()] > 0]

    assert len(kernel) == 1
    assert primitive_kernel(IntMatrix.from_columns(columns)) == tuple(int(x) for x in kernel[0])


@PROPERTY_SETTINGS
@given(column_lists())
def test_pi_monomials_are_dimensionless(columns):
    """Test every pi-monomial the pipelines produce is dimensionless"""
    problem = problem_of(columns, dependent="q0")
    matrix = dimensional_matrix(problem)
    if prebases(problem):
        for eq in analyze_unbalanced(problem).equations:
            assert eq.lhs.is_dimensionless(matrix)
            assert eq.lhs_exponent > 0
            assert all(arg.is_dimensionless(matrix) for arg in eq.args)

    m = matroid_of(columns)
    for pc in pseudocircuits(m):
        assert pi_monomial(m, pc, pc[0]).is_dimensionless(m.matrix)


@PROPERTY_SETTINGS
@given(column_lists().flatmap(lambda cols: st.tuples(st.just(cols), unimodular(len(cols[0])))))
def test_prebases_invariant_under_change_of_basis(case):
    """Test re-expressing the base dimensions in another basis changes nothing"""
    columns, u = case
    assert round(abs(numpy.linalg.det(u))) == 1
    moved = [tuple(int(x) for x in u @ numpy.array(col)) for col in columns]

    def summary(cols):
        return [
            (pb.members, pb.dependent, pb.others)
            for pb in prebases(problem_of(cols, dependent="q0"))
        ]

    assert summary(moved) == summary(columns)


@PROPERTY_SETTINGS
@given(column_lists())
def test_matroid_matches_subset_ranks(columns):
    """Test bases, pseudocircuits and circuits against exhaustive subset ranks"""
    m = matroid_of(columns)
    matrix = numpy.array(columns, dtype=float).T
    n = len(columns)
    r = subset_rank(matrix, range(n))
    assert m.rank == r

    assert bases(m) == [s for s in combinations(range(n), r) if subset_rank(matrix, s) == r]
    assert pseudocircuits(m) == [
        s for s in combinations(range(n), r + 1) if subset_rank(matrix, s) == r
    ]
    expected = sorted(
        s
        for size in range(1, n + 1)
        for s in combinations(range(n), size)
        if subset_rank(matrix, s) == size - 1
        and all(subset_rank(matrix, s[:k] + s[k + 1 :]) == size - 1 for k in range(size))
    )
    assert circuits(m) == expected


@PROPERTY_SETTINGS
@given(
    st.fractions().filter(lambda f: f != 0),
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
)
def test_expand_round_trip(coeff, first, second):
    """Test reconstruct inverts expand over the unit basis"""
    basis = LocalBasis((Quantity(2, DimExp((1, 0))), Quantity(3, DimExp((0, 1)))))
    q1 = Quantity(coeff, DimExp(first))
    q2 = Quantity(coeff * 5, DimExp(second))
    mu1, exps1 = expand(q1, basis)
    mu2, _ = expand(q2, basis)
    assert exps1 == first
    assert reconstruct(mu1, exps1, basis) == q1
    assert expand(q1 * q2, basis)[0] == mu1 * mu2
