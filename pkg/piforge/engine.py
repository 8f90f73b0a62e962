# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
"""Analysis pipelines.

Unbalanced analysis fixes a dependent variable and derives one equation per
prebasis. Balanced analysis derives, for every variable, one equation per
matroid basis not containing it. Declared symmetries collapse a pair of
swap-image equations into a closed form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from piforge.const import (
    CONSTANT,
    INT64_MAX,
    MAX_VARIABLES,
    MODE_BALANCED,
    MODE_UNBALANCED,
    MODES_ALL,
    PSI,
    STATUS_KAPPA_INSUFFICIENT,
    STATUS_NOT_PRECOMPLETE,
    STATUS_OK,
    TEMPLATE_INVERSE_SUM,
    TEMPLATE_SUM,
)
from piforge.errors import PiforgeError
from piforge.matroid import (
    ColumnMatroid,
    IncidenceTable,
    PiMonomial,
    basis_pi_groups,
    bases,
    circuits,
    incidence_table,
    pi_monomial,
    pi_monomial_classes,
    pseudocircuits,
)
from piforge.qspace import DimExp, dim_mul, dim_pow, dims_matrix
from piforge.zlinalg import CanonicalExponents, IntMatrix, canonical_solve, rank

_LOGGER = logging.getLogger(__name__)

__all__ = [
    "AnalysisReport",
    "ClosedForm",
    "DanglingVariableError",
    "Equation",
    "EquationSystem",
    "KappaInsufficientError",
    "MatroidSummary",
    "NoSymmetricPairError",
    "NotPrecompleteError",
    "OverlappingSubstitutionError",
    "Prebasis",
    "Problem",
    "ProblemError",
    "Substitution",
    "UnsupportedExponentError",
    "Variable",
    "analyze_balanced",
    "analyze_unbalanced",
    "apply_symmetry",
    "build_analysis",
    "canonical_kappa",
    "column_matroid",
    "dimensional_matrix",
    "prebases",
    "substitute",
]

Factors = tuple[tuple[str, int], ...]
NamePair = tuple[str, str]


class ProblemError(PiforgeError):
    """Raised when a problem declaration is inconsistent"""


class NotPrecompleteError(PiforgeError):
    """Raised when the dependent variable has no prebasis"""


class KappaInsufficientError(PiforgeError):
    """Raised when a fixed kappa leaves every prebasis unsolvable"""

    def __init__(self, message: str, system: EquationSystem) -> None:
        super().__init__(message)
        self.system = system


class OverlappingSubstitutionError(PiforgeError):
    """Raised when a variable is claimed by two substitutions or a symmetry"""


class DanglingVariableError(PiforgeError):
    """Raised when a substituted variable is still referenced elsewhere"""


class NoSymmetricPairError(PiforgeError):
    """Raised when no two equations are images of each other under a swap"""


class UnsupportedExponentError(PiforgeError):
    """Raised when a symmetry needs a template other than s=+1 or s=-1"""


def format_monomial(items: Iterable[tuple[str, int]]) -> str:
    """``name^exp`` factors separated by spaces; exponent 1 and 0 are elided"""
    parts = []
    for name, exp in items:
        if exp == 0:
            continue
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts)


@dataclass(frozen=True)
class Variable:
    """A named quantity variable.

    ``definition`` is set on composites created by :func:`substitute` and
    lists the original factors in the order they were written.
    """

    name: str
    dim: DimExp
    definition: Factors = ()


@dataclass(frozen=True)
class Substitution:
    """Declaration ``name = prod(factor ** exp)``"""

    name: str
    factors: Factors

    @property
    def constituents(self) -> tuple[str, ...]:
        """Names of the replaced variables"""
        return tuple(name for name, _ in self.factors)


@dataclass(frozen=True)
class Problem:
    """A quantity function to analyse.

    ``kappa`` of ``None`` selects the canonical kappa.
    """

    base_dims: tuple[str, ...]
    variables: tuple[Variable, ...]
    dependent: str | None = None
    kappa: int | None = None
    symmetries: tuple[NamePair, ...] = ()
    substitutions: tuple[Substitution, ...] = ()
    mode: str = MODE_UNBALANCED

    def __post_init__(self) -> None:
        if len(set(self.base_dims)) != len(self.base_dims):
            raise ProblemError("duplicate base dimension")
        names = self.names
        if len(set(names)) != len(names):
            raise ProblemError("duplicate variable name")
        if len(names) > MAX_VARIABLES:
            raise ProblemError(f"at most {MAX_VARIABLES} variables are supported")
        for var in self.variables:
            if len(var.dim) != len(self.base_dims):
                raise ProblemError(f"variable {var.name} has the wrong dimension length")
        if self.mode not in MODES_ALL:
            raise ProblemError(f"unknown mode {self.mode}")
        if self.dependent is not None and self.dependent not in names:
            raise ProblemError(f"unknown dependent variable {self.dependent}")
        if self.mode == MODE_UNBALANCED and self.dependent is None:
            raise ProblemError("unbalanced mode needs a dependent variable")
        if self.kappa is not None and (
            isinstance(self.kappa, bool) or not isinstance(self.kappa, int) or self.kappa <= 0
        ):
            raise ProblemError("kappa must be a positive integer")
        if self.kappa is not None and self.kappa > INT64_MAX:
            raise ProblemError(f"kappa {self.kappa} overflows 64 bits")

        composites: dict[str, DimExp] = {}
        for sub in self.substitutions:
            for name, exp in sub.factors:
                if name not in names:
                    raise ProblemError(f"substitution {sub.name} uses unknown variable {name}")
                if exp == 0:
                    raise ProblemError(f"substitution {sub.name} has a zero exponent")
            if sub.name in composites or (
                sub.name in names and sub.name not in sub.constituents
            ):
                raise ProblemError(f"substitution name {sub.name} is already in use")
            composites[sub.name] = self.monomial_dim(sub.factors)

        for u, v in self.symmetries:
            dims = []
            for name in (u, v):
                if name in composites:
                    dims.append(composites[name])
                elif name in names:
                    dims.append(self.variable(name).dim)
                else:
                    raise ProblemError(f"symmetric pair names unknown variable {name}")
            if u == v:
                raise ProblemError(f"symmetric pair {u} {v} names one variable twice")
            if dims[0] != dims[1]:
                raise ProblemError(f"symmetric variables {u} and {v} have different dimensions")

    @property
    def names(self) -> tuple[str, ...]:
        """Variable names in declaration order"""
        return tuple(var.name for var in self.variables)

    def index(self, name: str) -> int:
        """Declaration index of a variable"""
        try:
            return self.names.index(name)
        except ValueError as error:
            raise ProblemError(f"unknown variable {name}") from error

    def variable(self, name: str) -> Variable:
        """Variable by name"""
        return self.variables[self.index(name)]

    def monomial_dim(self, factors: Factors) -> DimExp:
        """Dimension of a monomial over the declared variables.

        Only the resulting exponents have to fit 64 bits.
        """
        exps = [0] * len(self.base_dims)
        for name, exp in factors:
            exps = [x + exp * y for x, y in zip(exps, self.variable(name).dim.exponents)]
        return DimExp(tuple(exps))


def dimensional_matrix(p: Problem) -> IntMatrix:
    """One column per variable, one row per base dimension"""
    return dims_matrix([var.dim for var in p.variables], size=len(p.base_dims))


def column_matroid(p: Problem) -> ColumnMatroid:
    """Column matroid over every variable of ``p``"""
    return ColumnMatroid(dimensional_matrix(p), p.names)


@dataclass(frozen=True)
class Prebasis:
    """Maximal independent set of independent variables.

    Exponents are stored at kappa 1; :meth:`lift` rescales the dependent's.
    """

    members: tuple[int, ...]
    dependent: CanonicalExponents
    others: tuple[tuple[int, CanonicalExponents], ...]

    def lift(self, kappa: int) -> CanonicalExponents:
        """Canonical exponents of the dependent variable raised to ``kappa``"""
        k0 = self.dependent.k
        common = gcd(k0, kappa)
        scale = kappa // common
        return CanonicalExponents(k0 // common, tuple(scale * x for x in self.dependent.kj))

    def solvable(self, kappa: int) -> bool:
        """True when the dependent needs no extra power at ``kappa``"""
        return self.lift(kappa).k == 1

    def is_local_basis(self, kappa: int) -> bool:
        """True when every canonical exponent k is 1 at ``kappa``"""
        return self.solvable(kappa) and all(exps.k == 1 for _, exps in self.others)


@dataclass(frozen=True)
class Equation:
    """``lhs = rhs_basis_monomial * psi_name(args...)``.

    ``lhs`` is the pi-monomial containing the dependent variable; the basis
    monomial is the negation of its basis part.
    """

    lhs: PiMonomial
    basis: tuple[int, ...]
    rhs_basis_monomial: tuple[tuple[int, int], ...]
    psi_name: str
    args: tuple[PiMonomial, ...]
    solvable: bool = True
    assumptions: tuple[str, ...] = ()
    merged_bases: tuple[tuple[int, ...], ...] = ()

    @property
    def dependent(self) -> int:
        """Index of the variable on the left hand side"""
        return self.lhs.lead

    @property
    def lhs_exponent(self) -> int:
        """Exponent of the dependent variable"""
        return self.lhs.exponent(self.lhs.lead)

    def dedup_key(self) -> tuple:
        """Normalized exponent vectors used to detect literal duplicates"""
        return self.lhs.exponents, tuple(sorted(arg.exponents for arg in self.args))


@dataclass(frozen=True)
class EquationSystem:
    """Equations sharing one dependent variable"""

    dependent: str
    kappa: int
    equations: tuple[Equation, ...]
    variables: tuple[Variable, ...]
    complete: bool = False

    @property
    def names(self) -> tuple[str, ...]:
        """Variable names the equation indices refer to"""
        return tuple(var.name for var in self.variables)


@dataclass(frozen=True)
class ClosedForm:
    """``lhs = k * prefactor * (u + v) ** power``"""

    lhs: tuple[str, int]
    prefactor: Factors
    terms: tuple[str, str]
    power: int
    template_used: str
    statement: str


@dataclass(frozen=True)
class MatroidSummary:
    """Bases, circuits and pseudocircuits of the analysed problem"""

    rank: int
    bases: tuple[tuple[int, ...], ...]
    circuits: tuple[tuple[int, ...], ...]
    pseudocircuits: tuple[tuple[int, ...], ...]
    pi_monomials: tuple[PiMonomial, ...]
    pi_classes: tuple[tuple[PiMonomial, tuple[int, ...]], ...]
    basis_groups: tuple[tuple[tuple[int, ...], tuple[PiMonomial, ...]], ...]
    table: IncidenceTable | None = None


@dataclass(frozen=True)
class AnalysisReport:
    """Everything one analysis run produced.

    ``problem`` is the problem as declared, ``analyzed`` the problem the
    pipelines ran on (after substitution).
    """

    problem: Problem
    analyzed: Problem
    status: str
    rank: int
    kappa: int | None
    canonical_kappa: int | None
    prebases: tuple[Prebasis, ...]
    systems: tuple[EquationSystem, ...]
    matroid: MatroidSummary
    closed_forms: tuple[ClosedForm, ...] = ()
    assumptions: tuple[str, ...] = field(default=())


def _bijection(name: str, exp: int) -> str:
    return f"{name} -> {name}^{exp} must be a bijection on the domain"


def _require_dependent(p: Problem) -> int:
    if p.dependent is None:
        raise ProblemError("no dependent variable declared")
    return p.index(p.dependent)


def prebases(p: Problem) -> list[Prebasis]:
    """All prebases of the dependent variable in lexicographic order.

    An empty list means the quantity function is not precomplete.
    """
    dep = _require_dependent(p)
    matrix = dimensional_matrix(p)
    full_rank = rank(matrix)
    independents = [i for i in range(len(p.variables)) if i != dep]

    found = []
    for members in combinations(independents, full_rank):
        if members and rank(matrix.columns(members)) != full_rank:
            continue
        cols = [matrix.column(j) for j in members]
        dependent = canonical_solve(matrix.column(dep), cols)
        others = tuple(
            (i, canonical_solve(matrix.column(i), cols))
            for i in independents
            if i not in members
        )
        found.append(Prebasis(members, dependent, others))
    _LOGGER.debug("Found %d prebases of rank %d for %s", len(found), full_rank, p.dependent)
    return found


def canonical_kappa(p: Problem) -> int:
    """Smallest kappa for which every prebasis is solvable"""
    found = prebases(p)
    if not found:
        raise NotPrecompleteError(f"{p.dependent} has no prebasis")
    return lcm(*(pb.dependent.k for pb in found))


def _unbalanced_equation(
    p: Problem, dep: int, position: int, pb: Prebasis, kappa: int
) -> Equation:
    names = p.names
    lifted = pb.lift(kappa)
    lhs = [0] * len(names)
    lhs[dep] = kappa * lifted.k
    for member, exp in zip(pb.members, lifted.kj):
        lhs[member] = -exp

    args = []
    assumptions = []
    if lhs[dep] > 1:
        assumptions.append(_bijection(names[dep], lhs[dep]))
    for index, exps in pb.others:
        vec = [0] * len(names)
        vec[index] = exps.k
        for member, exp in zip(pb.members, exps.kj):
            vec[member] = -exp
        args.append(PiMonomial(tuple(vec), index))
        if exps.k > 1:
            assumptions.append(_bijection(names[index], exps.k))

    solvable = lifted.k == 1
    if not solvable:
        _LOGGER.warning(
            "Prebasis {%s} is unsolvable at kappa %d (k0 = %d)",
            ", ".join(names[i] for i in pb.members),
            kappa,
            lifted.k,
        )
    return Equation(
        lhs=PiMonomial(tuple(lhs), dep),
        basis=pb.members,
        rhs_basis_monomial=tuple(zip(pb.members, lifted.kj)),
        psi_name=f"{PSI}_{position}",
        args=tuple(args),
        solvable=solvable,
        assumptions=tuple(assumptions) if solvable else (),
    )


def analyze_unbalanced(p: Problem) -> EquationSystem:
    """One equation per prebasis of the dependent variable.

    Raises:
        NotPrecompleteError: there is no prebasis
        KappaInsufficientError: the fixed kappa leaves every prebasis unsolvable
    """
    dep = _require_dependent(p)
    found = prebases(p)
    if not found:
        raise NotPrecompleteError(f"{p.dependent} has no prebasis")

    best = lcm(*(pb.dependent.k for pb in found))
    kappa = p.kappa or best
    if kappa % best:
        _LOGGER.warning("Fixed kappa %d is not a multiple of the canonical kappa %d", kappa, best)

    equations = tuple(
        _unbalanced_equation(p, dep, position, pb, kappa)
        for position, pb in enumerate(found, start=1)
    )
    system = EquationSystem(
        dependent=p.names[dep],
        kappa=kappa,
        equations=equations,
        variables=p.variables,
        complete=any(pb.is_local_basis(kappa) for pb in found),
    )
    if not any(eq.solvable for eq in equations):
        raise KappaInsufficientError(
            f"kappa {kappa} leaves every prebasis of {p.dependent} unsolvable", system
        )
    return system


def _balanced_system(m: ColumnMatroid, variables: tuple[Variable, ...], v: int) -> EquationSystem:
    names = m.var_names
    kept: dict[tuple, Equation] = {}
    for basis in bases(m):
        if v in basis:
            continue
        lhs = pi_monomial(m, tuple(sorted(basis + (v,))), v)
        args = tuple(
            pi_monomial(m, tuple(sorted(basis + (w,))), w)
            for w in range(m.size)
            if w != v and w not in basis
        )
        assumptions = []
        if lhs.exponent(v) > 1:
            assumptions.append(_bijection(names[v], lhs.exponent(v)))
        for arg in args:
            if arg.exponent(arg.lead) > 1:
                assumptions.append(_bijection(names[arg.lead], arg.exponent(arg.lead)))
        equation = Equation(
            lhs=lhs,
            basis=basis,
            rhs_basis_monomial=tuple((j, -lhs.exponent(j)) for j in basis),
            psi_name="",
            args=args,
            assumptions=tuple(assumptions),
        )
        key = equation.dedup_key()
        if key in kept:
            first = kept[key]
            kept[key] = replace(first, merged_bases=first.merged_bases + (basis,))
            _LOGGER.debug("Merged duplicate equation for %s from basis %s", names[v], basis)
        else:
            kept[key] = equation

    equations = tuple(
        replace(eq, psi_name=f"{PSI}_{names[v]}_{position}")
        for position, eq in enumerate(kept.values(), start=1)
    )
    return EquationSystem(
        dependent=names[v],
        kappa=lcm(*(eq.lhs_exponent for eq in equations)) if equations else 1,
        equations=equations,
        variables=variables,
        # the lhs power is absorbed by the system kappa
        complete=any(
            all(arg.exponent(arg.lead) == 1 for arg in eq.args) for eq in equations
        ),
    )


def analyze_balanced(p: Problem) -> list[EquationSystem]:
    """One equation system per variable, over the bases not containing it"""
    m = column_matroid(p)
    systems = [_balanced_system(m, p.variables, v) for v in range(m.size)]
    _LOGGER.debug(
        "Balanced analysis: %s",
        ", ".join(f"{s.dependent}={len(s.equations)}" for s in systems),
    )
    return systems


def _swap(vec: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    out = list(vec)
    out[a], out[b] = out[b], out[a]
    return tuple(out)


def _term(var: Variable) -> str:
    if var.definition:
        return format_monomial(var.definition)
    return var.name


def apply_symmetry(sys: EquationSystem, pair: NamePair) -> ClosedForm:
    """Combine the two equations exchanged by swapping ``pair`` into a closed form.

    Raises:
        NoSymmetricPairError: no two equations map onto each other, or they
            do not have a single argument of the form ``v u^-1``
        UnsupportedExponentError: the functional equation is not one of the
            two supported templates
    """
    names = sys.names
    u_name, v_name = pair
    if u_name not in names or v_name not in names:
        raise NoSymmetricPairError(f"{u_name} and {v_name} are not both variables of the system")
    u, v = names.index(u_name), names.index(v_name)
    if sys.variables[u].dim != sys.variables[v].dim:
        raise ProblemError(f"symmetric variables {u_name} and {v_name} have different dimensions")

    def image(eq: Equation) -> tuple:
        swapped = tuple(sorted({u: v, v: u}.get(j, j) for j in eq.basis))
        return (
            _swap(eq.lhs.exponents, u, v),
            swapped,
            tuple(sorted(_swap(arg.exponents, u, v) for arg in eq.args)),
        )

    def signature(eq: Equation) -> tuple:
        return eq.lhs.exponents, eq.basis, tuple(sorted(arg.exponents for arg in eq.args))

    candidates = [eq for eq in sys.equations if eq.solvable and u in eq.basis and v not in eq.basis]
    for first in candidates:
        if not any(signature(other) == image(first) for other in sys.equations):
            continue
        if len(first.args) != 1:
            raise NoSymmetricPairError("symmetric equations must have a single argument")
        arg = first.args[0]
        expected = [0] * len(names)
        expected[v], expected[u] = 1, -1
        if arg.exponents != tuple(expected):
            raise NoSymmetricPairError(
                f"argument of {first.psi_name} is not {v_name} {u_name}^-1"
            )
        power = dict(first.rhs_basis_monomial)[u]
        if power not in (1, -1):
            raise UnsupportedExponentError(
                f"functional equation Psi(x) = x^{power} Psi(1/x) has no template"
            )
        return _closed_form(sys, first, u, v, power)
    raise NoSymmetricPairError(f"no equations of {sys.dependent} are exchanged by {u_name} <-> {v_name}")


def _closed_form(sys: EquationSystem, eq: Equation, u: int, v: int, power: int) -> ClosedForm:
    names = sys.names
    dep = eq.dependent
    prefactor = tuple(
        (names[j], exp) for j, exp in eq.rhs_basis_monomial if j != u and exp
    )
    terms = tuple(names[j] for j in sorted((u, v)))

    lhs_dim = dim_pow(sys.variables[dep].dim, eq.lhs_exponent)
    rhs_dim = dim_pow(sys.variables[u].dim, power)
    for j, exp in eq.rhs_basis_monomial:
        if j != u:
            rhs_dim = dim_mul(rhs_dim, dim_pow(sys.variables[j].dim, exp))
    if lhs_dim != rhs_dim:
        raise PiforgeError("closed form is not dimensionally homogeneous")

    lhs = format_monomial([(names[dep], eq.lhs_exponent)])
    summed = " + ".join(_term(sys.variables[names.index(t)]) for t in terms)
    tail = f"({summed})" if power == 1 else f"({summed})^{power}"
    if prefactor:
        statement = f"{lhs} = {CONSTANT} * {format_monomial(prefactor)} {tail}"
    else:
        statement = f"{lhs} = {CONSTANT} {tail}"
    _LOGGER.debug("Closed form: %s", statement)
    return ClosedForm(
        lhs=(names[dep], eq.lhs_exponent),
        prefactor=prefactor,
        terms=terms,
        power=power,
        template_used=TEMPLATE_SUM if power == 1 else TEMPLATE_INVERSE_SUM,
        statement=statement,
    )


def substitute(p: Problem, defs: Sequence[Substitution]) -> Problem:
    """Replace the constituents of each definition by one composite variable.

    The composite takes the position of its first declared constituent.

    Raises:
        OverlappingSubstitutionError: a variable is used by two definitions or
            by a symmetry declaration
        DanglingVariableError: the dependent variable is a constituent
    """
    owner: dict[str, Substitution] = {}
    for sub in defs:
        for name in sub.constituents:
            p.index(name)
            if name in owner and owner[name] is not sub:
                raise OverlappingSubstitutionError(
                    f"{name} is used by substitutions {owner[name].name} and {sub.name}"
                )
            owner[name] = sub
    for pair in p.symmetries:
        for name in pair:
            if name in owner:
                raise OverlappingSubstitutionError(
                    f"{name} is substituted by {owner[name].name} and declared symmetric"
                )
    if p.dependent in owner:
        raise DanglingVariableError(
            f"dependent variable {p.dependent} is substituted by {owner[p.dependent].name}"
        )

    variables = []
    placed = set()
    for var in p.variables:
        sub = owner.get(var.name)
        if sub is None:
            variables.append(var)
        elif sub.name not in placed:
            placed.add(sub.name)
            variables.append(Variable(sub.name, p.monomial_dim(sub.factors), sub.factors))
    _LOGGER.debug("Substituted %s", ", ".join(sub.name for sub in defs))
    return replace(p, variables=tuple(variables), substitutions=())


def _matroid_summary(p: Problem, table: bool) -> MatroidSummary:
    m = column_matroid(p)
    found_pcs = pseudocircuits(m)
    return MatroidSummary(
        rank=m.rank,
        bases=tuple(bases(m)),
        circuits=tuple(circuits(m)),
        pseudocircuits=tuple(found_pcs),
        pi_monomials=tuple(pi_monomial(m, pc, pc[0]) for pc in found_pcs),
        pi_classes=tuple((mono, tuple(pos)) for mono, pos in pi_monomial_classes(m)),
        basis_groups=tuple((basis, tuple(group)) for basis, group in basis_pi_groups(m)),
        table=incidence_table(m) if table else None,
    )


def build_analysis(
    p: Problem, *, table: bool = False, symmetry: bool = False, pairs: Sequence[NamePair] = ()
) -> AnalysisReport:
    """Run every pipeline the problem asks for.

    Not precomplete and insufficient kappa outcomes are recorded in the
    report status. With ``symmetry`` the declared pairs and ``pairs`` are
    applied to the equation systems.
    """
    analyzed = substitute(p, p.substitutions) if p.substitutions else p
    summary = _matroid_summary(analyzed, table)
    status = STATUS_OK
    found: list[Prebasis] = []
    systems: list[EquationSystem] = []
    kappa = best = None

    if analyzed.mode == MODE_BALANCED:
        systems = analyze_balanced(analyzed)
        if analyzed.dependent is not None:
            systems = [s for s in systems if s.dependent == analyzed.dependent]
    else:
        found = prebases(analyzed)
        try:
            systems = [analyze_unbalanced(analyzed)]
            best = canonical_kappa(analyzed)
            kappa = systems[0].kappa
        except NotPrecompleteError as error:
            _LOGGER.warning("%s", error)
            status = STATUS_NOT_PRECOMPLETE
        except KappaInsufficientError as error:
            _LOGGER.warning("%s", error)
            status = STATUS_KAPPA_INSUFFICIENT
            systems = [error.system]
            best = canonical_kappa(analyzed)
            kappa = error.system.kappa

    closed_forms: list[ClosedForm] = []
    if symmetry and status == STATUS_OK:
        pending = list(dict.fromkeys(tuple(analyzed.symmetries) + tuple(pairs)))
        for pair in pending:
            closed_forms.extend(_apply_pair(systems, pair))

    assumptions = tuple(
        dict.fromkeys(a for s in systems for eq in s.equations for a in eq.assumptions)
    )
    return AnalysisReport(
        problem=p,
        analyzed=analyzed,
        status=status,
        rank=summary.rank,
        kappa=kappa,
        canonical_kappa=best,
        prebases=tuple(found),
        systems=tuple(systems),
        matroid=summary,
        closed_forms=tuple(closed_forms),
        assumptions=assumptions,
    )


def _apply_pair(systems: Sequence[EquationSystem], pair: NamePair) -> list[ClosedForm]:
    if len(systems) == 1:
        return [apply_symmetry(systems[0], pair)]
    found = []
    for system in systems:
        try:
            found.append(apply_symmetry(system, pair))
        except NoSymmetricPairError:
            continue
    if not found:
        raise NoSymmetricPairError(f"no equation system is symmetric in {pair[0]} <-> {pair[1]}")
    return found
