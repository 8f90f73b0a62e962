# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
"""Text and structured rendering of analysis reports."""

from __future__ import annotations

import json
import logging
from typing import Any, Sequence

from piforge.const import FORMAT_STRUCTURED, FORMAT_TEXT, MODE_UNBALANCED
from piforge.engine import (
    AnalysisReport,
    ClosedForm,
    Equation,
    EquationSystem,
    Prebasis,
    format_monomial,
)
from piforge.matroid import IncidenceTable, PiMonomial, basis_label, pseudocircuit_label
from piforge.report.problemfile import format_dimension, format_problem

_LOGGER = logging.getLogger(__name__)

INDENT = "  "


def format_pi(pi: PiMonomial, names: Sequence[str]) -> str:
    """Pi-monomial with its lead variable first, then declaration order"""
    return format_monomial((names[i], exp) for i, exp in pi.items()) or "1"


def format_set(indices: Sequence[int], names: Sequence[str]) -> str:
    """``{a, b}`` in declaration order"""
    return "{" + ", ".join(names[i] for i in indices) + "}"


def format_equation(eq: Equation, names: Sequence[str]) -> str:
    """``lhs = basis * Psi(args)`` in declaration order"""
    lhs = format_monomial([(names[eq.dependent], eq.lhs_exponent)])
    call = f"{eq.psi_name}({', '.join(format_pi(arg, names) for arg in eq.args)})"
    basis = format_monomial((names[j], exp) for j, exp in eq.rhs_basis_monomial)
    if basis:
        return f"{lhs} = {basis} * {call}"
    return f"{lhs} = {call}"


def _equation_line(eq: Equation, system: EquationSystem) -> str:
    names = system.names
    if not eq.solvable:
        k0 = eq.lhs_exponent // system.kappa
        return (
            f"{eq.psi_name}: prebasis {format_set(eq.basis, names)} is unsolvable "
            f"at kappa {system.kappa} (k0 = {k0})"
        )
    line = format_equation(eq, names)
    if eq.merged_bases:
        merged = ", ".join(format_set(b, names) for b in eq.merged_bases)
        line += f"  [merged: {merged}]"
    return line


def _prebasis_lines(pb: Prebasis, kappa: int, names: Sequence[str], dependent: str) -> list[str]:
    def exps(k: int, kj: Sequence[int]) -> str:
        inner = ", ".join(f"{names[j]} {x}" for j, x in zip(pb.members, kj))
        return f"k={k} ({inner})"

    lifted = pb.lift(kappa)
    lines = [format_set(pb.members, names) + (" local basis" if pb.is_local_basis(kappa) else "")]
    lines.append(f"{INDENT}{dependent}: {exps(lifted.k, lifted.kj)}")
    for index, other in pb.others:
        lines.append(f"{INDENT}{names[index]}: {exps(other.k, other.kj)}")
    return lines


def format_table(table: IncidenceTable) -> list[str]:
    """Incidence table, one row per variable"""
    labels = table.basis_labels + table.pseudocircuit_labels
    width = max([len(label) for label in labels] + [1])
    name_width = max([len(name) for name in table.variables] + [1])
    lines = [" " * name_width + " " + " ".join(label.ljust(width) for label in labels)]
    for name, marks in table.rows():
        cells = " ".join(mark.ljust(width) for mark in marks)
        lines.append(f"{name.ljust(name_width)} {cells}")
    return [line.rstrip() for line in lines]


def _render_closed_form(form: ClosedForm) -> str:
    return f"{form.statement}  [{form.template_used}]"


def render_text(report: AnalysisReport) -> str:
    """Human readable report with sections in a fixed order"""
    analyzed = report.analyzed
    names = analyzed.names
    out = ["problem:"]
    out += [INDENT + line for line in format_problem(report.problem).splitlines()]
    out.append("")

    out.append("summary:")
    out.append(f"{INDENT}mode: {analyzed.mode}")
    out.append(f"{INDENT}variables: {', '.join(names)}")
    out.append(f"{INDENT}rank: {report.rank}")
    if analyzed.dependent is not None:
        out.append(f"{INDENT}dependent: {analyzed.dependent}")
    if report.kappa is not None:
        out.append(f"{INDENT}kappa: {report.kappa}")
    if report.canonical_kappa is not None:
        out.append(f"{INDENT}canonical kappa: {report.canonical_kappa}")
    out.append(f"{INDENT}status: {report.status}")
    out.append("")

    if analyzed.mode == MODE_UNBALANCED:
        out.append("prebases:")
        for pb in report.prebases:
            lines = _prebasis_lines(pb, report.kappa or 1, names, analyzed.dependent)
            out += [INDENT + line for line in lines]
        if not report.prebases:
            out.append(f"{INDENT}none")
        out.append("")

    for system in report.systems:
        state = "complete" if system.complete else "incomplete"
        out.append(f"equations for {system.dependent} (kappa {system.kappa}, {state}):")
        out += [INDENT + _equation_line(eq, system) for eq in system.equations]
        out.append("")

    if report.assumptions:
        out.append("assumptions:")
        out += [INDENT + line for line in report.assumptions]
        out.append("")

    if report.closed_forms:
        out.append("closed forms:")
        out += [INDENT + _render_closed_form(form) for form in report.closed_forms]
        out.append("")

    summary = report.matroid
    out.append("matroid:")
    out.append(f"{INDENT}bases:")
    for position, basis in enumerate(summary.bases):
        out.append(f"{INDENT * 2}{basis_label(position)} {format_set(basis, names)}")
    out.append(f"{INDENT}circuits:")
    out += [f"{INDENT * 2}{format_set(c, names)}" for c in summary.circuits]
    out.append(f"{INDENT}pseudocircuits:")
    for position, (pc, pi) in enumerate(zip(summary.pseudocircuits, summary.pi_monomials)):
        out.append(
            f"{INDENT * 2}{pseudocircuit_label(position)} {format_set(pc, names)}: "
            f"{format_pi(pi, names)}"
        )
    out.append(f"{INDENT}pi-monomial classes:")
    for pi, positions in summary.pi_classes:
        labels = ", ".join(pseudocircuit_label(i) for i in positions)
        out.append(f"{INDENT * 2}{format_pi(pi, names)}: {labels}")
    out.append(f"{INDENT}basis pi groups:")
    for position, (_, group) in enumerate(summary.basis_groups):
        args = ", ".join(format_pi(pi, names) for pi in group)
        out.append(f"{INDENT * 2}{basis_label(position)}: F({args}) = 0")

    if summary.table is not None:
        out.append("")
        out.append("incidence table:")
        out += [INDENT + line for line in format_table(summary.table)]
    return "\n".join(out) + "\n"


def _equation_dict(eq: Equation, names: Sequence[str]) -> dict[str, Any]:
    return {
        "psi": eq.psi_name,
        "text": format_equation(eq, names),
        "solvable": eq.solvable,
        "dependent": names[eq.dependent],
        "lhs": list(eq.lhs.exponents),
        "basis": [names[j] for j in eq.basis],
        "basis_monomial": [[names[j], exp] for j, exp in eq.rhs_basis_monomial],
        "args": [list(arg.exponents) for arg in eq.args],
        "assumptions": list(eq.assumptions),
        "merged_bases": [[names[j] for j in b] for b in eq.merged_bases],
    }


def report_to_dict(report: AnalysisReport) -> dict[str, Any]:
    """Structured report with a fixed key order and exact integers only"""
    p = report.problem
    analyzed = report.analyzed
    names = analyzed.names
    summary = report.matroid

    prebases = []
    for pb in report.prebases:
        lifted = pb.lift(report.kappa or 1)
        prebases.append(
            {
                "members": [names[j] for j in pb.members],
                "local_basis": pb.is_local_basis(report.kappa or 1),
                "dependent": {"k": lifted.k, "kj": list(lifted.kj)},
                "others": [
                    {"variable": names[i], "k": e.k, "kj": list(e.kj)} for i, e in pb.others
                ],
            }
        )

    table = None
    if summary.table is not None:
        table = {
            "columns": list(summary.table.basis_labels + summary.table.pseudocircuit_labels),
            "rows": [{"variable": name, "marks": marks} for name, marks in summary.table.rows()],
        }

    return {
        "problem": {
            "text": format_problem(p),
            "base_dimensions": list(p.base_dims),
            "variables": [
                {"name": v.name, "dimension": list(v.dim.exponents)} for v in p.variables
            ],
            "dependent": p.dependent,
            "kappa": p.kappa,
            "mode": p.mode,
            "symmetries": [list(pair) for pair in p.symmetries],
            "substitutions": [
                {"name": s.name, "factors": [list(f) for f in s.factors]}
                for s in p.substitutions
            ],
        },
        "variables": [
            {
                "name": v.name,
                "dimension": format_dimension(v.dim, analyzed.base_dims),
                "definition": [list(f) for f in v.definition],
            }
            for v in analyzed.variables
        ],
        "status": report.status,
        "rank": report.rank,
        "kappa": report.kappa,
        "canonical_kappa": report.canonical_kappa,
        "prebases": prebases,
        "systems": [
            {
                "dependent": s.dependent,
                "kappa": s.kappa,
                "complete": s.complete,
                "equations": [_equation_dict(eq, names) for eq in s.equations],
            }
            for s in report.systems
        ],
        "assumptions": list(report.assumptions),
        "closed_forms": [
            {
                "statement": f.statement,
                "template": f.template_used,
                "lhs": list(f.lhs),
                "prefactor": [list(x) for x in f.prefactor],
                "terms": list(f.terms),
                "power": f.power,
            }
            for f in report.closed_forms
        ],
        "matroid": {
            "rank": summary.rank,
            "bases": [
                {"label": basis_label(i), "members": [names[j] for j in b]}
                for i, b in enumerate(summary.bases)
            ],
            "circuits": [[names[j] for j in c] for c in summary.circuits],
            "pseudocircuits": [
                {
                    "label": pseudocircuit_label(i),
                    "members": [names[j] for j in pc],
                    "pi_monomial": list(pi.exponents),
                    "text": format_pi(pi, names),
                }
                for i, (pc, pi) in enumerate(zip(summary.pseudocircuits, summary.pi_monomials))
            ],
            "pi_classes": [
                {
                    "pi_monomial": list(pi.exponents),
                    "pseudocircuits": [pseudocircuit_label(i) for i in positions],
                }
                for pi, positions in summary.pi_classes
            ],
            "basis_groups": [
                {
                    "label": basis_label(i),
                    "pi_monomials": [list(pi.exponents) for pi in group],
                }
                for i, (_, group) in enumerate(summary.basis_groups)
            ],
            "table": table,
        },
    }


def render_structured(report: AnalysisReport) -> str:
    """JSON document of :func:`report_to_dict`"""
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def render_report(report: AnalysisReport, fmt: str = FORMAT_TEXT) -> str:
    """Render in ``text`` or ``structured`` format"""
    if fmt == FORMAT_TEXT:
        return render_text(report)
    if fmt == FORMAT_STRUCTURED:
        return render_structured(report)
    raise ValueError(f"unknown report format {fmt}")
