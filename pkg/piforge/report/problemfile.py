# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
"""Line oriented problem files.

One directive per line, ``#`` starts a comment::

    dimensions L T M
    quantity t T
    quantity g L T^-2
    dependent t
    kappa auto
    symmetric M m
    substitute Ep = eps E^2
    mode balanced
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from piforge.const import (
    DEFAULT_MODE,
    INT64_MAX,
    KAPPA_AUTO,
    MAX_VARIABLES,
    MODE_UNBALANCED,
    MODES_ALL,
)
from piforge.engine import (
    Problem,
    Substitution,
    Variable,
    format_monomial,
)
from piforge.errors import PiforgeError
from piforge.qspace import DimExp
from piforge.zlinalg import ExponentOverflowError

_LOGGER = logging.getLogger(__name__)

_TOKEN = re.compile(r"[^\s=]+|=")

DIRECTIVES = (
    "dimensions",
    "quantity",
    "dependent",
    "kappa",
    "symmetric",
    "substitute",
    "mode",
)


class ProblemSyntaxError(PiforgeError):
    """Raised for any problem file that does not describe a valid problem"""

    def __init__(
        self, message: str, line: int, column: int, filename: str = "<problem>"
    ) -> None:
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.filename = filename

    def __str__(self) -> str:
        return f"{self.filename}:{self.line}:{self.column}: {self.message}"


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    column: int


class _Parser:
    def __init__(self, filename: str) -> None:
        self.filename = filename
        self.header: _Token | None = None
        self.mode_token: _Token | None = None
        self.base_dims: list[str] | None = None
        self.variables: dict[str, tuple[Variable, _Token]] = {}
        self.dependent: _Token | None = None
        self.kappa: int | None = None
        self.mode: str | None = None
        self.symmetries: list[tuple[_Token, _Token]] = []
        self.substitutions: list[tuple[Substitution, _Token]] = []
        self.seen: set[str] = set()

    def error(self, message: str, token: _Token) -> ProblemSyntaxError:
        return ProblemSyntaxError(message, token.line, token.column, self.filename)

    def parse_line(self, tokens: list[_Token]) -> None:
        head, args = tokens[0], tokens[1:]
        if head.text not in DIRECTIVES:
            raise self.error(f"unknown directive {head.text!r}", head)
        if self.base_dims is None and head.text != "dimensions":
            raise self.error("the first directive must be 'dimensions'", head)
        if head.text in ("dimensions", "dependent", "kappa", "mode") and head.text in self.seen:
            raise self.error(f"'{head.text}' may only appear once", head)
        self.seen.add(head.text)
        getattr(self, f"_parse_{head.text}")(head, args)

    def _parse_dimensions(self, head: _Token, args: list[_Token]) -> None:
        names: list[str] = []
        for token in args:
            self._check_name(token)
            if token.text in names:
                raise self.error(f"duplicate base dimension {token.text}", token)
            names.append(token.text)
        self.header = head
        self.base_dims = names

    def _parse_quantity(self, head: _Token, args: list[_Token]) -> None:
        if len(args) < 2:
            raise self.error("expected 'quantity <name> <dimension>'", head)
        name = args[0]
        self._check_name(name)
        if name.text in self.variables:
            raise self.error(f"duplicate variable {name.text}", name)
        if len(self.variables) == MAX_VARIABLES:
            raise self.error(f"at most {MAX_VARIABLES} variables are supported", name)
        self.variables[name.text] = (Variable(name.text, self._dim_expr(args[1:])), name)

    def _parse_dependent(self, head: _Token, args: list[_Token]) -> None:
        if len(args) != 1:
            raise self.error("expected 'dependent <name>'", head)
        self.dependent = args[0]

    def _parse_kappa(self, head: _Token, args: list[_Token]) -> None:
        if len(args) != 1:
            raise self.error("expected 'kappa auto' or 'kappa <positive integer>'", head)
        if args[0].text == KAPPA_AUTO:
            self.kappa = None
            return
        value = self._integer(args[0])
        if value <= 0:
            raise self.error("kappa must be a positive integer", args[0])
        if value > INT64_MAX:
            raise self.error(f"kappa {value} overflows 64 bits", args[0])
        self.kappa = value

    def _parse_symmetric(self, head: _Token, args: list[_Token]) -> None:
        if len(args) != 2:
            raise self.error("expected 'symmetric <name> <name>'", head)
        self.symmetries.append((args[0], args[1]))

    def _parse_substitute(self, head: _Token, args: list[_Token]) -> None:
        if len(args) < 3 or args[1].text != "=":
            raise self.error("expected 'substitute <name> = <monomial>'", head)
        name = args[0]
        self._check_name(name)
        factors = []
        for token in args[2:]:
            base, exp = self._factor(token)
            if base not in self.variables:
                raise self.error(f"unknown variable {base}", token)
            if exp == 0:
                raise self.error("substitution exponents must not be zero", token)
            factors.append((base, exp))
        self.substitutions.append((Substitution(name.text, tuple(factors)), name))

    def _parse_mode(self, head: _Token, args: list[_Token]) -> None:
        if len(args) != 1 or args[0].text not in MODES_ALL:
            raise self.error(f"expected 'mode {'|'.join(MODES_ALL)}'", head)
        self.mode = args[0].text
        self.mode_token = args[0]

    def _check_name(self, token: _Token) -> None:
        if token.text == "=" or "^" in token.text:
            raise self.error(f"invalid name {token.text!r}", token)

    def _integer(self, token: _Token, text: str | None = None) -> int:
        try:
            return int(text if text is not None else token.text)
        except ValueError as error:
            raise self.error(f"expected an integer, got {token.text!r}", token) from error

    def _factor(self, token: _Token) -> tuple[str, int]:
        base, sep, exp = token.text.partition("^")
        if not base or (sep and not exp):
            raise self.error(f"malformed factor {token.text!r}", token)
        return base, self._integer(token, exp) if sep else 1

    def _dim_expr(self, tokens: list[_Token]) -> DimExp:
        assert self.base_dims is not None
        exps = [0] * len(self.base_dims)
        if len(tokens) == 1 and tokens[0].text == "1":
            return DimExp(tuple(exps))
        for token in tokens:
            base, exp = self._factor(token)
            if base not in self.base_dims:
                raise self.error(f"unknown base dimension {base}", token)
            exps[self.base_dims.index(base)] += exp
        try:
            return DimExp(tuple(exps))
        except ExponentOverflowError as error:
            raise self.error(str(error), tokens[0]) from error

    def _monomial_dim(self, factors: tuple[tuple[str, int], ...]) -> tuple[int, ...]:
        exps = [0] * len(self.base_dims or ())
        for name, exp in factors:
            var, _ = self.variables[name]
            exps = [x + exp * y for x, y in zip(exps, var.dim.exponents)]
        return tuple(exps)

    def finish(self) -> Problem:
        if self.base_dims is None:
            raise ProblemSyntaxError("missing 'dimensions' directive", 1, 1, self.filename)
        dims = {name: var.dim.exponents for name, (var, _) in self.variables.items()}
        if self.dependent is not None and self.dependent.text not in dims:
            raise self.error(f"unknown variable {self.dependent.text}", self.dependent)

        composites: dict[str, tuple[int, ...]] = {}
        for sub, token in self.substitutions:
            if sub.name in composites or (sub.name in dims and sub.name not in sub.constituents):
                raise self.error(f"name {sub.name} is already in use", token)
            try:
                composites[sub.name] = DimExp(self._monomial_dim(sub.factors)).exponents
            except ExponentOverflowError as error:
                raise self.error(str(error), token) from error

        for u, v in self.symmetries:
            for token in (u, v):
                if token.text not in dims and token.text not in composites:
                    raise self.error(f"unknown variable {token.text}", token)
            if u.text == v.text:
                raise self.error(f"symmetric pair names {u.text} twice", v)
            if {**dims, **composites}[u.text] != {**dims, **composites}[v.text]:
                raise self.error(
                    f"symmetric variables {u.text} and {v.text} have different dimensions", u
                )

        mode = self.mode or DEFAULT_MODE
        if mode == MODE_UNBALANCED and self.dependent is None:
            raise self.error(
                "unbalanced mode needs a dependent variable", self.mode_token or self.header
            )
        return Problem(
            base_dims=tuple(self.base_dims),
            variables=tuple(var for var, _ in self.variables.values()),
            dependent=self.dependent.text if self.dependent else None,
            kappa=self.kappa,
            symmetries=tuple((u.text, v.text) for u, v in self.symmetries),
            substitutions=tuple(sub for sub, _ in self.substitutions),
            mode=mode,
        )


def tokenize(line: str, lineno: int) -> list[_Token]:
    """Split a line into tokens with 1-based columns, dropping comments"""
    text = line.split("#", 1)[0]
    return [_Token(m.group(), lineno, m.start() + 1) for m in _TOKEN.finditer(text)]


def parse_problem(
    text: str,
    filename: str = "<problem>",
    *,
    mode: str | None = None,
    kappa: int | str | None = None,
) -> Problem:
    """Parse problem file text.

    ``mode`` and ``kappa`` override the file's directives when given;
    ``kappa`` accepts ``"auto"``.

    Raises:
        ProblemSyntaxError: with the line and column of the offending token
        ProblemError: an override is not a valid mode or kappa
    """
    parser = _Parser(filename)
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = tokenize(line, lineno)
        if tokens:
            parser.parse_line(tokens)
    if mode is not None:
        parser.mode = mode
        parser.mode_token = None
    if kappa is not None:
        parser.kappa = None if kappa == KAPPA_AUTO else kappa
    problem = parser.finish()
    _LOGGER.debug("Parsed %s: %d variables", filename, len(problem.variables))
    return problem


def read_problem(path: str) -> str:
    """Text of a UTF-8 problem file.

    Raises:
        ProblemSyntaxError: at the first byte that is not valid UTF-8
        OSError: the file cannot be read
    """
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as error:
        line_start = data.rfind(b"\n", 0, error.start) + 1
        raise ProblemSyntaxError(
            f"invalid UTF-8 byte 0x{data[error.start]:02x}",
            data.count(b"\n", 0, error.start) + 1,
            error.start - line_start + 1,
            path,
        ) from error


def format_dimension(dim: DimExp, base_dims: tuple[str, ...]) -> str:
    """Dimension expression as written in problem files"""
    return format_monomial(zip(base_dims, dim.exponents)) or "1"


def format_problem(p: Problem) -> str:
    """Problem file text that parses back to ``p``"""
    lines = [" ".join(("dimensions",) + p.base_dims)]
    for var in p.variables:
        lines.append(f"quantity {var.name} {format_dimension(var.dim, p.base_dims)}")
    if p.dependent is not None:
        lines.append(f"dependent {p.dependent}")
    lines.append(f"kappa {p.kappa if p.kappa is not None else KAPPA_AUTO}")
    lines.append(f"mode {p.mode}")
    for u, v in p.symmetries:
        lines.append(f"symmetric {u} {v}")
    for sub in p.substitutions:
        factors = " ".join(name if exp == 1 else f"{name}^{exp}" for name, exp in sub.factors)
        lines.append(f"substitute {sub.name} = {factors}")
    return "\n".join(lines) + "\n"
