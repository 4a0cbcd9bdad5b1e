"""Plain-text algebra format.

One directive per line, ``#`` starts a comment::

    semigroup 2
    product 0 0 0          # all k*k lines required
    basis u0:0 uu:1 ...    # ordered, name:degree
    bracket u0 v0 = -2*v0 + 1/2*t0

Omitted brackets are zero; antisymmetric completion is automatic and a pair
given twice (in either order) is rejected.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .algebra import GradedLieAlgebra
from .semigroup import FiniteSemigroup

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class AlgebraParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def _rational(tok: str, line: int) -> Fraction:
    if not _RATIONAL.match(tok):
        raise AlgebraParseError(line, f"bad rational coefficient {tok!r}")
    q = Fraction(tok)
    return q


def parse_algebra(text: str) -> GradedLieAlgebra:
    k = None
    products: dict[tuple[int, int], int] = {}
    names: list[str] = []
    degrees: list[int] = []
    brackets: dict[frozenset | tuple, tuple[int, int, int, list]] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        args = rest.split()
        if head == "semigroup":
            if k is not None:
                raise AlgebraParseError(lineno, "semigroup declared twice")
            if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                raise AlgebraParseError(lineno, "expected 'semigroup <k>' with k >= 1")
            k = int(args[0])
        elif head == "product":
            if k is None:
                raise AlgebraParseError(lineno, "product before semigroup")
            if len(args) != 3 or not all(a.isdigit() for a in args):
                raise AlgebraParseError(lineno, "expected 'product <i> <j> <ij>'")
            i, j, ij = map(int, args)
            if max(i, j, ij) >= k:
                raise AlgebraParseError(lineno, "semigroup element out of range")
            if (i, j) in products:
                raise AlgebraParseError(lineno, f"duplicate product {i} {j}")
            products[(i, j)] = ij
        elif head == "basis":
            if names:
                raise AlgebraParseError(lineno, "basis declared twice")
            if not args:
                raise AlgebraParseError(lineno, "empty basis")
            for tok in args:
                name, sep, deg = tok.partition(":")
                if not sep or not name or not deg.isdigit():
                    raise AlgebraParseError(lineno, f"bad basis entry {tok!r}")
                if name in names:
                    raise AlgebraParseError(lineno, f"duplicate basis name {name!r}")
                names.append(name)
                degrees.append(int(deg))
        elif head == "bracket":
            if not names:
                raise AlgebraParseError(lineno, "bracket before basis")
            lhs, eq, rhs = rest.partition("=")
            pair = lhs.split()
            if not eq or len(pair) != 2:
                raise AlgebraParseError(lineno, "expected 'bracket <a> <b> = ...'")
            for nm in pair:
                if nm not in names:
                    raise AlgebraParseError(lineno, f"unknown basis element {nm!r}")
            a, b = (names.index(nm) for nm in pair)
            key = frozenset((a, b)) if a != b else (a, a)
            if key in brackets:
                raise AlgebraParseError(lineno, f"duplicate bracket {pair[0]} {pair[1]}")
            terms = []
            for term in rhs.split("+"):
                term = term.strip()
                if not term:
                    raise AlgebraParseError(lineno, "empty term")
                if term == "0":
                    continue
                coef, star, nm = term.partition("*")
                if not star:
                    raise AlgebraParseError(lineno, f"term {term!r} must be '<q>*<name>'")
                nm = nm.strip()
                if nm not in names:
                    raise AlgebraParseError(lineno, f"unknown basis element {nm!r}")
                terms.append((_rational(coef.strip(), lineno), names.index(nm)))
            brackets[key] = (lineno, a, b, terms)
        else:
            raise AlgebraParseError(lineno, f"unknown directive {head!r}")
    if k is None:
        raise AlgebraParseError(last_line, "missing semigroup declaration")
    for i in range(k):
        for j in range(k):
            if (i, j) not in products:
                raise AlgebraParseError(last_line, f"missing product line for pair ({i}, {j})")
    if not names:
        raise AlgebraParseError(last_line, "missing basis declaration")
    for d in degrees:
        if d >= k:
            raise AlgebraParseError(last_line, f"basis degree {d} outside semigroup")
    try:
        sg = FiniteSemigroup(k, tuple(tuple(products[(i, j)] for j in range(k)) for i in range(k)))
    except ValueError as e:
        raise AlgebraParseError(last_line, str(e)) from None
    structure: dict[tuple[int, int], tuple] = {}
    for _, a, b, terms in brackets.values():
        structure[(a, b)] = tuple(terms)
        if a != b:
            structure[(b, a)] = tuple((-c, x) for c, x in terms)
    return GradedLieAlgebra(sg, tuple(names), tuple(degrees), structure)


def dump_algebra(alg: GradedLieAlgebra) -> str:
    sg = alg.semigroup
    lines = [f"semigroup {sg.size}"]
    lines += [f"product {i} {j} {sg.mul(i, j)}" for i in range(sg.size) for j in range(sg.size)]
    lines.append("basis " + " ".join(f"{n}:{d}" for n, d in zip(alg.basis_names, alg.degree)))
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            v = alg.table[i][j]
            if any(v):
                rhs = " + ".join(f"{c}*{alg.basis_names[k]}" for k, c in enumerate(v) if c)
                lines.append(f"bracket {alg.basis_names[i]} {alg.basis_names[j]} = {rhs}")
    return "\n".join(lines) + "\n"


def load_algebra(path) -> GradedLieAlgebra:
    return parse_algebra(Path(path).read_text())


def data_path(name: str) -> Path:
    return Path(__file__).parent / "data" / name
