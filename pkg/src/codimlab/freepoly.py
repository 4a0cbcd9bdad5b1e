"""Multilinear Lie polynomials in degree-labeled variables.

A monomial is a bracket tree: leaves are :class:`Var` (index, label) and
internal nodes are :class:`Br`.  A leaf ``Var(i, t)`` stands for the variable
x_i with the projection onto degree ``t`` applied, so evaluation never needs
homogeneous inputs.

Permutations are tuples of 1-based images, ``sigma[i - 1] = sigma(i)``.
They act on indices only; the label stays in its slot.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .algebra import AlgebraElement, GradedLieAlgebra, homogeneous_projection
from .linalg import as_fraction


class Var(NamedTuple):
    index: int
    label: int


class Br(NamedTuple):
    left: "Monomial"
    right: "Monomial"


Monomial = Union[Var, Br]
LabeledVariable = Var


def leaves(m: Monomial) -> list[Var]:
    if isinstance(m, Var):
        return [m]
    return leaves(m.left) + leaves(m.right)


def left_normed(vars_: Sequence[Var]) -> Monomial:
    if not vars_:
        raise ValueError("empty monomial")
    m: Monomial = vars_[0]
    for v in vars_[1:]:
        m = Br(m, v)
    return m


def is_left_normed(m: Monomial) -> bool:
    while isinstance(m, Br):
        if not isinstance(m.right, Var):
            return False
        m = m.left
    return True


@dataclass(frozen=True)
class LiePolynomial:
    """Rational combination of multilinear monomials on a common index set."""

    terms: tuple[tuple[Fraction, Monomial], ...]

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[object, Monomial]]) -> "LiePolynomial":
        acc: dict[Monomial, Fraction] = {}
        order: list[Monomial] = []
        index_set = None
        for c, m in terms:
            idx = sorted(v.index for v in leaves(m))
            if len(set(idx)) != len(idx):
                raise ValueError("monomial is not multilinear")
            if index_set is None:
                index_set = idx
            elif idx != index_set:
                raise ValueError("monomials must share the same index set")
            if m not in acc:
                acc[m] = Fraction(0)
                order.append(m)
            acc[m] += as_fraction(c)
        return cls(tuple((acc[m], m) for m in order if acc[m] != 0))

    @classmethod
    def monomial(cls, m: Monomial, coef=1) -> "LiePolynomial":
        return cls.from_terms([(coef, m)])

    @property
    def indices(self) -> list[int]:
        if not self.terms:
            return []
        return sorted(v.index for v in leaves(self.terms[0][1]))

    @property
    def degree(self) -> int:
        return len(self.indices)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LiePolynomial") -> "LiePolynomial":
        return LiePolynomial.from_terms(list(self.terms) + list(other.terms))

    def __sub__(self, other: "LiePolynomial") -> "LiePolynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "LiePolynomial":
        c = as_fraction(c)
        if c == 0:
            return LiePolynomial(())
        return LiePolynomial(tuple((c * a, m) for a, m in self.terms))

    def as_dict(self) -> dict[Monomial, Fraction]:
        return {m: c for c, m in self.terms}

    def __eq__(self, other) -> bool:
        return isinstance(other, LiePolynomial) and self.as_dict() == other.as_dict()

    def __hash__(self):
        return hash(frozenset(self.as_dict().items()))


def lie_bracket(p: LiePolynomial, q: LiePolynomial) -> LiePolynomial:
    if set(p.indices) & set(q.indices):
        raise ValueError("bracketed polynomials must use disjoint variables")
    return LiePolynomial.from_terms((a * b, Br(m, n)) for a, m in p.terms for b, n in q.terms)


def left_normed_bracket(polys: Sequence[LiePolynomial]) -> LiePolynomial:
    out = polys[0]
    for p in polys[1:]:
        out = lie_bracket(out, p)
    return out


def spanning_monomials(n: int, labeling: Sequence[int], reduced: bool = False) -> list[Monomial]:
    """Left-normed monomials [x_s(1), ..., x_s(n)]; label of x_i is labeling[i-1].

    ``reduced`` keeps only the (n-1)! monomials starting with x_1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(labeling) != n:
        raise ValueError("labeling must have length n")
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        if reduced and perm[0] != 1:
            continue
        out.append(left_normed([Var(i, labeling[i - 1]) for i in perm]))
    return out


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------

def compose(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """(s o t)(i) = s(t(i))."""
    if len(s) != len(t):
        raise ValueError("permutation size mismatch")
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(s: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(s)
    for i, si in enumerate(s, 1):
        out[si - 1] = i
    return tuple(out)


def sign(s: Sequence[int]) -> int:
    seen, sgn = set(), 1
    for start in range(1, len(s) + 1):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = s[j - 1]
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


def _relabel(m: Monomial, sigma: Sequence[int]) -> Monomial:
    if isinstance(m, Var):
        return Var(sigma[m.index - 1], m.label)
    return Br(_relabel(m.left, sigma), _relabel(m.right, sigma))


def apply_permutation(p: LiePolynomial, sigma: Sequence[int]) -> LiePolynomial:
    """Replace every leaf index i by sigma(i); labels stay with the slot."""
    idx = p.indices
    if idx and max(idx) > len(sigma):
        raise ValueError("permutation size mismatch")
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError("not a permutation")
    return LiePolynomial(tuple((c, _relabel(m, sigma)) for c, m in p.terms))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

class _Evaluator:
    """Memoized monomial evaluation for a fixed algebra and assignment."""

    def __init__(self, alg: GradedLieAlgebra, assignment: Mapping[int, AlgebraElement]):
        self.alg = alg
        self.assignment = assignment
        self.table = alg.table
        self.memo: dict = {}

    def leaf(self, v: Var) -> tuple[Fraction, ...]:
        key = v
        if key not in self.memo:
            try:
                x = self.assignment[v.index]
            except KeyError:
                raise KeyError(f"assignment is missing index {v.index}") from None
            if x.dim != self.alg.dim:
                raise ValueError("dimension mismatch in assignment")
            self.memo[key] = homogeneous_projection(self.alg, x, v.label).coords
        return self.memo[key]

    def bracket(self, a, b) -> tuple[Fraction, ...]:
        d = self.alg.dim
        out = [Fraction(0)] * d
        for i, ai in enumerate(a):
            if ai:
                row = self.table[i]
                for j, bj in enumerate(b):
                    if bj:
                        s = ai * bj
                        for k, c in enumerate(row[j]):
                            if c:
                                out[k] += s * c
        return tuple(out)

    def __call__(self, m: Monomial) -> tuple[Fraction, ...]:
        if isinstance(m, Var):
            return self.leaf(m)
        hit = self.memo.get(m)
        if hit is None:
            left = self(m.left)
            hit = self.bracket(left, self(m.right)) if any(left) else left
            self.memo[m] = hit
        return hit


def evaluate(alg: GradedLieAlgebra, p: LiePolynomial,
             assignment: Mapping[int, AlgebraElement]) -> AlgebraElement:
    ev = _Evaluator(alg, assignment)
    out = [Fraction(0)] * alg.dim
    for c, m in p.terms:
        v = ev(m)
        for k, x in enumerate(v):
            if x:
                out[k] += c * x
    return AlgebraElement(tuple(out))


# ---------------------------------------------------------------------------
# Left-normed expansion and serialization
# ---------------------------------------------------------------------------

def _bracket_left_normed(s: tuple[Var, ...], t: tuple[Var, ...]) -> list[tuple[int, tuple[Var, ...]]]:
    """[s, [t1, ..., tk]] as signed left-normed sequences (s left-normed)."""
    if len(t) == 1:
        return [(1, s + t)]
    head, last = t[:-1], t[-1]
    # [s, [a, b]] = [[s, a], b] - [[s, b], a]
    out = [(c, seq + (last,)) for c, seq in _bracket_left_normed(s, head)]
    out += [(-c, seq) for c, seq in _bracket_left_normed(s + (last,), head)]
    return out


def _expand(m: Monomial) -> list[tuple[int, tuple[Var, ...]]]:
    if isinstance(m, Var):
        return [(1, (m,))]
    out = []
    for c1, s in _expand(m.left):
        for c2, t in _expand(m.right):
            out += [(c1 * c2 * c, seq) for c, seq in _bracket_left_normed(s, t)]
    return out


def to_left_normed(p: LiePolynomial) -> LiePolynomial:
    """Rewrite with the Jacobi identity so every monomial is left-normed."""
    return LiePolynomial.from_terms(
        (c * e, left_normed(seq)) for c, m in p.terms for e, seq in _expand(m))


def polynomial_rows(p: LiePolynomial) -> list[tuple[Fraction, tuple[int, ...], tuple[int, ...]]]:
    """(coefficient, index sequence, label sequence) of the left-normed form."""
    rows = []
    for c, m in to_left_normed(p).terms:
        ls = leaves(m)
        rows.append((c, tuple(v.index for v in ls), tuple(v.label for v in ls)))
    return rows


def polynomial_from_rows(rows) -> LiePolynomial:
    return LiePolynomial.from_terms(
        (c, left_normed([Var(i, t) for i, t in zip(idx, labels)])) for c, idx, labels in rows)
