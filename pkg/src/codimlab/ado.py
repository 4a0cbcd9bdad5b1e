"""Graded embeddings into block matrices.

Given a faithful representation rho on V, the graded version acts on
V^T = (copies of V indexed by T).  A homogeneous element of degree t sends
the s-copy to the (s*t)-copy by rho(l).  For abelian T this is again a Lie
homomorphism, and degree-t elements land in the degree-t part of the block
algebra, i.e. matrices whose only nonzero blocks are at (s*t, s).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import GradedLieAlgebra, bracket, center
from .linalg import as_fraction, mat_mul, rref

Matrix = list[list[Fraction]]


class NotFaithful(ValueError):
    pass


class NonAbelianSemigroup(ValueError):
    pass


def _zeros(d: int) -> Matrix:
    return [[Fraction(0)] * d for _ in range(d)]


def _sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _comm(a: Matrix, b: Matrix) -> Matrix:
    return _sub(mat_mul(a, b), mat_mul(b, a))


def _combo(coords, mats: Sequence[Matrix], d: int) -> Matrix:
    out = _zeros(d)
    for c, m in zip(coords, mats):
        if c:
            for i in range(d):
                for j in range(d):
                    if m[i][j]:
                        out[i][j] += c * m[i][j]
    return out


def _rank_of_map(mats: Sequence[Matrix]) -> int:
    rows = [[x for r in m for x in r] for m in mats]
    return len(rref(rows)[0]) if rows else 0


@dataclass
class Representation:
    alg: GradedLieAlgebra
    dim: int
    matrices: list[Matrix]

    def __post_init__(self):
        self.matrices = [[[as_fraction(x) for x in r] for r in m] for m in self.matrices]
        if len(self.matrices) != self.alg.dim:
            raise ValueError("need one matrix per basis element")
        if any(len(m) != self.dim or any(len(r) != self.dim for r in m) for m in self.matrices):
            raise ValueError("matrix size mismatch")

    def image(self, x) -> Matrix:
        return _combo(x.coords, self.matrices, self.dim)

    def rank(self) -> int:
        return _rank_of_map(self.matrices)

    @property
    def faithful(self) -> bool:
        return self.rank() == self.alg.dim

    def homomorphism_failures(self) -> list[tuple[int, int]]:
        bad = []
        for i in range(self.alg.dim):
            for j in range(self.alg.dim):
                lhs = self.image(bracket(self.alg, self.alg.basis_element(i), self.alg.basis_element(j)))
                if lhs != _comm(self.matrices[i], self.matrices[j]):
                    bad.append((i, j))
        return bad


def adjoint_rep(alg: GradedLieAlgebra) -> Representation:
    if center(alg).dim:
        raise NotFaithful("the adjoint representation has the centre as kernel")
    return Representation(alg, alg.dim, [alg.ad(i) for i in range(alg.dim)])


@dataclass
class GradedRepresentation:
    base: Representation
    order: int  # |T|
    matrices: list[Matrix]  # per basis element, (d|T|) x (d|T|)

    @property
    def alg(self) -> GradedLieAlgebra:
        return self.base.alg

    @property
    def dim(self) -> int:
        return self.base.dim * self.order

    def block(self, m: Matrix, r: int, s: int) -> Matrix:
        d = self.base.dim
        return [row[s * d:(s + 1) * d] for row in m[r * d:(r + 1) * d]]

    def support(self, m: Matrix) -> set[tuple[int, int]]:
        return {(r, s) for r in range(self.order) for s in range(self.order)
                if any(x for row in self.block(m, r, s) for x in row)}

    def expected_support(self, t: int) -> set[tuple[int, int]]:
        S = self.alg.semigroup
        return {(S.mul(s, t), s) for s in range(self.order)}

    def image(self, x) -> Matrix:
        return _combo(x.coords, self.matrices, self.dim)


def graded_ado(alg: GradedLieAlgebra, rep: Representation) -> GradedRepresentation:
    S = alg.semigroup
    if not S.is_abelian:
        raise NonAbelianSemigroup("the block construction needs a commutative grading semigroup")
    if not rep.faithful:
        raise NotFaithful("input representation has a kernel")
    d, k = rep.dim, S.size
    mats = []
    for i in range(alg.dim):
        t = alg.degree[i]
        big = _zeros(d * k)
        for s in range(k):
            r = S.mul(s, t)
            for a in range(d):
                for b in range(d):
                    big[r * d + a][s * d + b] = rep.matrices[i][a][b]
        mats.append(big)
    return GradedRepresentation(rep, k, mats)


@dataclass
class AdoReport:
    homomorphism_failures: list[tuple[int, int]] = field(default_factory=list)
    rank: int = 0
    expected_rank: int = 0
    containment_failures: list[tuple[int, tuple]] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return self.rank == self.expected_rank

    @property
    def ok(self) -> bool:
        return not self.homomorphism_failures and self.injective and not self.containment_failures


def verify_graded_ado(g: GradedRepresentation) -> AdoReport:
    alg = g.alg
    rep = AdoReport(expected_rank=alg.dim)
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = g.image(bracket(alg, alg.basis_element(i), alg.basis_element(j)))
            if lhs != _comm(g.matrices[i], g.matrices[j]):
                rep.homomorphism_failures.append((i, j))
    rep.rank = _rank_of_map(g.matrices)
    for i in range(alg.dim):
        extra = g.support(g.matrices[i]) - g.expected_support(alg.degree[i])
        if extra:
            rep.containment_failures.append((i, tuple(sorted(extra))))
    return rep
