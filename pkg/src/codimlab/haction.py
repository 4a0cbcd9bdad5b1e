"""Generalized actions on a Lie algebra, the multiplication algebra, density.

An action is a list of operators rho(h) (one per basis element of H) and,
for each h, pairs (h', h'') of coefficient vectors such that
    h [a, b] = sum_i [h'_i a, h''_i b]
on all basis pairs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import GradedLieAlgebra, Subspace, bracket, projection_matrix, spin
from .linalg import as_fraction, identity, mat_mul, mat_vec
from .regev import DP_MAX_T, NAIVE_MAX_T, RegevDescriptor, RegevGuard, regev_eval_dp

Matrix = list[list[Fraction]]
Coeffs = tuple[Fraction, ...]


class NotDense(ValueError):
    pass


def _lin(coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    d = len(mats[0])
    out = [[Fraction(0)] * d for _ in range(d)]
    for c, m in zip(coeffs, mats):
        c = as_fraction(c)
        if c:
            for i in range(d):
                for j in range(d):
                    out[i][j] += c * m[i][j]
    return out


@dataclass
class GeneralizedAction:
    operators: list[Matrix]
    compat: list[list[tuple[Coeffs, Coeffs]]]
    unit: Coeffs
    names: tuple[str, ...] = ()

    def __post_init__(self):
        self.operators = [[[as_fraction(x) for x in r] for r in m] for m in self.operators]
        self.unit = tuple(as_fraction(c) for c in self.unit)
        self.compat = [[(tuple(as_fraction(c) for c in a), tuple(as_fraction(c) for c in b))
                        for a, b in pairs] for pairs in self.compat]
        if len(self.compat) != len(self.operators) or len(self.unit) != len(self.operators):
            raise ValueError("compat data and unit must cover every operator")

    def op(self, coeffs: Sequence) -> Matrix:
        return _lin(coeffs, self.operators)


def _basis_vec(k: int, i: int) -> Coeffs:
    return tuple(Fraction(int(j == i)) for j in range(k))


def dual_semigroup_action(alg: GradedLieAlgebra) -> GeneralizedAction:
    """Projections pi_t; h_t [a, b] = sum over r s = t of [h_r a, h_s b]."""
    S = alg.semigroup
    k = S.size
    ops = [projection_matrix(alg, t) for t in range(k)]
    compat = [[(_basis_vec(k, r), _basis_vec(k, s)) for r in range(k) for s in range(k)
               if S.mul(r, s) == t] for t in range(k)]
    return GeneralizedAction(ops, compat, (Fraction(1),) * k, tuple(f"h{t}" for t in range(k)))


def trivial_action(alg: GradedLieAlgebra) -> GeneralizedAction:
    one = (Fraction(1),)
    return GeneralizedAction([identity(alg.dim)], [[(one, one)]], one, ("1",))


@dataclass
class CompatibilityReport:
    eq1: list[tuple[int, int, int]] = field(default_factory=list)  # (h, a, b)
    eq3: list[tuple[int, int]] = field(default_factory=list)  # (h, l)
    unit_ok: bool = True

    @property
    def ok(self) -> bool:
        return not self.eq1 and not self.eq3 and self.unit_ok


def verify_compatibility(alg: GradedLieAlgebra, act: GeneralizedAction) -> CompatibilityReport:
    rep = CompatibilityReport()
    d = alg.dim
    rep.unit_ok = act.op(act.unit) == identity(d)
    basis = [alg.basis_element(i) for i in range(d)]
    for h, pairs in enumerate(act.compat):
        rho = act.operators[h]
        split = [(act.op(a), act.op(b)) for a, b in pairs]
        for i in range(d):
            for j in range(d):
                lhs = mat_vec(rho, bracket(alg, basis[i], basis[j]).coords)
                rhs = [Fraction(0)] * d
                for A, B in split:
                    v = bracket(alg, alg.element(mat_vec(A, basis[i].coords)),
                                alg.element(mat_vec(B, basis[j].coords)))
                    rhs = [x + y for x, y in zip(rhs, v.coords)]
                if lhs != rhs:
                    rep.eq1.append((h, i, j))
        # rho(h) ad(l) = sum ad(h' l) rho(h'')
        for i in range(d):
            lhs = mat_mul(rho, alg.ad(i))
            rhs = [[Fraction(0)] * d for _ in range(d)]
            for A, B in split:
                term = mat_mul(alg.ad(alg.element(mat_vec(A, basis[i].coords))), B)
                rhs = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(rhs, term)]
            if lhs != rhs:
                rep.eq3.append((h, i))
    return rep


# ---------------------------------------------------------------------------
# Multiplication algebra
# ---------------------------------------------------------------------------

class _Echelon:
    """Incrementally maintained reduced basis of flattened matrices."""

    def __init__(self, n: int):
        self.n = n
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        v = list(v)
        for r, p in zip(self.rows, self.pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, r)]
        return v

    def add(self, v: Sequence[Fraction]) -> bool:
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = 1 / w[p]
        w = [x * inv for x in w]
        for k, r in enumerate(self.rows):
            if r[p]:
                f = r[p]
                self.rows[k] = [a - f * b for a, b in zip(r, w)]
        self.rows.append(w)
        self.pivots.append(p)
        return True


def _flat(m: Matrix) -> list[Fraction]:
    return [x for r in m for x in r]


@dataclass
class MultiplicationAlgebra:
    d: int
    basis: list[Matrix]  # matrices in generation order
    words: list[tuple[str, ...]]  # generator names, leftmost first; () is the identity
    generators: dict[str, Matrix]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def closure_ok(self) -> bool:
        ech = _Echelon(self.d * self.d)
        for m in self.basis:
            ech.add(_flat(m))
        return all(not any(ech.reduce(_flat(mat_mul(a, b))))
                   for a in self.basis for b in self.basis)


def multiplication_algebra(alg: GradedLieAlgebra, act: GeneralizedAction) -> MultiplicationAlgebra:
    """Associative algebra generated by rho(H) and ad(L), with the identity."""
    d = alg.dim
    gens: dict[str, Matrix] = {}
    for i in range(d):
        gens[f"ad({alg.basis_names[i]})"] = alg.ad(i)
    for k, m in enumerate(act.operators):
        name = act.names[k] if k < len(act.names) else f"h{k}"
        gens[f"rho({name})"] = m
    ech = _Echelon(d * d)
    I = identity(d)
    ech.add(_flat(I))
    basis, words = [I], [()]
    frontier = [0]
    while frontier:
        new = []
        for idx in frontier:
            for name, g in gens.items():
                m = mat_mul(g, basis[idx])
                if ech.add(_flat(m)):
                    basis.append(m)
                    words.append((name,) + words[idx])
                    new.append(len(basis) - 1)
        frontier = new
    return MultiplicationAlgebra(d, basis, words, gens)


def density_check(m: MultiplicationAlgebra) -> bool:
    return m.dim == m.d * m.d


def h_simplicity(alg: GradedLieAlgebra, act: GeneralizedAction) -> tuple[str, Subspace | None]:
    """'proper-ideal-found', 'density-plus-spins-consistent' or 'unknown'.

    Spins of basis vectors under ad(L) and rho(H) are invariant ideals.
    """
    ops = [alg.ad(i) for i in range(alg.dim)] + list(act.operators)
    for i in range(alg.dim):
        W = spin(alg, alg.basis_element(i), ops)
        if 0 < W.dim < alg.dim:
            return "proper-ideal-found", W
    if density_check(multiplication_algebra(alg, act)):
        return "density-plus-spins-consistent", None
    return "unknown", None


# ---------------------------------------------------------------------------
# Density witness through the central polynomial
# ---------------------------------------------------------------------------

@dataclass
class DensityWitness:
    C: int
    zbar: list  # basis elements z the identity is checked on
    K: Fraction
    verification: bool
    words: list[tuple[str, ...]]


def density_witness(alg: GradedLieAlgebra, act: GeneralizedAction,
                    allow_t3: bool = False) -> DensityWitness:
    """Evaluate the central polynomial f_t, t = dim L, at a word basis of End(L).

    Both alternating sets receive the same basis, ad(b_1..b_t) first, so the
    value is K id with K != 0 when M(L) = End(L).
    """
    M = multiplication_algebra(alg, act)
    if not density_check(M):
        raise NotDense(f"multiplication algebra has dimension {M.dim} < {M.d ** 2}")
    t = alg.dim
    if t > DP_MAX_T or (t > NAIVE_MAX_T and not allow_t3):
        raise RegevGuard(f"t = {t} needs allow_t3 (limit {DP_MAX_T})")
    # prefer ad(b_i) at the front, then the rest in generation order
    order = sorted(range(M.dim), key=lambda k: (0 if len(M.words[k]) == 1
                                                and M.words[k][0].startswith("ad(") else 1, k))
    mats = [M.basis[k] for k in order]
    words = [M.words[k] for k in order]
    den = 1
    for m in mats:
        for r in m:
            for x in r:
                den = den * x.denominator // np.gcd(den, x.denominator)
    arr = np.array([[[int(x * den) for x in r] for r in m] for m in mats], dtype=object)
    val = regev_eval_dp(RegevDescriptor(t), arr, arr)
    scale = Fraction(den) ** (2 * t * t)
    K = Fraction(int(val[0, 0])) / scale
    scalar = all(val[i, j] == (val[0, 0] if i == j else 0) for i in range(t) for j in range(t))
    zbar = [alg.basis_element(i) for i in range(t)]
    ok = scalar and K != 0
    if ok:
        R = [[Fraction(int(x)) / scale / K for x in row] for row in val]
        ok = all(tuple(mat_vec(R, z.coords)) == z.coords for z in zbar)
    return DensityWitness(1, zbar, K, ok, words)
