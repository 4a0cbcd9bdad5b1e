"""Graded Lie algebras as structure-constant tables, and structural tools.

Elements are coordinate vectors of ``Fraction`` in a fixed basis.  Operators
(ad, projections) are dense ``Fraction`` matrices acting on column vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .linalg import as_fraction, mat_vec, nullspace, rref
from .semigroup import FiniteSemigroup, multiplicative_z2, trivial_semigroup

Term = tuple[Fraction, int]


@dataclass(frozen=True)
class AlgebraElement:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, dim: int) -> "AlgebraElement":
        return cls((Fraction(0),) * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> "AlgebraElement":
        return cls(tuple(Fraction(int(k == i)) for k in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coords) if c]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_dim(self.dim, other.dim)
        return AlgebraElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_dim(self.dim, other.dim)
        return AlgebraElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> "AlgebraElement":
        s = as_fraction(scalar)
        return AlgebraElement(tuple(s * a for a in self.coords))

    __rmul__ = __mul__


def _check_dim(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"dimension mismatch: {a} != {b}")


@dataclass(frozen=True)
class Subspace:
    """A subspace stored as its reduced row echelon basis (canonical)."""

    ambient: int
    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable, ambient: int) -> "Subspace":
        vecs = [tuple(v.coords) if isinstance(v, AlgebraElement) else tuple(v) for v in vectors]
        for v in vecs:
            _check_dim(len(v), ambient)
        red, _ = rref(vecs) if vecs else ([], [])
        return cls(ambient, tuple(tuple(r) for r in red))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        vec = tuple(v.coords) if isinstance(v, AlgebraElement) else tuple(v)
        return Subspace.span(list(self.rows) + [vec], self.ambient).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return Subspace.span(list(self.rows) + list(other.rows), self.ambient).dim == self.dim

    def elements(self) -> list[AlgebraElement]:
        return [AlgebraElement(r) for r in self.rows]


@dataclass(frozen=True)
class Violation:
    kind: str  # "antisymmetry" | "jacobi" | "grading"
    indices: tuple[int, ...]
    detail: str = ""


@dataclass(frozen=True)
class GradedLieAlgebra:
    """Structure constants ``structure[(i, j)] = [(coeff, k), ...]`` for [b_i, b_j].

    Missing pairs are zero.  The table is taken as given (no antisymmetric
    completion); :func:`validate_algebra` reports inconsistencies.
    """

    semigroup: FiniteSemigroup
    basis_names: tuple[str, ...]
    degree: tuple[int, ...]
    structure: Mapping[tuple[int, int], tuple[Term, ...]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "basis_names", tuple(self.basis_names))
        object.__setattr__(self, "degree", tuple(int(d) for d in self.degree))
        if len(self.degree) != len(self.basis_names):
            raise ValueError("degree map must cover every basis element")
        if any(not 0 <= d < self.semigroup.size for d in self.degree):
            raise ValueError("degree outside the semigroup")
        clean = {}
        for (i, j), terms in dict(self.structure).items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"bracket index out of range: {(i, j)}")
            ts = tuple((as_fraction(c), int(k)) for c, k in terms if as_fraction(c) != 0)
            for _, k in ts:
                if not 0 <= k < self.dim:
                    raise ValueError(f"bracket result index out of range: {k}")
            if ts:
                clean[(int(i), int(j))] = ts
        object.__setattr__(self, "structure", clean)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @cached_property
    def table(self) -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
        """Dense table: table[i][j] = coordinates of [b_i, b_j]."""
        d = self.dim
        out = []
        for i in range(d):
            row = []
            for j in range(d):
                v = [Fraction(0)] * d
                for c, k in self.structure.get((i, j), ()):
                    v[k] += c
                row.append(tuple(v))
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def integer_constants(self) -> tuple[np.ndarray, int]:
        """(C, D) with C[i, j, k] = D * coeff of b_k in [b_i, b_j], C integral."""
        import math

        dens = [c.denominator for row in self.table for v in row for c in v]
        D = math.lcm(*dens) if dens else 1
        C = np.zeros((self.dim,) * 3, dtype=np.int64)
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in enumerate(self.table[i][j]):
                    C[i, j, k] = int(c * D)
        return C, D

    def degree_basis(self, t: int) -> list[int]:
        return [i for i, d in enumerate(self.degree) if d == t]

    def element(self, coords) -> AlgebraElement:
        _check_dim(len(coords), self.dim)
        return AlgebraElement(tuple(coords))

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement.basis(self.dim, i)

    def index(self, name: str) -> int:
        return self.basis_names.index(name)

    def ad(self, x) -> list[list[Fraction]]:
        """Matrix of ad(x) acting on column coordinate vectors."""
        if isinstance(x, int):
            x = self.basis_element(x)
        cols = [bracket(self, x, self.basis_element(j)).coords for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def same_structure(self, other: "GradedLieAlgebra") -> bool:
        return (self.semigroup == other.semigroup and self.degree == other.degree
                and self.table == other.table)


def bracket(alg: GradedLieAlgebra, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_dim(a.dim, alg.dim)
    _check_dim(b.dim, alg.dim)
    out = [Fraction(0)] * alg.dim
    table = alg.table
    for i, ai in enumerate(a.coords):
        if not ai:
            continue
        row = table[i]
        for j, bj in enumerate(b.coords):
            if not bj:
                continue
            s = ai * bj
            for k, c in enumerate(row[j]):
                if c:
                    out[k] += s * c
    return AlgebraElement(tuple(out))


def homogeneous_projection(alg: GradedLieAlgebra, x: AlgebraElement, t: int) -> AlgebraElement:
    if not 0 <= t < alg.semigroup.size:
        raise ValueError(f"invalid degree {t}")
    _check_dim(x.dim, alg.dim)
    return AlgebraElement(tuple(c if alg.degree[i] == t else Fraction(0)
                                for i, c in enumerate(x.coords)))


def projection_matrix(alg: GradedLieAlgebra, t: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j and alg.degree[i] == t)) for j in range(alg.dim)]
            for i in range(alg.dim)]


def validate_algebra(alg: GradedLieAlgebra) -> list[Violation]:
    """Every violated axiom with the offending indices; empty iff valid."""
    d, table, sg = alg.dim, alg.table, alg.semigroup
    out: list[Violation] = []
    for i in range(d):
        for j in range(i, d):
            if i == j:
                if any(table[i][i]):
                    out.append(Violation("antisymmetry", (i, i), "[b_i, b_i] != 0"))
            elif any(x + y for x, y in zip(table[i][j], table[j][i])):
                out.append(Violation("antisymmetry", (i, j), "[b_i, b_j] != -[b_j, b_i]"))
    for i in range(d):
        for j in range(d):
            t = sg.mul(alg.degree[i], alg.degree[j])
            bad = [k for k, c in enumerate(table[i][j]) if c and alg.degree[k] != t]
            if bad:
                out.append(Violation("grading", (i, j), f"components {bad} outside degree {t}"))
    basis = [alg.basis_element(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                a, b, c = basis[i], basis[j], basis[k]
                s = (bracket(alg, a, bracket(alg, b, c)) + bracket(alg, b, bracket(alg, c, a))
                     + bracket(alg, c, bracket(alg, a, b)))
                if not s.is_zero():
                    out.append(Violation("jacobi", (i, j, k)))
    return out


# ---------------------------------------------------------------------------
# Named algebras
# ---------------------------------------------------------------------------

_SL2 = {("u", "v"): {"v": -2}, ("u", "t"): {"t": 2}, ("v", "t"): {"u": -1}}


def _sl2_bracket(a: str | None, b: str | None) -> dict[str, int]:
    if a is None or b is None:
        return {}
    if (a, b) in _SL2:
        return dict(_SL2[(a, b)])
    if (b, a) in _SL2:
        return {k: -v for k, v in _SL2[(b, a)].items()}
    return {}


def build_paper_algebra() -> GradedLieAlgebra:
    """sl2 (+) <u, v> with the (Z2, *)-grading.

    Basis b1=(u,0), b2=(u,u), b3=(v,0), b4=(v,v), b5=(t,0) with degrees
    0,1,0,1,0; brackets are componentwise.  A pair (p, q) with q in <u,v>
    decomposes as (p - q, 0) + (q, q).
    """
    comps = [("u", None), ("u", "u"), ("v", None), ("v", "v"), ("t", None)]
    names = ("u0", "uu", "v0", "vv", "t0")
    index = {c: i for i, c in enumerate(comps)}
    structure = {}
    for i, (a1, a2) in enumerate(comps):
        for j, (c1, c2) in enumerate(comps):
            v = [0] * 5
            for x, coef in _sl2_bracket(a1, c1).items():
                v[index[(x, None)]] += coef
            for x, coef in _sl2_bracket(a2, c2).items():
                v[index[(x, x)]] += coef
                v[index[(x, None)]] -= coef
            terms = tuple((Fraction(c), k) for k, c in enumerate(v) if c)
            if terms:
                structure[(i, j)] = terms
    return GradedLieAlgebra(multiplicative_z2(), names, (0, 1, 0, 1, 0), structure)


def build_sl2() -> GradedLieAlgebra:
    """sl2 with basis u, v, t and the trivial grading."""
    names = ("u", "v", "t")
    structure = {}
    for i, a in enumerate(names):
        for j, b in enumerate(names):
            terms = tuple((Fraction(c), names.index(k)) for k, c in _sl2_bracket(a, b).items())
            if terms:
                structure[(i, j)] = terms
    return GradedLieAlgebra(trivial_semigroup(), names, (0, 0, 0), structure)


def abelian_algebra(dim: int, degrees: Sequence[int] | None = None,
                    semigroup: FiniteSemigroup | None = None) -> GradedLieAlgebra:
    sg = semigroup or trivial_semigroup()
    degs = tuple(degrees) if degrees is not None else (0,) * dim
    return GradedLieAlgebra(sg, tuple(f"a{i + 1}" for i in range(dim)), degs, {})


def two_dim_solvable() -> GradedLieAlgebra:
    """<u, v> with [u, v] = -2v."""
    return GradedLieAlgebra(trivial_semigroup(), ("u", "v"), (0, 0),
                            {(0, 1): ((Fraction(-2), 1),), (1, 0): ((Fraction(2), 1),)})


# ---------------------------------------------------------------------------
# Structure: Killing form, radical, spins, graded ideals
# ---------------------------------------------------------------------------

def killing_form(alg: GradedLieAlgebra) -> list[list[Fraction]]:
    ads = [alg.ad(i) for i in range(alg.dim)]
    d = alg.dim
    return [[sum((ads[i][r][s] * ads[j][s][r] for r in range(d) for s in range(d)), Fraction(0))
             for j in range(d)] for i in range(d)]


def derived_algebra(alg: GradedLieAlgebra, W: Subspace | None = None) -> Subspace:
    elems = W.elements() if W is not None else [alg.basis_element(i) for i in range(alg.dim)]
    return Subspace.span([bracket(alg, a, b) for a in elems for b in elems], alg.dim)


def is_solvable(alg: GradedLieAlgebra, W: Subspace | None = None) -> bool:
    cur = W if W is not None else Subspace.span(
        [alg.basis_element(i) for i in range(alg.dim)], alg.dim)
    while cur.dim:
        nxt = derived_algebra(alg, cur)
        if nxt.dim == cur.dim:
            return False
        cur = nxt
    return True


def is_ideal(alg: GradedLieAlgebra, W: Subspace) -> bool:
    return all(W.contains(bracket(alg, alg.basis_element(i), w))
               for i in range(alg.dim) for w in W.elements())


def solvable_radical(alg: GradedLieAlgebra) -> Subspace:
    """Rad(L) = {x : kappa(x, [L, L]) = 0} (characteristic zero)."""
    K = killing_form(alg)
    LL = derived_algebra(alg)
    eqs = [[sum((K[i][k] * y[k] for k in range(alg.dim)), Fraction(0)) for i in range(alg.dim)]
           for y in LL.rows]
    if not eqs:
        return Subspace.span([alg.basis_element(i) for i in range(alg.dim)], alg.dim)
    return Subspace.span(nullspace(eqs, alg.dim), alg.dim)


def center(alg: GradedLieAlgebra) -> Subspace:
    eqs = []
    for j in range(alg.dim):
        adj = alg.ad(j)
        eqs.extend(adj)  # [x, b_j] = -ad(b_j) x = 0
    return Subspace.span(nullspace(eqs, alg.dim), alg.dim)


def spin(alg: GradedLieAlgebra, seed: AlgebraElement, operators: Sequence) -> Subspace:
    """Smallest subspace containing ``seed`` and stable under every operator."""
    _check_dim(seed.dim, alg.dim)
    for op in operators:
        if len(op) != alg.dim or any(len(r) != alg.dim for r in op):
            raise ValueError("operator dimension mismatch")
    W = Subspace.span([seed], alg.dim)
    frontier = list(W.rows)
    while frontier:
        new = [mat_vec(op, v) for op in operators for v in frontier]
        W2 = Subspace.span(list(W.rows) + new, alg.dim)
        if W2.dim == W.dim:
            break
        W = W2
        frontier = list(W.rows)
    return W


def structure_operators(alg: GradedLieAlgebra) -> list:
    """ad(b_i) for every basis element, then the homogeneous projections."""
    return ([alg.ad(i) for i in range(alg.dim)]
            + [projection_matrix(alg, t) for t in range(alg.semigroup.size)])


def is_graded_ideal(alg: GradedLieAlgebra, W: Subspace) -> bool:
    if not is_ideal(alg, W):
        return False
    return all(W.contains(homogeneous_projection(alg, w, t))
               for w in W.elements() for t in range(alg.semigroup.size))
