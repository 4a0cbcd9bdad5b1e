"""Codimensions and cocharacter multiplicities by evaluation on basis tuples.

A multilinear polynomial is an identity iff it vanishes on every tuple of
basis elements, so the quotient of the multilinear space by the identities
is the space of functions ``L^n -> L`` that left-normed monomials define.
The engine builds a basis of that function space recursively: a left-normed
monomial in n letters is ``[m, x_j]`` with ``m`` a monomial in the other
n - 1 letters.

Variables come in *input types*.  For a graded algebra the type of a
variable is its degree and it only sees the basis of that homogeneous
component; function spaces of different type sequences then have disjoint
supports and their dimensions add up.  For a general action there is one
type (the whole algebra) and each operator of the action is a possible leaf.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import GradedLieAlgebra, homogeneous_projection
from .freepoly import Var, evaluate, LiePolynomial, spanning_monomials
from .linalg import (RankReport, fraction_free_rank, modular_rank, random_primes,
                     rank_certified, to_integer_matrix)
from .symmetric import (Partition, YoungTableau, column_filled_tableau, partitions_of,
                        specht_dim, symmetrizer_size, SYMMETRIZER_CAP, SymmetrizerTooLarge,
                        theta_admissible)

__all__ = [
    "EngineConfig", "CapExceeded", "InputTypes", "graded_types", "action_types",
    "CodimEngine", "graded_codimension", "multiplicity", "cocharacter_table",
    "CocharacterTable", "theta_crosscheck", "ThetaReport", "EvaluationBlock",
    "evaluation_block", "naive_codimension", "rank_certified", "RankReport",
    "example_theta", "valuation_range",
]

_INT64_SAFE = 2**62


class CapExceeded(ValueError):
    pass


@dataclass
class EngineConfig:
    codim_cap: int = 7
    cochar_cap: int = 6
    rank_mode: str = "auto"  # exact | modular | auto
    exact_entry_limit: int = 10**6
    seed: int = 0
    jobs: int = 1
    symmetrizer_cap: int = SYMMETRIZER_CAP


# ---------------------------------------------------------------------------
# Input types and leaves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InputTypes:
    """For type tau: input dimension and the leaf maps (dim x d_tau integer matrices)."""

    dims: tuple[int, ...]
    leaves: tuple[tuple[np.ndarray, ...], ...]
    disjoint: bool  # function spaces of distinct type sequences are independent


def _integral(mat) -> np.ndarray:
    rows = [[Fraction(x) for x in r] for r in mat]
    den = math.lcm(*(x.denominator for r in rows for x in r)) if rows else 1
    return np.array([[int(x * den) for x in r] for r in rows], dtype=np.int64).reshape(len(rows), -1)


def graded_types(alg: GradedLieAlgebra) -> InputTypes:
    """One type per semigroup element; a type-t variable ranges over L_t."""
    dims, leaves = [], []
    for t in range(alg.semigroup.size):
        idx = alg.degree_basis(t)
        inc = np.zeros((alg.dim, len(idx)), dtype=np.int64)
        for c, i in enumerate(idx):
            inc[i, c] = 1
        dims.append(len(idx))
        leaves.append((inc,))
    return InputTypes(tuple(dims), tuple(leaves), True)


def action_types(alg: GradedLieAlgebra, operators: Sequence) -> InputTypes:
    """A single type over the whole algebra; a variable x^h evaluates to rho(h) a."""
    return InputTypes((alg.dim,), (tuple(_integral(m) for m in operators),), False)


# ---------------------------------------------------------------------------
# Row selection
# ---------------------------------------------------------------------------

def _flat(a: np.ndarray) -> np.ndarray:
    return a.reshape(a.shape[0], int(np.prod(a.shape[1:])))


def _normalize(a: np.ndarray) -> np.ndarray:
    if a.dtype == object or a.shape[0] == 0:
        return a
    g = np.gcd.reduce(_flat(a), axis=1)
    g = np.where(g == 0, 1, g)
    return a // g.reshape((-1,) + (1,) * (a.ndim - 1))


def _fits_int64(a: np.ndarray) -> bool:
    if a.size == 0:
        return True
    return max(abs(int(a.max())), abs(int(a.min()))) < _INT64_SAFE


class _Selector:
    """Chooses independent rows; records which method was used."""

    def __init__(self, config: EngineConfig):
        self.config = config
        self.prime = random_primes(1, config.seed)[0]
        self.used_modular = False

    def mode_for(self, flat: np.ndarray) -> str:
        mode = self.config.rank_mode
        if mode == "auto":
            return "exact" if flat.size <= self.config.exact_entry_limit else "modular"
        if mode not in ("exact", "modular"):
            raise ValueError(f"unknown rank mode {mode!r}")
        return mode

    def select(self, flat: np.ndarray) -> list[int]:
        if flat.shape[0] == 0:
            return []
        if self.mode_for(flat) == "exact":
            _, rows = fraction_free_rank(flat, select_rows=True)
        else:
            self.used_modular = True
            _, rows = modular_rank(flat, self.prime, select_rows=True)
        return rows


# ---------------------------------------------------------------------------
# The engine
# ---------------------------------------------------------------------------

class CodimEngine:
    """Memoized bases of evaluation-function spaces, keyed by type sequence.

    ``block(s)`` is an integer array of shape (r, d_{s_1}, ..., d_{s_n}, dim)
    whose r rows are linearly independent functions spanning the space for
    the type sequence ``s``.
    """

    def __init__(self, alg: GradedLieAlgebra, types: InputTypes | None = None,
                 config: EngineConfig | None = None):
        self.alg = alg
        self.types = types or graded_types(alg)
        self.config = config or EngineConfig()
        self.selector = _Selector(self.config)
        C, _ = alg.integer_constants
        self._C = C
        # W[tau][leaf][a, c, k] = sum_b leaf[b, c] * C[a, b, k]
        self._W = [[np.einsum("bc,abk->ack", leaf, C) for leaf in leaves]
                   for leaves in self.types.leaves]
        self._memo: dict[tuple[int, ...], np.ndarray] = {}

    def block(self, s: Sequence[int]) -> np.ndarray:
        s = tuple(s)
        hit = self._memo.get(s)
        if hit is not None:
            return hit
        dim = self.alg.dim
        if len(s) == 1:
            leaves = self.types.leaves[s[0]]
            A = np.stack([leaf.T for leaf in leaves]).astype(np.int64)  # (r, d, dim)
        else:
            parts = []
            for j in range(len(s)):
                sub = self.block(s[:j] + s[j + 1:])
                if sub.shape[0] == 0:
                    continue
                for W in self._W[s[j]]:
                    if sub.dtype == object or not _fits_int64(sub) or not _fits_int64(W):
                        G = np.tensordot(sub.astype(object), W.astype(object), axes=([sub.ndim - 1], [0]))
                    else:
                        G = np.tensordot(sub, W, axes=([sub.ndim - 1], [0]))
                    parts.append(np.moveaxis(G, G.ndim - 2, 1 + j))
            shape = (0,) + tuple(self.types.dims[t] for t in s) + (dim,)
            A = np.concatenate(parts) if parts else np.zeros(shape, dtype=np.int64)
        flat = _flat(A)
        nonzero = np.any(flat != 0, axis=1)
        A, flat = A[nonzero], flat[nonzero]
        rows = self.selector.select(flat)
        B = _normalize(A[rows])
        self._memo[s] = B
        return B

    def rank(self, s: Sequence[int]) -> int:
        return int(self.block(tuple(sorted(s)) if self.types.disjoint else tuple(s)).shape[0])

    def codimension(self, n: int) -> tuple[int, RankReport]:
        if n < 1:
            raise ValueError("n must be >= 1")
        if n > self.config.codim_cap:
            raise CapExceeded(f"n = {n} exceeds the codimension cap {self.config.codim_cap}")
        k = len(self.types.dims)
        total = 0
        if self.types.disjoint:
            # rank depends only on the multiset of types
            for counts in _compositions(n, k):
                s = tuple(t for t in range(k) for _ in range(counts[t]))
                total += _multinomial(counts) * self.block(s).shape[0]
        else:
            total = self.block((0,) * n).shape[0]
        return total, self._report(total, n)

    def _report(self, total: int, n: int) -> RankReport:
        if not self.selector.used_modular:
            return RankReport(total, "exact", True)
        # second prime on the top-level blocks
        p2 = random_primes(2, self.config.seed)[1]
        agree = True
        k = len(self.types.dims)
        seqs = ([tuple(t for t in range(k) for _ in range(c[t])) for c in _compositions(n, k)]
                if self.types.disjoint else [(0,) * n])
        for s in seqs:
            B = self.block(s)
            if B.shape[0] and modular_rank(_flat(B), p2) != B.shape[0]:
                agree = False
        return RankReport(total, "modular", agree, (self.selector.prime, p2),
                          "probabilistic: independent rows chosen modulo a random prime"
                          + ("" if agree else "; second prime disagrees"))

    # --- symmetric group action on the function space -------------------

    def orbit_batch(self, s: Sequence[int]) -> dict[tuple[int, ...], np.ndarray]:
        """Basis of the function spaces of every rearrangement of ``s``."""
        canon = tuple(sorted(s)) if self.types.disjoint else tuple(s)
        B = self.block(canon)
        out = {}
        for arr in sorted(set(itertools.permutations(canon))):
            # sigma with arr[j] = canon[sigma^{-1}(j)]: move canonical axes into place
            axes = _arrangement_axes(canon, arr)
            out[arr] = np.transpose(B, (0,) + tuple(1 + a for a in axes) + (B.ndim - 1,))
        return out


def _arrangement_axes(canon: tuple[int, ...], arr: tuple[int, ...]) -> list[int]:
    used = [False] * len(canon)
    axes = []
    for t in arr:
        for i, c in enumerate(canon):
            if not used[i] and c == t:
                used[i] = True
                axes.append(i)
                break
    return axes


def _compositions(n: int, k: int) -> Iterable[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _multinomial(counts: Sequence[int]) -> int:
    out, m = 1, 0
    for c in counts:
        m += c
        out *= math.comb(m, c)
    return out


def graded_codimension(alg: GradedLieAlgebra, n: int, rank_mode: str = "auto",
                       config: EngineConfig | None = None,
                       engine: CodimEngine | None = None) -> tuple[int, RankReport]:
    cfg = config or EngineConfig(rank_mode=rank_mode)
    eng = engine or CodimEngine(alg, graded_types(alg), cfg)
    return eng.codimension(n)


# ---------------------------------------------------------------------------
# Naive oracle: one row per left-normed monomial
# ---------------------------------------------------------------------------

@dataclass
class EvaluationBlock:
    labeling: tuple[int, ...]
    rows: list  # monomials
    matrix: list[list[Fraction]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.matrix[0]) if self.matrix else 0)


def evaluation_block(alg: GradedLieAlgebra, labeling: Sequence[int],
                     reduced: bool = False) -> EvaluationBlock:
    """Every spanning monomial evaluated at every matching basis tuple."""
    n = len(labeling)
    monos = spanning_monomials(n, labeling, reduced=reduced)
    tuples = list(itertools.product(*(alg.degree_basis(t) for t in labeling)))
    matrix = []
    for m in monos:
        p = LiePolynomial.monomial(m)
        row: list[Fraction] = []
        for tup in tuples:
            a = {i + 1: alg.basis_element(b) for i, b in enumerate(tup)}
            row.extend(evaluate(alg, p, a).coords)
        matrix.append(row)
    return EvaluationBlock(tuple(labeling), monos, matrix)


def naive_codimension(alg: GradedLieAlgebra, n: int) -> int:
    """Sum over all labelings of the rank of the full monomial evaluation matrix."""
    total = 0
    for lab in itertools.product(range(alg.semigroup.size), repeat=n):
        blk = evaluation_block(alg, lab)
        if blk.matrix and blk.shape[1]:
            total += fraction_free_rank(to_integer_matrix(blk.matrix))
    return total


# ---------------------------------------------------------------------------
# Multiplicities via the symmetrizer
# ---------------------------------------------------------------------------

def _transpose_batch(batch: dict, i: int, j: int) -> dict:
    """(i j) acting on functions: swap the argument axes and the types."""
    out = {}
    for s, A in batch.items():
        t = list(s)
        t[i], t[j] = t[j], t[i]
        out[tuple(t)] = np.swapaxes(A, 1 + i, 1 + j)
    return out


def _add_into(acc: dict, batch: dict, sign: int = 1) -> None:
    for s, A in batch.items():
        if s in acc:
            acc[s] = acc[s] + A if sign == 1 else acc[s] - A
        else:
            acc[s] = A.copy() if sign == 1 else -A


def _group_sum(batch: dict, block: Sequence[int], signed: bool) -> dict:
    """Sum over Sym(block) (signed if asked), as prod_j (1 +- sum_{i<j} (i j))."""
    cur = batch
    pos = [b - 1 for b in block]
    for jj in range(len(pos) - 1, 0, -1):
        nxt = {s: A.copy() for s, A in cur.items()}
        for ii in range(jj):
            _add_into(nxt, _transpose_batch(cur, pos[ii], pos[jj]), -1 if signed else 1)
        cur = nxt
    return cur


def _promote(batch: dict, factor: int) -> dict:
    big = max((max(abs(int(A.max())), abs(int(A.min()))) for A in batch.values() if A.size), default=0)
    if big * factor >= _INT64_SAFE:
        return {s: A.astype(object) for s, A in batch.items()}
    return batch


def apply_young_symmetrizer(batch: dict, T: YoungTableau) -> dict:
    """b_T a_T applied to a batch of functions (row symmetrization first)."""
    batch = _promote(batch, symmetrizer_size(T))
    for row in T.rows:
        if len(row) > 1:
            batch = _group_sum(batch, row, signed=False)
    for col in T.columns:
        if len(col) > 1:
            batch = _group_sum(batch, col, signed=True)
    return batch


def _batch_rank(batch: dict, selector: _Selector) -> int:
    keys = sorted(batch)
    if not keys:
        return 0
    R = next(iter(batch.values())).shape[0]
    flat = np.concatenate([_flat(batch[k]) for k in keys], axis=1)
    flat = flat[np.any(flat != 0, axis=1)]
    if flat.shape[0] == 0:
        return 0
    if flat.dtype == object:
        return fraction_free_rank(flat)
    return len(selector.select(flat))


def multiplicity(alg: GradedLieAlgebra, T: YoungTableau | Sequence[int], n: int | None = None,
                 config: EngineConfig | None = None, engine: CodimEngine | None = None) -> int:
    """m_lambda = dim of b_T a_T applied to the function space of degree n."""
    if not isinstance(T, YoungTableau):
        T = column_filled_tableau(T)
    n = T.n if n is None else n
    if n != T.n:
        raise ValueError("tableau size does not match n")
    cfg = config or (engine.config if engine else EngineConfig())
    if n > cfg.cochar_cap:
        raise CapExceeded(f"n = {n} exceeds the cocharacter cap {cfg.cochar_cap}")
    if symmetrizer_size(T) > cfg.symmetrizer_cap:
        raise SymmetrizerTooLarge(f"|R||C| = {symmetrizer_size(T)} exceeds cap {cfg.symmetrizer_cap}")
    eng = engine or CodimEngine(alg, graded_types(alg), cfg)
    k = len(eng.types.dims)
    total = 0
    seqs = ([tuple(t for t in range(k) for _ in range(c[t])) for c in _compositions(n, k)]
            if eng.types.disjoint else [(0,) * n])
    for s in seqs:
        orbit = eng.orbit_batch(s)
        if not orbit or next(iter(orbit.values())).shape[0] == 0:
            continue
        # one batch per arrangement; stacking them would mix rows of different supports
        rows = []
        for arr, A in orbit.items():
            out = apply_young_symmetrizer({arr: A}, T)
            rows.append(out)
        total += _stacked_rank(rows, eng.selector)
    return total


def _stacked_rank(batches: list[dict], selector: _Selector) -> int:
    keys = sorted({k for b in batches for k in b})
    blocks = []
    for b in batches:
        R = next(iter(b.values())).shape[0]
        cols = []
        for k in keys:
            if k in b:
                cols.append(_flat(b[k]))
            else:
                ref = next(bb[k] for bb in batches if k in bb)
                cols.append(np.zeros((R, int(np.prod(ref.shape[1:]))), dtype=ref.dtype))
        blocks.append(np.concatenate(cols, axis=1))
    flat = np.concatenate(blocks, axis=0)
    flat = flat[np.any(flat != 0, axis=1)]
    if flat.shape[0] == 0:
        return 0
    if flat.dtype == object:
        return fraction_free_rank(flat)
    return len(selector.select(flat))


@dataclass
class CocharacterTable:
    n: int
    multiplicities: dict[Partition, int]
    dims: dict[Partition, int]
    codimension: int | None = None

    def weighted_sum(self) -> int:
        return sum(m * self.dims[lam] for lam, m in self.multiplicities.items())

    def consistent(self) -> bool | None:
        return None if self.codimension is None else self.weighted_sum() == self.codimension

    def rows(self):
        for lam, m in self.multiplicities.items():
            yield lam, m, self.dims[lam], m * self.dims[lam]


def cocharacter_table(alg: GradedLieAlgebra, n: int, config: EngineConfig | None = None,
                      engine: CodimEngine | None = None, with_codimension: bool = True) -> CocharacterTable:
    cfg = config or (engine.config if engine else EngineConfig())
    if n > cfg.cochar_cap:
        raise CapExceeded(f"n = {n} exceeds the cocharacter cap {cfg.cochar_cap}")
    eng = engine or CodimEngine(alg, graded_types(alg), cfg)
    lams = list(partitions_of(n))
    # warm the shared memo before fanning out
    for s in (tuple(t for t in range(len(eng.types.dims)) for _ in range(c[t]))
              for c in _compositions(n, len(eng.types.dims))):
        eng.block(s) if eng.types.disjoint else None
    if not eng.types.disjoint:
        eng.block((0,) * n)

    def one(lam):
        return multiplicity(alg, column_filled_tableau(lam), n, cfg, eng)

    if cfg.jobs > 1:
        with ThreadPoolExecutor(cfg.jobs) as pool:
            ms = list(pool.map(one, lams))
    else:
        ms = [one(lam) for lam in lams]
    codim = eng.codimension(n)[0] if with_codimension else None
    return CocharacterTable(n, dict(zip(lams, ms)), {lam: specht_dim(lam) for lam in lams}, codim)


@dataclass
class ThetaReport:
    n: int
    inadmissible: dict[Partition, int]  # lambda -> computed m (must be 0)
    admissible_zero: list[Partition]
    violations: list[Partition] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def theta_crosscheck(alg: GradedLieAlgebra, n: int, config: EngineConfig | None = None,
                     engine: CodimEngine | None = None,
                     table: CocharacterTable | None = None) -> ThetaReport:
    """Every shape outside the admissible region must have multiplicity 0."""
    tab = table or cocharacter_table(alg, n, config, engine, with_codimension=False)
    bad = {lam: m for lam, m in tab.multiplicities.items() if not theta_admissible(lam)}
    zero = [lam for lam, m in tab.multiplicities.items() if theta_admissible(lam) and m == 0]
    return ThetaReport(n, bad, zero, [lam for lam, m in bad.items() if m != 0])


# ---------------------------------------------------------------------------
# Integer valuations on the basis
# ---------------------------------------------------------------------------

EXAMPLE_THETA = {"u0": 0, "uu": 0, "v0": 1, "vv": 1, "t0": -1}


def example_theta(alg: GradedLieAlgebra) -> tuple[int, ...]:
    """The valuation behind the admissible-shape filter, by basis name."""
    return tuple(EXAMPLE_THETA[name] for name in alg.basis_names)


def valuation_range(alg: GradedLieAlgebra, theta: Sequence[int], n: int) -> tuple[int, int] | None:
    """(min, max) of sum theta(b_i) over basis tuples with [b_1, ..., b_n] != 0.

    Exhaustive over left-normed brackets, pruning zero prefixes.
    """
    table = alg.table
    layer = {}
    for i in range(alg.dim):
        layer.setdefault(theta[i], set()).add(alg.basis_element(i).coords)
    for _ in range(n - 1):
        nxt: dict[int, set] = {}
        for val, elems in layer.items():
            for x in elems:
                for j in range(alg.dim):
                    out = [Fraction(0)] * alg.dim
                    for i, c in enumerate(x):
                        if c:
                            for k, y in enumerate(table[i][j]):
                                if y:
                                    out[k] += c * y
                    if any(out):
                        nxt.setdefault(val + theta[j], set()).add(tuple(out))
        layer = nxt
    return (min(layer), max(layer)) if layer else None
