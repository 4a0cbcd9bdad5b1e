"""Exact and modular linear algebra over the rationals.

Small matrices (algebra-sized, at most a few dozen columns) go through
``Fraction`` reduced echelon forms.  The large, integer-valued evaluation
matrices of the codimension engine use fraction-free elimination on numpy
integer arrays, promoted to Python integers when int64 could overflow.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

_INT64_SAFE = 2**62


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


# ---------------------------------------------------------------------------
# Small exact matrices (lists of Fraction rows)
# ---------------------------------------------------------------------------

def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[as_fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} for A given by rows."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def mat_vec(a, v):
    return [sum((a[i][k] * v[k] for k in range(len(v))), Fraction(0)) for i in range(len(a))]


def identity(d: int):
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


# ---------------------------------------------------------------------------
# Rank of large integer matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RankReport:
    rank: int
    method: str  # "exact" or "modular"
    certified: bool
    primes: tuple[int, ...] = ()
    caveat: str = ""


def to_integer_matrix(matrix) -> np.ndarray:
    """Scale each row by its denominator lcm; rank is unchanged."""
    arr = np.asarray(matrix, dtype=object)
    if arr.ndim != 2:
        arr = arr.reshape(arr.shape[0], -1) if arr.size else np.zeros((0, 0), dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for i, row in enumerate(arr):
        fr = [as_fraction(x) for x in row]
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        out[i] = [int(f * den) for f in fr]
    return _shrink(out)


def _shrink(a: np.ndarray) -> np.ndarray:
    if a.dtype != object:
        return a
    if a.size == 0:
        return a.astype(np.int64)
    big = max(abs(int(a.max())), abs(int(a.min())))
    return a.astype(np.int64) if big < _INT64_SAFE else a


def _normalize_rows(a: np.ndarray) -> np.ndarray:
    g = np.gcd.reduce(a, axis=1)
    g = np.where(g == 0, 1, g)
    if a.dtype == object:
        return np.array([[x // gi for x in row] for row, gi in zip(a, g)], dtype=object).reshape(a.shape)
    return a // g[:, None]


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def fraction_free_rank(matrix, select_rows: bool = False):
    """Exact rank of an integer (or rational) matrix.

    Division-free elimination: each update is ``p*row - row[c]*pivot_row``
    followed by division by the row content, so entries stay integral and
    small.  Returns ``rank`` or ``(rank, pivot_row_indices)``; the selected
    original rows are linearly independent and span the row space.
    """
    a = np.asarray(matrix)
    if a.dtype.kind not in "iu":
        a = to_integer_matrix(a)
    a = a.copy()
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        return (0, []) if select_rows else 0
    keep = np.any(a != 0, axis=0)
    a = a[:, keep]
    rows_left = np.arange(a.shape[0])
    chosen: list[int] = []
    for c in range(a.shape[1]):
        if rows_left.size == 0:
            break
        col = a[rows_left, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        # smallest pivot keeps growth down
        mags = np.abs(col[nz].astype(object) if a.dtype == object else col[nz])
        k = nz[int(np.argmin(mags))]
        p = rows_left[k]
        chosen.append(int(p))
        rows_left = np.delete(rows_left, k)
        others = rows_left[a[rows_left, c] != 0]
        if others.size == 0:
            continue
        piv = a[p]
        pv = piv[c]
        sub = a[others]
        if a.dtype != object:
            bound = abs(int(pv)) * _maxabs(sub) + _maxabs(sub[:, c]) * _maxabs(piv)
            if bound >= _INT64_SAFE:
                a = a.astype(object)
                piv, pv, sub = a[p], a[p][c], a[others]
        sub = pv * sub - sub[:, c:c + 1] * piv[None, :]
        a[others] = _normalize_rows(sub)
    rank = len(chosen)
    return (rank, sorted(chosen)) if select_rows else rank


def random_primes(count: int, seed: int = 0, low: int = 2**30, high: int = 2**31) -> list[int]:
    from sympy import isprime

    rng = random.Random(seed)
    out: list[int] = []
    while len(out) < count:
        c = rng.randrange(low, high) | 1
        if c not in out and isprime(c):
            out.append(c)
    return out


def modular_rank(matrix, p: int, select_rows: bool = False):
    """Rank over GF(p); never exceeds the rational rank."""
    a = np.asarray(matrix)
    if a.dtype == object or a.dtype.kind not in "iu":
        a = to_integer_matrix(a)
        a = np.array([[int(x) % p for x in row] for row in a], dtype=np.int64).reshape(a.shape)
    else:
        a = np.mod(a, p).astype(np.int64)
    if a.ndim != 2 or a.size == 0:
        return (0, []) if select_rows else 0
    a = a[:, np.any(a != 0, axis=0)]
    rows_left = np.arange(a.shape[0])
    chosen: list[int] = []
    for c in range(a.shape[1]):
        if rows_left.size == 0:
            break
        nz = np.nonzero(a[rows_left, c])[0]
        if nz.size == 0:
            continue
        k = nz[0]
        prow = rows_left[k]
        chosen.append(int(prow))
        rows_left = np.delete(rows_left, k)
        inv = pow(int(a[prow, c]), p - 2, p)
        a[prow] = (a[prow] * inv) % p
        others = rows_left[a[rows_left, c] != 0]
        if others.size:
            f = a[others, c]
            a[others] = (a[others] - (f[:, None] * a[prow][None, :]) % p) % p
    rank = len(chosen)
    return (rank, sorted(chosen)) if select_rows else rank


def rank_certified(matrix, mode: str = "exact", seed: int = 0, n_primes: int = 2) -> RankReport:
    """Rank with a statement of how far it can be trusted.

    ``exact``: fraction-free elimination, certified.
    ``modular``: ranks modulo ``n_primes`` random primes in (2^30, 2^31); the
    maximum is reported and flagged certified only if all primes agree, with
    a caveat since agreement is probabilistic evidence, not proof.
    """
    if mode == "exact":
        return RankReport(fraction_free_rank(matrix), "exact", True)
    if mode != "modular":
        raise ValueError(f"unknown rank mode {mode!r}")
    primes = tuple(random_primes(max(2, n_primes), seed))
    ranks = [modular_rank(matrix, p) for p in primes]
    agree = len(set(ranks)) == 1
    return RankReport(max(ranks), "modular", agree, primes,
                      "probabilistic: ranks agree modulo random primes" if agree
                      else "primes disagree; reported maximum")
