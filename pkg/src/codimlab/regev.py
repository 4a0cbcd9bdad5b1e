"""The Regev central polynomial of t x t matrices.

f_t = sum over sigma, tau in S_{t^2} of sgn(sigma) sgn(tau) times the word
    x_s(1) | y_t(1) | x_s(2) x_s(3) x_s(4) | y_t(2) y_t(3) y_t(4) | ...
with x-blocks and y-blocks alternating and of sizes 1, 1, 3, 3, ..., 2t-1, 2t-1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .freepoly import sign

NAIVE_MAX_T = 2
DP_MAX_T = 3


class RegevGuard(ValueError):
    pass


@dataclass(frozen=True)
class RegevDescriptor:
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be positive")

    @property
    def size(self) -> int:
        return self.t * self.t

    @property
    def degree(self) -> int:
        return 2 * self.size

    @property
    def blocks(self) -> list[tuple[str, int]]:
        out = []
        for k in range(1, 2 * self.t, 2):
            out += [("x", k), ("y", k)]
        return out

    @property
    def slots(self) -> list[str]:
        """'x' or 'y' for each position of the word."""
        return [kind for kind, k in self.blocks for _ in range(k)]


def _check(desc: RegevDescriptor, X, Y, limit: int, name: str):
    if desc.t > limit:
        raise RegevGuard(f"{name} evaluator is limited to t <= {limit}")
    X, Y = np.asarray(X), np.asarray(Y)
    n = desc.size
    if X.shape[0] != n or Y.shape[0] != n:
        raise ValueError(f"need {n} x-matrices and {n} y-matrices")
    if X.shape[1:] != Y.shape[1:] or X.ndim != 3 or X.shape[1] != X.shape[2]:
        raise ValueError("matrices must be square and of one size")
    return X, Y


def regev_eval_naive(desc: RegevDescriptor, X, Y) -> np.ndarray:
    """Direct double sum over (t^2)!^2 terms."""
    X, Y = _check(desc, X, Y, NAIVE_MAX_T, "naive")
    n, d = desc.size, X.shape[1]
    slots = desc.slots
    dtype = object if X.dtype == object or Y.dtype == object else np.int64
    out = np.zeros((d, d), dtype=dtype)
    perms = list(itertools.permutations(range(1, n + 1)))
    for s in perms:
        for t in perms:
            ix = iter(s)
            iy = iter(t)
            m = np.eye(d, dtype=dtype)
            for kind in slots:
                m = m @ (X[next(ix) - 1] if kind == "x" else Y[next(iy) - 1])
            out = out + sign(s) * sign(t) * m
    return out


def regev_eval_dp(desc: RegevDescriptor, X, Y) -> np.ndarray:
    """Same sum by a signed dynamic program over (used x-set, used y-set).

    Appending index i after the set S adds |{j in S : j > i}| inversions.
    Works on a leading batch axis too: X, Y of shape (n, B, d, d).
    """
    X, Y = np.asarray(X), np.asarray(Y)
    batched = X.ndim == 4
    if not batched:
        X, Y = X[:, None], Y[:, None]
    _check(desc, X[:, 0], Y[:, 0], DP_MAX_T, "dynamic-programming")
    n = desc.size
    B, d = X.shape[1], X.shape[2]
    dtype = object if X.dtype == object or Y.dtype == object else np.int64
    eye = np.broadcast_to(np.eye(d, dtype=dtype), (B, d, d)).copy()
    states: dict[tuple[int, int], np.ndarray] = {(0, 0): eye}
    for kind in desc.slots:
        M = X if kind == "x" else Y
        nxt: dict[tuple[int, int], np.ndarray] = {}
        for (sx, sy), val in states.items():
            used = sx if kind == "x" else sy
            for i in range(n):
                if used >> i & 1:
                    continue
                higher = bin(used >> (i + 1)).count("1")
                term = val @ M[i]
                if higher % 2:
                    term = -term
                key = (sx | 1 << i, sy) if kind == "x" else (sx, sy | 1 << i)
                if key in nxt:
                    nxt[key] = nxt[key] + term
                else:
                    nxt[key] = term
        states = nxt
    (val,) = states.values()
    return val if batched else val[0]


def matrix_units(t: int) -> list[np.ndarray]:
    out = []
    for i in range(t):
        for j in range(t):
            e = np.zeros((t, t), dtype=np.int64)
            e[i, j] = 1
            out.append(e)
    return out


def is_scalar(m: np.ndarray) -> bool:
    d = m.shape[0]
    return bool(np.all(m == m[0, 0] * np.eye(d, dtype=m.dtype)))


@dataclass
class SweepReport:
    t: int
    tuples: int
    all_scalar: bool
    nonzero: int
    scalars: dict[int, int] = field(default_factory=dict)  # scalar value -> count
    commutes: bool = True

    @property
    def ok(self) -> bool:
        return self.all_scalar and self.nonzero > 0 and self.commutes


def sweep_values(t: int = 2, chunk: int = 4096):
    """Yield (tuple index, value matrix) over all matrix-unit tuples, in order."""
    desc = RegevDescriptor(t)
    units = np.array(matrix_units(t))
    n = desc.size
    k = len(units)
    total = k ** (2 * n)
    for start in range(0, total, chunk):
        ids = np.arange(start, min(total, start + chunk))
        digits = np.stack([(ids // k ** (2 * n - 1 - p)) % k for p in range(2 * n)])
        X = units[digits[:n]]
        Y = units[digits[n:]]
        vals = regev_eval_dp(desc, X, Y)
        for idx, v in zip(ids, vals):
            yield int(idx), v


def centrality_sweep(t: int = 2) -> SweepReport:
    """Evaluate at every tuple of matrix units; every value must be scalar."""
    if t > 2:
        raise RegevGuard("the full sweep is limited to t <= 2")
    units = matrix_units(t)
    rep = SweepReport(t, 0, True, 0)
    for _, v in sweep_values(t):
        rep.tuples += 1
        if not is_scalar(v):
            rep.all_scalar = False
        for e in units:
            if np.any(v @ e - e @ v):
                rep.commutes = False
        c = int(v[0, 0])
        if c:
            rep.nonzero += 1
            rep.scalars[c] = rep.scalars.get(c, 0) + 1
    return rep
