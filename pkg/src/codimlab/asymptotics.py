"""Entropy maximization over the admissible region and the finite bound table.

The region for q parts is
    sum x_i = 1,  x_1 >= x_2 >= ... >= x_q >= 0,  x_{q-1} + x_q <= x_1.
phi(x) = prod x_i^{-x_i} is maximized by maximizing the (concave) entropy.
Each choice of active constraints (and of trailing zero coordinates) is a
small equality-constrained entropy problem, solved by Newton's method on
its dual.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .symmetric import Partition, as_partition

UPPER_BOUND = 2 + 2 * math.sqrt(2)


def phi(x: Sequence[float]) -> float:
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise ValueError("phi needs nonnegative coordinates")
    return math.exp(entropy(arr))


def entropy(x) -> float:
    arr = np.asarray(x, dtype=float)
    pos = arr[arr > 0]
    return float(-np.sum(pos * np.log(pos)))


def closed_form_value(q: int) -> float:
    return (q - 3) + 2 * math.sqrt(2)


def closed_form_point(q: int) -> np.ndarray:
    A = 1.0 / (q - 3 + 2 * math.sqrt(2))
    x = np.full(q, A)
    x[0] = math.sqrt(2) * A
    x[-2:] = A / math.sqrt(2)
    return x


@dataclass(frozen=True)
class PolytopeSpec:
    q: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be at least 2")

    def inequalities(self) -> np.ndarray:
        """Rows g with g . x <= 0: ordering x_{i+1} - x_i and x_{q-1} + x_q - x_1."""
        q = self.q
        rows = []
        for i in range(q - 1):
            g = np.zeros(q)
            g[i + 1], g[i] = 1.0, -1.0
            rows.append(g)
        g = np.zeros(q)
        g[q - 2] += 1.0
        g[q - 1] += 1.0
        g[0] -= 1.0
        rows.append(g)
        return np.array(rows)

    def violation(self, x) -> float:
        x = np.asarray(x, dtype=float)
        v = abs(float(x.sum()) - 1.0)
        v = max(v, float(np.max(self.inequalities() @ x)), float(-x.min()))
        return max(v, 0.0)


@dataclass
class OptimizationResult:
    value: float
    point: np.ndarray
    iterations: int
    tolerance: float
    active: tuple[int, ...] = ()


class NonConvergence(RuntimeError):
    pass


def _solve_face(A: np.ndarray, b: np.ndarray, y0: np.ndarray, tol: float, max_iter: int):
    """max entropy s.t. A x = b, via Newton on the dual; x = exp(-1 - A^T y)."""
    y = y0.copy()
    for it in range(1, max_iter + 1):
        x = np.exp(np.clip(-1.0 - A.T @ y, -700, 700))
        g = b - A @ x  # gradient of the dual b.y + sum x, which is minimized
        if np.max(np.abs(g)) < tol:
            return x, it, True
        H = (A * x) @ A.T
        try:
            step = np.linalg.solve(H, -g)
        except np.linalg.LinAlgError:
            step = -np.linalg.lstsq(H, g, rcond=None)[0]
        # backtracking on the dual objective
        def dual(yy):
            return float(b @ yy + np.sum(np.exp(np.clip(-1.0 - A.T @ yy, -700, 700))))
        d0, t = dual(y), 1.0
        while t > 1e-12 and dual(y + t * step) > d0 + 1e-4 * t * float(g @ step):
            t *= 0.5
        y = y + t * step
    return np.exp(-1.0 - A.T @ y), max_iter, False


def maximize_phi(q: int, tol: float = 1e-12, max_iter: int = 40, seed: int = 0) -> OptimizationResult:
    """Global maximum of phi over the region, by enumerating active sets.

    The objective is strictly concave, so the best feasible stationary point
    over all faces is the global maximizer.  Faces with trailing zero
    coordinates are included (for q = 2 the region is a single point with
    x_2 = 0).  ``seed`` perturbs the Newton starting point only.
    """
    spec = PolytopeSpec(q)
    G_full = spec.inequalities()
    rng = np.random.default_rng(seed)
    best: OptimizationResult | None = None
    total_iter = 0
    for zeros in range(q):
        k = q - zeros
        G = G_full[:, :k]
        G = np.unique(G[np.any(G != 0, axis=1)], axis=0) if k > 1 else np.zeros((0, 1))
        for r in range(len(G) + 1):
            for active in itertools.combinations(range(len(G)), r):
                A = np.vstack([np.ones((1, k)), G[list(active)]])
                if np.linalg.matrix_rank(A) < A.shape[0]:
                    continue
                b = np.zeros(A.shape[0])
                b[0] = 1.0
                y0 = np.zeros(A.shape[0])
                y0[0] = math.log(k) - 1.0
                y0 += 1e-3 * rng.standard_normal(A.shape[0])
                xk, it, ok = _solve_face(A, b, y0, tol * 1e-2, max_iter)
                total_iter += it
                x = np.concatenate([xk, np.zeros(zeros)])
                if not ok or spec.violation(x) > 1e-12:
                    continue
                val = phi(x)
                if best is None or val > best.value:
                    best = OptimizationResult(val, x, 0, 0.0, active)
    if best is None:
        raise NonConvergence(f"no face converged for q = {q}")
    best.iterations = total_iter
    best.tolerance = spec.violation(best.point)
    return best


class InfeasiblePoint(ValueError):
    pass


def mu_partition(alpha: Sequence[float], n: int, pair_constraint: bool = False) -> Partition:
    """mu_i = floor(n alpha_i) for i >= 2 and mu_1 = n - sum_{i>=2} mu_i.

    alpha must be a descending probability vector; the pair constraint
    x_{q-1} + x_q <= x_1 is only enforced when asked for.
    """
    a = np.asarray(alpha, dtype=float)
    if np.any(a < -1e-12) or abs(a.sum() - 1) > 1e-9 or np.any(np.diff(a) > 1e-12):
        raise InfeasiblePoint("alpha must be a descending probability vector")
    if pair_constraint and PolytopeSpec(len(a)).violation(a) > 1e-9:
        raise InfeasiblePoint("alpha violates x_{q-1} + x_q <= x_1")
    if n < len(a):
        raise ValueError("n must be at least the number of parts")
    tail = [int(math.floor(n * x + 1e-12)) for x in a[1:]]
    parts = [n - sum(tail)] + tail
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise InfeasiblePoint(f"non-monotone parts {parts}")
    return as_partition([p for p in parts if p > 0])


@dataclass
class BoundRow:
    n: int
    c_n: int
    nth_root: float
    upper_bound: float
    trivial_bound: int

    @property
    def within_trivial(self) -> bool:
        return self.c_n <= self.trivial_bound

    @property
    def within_upper(self) -> bool:
        return self.nth_root <= self.upper_bound


@dataclass
class BoundReport:
    rows: list[BoundRow] = field(default_factory=list)
    note: str = "the limit of c_n^(1/n) is asymptotic and is not checked at finite n"

    @property
    def ok(self) -> bool:
        return all(r.within_trivial and r.within_upper for r in self.rows)


def bound_report(alg, n_range: Sequence[int], engine=None, config=None) -> BoundReport:
    from .codim import CodimEngine, graded_types

    eng = engine or CodimEngine(alg, graded_types(alg), config)
    rep = BoundReport()
    for n in n_range:
        c, _ = eng.codimension(n)
        rep.rows.append(BoundRow(n, c, c ** (1.0 / n), UPPER_BOUND, alg.dim ** (n + 1)))
    return rep
