"""Alternating witness polynomials for the five-dimensional example.

Eight alternating block types are assembled, one block per column of a
Young tableau, into a left-normed bracket whose symmetrization does not
vanish on the algebra.  The substitution puts one fixed basis element in
each cell of the tableau.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import AlgebraElement, GradedLieAlgebra
from .freepoly import (LiePolynomial, Var, _Evaluator, left_normed, left_normed_bracket,
                       sign)
from .symmetric import (Partition, SymmetrizerSum, YoungTableau, as_partition,
                        column_group, row_group, symmetrizer_size, SYMMETRIZER_CAP,
                        SymmetrizerTooLarge)
from .freepoly import compose

# (variable position i_k, label) in left-normed slot order
BLOCK_SLOTS: dict[int, tuple[tuple[int, int], ...]] = {
    1: ((2, 0), (4, 0), (3, 1), (1, 0), (5, 1)),
    2: ((2, 0), (4, 0), (3, 1), (1, 0)),
    3: ((2, 0), (1, 0), (3, 1)),
    4: ((1, 0), (3, 1), (2, 1)),
    5: ((1, 0), (2, 0)),
    6: ((1, 0), (2, 1)),
    7: ((1, 0),),
    8: ((1, 1),),
}

# basis names of the five-dimensional example, row by row, for each block type
BLOCK_VALUES: dict[int, tuple[str, ...]] = {
    1: ("t0", "u0", "uu", "v0", "vv"),
    2: ("t0", "u0", "uu", "v0"),
    3: ("t0", "u0", "uu"),
    4: ("t0", "vv", "uu"),
    5: ("t0", "u0"),
    6: ("t0", "vv"),
    7: ("t0",),
    8: ("uu",),
}


def block_height(kind: int) -> int:
    return len(BLOCK_SLOTS[kind])


def alternating_block(kind: int, indices: Sequence[int]) -> LiePolynomial:
    """sum over sigma in Sym(i_1..i_m) of sgn(sigma) * [x_sigma(i_a)^h, ...]."""
    slots = BLOCK_SLOTS[kind]
    m = len(slots)
    if len(indices) != m:
        raise ValueError(f"block {kind} needs {m} indices")
    terms = []
    for perm in itertools.permutations(range(1, m + 1)):
        mono = left_normed([Var(indices[perm[pos - 1] - 1], lab) for pos, lab in slots])
        terms.append((sign(perm), mono))
    return LiePolynomial.from_terms(terms)


class InconsistentBeta(ValueError):
    pass


def check_beta(beta: Sequence[int], lambda5: int) -> tuple[int, ...]:
    b = tuple(int(x) for x in beta)
    if len(b) != 7:
        raise InconsistentBeta("beta must list beta_2 .. beta_8")
    if any(x < 0 for x in b):
        raise InconsistentBeta("beta entries must be >= 0")
    b2, b3, b4, b5, b6, b7, b8 = b
    if lambda5 <= 0:
        raise InconsistentBeta("lambda_5 must be positive")
    if b3 + b5 + b7 != lambda5:
        raise InconsistentBeta("lambda_5 must equal beta_3 + beta_5 + beta_7")
    return b


def beta_to_partition(beta: Sequence[int], lambda5: int) -> Partition:
    b2, b3, b4, b5, b6, b7, b8 = check_beta(beta, lambda5)
    l5 = lambda5
    l4 = l5 + b2
    l3 = l4 + b3 + b4
    l2 = l3 + b5 + b6
    l1 = l2 + b7 + b8
    return as_partition((l1, l2, l3, l4, l5))


def partition_to_beta(lam: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """A nonnegative beta vector for lam (needs lam_5 > 0, lam_4 + lam_5 <= lam_1)."""
    p = list(as_partition(lam)) + [0] * 6
    if p[5] != 0 or p[4] <= 0 or p[3] + p[4] > p[0]:
        raise InconsistentBeta(f"no witness for shape {tuple(lam)}")
    l1, l2, l3, l4, l5 = p[:5]
    b7 = min(l5, l1 - l2)
    b5 = min(l5 - b7, l2 - l3)
    b3 = l5 - b7 - b5
    b2 = l4 - l5
    b4 = (l3 - l4) - b3
    b6 = (l2 - l3) - b5
    b8 = (l1 - l2) - b7
    beta = (b2, b3, b4, b5, b6, b7, b8)
    check_beta(beta, l5)
    return beta, l5


@dataclass(frozen=True)
class Witness:
    """A left-normed bracket of alternating blocks, one per tableau column."""

    beta: tuple[int, ...]
    lambda5: int
    column_kinds: tuple[int, ...]
    tableau: YoungTableau
    order: tuple[int, ...]  # columns in bracket order
    case: str  # "f", "f'" or "f''"

    @property
    def n(self) -> int:
        return self.tableau.n

    @property
    def shape(self) -> Partition:
        return self.tableau.shape

    def column_indices(self, c: int) -> tuple[int, ...]:
        return self.tableau.columns[c]

    def block(self, c: int) -> LiePolynomial:
        return alternating_block(self.column_kinds[c], self.column_indices(c))

    def polynomial(self) -> LiePolynomial:
        return left_normed_bracket([self.block(c) for c in self.order])

    def evaluator(self, alg: GradedLieAlgebra):
        return _WitnessEvaluator(self, alg)


class _WitnessEvaluator:
    """Evaluates a witness block by block, memoizing each block on its inputs."""

    def __init__(self, w: Witness, alg: GradedLieAlgebra):
        self.w, self.alg = w, alg
        self.blocks = [w.block(c) for c in range(len(w.column_kinds))]
        self.memo: list[dict] = [{} for _ in self.blocks]

    def block_value(self, c: int, assignment: Mapping[int, AlgebraElement]) -> tuple:
        idx = self.w.column_indices(c)
        key = tuple(assignment[i].coords for i in idx)
        hit = self.memo[c].get(key)
        if hit is None:
            ev = _Evaluator(self.alg, {i: assignment[i] for i in idx})
            out = [Fraction(0)] * self.alg.dim
            for coef, m in self.blocks[c].terms:
                for k, x in enumerate(ev(m)):
                    if x:
                        out[k] += coef * x
            hit = tuple(out)
            self.memo[c][key] = hit
        return hit

    def __call__(self, assignment: Mapping[int, AlgebraElement]) -> AlgebraElement:
        ev = _Evaluator(self.alg, {})
        cur = None
        for c in self.w.order:
            v = self.block_value(c, assignment)
            cur = v if cur is None else ev.bracket(cur, v)
        return AlgebraElement(cur)


def build_witness(beta: Sequence[int], lambda5: int) -> Witness:
    b2, b3, b4, b5, b6, b7, b8 = check_beta(beta, lambda5)
    counts = {1: lambda5, 2: b2, 3: b3, 4: b4, 5: b5, 6: b6, 7: b7, 8: b8}
    kinds = tuple(k for k in range(1, 9) for _ in range(counts[k]))
    # column-filled numbering of the tableau whose columns are the blocks
    heights = [block_height(k) for k in kinds]
    rows: list[list[int]] = [[] for _ in range(max(heights))]
    nxt = 1
    for h in heights:
        for r in range(h):
            rows[r].append(nxt)
            nxt += 1
    tableau = YoungTableau(tuple(tuple(r) for r in rows))
    cols = {k: [c for c, kk in enumerate(kinds) if kk == k] for k in range(1, 9)}
    f1 = iter(cols[1])
    order: list[int] = []
    if b7:
        case = "f"
        f3, f5, f7 = iter(cols[3]), iter(cols[5]), iter(cols[7])
        for _ in range(b3):
            order += [next(f1), next(f3)]
        for _ in range(b5):
            order += [next(f1), next(f5)]
        for _ in range(b7 - 1):
            order += [next(f1), next(f7)]
        order.append(next(f1))
        order += cols[2] + cols[4] + cols[6] + cols[8]
        order.append(next(f7))
    elif b5:
        case = "f'"
        f3, f5 = iter(cols[3]), iter(cols[5])
        for _ in range(b3):
            order += [next(f1), next(f3)]
        for _ in range(b5 - 1):
            order += [next(f1), next(f5)]
        order.append(next(f1))
        order += cols[2] + cols[4] + cols[6] + cols[8]
        order.append(next(f5))
    else:
        case = "f''"
        f3 = iter(cols[3])
        for _ in range(b3 - 1):
            order += [next(f1), next(f3)]
        order.append(next(f1))
        order += cols[2] + cols[4] + cols[6] + cols[8]
        order.append(next(f3))
    assert sorted(order) == list(range(len(kinds)))
    return Witness((b2, b3, b4, b5, b6, b7, b8), lambda5, kinds, tableau, tuple(order), case)


def build_f_family(beta: Sequence[int], lambda5: int) -> LiePolynomial:
    """The witness f (beta_7 > 0), f' (beta_7 = 0 < beta_5) or f'' as a flat polynomial."""
    return build_witness(beta, lambda5).polynomial()


def tableau_substitution(alg: GradedLieAlgebra, beta: Sequence[int],
                         lambda5: int) -> dict[int, AlgebraElement]:
    """Cell (row k, column of block type j) gets the k-th value of type j."""
    w = build_witness(beta, lambda5)
    return witness_substitution(alg, w)


def witness_substitution(alg: GradedLieAlgebra, w: Witness) -> dict[int, AlgebraElement]:
    out = {}
    for c, kind in enumerate(w.column_kinds):
        for k, i in enumerate(w.column_indices(c)):
            out[i] = alg.basis_element(alg.index(BLOCK_VALUES[kind][k]))
    return out


def block_value(alg: GradedLieAlgebra, kind: int) -> AlgebraElement:
    """A single block of the given type evaluated at its column values."""
    from .freepoly import evaluate

    m = block_height(kind)
    p = alternating_block(kind, tuple(range(1, m + 1)))
    assignment = {k + 1: alg.basis_element(alg.index(name))
                  for k, name in enumerate(BLOCK_VALUES[kind])}
    return evaluate(alg, p, assignment)


# ---------------------------------------------------------------------------
# Symmetrized evaluation without expanding the symmetrizer
# ---------------------------------------------------------------------------

def _permuted(assignment: Mapping[int, AlgebraElement], perm: Sequence[int], n: int) -> tuple:
    # (perm . p)(a) = p(a o perm), (a o perm)_i = a_{perm(i)}
    return tuple(assignment[perm[i - 1]].coords for i in range(1, n + 1))


def evaluate_symmetrized(alg: GradedLieAlgebra, terms, evaluate_fn,
                         assignment: Mapping[int, AlgebraElement], n: int) -> AlgebraElement:
    """sum of sign * (perm . p)(assignment) over (sign, perm) terms.

    Terms producing the same permuted assignment are merged first, so repeated
    values in the assignment make this much cheaper than expanding.
    """
    weights: Counter = Counter()
    for sg, perm in terms:
        weights[_permuted(assignment, perm, n)] += sg
    out = [Fraction(0)] * alg.dim
    for key, wgt in weights.items():
        if not wgt:
            continue
        val = evaluate_fn({i + 1: AlgebraElement(key[i]) for i in range(n)})
        for k, x in enumerate(val.coords):
            if x:
                out[k] += wgt * x
    return AlgebraElement(tuple(out))


def symmetrizer_terms(T: YoungTableau, order: str = "column-after-row",
                      cap: int = SYMMETRIZER_CAP):
    """Lazily yield (sign, perm) of sgn(tau) tau o sigma (or sigma o tau)."""
    if symmetrizer_size(T) > cap:
        raise SymmetrizerTooLarge(f"|R||C| = {symmetrizer_size(T)} exceeds cap {cap}")
    R, C = row_group(T), column_group(T)
    for st, tau in C:
        for _, sigma in R:
            yield st, (compose(tau, sigma) if order == "column-after-row" else compose(sigma, tau))


def row_symmetrizer_terms(T: YoungTableau):
    return [(1, s) for _, s in row_group(T)]
