"""Partitions, Specht dimensions, Young tableaux and symmetrizers."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .freepoly import LiePolynomial, apply_permutation, compose, sign

Partition = tuple[int, ...]

SYMMETRIZER_CAP = 10**7


class SymmetrizerTooLarge(ValueError):
    pass


def as_partition(parts: Sequence[int]) -> Partition:
    lam = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {tuple(parts)}")
    return lam


def parse_partition(text: str) -> Partition:
    return as_partition([int(x) for x in text.split(",") if x.strip()])


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    lam = as_partition(lam)
    conj = conjugate(lam)
    return [[lam[i] - j - 1 + conj[j] - i for j in range(lam[i])] for i in range(len(lam))]


def specht_dim(lam: Sequence[int]) -> int:
    """Hook length formula n! / prod of hooks."""
    lam = as_partition(lam)
    prod = math.prod(h for row in hook_lengths(lam) for h in row)
    return math.factorial(sum(lam)) // prod


@lru_cache(maxsize=None)
def _branching(lam: Partition) -> int:
    if sum(lam) <= 1:
        return 1
    total = 0
    for i, p in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < p:
            smaller = lam[:i] + (p - 1,) + lam[i + 1:]
            total += _branching(tuple(x for x in smaller if x))
    return total


def specht_dim_branching(lam: Sequence[int]) -> int:
    """dim S^lam as the sum over removable corners (independent of hooks)."""
    return _branching(as_partition(lam))


def theta_admissible(lam: Sequence[int]) -> bool:
    """Shape filter for the five-dimensional example: at most five rows and
    lam_1 + 1 >= lam_4 + lam_5."""
    p = list(as_partition(lam)) + [0] * 6
    return p[5] == 0 and p[0] + 1 >= p[3] + p[4]


# ---------------------------------------------------------------------------
# Tableaux and symmetrizers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class YoungTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        as_partition([len(r) for r in rows])
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau entries must be exactly 1..n")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    @property
    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))] \
            if self.rows else []

    def is_standard(self) -> bool:
        rows_ok = all(list(r) == sorted(r) for r in self.rows)
        cols_ok = all(list(c) == sorted(c) for c in self.columns)
        return rows_ok and cols_ok


def row_filled_tableau(lam: Sequence[int]) -> YoungTableau:
    lam = as_partition(lam)
    rows, k = [], 1
    for p in lam:
        rows.append(tuple(range(k, k + p)))
        k += p
    return YoungTableau(tuple(rows))


def column_filled_tableau(lam: Sequence[int]) -> YoungTableau:
    lam = as_partition(lam)
    rows = [[0] * p for p in lam]
    k = 1
    for j, h in enumerate(conjugate(lam)):
        for i in range(h):
            rows[i][j] = k
            k += 1
    return YoungTableau(tuple(tuple(r) for r in rows))


def standard_tableaux(lam: Sequence[int]) -> Iterator[YoungTableau]:
    """All standard tableaux of shape lam (place n into a removable corner)."""
    lam = as_partition(lam)
    n = sum(lam)
    if n == 0:
        yield YoungTableau(())
        return
    for i, p in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < p:
            smaller = tuple(x for x in lam[:i] + (p - 1,) + lam[i + 1:] if x)
            for t in standard_tableaux(smaller):
                rows = [list(r) for r in t.rows]
                if i == len(rows):
                    rows.append([])
                rows[i].append(n)
                yield YoungTableau(tuple(tuple(r) for r in rows))


def _group(blocks: Sequence[Sequence[int]], n: int, signed: bool):
    """All (sign, permutation) in the product of the symmetric groups on blocks."""
    per_block = []
    for b in blocks:
        per_block.append([(tuple(b), img) for img in itertools.permutations(b)])
    for choice in itertools.product(*per_block):
        perm = list(range(1, n + 1))
        for src, img in choice:
            for a, b in zip(src, img):
                perm[a - 1] = b
        perm = tuple(perm)
        yield (sign(perm) if signed else 1), perm


def row_group(T: YoungTableau):
    return list(_group(T.rows, T.n, False))


def column_group(T: YoungTableau):
    return list(_group(T.columns, T.n, True))


def symmetrizer_size(T: YoungTableau) -> int:
    return (math.prod(math.factorial(len(r)) for r in T.rows)
            * math.prod(math.factorial(len(c)) for c in T.columns))


@dataclass(frozen=True)
class SymmetrizerSum:
    terms: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def degree(self) -> int:
        return len(self.terms[0][1]) if self.terms else 0

    def __len__(self) -> int:
        return len(self.terms)


def young_symmetrizer_star(T: YoungTableau, cap: int = SYMMETRIZER_CAP) -> SymmetrizerSum:
    """sum over sigma in R_T, tau in C_T of sgn(tau) * (tau o sigma)."""
    size = symmetrizer_size(T)
    if size > cap:
        raise SymmetrizerTooLarge(f"|R||C| = {size} exceeds cap {cap}")
    R = row_group(T)
    C = column_group(T)
    return SymmetrizerSum(tuple((st, compose(tau, sigma)) for st, tau in C for _, sigma in R))


def apply_symmetrizer(s: SymmetrizerSum, p: LiePolynomial) -> LiePolynomial:
    if p.terms and s.degree != p.degree:
        raise ValueError(f"symmetrizer degree {s.degree} != polynomial degree {p.degree}")
    terms = []
    for sg, perm in s.terms:
        terms.extend((sg * c, m) for c, m in apply_permutation(p, perm).terms)
    return LiePolynomial.from_terms(terms)
