"""Finite semigroups given by multiplication tables."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FiniteSemigroup:
    """Elements are ``0..size-1``; ``table[i][j]`` is the product ``i*j``."""

    size: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("semigroup must be nonempty")
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.size or any(len(r) != self.size for r in table):
            raise ValueError("table must be size x size")
        if any(not 0 <= x < self.size for r in table for x in r):
            raise ValueError("table entry out of range")
        for a in range(self.size):
            for b in range(self.size):
                for c in range(self.size):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise ValueError(f"not associative at ({a}, {b}, {c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.size) for b in range(self.size))

    def elements(self) -> range:
        return range(self.size)


def multiplicative_z2() -> FiniteSemigroup:
    """({0, 1}, *): 0 absorbing, 1 the identity."""
    return FiniteSemigroup(2, ((0, 0), (0, 1)))


def trivial_semigroup() -> FiniteSemigroup:
    return FiniteSemigroup(1, ((0,),))


def left_zero_semigroup(k: int = 2) -> FiniteSemigroup:
    """x*y = x; associative and non-commutative for k >= 2."""
    return FiniteSemigroup(k, tuple(tuple(i for _ in range(k)) for i in range(k)))
