import itertools
import math

import pytest
from hypothesis import given, strategies as st

from codimlab.algebra import build_paper_algebra
from codimlab.freepoly import LiePolynomial, Var, evaluate, left_normed, compose
from codimlab.symmetric import (SymmetrizerTooLarge, apply_symmetrizer, column_filled_tableau,
                                conjugate, format_partition, parse_partition, partitions_of,
                                row_filled_tableau, specht_dim, specht_dim_branching,
                                standard_tableaux, symmetrizer_size, theta_admissible,
                                young_symmetrizer_star, YoungTableau)


def test_partition_counts():
    assert len(list(partitions_of(4))) == 5
    assert len(list(partitions_of(6))) == 11
    assert list(partitions_of(0)) == [()]
    ps = list(partitions_of(7))
    assert ps == sorted(ps, reverse=True) and len(set(ps)) == len(ps) == 15


def test_specht_examples():
    assert specht_dim((5,)) == 1
    assert specht_dim((1,) * 6) == 1
    assert specht_dim((2, 1)) == 2 == len(list(standard_tableaux((2, 1))))
    assert specht_dim_branching((2, 2)) == 2
    assert specht_dim_branching((1,)) == 1


def test_hook_equals_branching_up_to_10():
    for n in range(1, 11):
        for lam in partitions_of(n):
            assert specht_dim(lam) == specht_dim_branching(lam)


def test_sum_of_squares():
    for n in range(1, 9):
        assert sum(specht_dim(l) ** 2 for l in partitions_of(n)) == math.factorial(n)


def test_standard_tableaux_count():
    for lam in partitions_of(6):
        tabs = list(standard_tableaux(lam))
        assert len(tabs) == specht_dim(lam)
        assert all(t.is_standard() for t in tabs)


def test_rectangle_bound():
    for t in range(1, 5):
        for k in range(1, 6):
            lhs = specht_dim((2 * k,) * t) * math.factorial(2 * k + t) ** t
            assert lhs >= math.factorial(2 * k * t)


partition = st.lists(st.integers(1, 9), min_size=1, max_size=5).map(lambda v: tuple(sorted(v, reverse=True)))


@given(partition)
def test_conjugate_symmetry(lam):
    assert conjugate(conjugate(lam)) == lam
    assert specht_dim(lam) == specht_dim(conjugate(lam))
    assert parse_partition(format_partition(lam)) == lam


@given(partition)
def test_multinomial_sandwich(lam):
    n, k = sum(lam), len(lam)
    upper = math.factorial(n) // math.prod(math.factorial(p) for p in lam)
    d = specht_dim(lam)
    assert d <= upper
    assert d * n ** (k * (k - 1)) >= upper


def test_theta_filter():
    assert theta_admissible((2, 2, 2, 1, 1))
    assert not theta_admissible((1,) * 6)
    assert not theta_admissible((3, 3, 3, 3, 3))
    assert theta_admissible((1,) * 5) and theta_admissible((1, 1, 1, 1))


def test_small_symmetrizers():
    s = young_symmetrizer_star(YoungTableau(((1, 2),)))
    assert set(s.terms) == {(1, (1, 2)), (1, (2, 1))}
    s = young_symmetrizer_star(YoungTableau(((1,), (2,))))
    assert set(s.terms) == {(1, (1, 2)), (-1, (2, 1))}
    T = column_filled_tableau((2, 2, 2, 1, 1))
    assert symmetrizer_size(T) == 5760 == len(young_symmetrizer_star(T))
    with pytest.raises(SymmetrizerTooLarge):
        young_symmetrizer_star(T, cap=1000)


def test_symmetrizer_terms_are_tau_after_sigma():
    T = row_filled_tableau((2, 1))
    s = young_symmetrizer_star(T)
    # (tau o sigma) with sigma = (1 2) in the row and tau = (1 3) in the column
    assert (-1, compose((3, 2, 1), (2, 1, 3))) in s.terms


def test_antisymmetrizer_on_a_bracket():
    p = LiePolynomial.monomial(left_normed([Var(1, 0), Var(2, 0)]))
    q = apply_symmetrizer(young_symmetrizer_star(YoungTableau(((1,), (2,)))), p)
    assert q == LiePolynomial.from_terms([(1, left_normed([Var(1, 0), Var(2, 0)])),
                                          (-1, left_normed([Var(2, 0), Var(1, 0)]))])
    L = build_paper_algebra()
    a = {1: L.basis_element(0), 2: L.basis_element(4)}
    assert evaluate(L, q, a) == evaluate(L, p, a) * 2


def test_degree_mismatch():
    p = LiePolynomial.monomial(left_normed([Var(1, 0), Var(2, 0), Var(3, 0)]))
    with pytest.raises(ValueError):
        apply_symmetrizer(young_symmetrizer_star(YoungTableau(((1, 2),))), p)


def test_tableau_validation():
    with pytest.raises(ValueError):
        YoungTableau(((1, 3),))
    assert column_filled_tableau((3, 1)).rows == ((1, 3, 4), (2,))
    assert row_filled_tableau((3, 1)).rows == ((1, 2, 3), (4,))
