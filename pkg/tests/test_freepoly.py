import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from codimlab.algebra import AlgebraElement, build_paper_algebra
from codimlab.codim import evaluation_block, example_theta, valuation_range
from codimlab.freepoly import (Br, LiePolynomial, Var, apply_permutation, compose, evaluate,
                               is_left_normed, leaves, left_normed, polynomial_from_rows,
                               polynomial_rows, sign, spanning_monomials, to_left_normed)
from codimlab.linalg import fraction_free_rank, to_integer_matrix
from codimlab.witness import alternating_block


def test_spanning_counts():
    assert spanning_monomials(1, (0,)) == [Var(1, 0)]
    assert len(spanning_monomials(2, (0, 1))) == 2
    assert len(spanning_monomials(3, (0, 0, 1))) == 6
    assert len(spanning_monomials(4, (0,) * 4, reduced=True)) == 6
    assert all(is_left_normed(m) for m in spanning_monomials(4, (1, 0, 1, 0)))


def test_permutation_moves_indices_not_labels():
    p = LiePolynomial.monomial(left_normed([Var(1, 0), Var(2, 1)]))
    q = apply_permutation(p, (2, 1))
    assert q.terms[0][1] == Br(Var(2, 0), Var(1, 1))
    assert apply_permutation(p, (1, 2)) == p


def test_permutation_size_mismatch():
    p = LiePolynomial.monomial(left_normed([Var(1, 0), Var(2, 1), Var(3, 0)]))
    with pytest.raises(ValueError):
        apply_permutation(p, (2, 1))


perm4 = st.permutations([1, 2, 3, 4]).map(tuple)


@given(perm4, perm4)
def test_action_composes(s, t):
    p = LiePolynomial.from_terms([(1, left_normed([Var(1, 0), Var(2, 1), Var(3, 0), Var(4, 1)])),
                                  (-2, left_normed([Var(3, 1), Var(1, 0), Var(4, 0), Var(2, 0)]))])
    assert apply_permutation(p, compose(s, t)) == apply_permutation(apply_permutation(p, t), s)


def test_f3_value(L):
    e = lambda n: L.basis_element(L.index(n))  # noqa: E731
    f3 = alternating_block(3, (1, 2, 3))
    val = evaluate(L, f3, {1: e("t0"), 2: e("u0"), 3: e("uu")})
    assert val == e("t0") * -8


def test_projection_kills_wrong_degree(L):
    p = LiePolynomial.monomial(Var(1, 0))
    assert evaluate(L, p, {1: L.basis_element(L.index("uu"))}).is_zero()
    f7 = alternating_block(7, (1,))
    t0 = L.basis_element(L.index("t0"))
    assert evaluate(L, f7, {1: t0}) == t0


def test_missing_index(L):
    p = LiePolynomial.monomial(left_normed([Var(1, 0), Var(2, 0)]))
    with pytest.raises(KeyError):
        evaluate(L, p, {1: L.basis_element(0)})
    with pytest.raises(ValueError):
        evaluate(L, p, {1: L.basis_element(0), 2: AlgebraElement((1, 0))})


small = st.lists(st.integers(-3, 3), min_size=5, max_size=5).map(lambda v: AlgebraElement(tuple(v)))


@given(st.permutations([1, 2, 3, 4]), st.lists(st.sampled_from([0, 1]), min_size=4, max_size=4),
       small, small, small, small, small, st.integers(-3, 3), st.integers(1, 4))
def test_multilinear(perm, labels, a, b, c, d, v2, alpha, slot):
    L = build_paper_algebra()
    p = LiePolynomial.monomial(left_normed([Var(i, labels[i - 1]) for i in perm]))
    base = {1: a, 2: b, 3: c, 4: d}
    mixed = dict(base)
    mixed[slot] = base[slot] * alpha + v2
    other = dict(base)
    other[slot] = v2
    lhs = evaluate(L, p, mixed)
    rhs = evaluate(L, p, base) * alpha + evaluate(L, p, other)
    assert lhs == rhs


def test_reduced_spanning_set_has_full_rank(L):
    # the (n-1)! monomials starting with x_1 give the same evaluation image
    for n in range(1, 6):
        for lab in itertools.product((0, 1), repeat=n):
            if n == 5 and lab not in ((0, 0, 0, 0, 0), (0, 1, 0, 1, 0), (1, 1, 0, 0, 1)):
                continue
            full = evaluation_block(L, lab)
            red = evaluation_block(L, lab, reduced=True)
            r_full = fraction_free_rank(to_integer_matrix(full.matrix))
            r_red = fraction_free_rank(to_integer_matrix(red.matrix))
            assert r_full == r_red, lab


def test_six_fold_alternation_vanishes(L):
    # a polynomial alternating in 6 variables vanishes on a 5-dimensional algebra
    terms = []
    for perm in itertools.permutations(range(1, 7)):
        terms.append((sign(perm), left_normed([Var(7, 0)] + [Var(i, 0) for i in perm])))
    p = LiePolynomial.from_terms(terms)
    rng = np.random.default_rng(2)
    for _ in range(3):
        a = {i: AlgebraElement(tuple(int(x) for x in rng.integers(-3, 4, 5))) for i in range(1, 8)}
        assert evaluate(L, p, a).is_zero()


def test_theta_sum_stays_in_range(L):
    theta = example_theta(L)
    for n in range(1, 7):
        lo, hi = valuation_range(L, theta, n)
        assert -1 <= lo and hi <= 1


def test_left_normed_rewrite_preserves_values(L):
    p = LiePolynomial.monomial(Br(Br(Var(1, 0), Var(2, 1)), Br(Var(3, 0), Br(Var(4, 1), Var(5, 0)))))
    q = to_left_normed(p)
    assert all(is_left_normed(m) for _, m in q.terms)
    rng = np.random.default_rng(5)
    for _ in range(5):
        a = {i: AlgebraElement(tuple(int(x) for x in rng.integers(-3, 4, 5))) for i in range(1, 6)}
        assert evaluate(L, p, a) == evaluate(L, q, a)
    assert polynomial_from_rows(polynomial_rows(p)) == q


def test_multilinearity_enforced():
    with pytest.raises(ValueError):
        LiePolynomial.monomial(Br(Var(1, 0), Var(1, 0)))
    with pytest.raises(ValueError):
        LiePolynomial.from_terms([(1, Var(1, 0)), (1, Var(2, 0))])


def test_leaves_order():
    m = left_normed([Var(3, 0), Var(1, 1), Var(2, 0)])
    assert [v.index for v in leaves(m)] == [3, 1, 2]
    assert LiePolynomial.from_terms([(Fraction(1), m), (-1, m)]).is_zero()
