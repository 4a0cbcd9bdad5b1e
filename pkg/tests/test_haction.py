from fractions import Fraction

import pytest

from codimlab.algebra import abelian_algebra
from codimlab.haction import (GeneralizedAction, NotDense, density_check, density_witness,
                              dual_semigroup_action, h_simplicity, multiplication_algebra,
                              trivial_action, verify_compatibility)
from codimlab.linalg import identity
from codimlab.regev import RegevGuard
from codimlab.semigroup import trivial_semigroup


def test_dual_action_is_compatible(L):
    act = dual_semigroup_action(L)
    assert verify_compatibility(L, act).ok
    assert act.op(act.unit) == identity(5)


def test_wrong_compat_data_is_caught(L):
    act = dual_semigroup_action(L)
    one = (Fraction(1), Fraction(0))
    # pretend pi_0 is a Lie algebra endomorphism
    bad = GeneralizedAction(act.operators, [[(one, one)], act.compat[1]], act.unit)
    rep = verify_compatibility(L, bad)
    assert not rep.ok and rep.eq1 and all(h == 0 for h, _, _ in rep.eq1)


def test_multiplication_algebra_of_L(L):
    M = multiplication_algebra(L, dual_semigroup_action(L))
    assert M.dim == 18 and M.closure_ok()
    assert not density_check(M)
    with pytest.raises(NotDense):
        density_witness(L, dual_semigroup_action(L))


def test_sl2_is_dense(sl2):
    M = multiplication_algebra(sl2, trivial_action(sl2))
    assert M.dim == 9 and density_check(M) and M.closure_ok()
    assert h_simplicity(sl2, trivial_action(sl2))[0] == "density-plus-spins-consistent"


def test_L_has_an_invariant_ideal(L):
    status, W = h_simplicity(L, dual_semigroup_action(L))
    assert status == "proper-ideal-found" and 0 < W.dim < 5


def test_small_abelian_algebras():
    S = trivial_semigroup()
    A1 = abelian_algebra(1, (0,), S)
    assert density_check(multiplication_algebra(A1, trivial_action(A1)))
    A2 = abelian_algebra(2, (0, 0), S)
    assert not density_check(multiplication_algebra(A2, trivial_action(A2)))
    assert h_simplicity(A2, trivial_action(A2))[0] == "proper-ideal-found"


def test_action_validation(L):
    with pytest.raises(ValueError):
        GeneralizedAction([identity(5)], [], (1,))


def test_density_witness_needs_opt_in(sl2):
    with pytest.raises(RegevGuard):
        density_witness(sl2, trivial_action(sl2))


@pytest.mark.slow
def test_sl2_density_witness(sl2):
    w = density_witness(sl2, trivial_action(sl2), allow_t3=True)
    assert w.verification and w.K == 754974720
    assert all(len(word) == 1 and word[0].startswith("ad(") for word in w.words[:3])


def test_one_dimensional_witness():
    A1 = abelian_algebra(1, (0,), trivial_semigroup())
    w = density_witness(A1, trivial_action(A1))
    assert w.verification and w.K == 1
