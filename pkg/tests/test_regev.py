import numpy as np
import pytest
from hypothesis import given, strategies as st

from codimlab.regev import (RegevDescriptor, RegevGuard, centrality_sweep, is_scalar,
                            matrix_units, regev_eval_dp, regev_eval_naive, sweep_values)


def test_descriptor():
    d = RegevDescriptor(2)
    assert d.size == 4 and d.degree == 8
    assert d.blocks == [("x", 1), ("y", 1), ("x", 3), ("y", 3)]
    assert d.slots == ["x", "y", "x", "x", "x", "y", "y", "y"]
    with pytest.raises(ValueError):
        RegevDescriptor(0)


def test_t1_is_the_product():
    X, Y = np.array([[[3]]]), np.array([[[5]]])
    assert regev_eval_naive(RegevDescriptor(1), X, Y)[0, 0] == 15
    assert regev_eval_dp(RegevDescriptor(1), X, Y)[0, 0] == 15


def test_matrix_units_value():
    E = np.array(matrix_units(2))
    d = RegevDescriptor(2)
    assert np.array_equal(regev_eval_naive(d, E, E), -3 * np.eye(2, dtype=int))
    assert np.array_equal(regev_eval_dp(d, E, E), -3 * np.eye(2, dtype=int))


mats = st.lists(st.integers(-2, 2), min_size=16, max_size=16).map(
    lambda v: np.array(v, dtype=np.int64).reshape(4, 2, 2))


@given(mats, mats)
def test_dp_matches_naive(X, Y):
    d = RegevDescriptor(2)
    out = regev_eval_dp(d, X, Y)
    assert np.array_equal(out, regev_eval_naive(d, X, Y))
    assert is_scalar(out)


def test_batch_axis():
    rng = np.random.default_rng(0)
    X = rng.integers(-2, 3, (4, 3, 2, 2))
    Y = rng.integers(-2, 3, (4, 3, 2, 2))
    d = RegevDescriptor(2)
    out = regev_eval_dp(d, X, Y)
    for b in range(3):
        assert np.array_equal(out[b], regev_eval_naive(d, X[:, b], Y[:, b]))


def test_guards():
    E3 = np.array(matrix_units(3))
    with pytest.raises(RegevGuard):
        regev_eval_naive(RegevDescriptor(3), E3, E3)
    E4 = np.zeros((16, 4, 4), dtype=np.int64)
    with pytest.raises(RegevGuard):
        regev_eval_dp(RegevDescriptor(4), E4, E4)
    with pytest.raises(ValueError):
        regev_eval_dp(RegevDescriptor(2), E3[:4, :2, :2], E3[:3, :2, :2])
    with pytest.raises(RegevGuard):
        centrality_sweep(3)


def test_t3_on_units_is_central():
    E = np.array(matrix_units(3))
    out = regev_eval_dp(RegevDescriptor(3), E, E)
    assert is_scalar(out) and out[0, 0] != 0


def test_sweep_samples_match_naive():
    E = np.array(matrix_units(2))
    d = RegevDescriptor(2)
    for idx, v in sweep_values(2):
        if idx % 4099 == 0:
            digits = [(idx // 4 ** (7 - p)) % 4 for p in range(8)]
            assert np.array_equal(v, regev_eval_naive(d, E[digits[:4]], E[digits[4:]]))


def test_full_sweep():
    rep = centrality_sweep(2)
    assert rep.ok and rep.tuples == 4 ** 8
    assert rep.nonzero == 576 and rep.scalars == {-3: 288, 3: 288}
