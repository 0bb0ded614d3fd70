import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from hawide import field


def test_rank_examples():
    assert field.rank(np.eye(3, dtype=np.int64), 32003) == 3
    assert field.rank(np.zeros((2, 5), dtype=np.int64), 32003) == 0
    assert field.rank([[1, 2], [2, 4]], 32003) == 1


def test_rank_depends_on_characteristic():
    # det = 2, so singular exactly in characteristic 2
    m = [[1, 1], [1, -1]]
    assert field.rank(m, 2) == 1
    assert field.rank(m, 3) == 2


def test_empty_shapes():
    assert field.rank(np.zeros((0, 4), dtype=np.int64), 5) == 0
    assert field.nullspace(np.zeros((0, 3), dtype=np.int64), 5).shape == (3, 3)


def test_solve_and_inconsistent():
    a = np.array([[1, 2], [3, 4]])
    v = field.solve(a, [5, 6], 7)
    assert np.array_equal((a @ v) % 7, np.array([5, 6]))
    with pytest.raises(ArithmeticError):
        field.solve([[1, 1], [1, 1]], [0, 1], 7)


def test_characteristic_checks():
    assert field.check_characteristic(32003) == 32003
    for bad in (1, 4, 32001, 2**21 + 1):
        with pytest.raises(ValueError):
            field.check_characteristic(bad)


def test_env_default(monkeypatch):
    monkeypatch.setenv(field.FIELD_ENV_VAR, "5")
    assert field.default_characteristic() == 5
    monkeypatch.delenv(field.FIELD_ENV_VAR)
    assert field.default_characteristic() == 32003


matrices = arrays(np.int64, st.tuples(st.integers(1, 6), st.integers(1, 6)),
                  elements=st.integers(0, 10))


@settings(max_examples=60)
@given(matrices, st.sampled_from([2, 3, 32003]), st.randoms(use_true_random=False))
def test_rank_permutation_invariant_and_nullity(m, p, rnd):
    r = field.rank(m, p)
    assert r <= min(m.shape)
    rows = list(range(m.shape[0]))
    cols = list(range(m.shape[1]))
    rnd.shuffle(rows)
    rnd.shuffle(cols)
    assert field.rank(m[rows][:, cols], p) == r
    ns = field.nullspace(m, p)
    assert ns.shape == (m.shape[1], m.shape[1] - r)
    assert not ((m @ ns) % p).any()
    assert field.rank(ns.T, p) == ns.shape[1]
