import numpy as np

from multireg import modp


def test_rref_identity():
    A = np.eye(3, dtype=np.int64)
    R, piv = modp.rref(A, 7)
    assert piv == [0, 1, 2]
    assert (R == A).all()


def test_rank_and_nullspace():
    p = 101
    A = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]], dtype=np.int64)
    assert modp.rank(A, p) == 2
    K = modp.nullspace(A, p)
    assert K.shape[1] == 1
    assert (A @ K % p == 0).all()


def test_solve():
    p = 13
    A = np.array([[1, 1], [0, 1]], dtype=np.int64)
    b = np.array([3, 5], dtype=np.int64)
    x = modp.solve(A, b, p)
    assert (A @ x % p == b % p).all()
    A2 = np.array([[1, 1], [1, 1]], dtype=np.int64)
    assert modp.solve(A2, np.array([0, 1]), p) is None


def test_blocked_rank_matches_rref():
    rng = np.random.default_rng(3)
    p = 32003
    for _ in range(20):
        m, n = rng.integers(1, 50, 2)
        r = int(rng.integers(0, min(m, n) + 1))
        A = (rng.integers(0, p, (m, r)) @ rng.integers(0, p, (r, n))) % p
        assert modp._rank_blocked(A, p, panel=5) == len(modp.rref(A, p)[1])


def test_blocked_rank_column_gaps():
    # zero columns inside a panel must not confuse the pivot walk
    p = 11
    A = np.array([[0, 1, 0, 0, 2],
                  [0, 2, 0, 0, 4],
                  [0, 0, 0, 0, 1]], dtype=np.int64)
    assert modp._rank_blocked(A, p, panel=2) == 2
    assert modp.rank(A, p) == 2
