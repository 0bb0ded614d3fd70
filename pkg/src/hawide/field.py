"""Dense linear algebra over the prime field ``GF(p)``.

Matrices are plain ``numpy.int64`` arrays with entries reduced into
``[0, p)``.  The characteristic is capped at ``2**20`` so that an inner
product of length below ``8 * 10**6`` cannot overflow before reduction.
"""

from __future__ import annotations

import os

import numpy as np

DEFAULT_CHARACTERISTIC = 32003
FIELD_ENV_VAR = "HAWIDE_FIELD"
_MAX_P = 2**20


def default_characteristic() -> int:
    raw = os.environ.get(FIELD_ENV_VAR)
    return int(raw) if raw else DEFAULT_CHARACTERISTIC


def is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


def check_characteristic(p: int) -> int:
    if not 2 <= p < _MAX_P or not is_prime(p):
        raise ValueError(f"field characteristic must be a prime below {_MAX_P}, got {p}")
    return p


def as_field(a, p: int) -> np.ndarray:
    return np.atleast_2d(np.array(a, dtype=np.int64)) % p


def row_reduce(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns of ``a`` mod ``p``."""
    r = as_field(a, p)
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        inv = pow(int(r[row, col]), -1, p)
        r[row] = r[row] * inv % p
        factors = r[:, col].copy()
        factors[row] = 0
        if factors.any():
            r = (r - np.outer(factors, r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a, p: int) -> int:
    arr = as_field(a, p)
    if arr.size == 0:
        return 0
    return len(row_reduce(arr, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis of ``{v : a v = 0}`` as the columns of a ``cols x k`` matrix."""
    arr = as_field(a, p)
    cols = arr.shape[1]
    if arr.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = row_reduce(arr, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-r[i, f]) % p
    return basis


def solve(a, b, p: int) -> np.ndarray:
    """Some ``v`` with ``a v = b`` mod ``p``; raises if the system is inconsistent."""
    arr = as_field(a, p)
    rhs = np.asarray(b, dtype=np.int64).reshape(-1, 1) % p
    rows, cols = arr.shape
    aug = np.hstack([arr.reshape(rows, cols), rhs])
    r, pivots = row_reduce(aug, p)
    if cols in pivots:
        raise ArithmeticError("inconsistent linear system")
    v = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        v[pc] = r[i, cols]
    return v


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p
