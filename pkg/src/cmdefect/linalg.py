"""Dense exact linear algebra over GF(p), backed by numpy int64 arrays.

Row reduction uses deterministic pivoting (first nonzero entry in column
order), so echelon bases, particular solutions and nullspace bases are
reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LinearReport:
    """Shape and rank evidence of an exact linear solve."""

    rows: int
    cols: int
    rank: int
    aug_rank: int

    def solvable(self) -> bool:
        return self.rank == self.aug_rank

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "aug_rank": self.aug_rank,
        }


def as_matrix(rows, cols: int, p: int) -> np.ndarray:
    a = np.array(rows, dtype=np.int64).reshape(-1, cols)
    return np.mod(a, p)


def rref(a: np.ndarray, p: int):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    a = np.mod(np.array(a, dtype=np.int64), p)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if other.size:
            a[other] = (a[other] - np.outer(a[other, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    _, pivots = rref(a, p)
    return len(pivots)


def solve(a: np.ndarray, b: np.ndarray, p: int):
    """Particular solution of a x = b with free variables set to zero.

    Returns (solution or None, LinearReport)."""
    a = np.mod(np.array(a, dtype=np.int64), p)
    b = np.mod(np.array(b, dtype=np.int64), p).reshape(-1)
    rows, cols = a.shape
    if rows != b.shape[0]:
        raise ValueError("matrix and rhs disagree")
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    red, pivots = rref(aug, p)
    aug_rank = len(pivots)
    if pivots and pivots[-1] == cols:
        return None, LinearReport(rows, cols, aug_rank - 1, aug_rank)
    x = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = red[r, cols]
    return x, LinearReport(rows, cols, aug_rank, aug_rank)


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical nullspace basis, one row per free column of the RREF."""
    a = np.mod(np.array(a, dtype=np.int64), p)
    rows, cols = a.shape
    red, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-red[r, c]) % p
    return basis


def invert(a: np.ndarray, p: int) -> np.ndarray:
    a = np.mod(np.array(a, dtype=np.int64), p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inversion needs a square matrix")
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    red, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular mod p")
    return red[:, n:]


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return np.mod(
        np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64), p
    )
