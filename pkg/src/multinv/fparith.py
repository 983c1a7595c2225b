"""Dense linear algebra over the prime field F_p (small p, int64 arrays)."""

from __future__ import annotations

import numpy as np


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def rref_fp(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    A = np.array(mat, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = (A[r] * _inv_mod(A[r, c], p)) % p
        hit = np.nonzero(A[:, c])[0]
        for i in hit:
            if i != r:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_fp(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref_fp(mat, p)[1])


def nullspace_fp(mat: np.ndarray, p: int, col_order=None) -> np.ndarray:
    """Basis of the right nullspace, one row per basis vector.

    ``col_order`` permutes the elimination order of the columns; the spanned
    space is identical for any order, which tests rely on.
    """
    A = np.array(mat, dtype=np.int64) % p
    rows, cols = A.shape
    order = list(col_order) if col_order is not None else list(range(cols))
    R, piv = rref_fp(A[:, order], p)
    pivset = set(piv)
    free = [j for j in range(cols) if j not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        vec = np.zeros(cols, dtype=np.int64)
        vec[order[f]] = 1
        for i, pc in enumerate(piv):
            vec[order[pc]] = (-int(R[i, f])) % p
        basis[k] = vec
    return basis


class SpanFp:
    """Incrementally maintained row space over F_p with membership tests."""

    def __init__(self, p: int, width: int):
        self.p = p
        self.width = width
        self._rows: dict[int, np.ndarray] = {}  # pivot column -> normalized row

    def _reduce(self, vec: np.ndarray) -> np.ndarray:
        v = np.array(vec, dtype=np.int64) % self.p
        for c, row in self._rows.items():
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, vec) -> bool:
        return not self._reduce(vec).any()

    def add(self, vec) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        v = self._reduce(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * _inv_mod(v[c], self.p)) % self.p
        for pc, row in self._rows.items():
            if row[c]:
                self._rows[pc] = (row - row[c] * v) % self.p
        self._rows[c] = v
        return True

    @property
    def dim(self) -> int:
        return len(self._rows)
