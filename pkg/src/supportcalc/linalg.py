"""Dense exact linear algebra over F_p on int64 numpy arrays.

Entries stay in ``[0, p)``; with ``p < 2**31`` every intermediate product fits
in int64.
"""

from __future__ import annotations

import numpy as np


def as_matrix(a, p: int, shape=None) -> np.ndarray:
    m = np.asarray(a, dtype=np.int64)
    if shape is not None:
        m = m.reshape(shape)
    return np.mod(m, p)


def rref(a, p: int):
    """Row-reduced echelon form. Returns ``(R, pivot_columns)``; R keeps all rows."""
    m = np.array(a, dtype=np.int64) % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    # eliminate along the shorter side
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis of {v : a v = 0}, as columns."""
    a = np.asarray(a, dtype=np.int64)
    rows, cols = a.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    r, piv = rref(a, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(piv):
            basis[pc, j] = (-r[i, f]) % p
    return basis


def inverse(a, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    r, piv = rref(np.hstack([a % p, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise np.linalg.LinAlgError("singular matrix mod p")
    return r[:, n:]


def in_span(vectors, target, p: int) -> bool:
    """Whether ``target`` is in the column span of ``vectors``."""
    v = np.asarray(vectors, dtype=np.int64)
    t = np.asarray(target, dtype=np.int64).reshape(-1, 1)
    if v.size == 0:
        return not np.any(t % p)
    return rank(v, p) == rank(np.hstack([v, t]), p)


class QuotientSpace:
    """Coordinates on V / W for V = F_p^n and W spanned by given vectors.

    The basis of the quotient is the set of non-pivot coordinates of the
    reduced echelon form of W.
    """

    def __init__(self, n: int, spanning_rows, p: int):
        self.n = n
        self.p = p
        w = np.asarray(spanning_rows, dtype=np.int64).reshape(-1, n) if n else np.zeros((0, 0), np.int64)
        if w.shape[0]:
            r, piv = rref(w, p)
            self.rows = r[: len(piv)]
            self.pivots = piv
        else:
            self.rows = np.zeros((0, n), dtype=np.int64)
            self.pivots = []
        pset = set(self.pivots)
        self.basis = [c for c in range(n) if c not in pset]
        self.dim = len(self.basis)

    def reduce(self, vecs) -> np.ndarray:
        """Reduce columns of ``vecs`` (n x k) modulo W."""
        v = np.array(vecs, dtype=np.int64).reshape(self.n, -1) % self.p
        for i, c in enumerate(self.pivots):
            coef = v[c].copy()
            nz = np.nonzero(coef)[0]
            if nz.size:
                v[:, nz] = (v[:, nz] - np.outer(self.rows[i], coef[nz])) % self.p
        return v

    def coords(self, vecs) -> np.ndarray:
        """Quotient coordinates (dim x k) of the columns of ``vecs``."""
        return self.reduce(vecs)[self.basis, :]
