"""Graded pieces of free modules over ``A = S/I`` as F_p vector spaces.

The degree-d piece of ``F = sum_j A(-t_j)`` has basis ``(j, m)`` with ``m`` a
standard monomial of degree ``d - t_j``.  Maps of free modules become numpy
matrices, which gives an exact route to dimensions that does not go through
syzygies.  Requires every variable to have positive degree.
"""

from __future__ import annotations

import numpy as np

from .algebra import GradedRing
from .groebner import PresentationMatrix


def piece_basis(ring: GradedRing, twists, d: int) -> list:
    out = []
    for j, t in enumerate(twists):
        for m in ring.standard_monomials(d - t):
            out.append((j, m))
    return out


def piece_dim(ring: GradedRing, twists, d: int) -> int:
    return sum(len(ring.standard_monomials(d - t)) for t in twists)


def vector_coords(ring: GradedRing, column, basis_index: dict, size: int) -> np.ndarray:
    """Coordinates of a vector of (already reduced) polynomials in a piece basis."""
    v = np.zeros(size, dtype=np.int64)
    for j, f in enumerate(column):
        for e, c in f.terms.items():
            v[basis_index[(j, e)]] = c
    return v


def map_matrix(M: PresentationMatrix, d: int) -> np.ndarray:
    """Matrix of ``M`` restricted to internal degree d (target x source)."""
    ring = M.ring
    src = piece_basis(ring, M.col_twists, d)
    tgt = piece_basis(ring, M.row_twists, d)
    index = {b: k for k, b in enumerate(tgt)}
    out = np.zeros((len(tgt), len(src)), dtype=np.int64)
    if not src or not tgt:
        return out
    for k, (j, m) in enumerate(src):
        mono = ring.monomial(m)
        col = []
        for i in range(len(M.row_twists)):
            f = M.entries[i][j]
            col.append(ring.reduce(f * mono) if f.terms else f)
        out[:, k] = vector_coords(ring, col, index, len(tgt))
    return out


def column_coords(ring: GradedRing, twists, column, d: int) -> np.ndarray:
    basis = piece_basis(ring, twists, d)
    index = {b: k for k, b in enumerate(basis)}
    return vector_coords(ring, [ring.reduce(f) for f in column], index, len(basis))
