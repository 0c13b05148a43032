"""Bounded complexes of twisted graded free modules over ``A = S/I``.

Conventions (cohomological, differentials raise degree by one):

* ``X^i = sum_j A(-t_j)``; the twist list of degree i holds the ``t_j``.
* cone of ``f: X -> Y``: ``Y^i + X^(i+1)`` with ``[[d_Y, f], [0, -d_X]]``.
* ``(Sigma^n X)^i = X^(i+n)`` with differential ``(-1)^n d``.
* tensor: ``d(x (x) y) = dx (x) y + (-1)^i x (x) dy`` for x in degree i.
* Hom: ``d(phi) = d_Y phi - (-1)^|phi| phi d_X``; the generator sending
  basis vector a of ``X^i`` to basis vector b of ``Y^(i+n)`` has twist
  ``t_b - t_a``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

import numpy as np

from . import linalg
from .algebra import AlgebraError, GradedRing
from .graded import map_matrix, piece_dim
from .groebner import (
    Ideal,
    PresentationMatrix,
    SubmoduleGB,
    annihilator,
    hstack,
    syzygies,
)


class GradedModule:
    """The cokernel of a presentation ``A^rels -> A^gens``."""

    def __init__(self, presentation: PresentationMatrix):
        self.presentation = presentation
        self.ring = presentation.ring

    @classmethod
    def free(cls, ring, twists):
        return cls(PresentationMatrix.zero(ring, twists, ()))

    @classmethod
    def zero(cls, ring):
        return cls(PresentationMatrix.zero(ring, (), ()))

    @classmethod
    def cyclic(cls, ring, gens, twist: int = 0):
        """``A/(gens)`` with its generator in degree ``twist``."""
        gens = [ring(g) for g in gens]
        gens = [g for g in gens if not g.is_zero()]
        cols = [twist + g.homogeneous_degree() for g in gens]
        return cls(PresentationMatrix(ring, [gens], [twist], cols))

    @property
    def generator_twists(self):
        return self.presentation.row_twists

    @property
    def ngens(self) -> int:
        return len(self.presentation.row_twists)

    @cached_property
    def annihilator(self) -> Ideal:
        return annihilator(self.presentation)

    def is_zero(self) -> bool:
        P = self.presentation
        if P.shape[0] == 0:
            return True
        zero = (0,) * self.ring.nvars
        sub = SubmoduleGB(self.ring, [P.column_vec(j) for j in range(P.shape[1])], P.row_twists)
        return all(sub.contains({(i, zero): 1}) for i in range(P.shape[0]))

    def dim(self, d: int) -> int:
        """dim_k of the degree-d piece."""
        P = self.presentation
        total = piece_dim(self.ring, P.row_twists, d)
        if total == 0 or P.shape[1] == 0:
            return total
        return total - linalg.rank(map_matrix(P, d), self.ring.p)

    def dims(self, window) -> dict:
        lo, hi = window
        return {d: self.dim(d) for d in range(lo, hi + 1)}

    def __repr__(self):
        return f"GradedModule(gens={self.generator_twists}, rels={self.presentation.col_twists})"


class FreeComplex:
    """Complex ``X^lo -> ... -> X^hi`` of twisted free modules.

    ``terms[k]`` are the twists of ``X^(lo+k)``; ``diffs[k]`` maps degree
    ``lo+k`` to ``lo+k+1``.
    """

    def __init__(self, ring: GradedRing, lo: int, terms: Sequence, diffs: Sequence, check: bool = True):
        self.ring = ring
        self.lo = int(lo)
        self.terms = [tuple(int(t) for t in ts) for ts in terms]
        self.diffs = list(diffs)
        if len(self.diffs) != max(len(self.terms) - 1, 0):
            raise AlgebraError("need exactly one differential between consecutive terms")
        for k, D in enumerate(self.diffs):
            if D.col_twists != self.terms[k] or D.row_twists != self.terms[k + 1]:
                raise AlgebraError(f"differential {self.lo + k} does not match the term twists")
        if check:
            self.check()
        self._homology = {}

    def check(self):
        for k in range(len(self.diffs) - 1):
            if not (self.diffs[k + 1] @ self.diffs[k]).is_zero():
                raise AlgebraError(f"d^{self.lo + k + 1} d^{self.lo + k} is not zero")

    # construction -----------------------------------------------------
    @classmethod
    def zero(cls, ring):
        return cls(ring, 0, [], [])

    @classmethod
    def free_module(cls, ring, twists=(0,), degree: int = 0):
        return cls(ring, degree, [tuple(twists)], [])

    @classmethod
    def from_matrices(cls, ring, lo, mats: Sequence[PresentationMatrix]):
        terms = [mats[0].col_twists] + [m.row_twists for m in mats]
        return cls(ring, lo, terms, mats)

    # access -----------------------------------------------------------
    @property
    def hi(self) -> int:
        return self.lo + len(self.terms) - 1

    @property
    def degrees(self):
        return range(self.lo, self.hi + 1)

    def term(self, i: int) -> tuple:
        k = i - self.lo
        return self.terms[k] if 0 <= k < len(self.terms) else ()

    def differential(self, i: int) -> PresentationMatrix:
        """``d^i : X^i -> X^(i+1)`` (a zero matrix outside the stored range)."""
        k = i - self.lo
        if 0 <= k < len(self.diffs):
            return self.diffs[k]
        return PresentationMatrix.zero(self.ring, self.term(i + 1), self.term(i))

    def all_twists(self):
        return [t for ts in self.terms for t in ts]

    def rank(self) -> int:
        return sum(len(ts) for ts in self.terms)

    def trimmed(self) -> "FreeComplex":
        """Drop zero-rank terms at both ends."""
        ks = [k for k, ts in enumerate(self.terms) if ts]
        if not ks:
            return FreeComplex.zero(self.ring)
        a, b = ks[0], ks[-1]
        return FreeComplex(self.ring, self.lo + a, self.terms[a:b + 1], self.diffs[a:b], check=False)

    def default_window(self):
        tw = self.all_twists() or [0]
        return (min(0, min(tw)), 4 * max(0, max(tw)) + 16)

    # homology ---------------------------------------------------------
    def homology(self, i: int) -> GradedModule:
        """``H^i`` presented as generators ker d^i, relations im d^(i-1)."""
        if i in self._homology:
            return self._homology[i]
        ring = self.ring
        tw = self.term(i)
        if not tw:
            H = GradedModule.zero(ring)
        else:
            d = self.differential(i)
            if d.shape[0] == 0 or d.is_zero():
                K = PresentationMatrix.identity(ring, tw)
            else:
                K = syzygies(d)
            if K.shape[1] == 0:
                H = GradedModule.zero(ring)
            else:
                dprev = self.differential(i - 1)
                stacked = hstack([K, dprev]) if dprev.shape[1] else K
                S = syzygies(stacked)
                k = K.shape[1]
                rel = PresentationMatrix(ring, S.entries[:k], K.col_twists, S.col_twists, check=False)
                H = GradedModule(rel)
        self._homology[i] = H
        return H

    def homology_dim(self, i: int, d: int) -> int:
        """dim_k H^i in internal degree d by linear algebra on graded pieces."""
        p = self.ring.p
        n = piece_dim(self.ring, self.term(i), d)
        if n == 0:
            return 0
        r_out = linalg.rank(map_matrix(self.differential(i), d), p) if self.term(i + 1) else 0
        r_in = linalg.rank(map_matrix(self.differential(i - 1), d), p) if self.term(i - 1) else 0
        return n - r_out - r_in

    def homology_table(self, window) -> dict:
        lo, hi = window
        return {i: {d: self.homology_dim(i, d) for d in range(lo, hi + 1)} for i in self.degrees}

    def euler_characteristic(self, d: int) -> int:
        return sum((-1) ** (i % 2) * piece_dim(self.ring, self.term(i), d) for i in self.degrees)

    def is_acyclic(self) -> bool:
        return all(self.homology(i).is_zero() for i in self.degrees)

    def nonzero_homology_degrees(self) -> list:
        return [i for i in self.degrees if not self.homology(i).is_zero()]

    def __repr__(self):
        body = ", ".join(f"{i}:{list(self.term(i))}" for i in self.degrees)
        return f"FreeComplex({body})"


class ChainMap:
    """Degree-0 chain map given by ``components[i] : X^i -> Y^i``."""

    def __init__(self, source: FreeComplex, target: FreeComplex, components: dict, check: bool = True):
        self.source = source
        self.target = target
        ring = source.ring
        self.ring = ring
        comps = {}
        for i in set(source.degrees) | set(target.degrees):
            M = components.get(i)
            if M is None:
                M = PresentationMatrix.zero(ring, target.term(i), source.term(i))
            if M.col_twists != source.term(i) or M.row_twists != target.term(i):
                raise AlgebraError(f"chain map component {i} has wrong twists")
            comps[i] = M
        self.components = comps
        if check:
            self.check()

    def component(self, i: int) -> PresentationMatrix:
        if i in self.components:
            return self.components[i]
        return PresentationMatrix.zero(self.ring, self.target.term(i), self.source.term(i))

    def check(self):
        X, Y = self.source, self.target
        for i in sorted(self.components):
            lhs = Y.differential(i) @ self.component(i)
            rhs = self.component(i + 1) @ X.differential(i)
            if lhs.shape[0] and lhs.shape[1] and not _sub(lhs, rhs).is_zero():
                raise AlgebraError(f"chain map does not commute with d in degree {i}")


def _sub(a: PresentationMatrix, b: PresentationMatrix) -> PresentationMatrix:
    rows = [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.entries, b.entries)]
    return PresentationMatrix(a.ring, rows, a.row_twists, a.col_twists, check=False)


def _blocks(ring, row_groups, col_groups, blocks: dict) -> PresentationMatrix:
    """Assemble a block matrix; ``blocks[(r, c)]`` fills block row r, column c."""
    rt = [t for g in row_groups for t in g]
    ct = [t for g in col_groups for t in g]
    entries = [[ring.zero] * len(ct) for _ in rt]
    roff = np.cumsum([0] + [len(g) for g in row_groups])
    coff = np.cumsum([0] + [len(g) for g in col_groups])
    for (r, c), M in blocks.items():
        for i, row in enumerate(M.entries):
            for j, f in enumerate(row):
                if f.terms:
                    entries[roff[r] + i][coff[c] + j] = f
    return PresentationMatrix(ring, entries, rt, ct, check=False)


def cone(f: ChainMap) -> FreeComplex:
    X, Y = f.source, f.target
    ring = f.ring
    degs = set(Y.degrees) | {i - 1 for i in X.degrees}
    if not degs:
        return FreeComplex.zero(ring)
    lo, hi = min(degs), max(degs)
    groups = {i: (Y.term(i), X.term(i + 1)) for i in range(lo, hi + 2)}
    terms = [groups[i][0] + groups[i][1] for i in range(lo, hi + 1)]
    diffs = []
    for i in range(lo, hi):
        blocks = {
            (0, 0): Y.differential(i),
            (0, 1): f.component(i + 1),
            (1, 1): X.differential(i + 1).scale(-1),
        }
        diffs.append(_blocks(ring, groups[i + 1], groups[i], blocks))
    return FreeComplex(ring, lo, terms, diffs).trimmed()


def shift(X: FreeComplex, n: int) -> FreeComplex:
    if not X.terms:
        return X
    sign = -1 if n % 2 else 1
    diffs = [D.scale(sign) if sign == -1 else D for D in X.diffs]
    return FreeComplex(X.ring, X.lo - n, X.terms, diffs, check=False)


def twist(X: FreeComplex, s: int) -> FreeComplex:
    """Internal shift: every twist moves by ``s``."""
    terms = [tuple(t + s for t in ts) for ts in X.terms]
    diffs = [PresentationMatrix(X.ring, D.entries, tuple(t + s for t in D.row_twists),
                                tuple(t + s for t in D.col_twists), check=False) for D in X.diffs]
    return FreeComplex(X.ring, X.lo, terms, diffs, check=False)


def direct_sum(X: FreeComplex, Y: FreeComplex) -> FreeComplex:
    ring = X.ring
    if not X.terms:
        return Y
    if not Y.terms:
        return X
    lo, hi = min(X.lo, Y.lo), max(X.hi, Y.hi)
    terms = [X.term(i) + Y.term(i) for i in range(lo, hi + 1)]
    diffs = []
    for i in range(lo, hi):
        diffs.append(_blocks(ring, (X.term(i + 1), Y.term(i + 1)), (X.term(i), Y.term(i)),
                             {(0, 0): X.differential(i), (1, 1): Y.differential(i)}))
    return FreeComplex(ring, lo, terms, diffs, check=False)


def _kron_identity_left(M: PresentationMatrix, twists_left, sign=1) -> PresentationMatrix:
    """``I (x) M`` with basis ordering (a, b), a over the left factor."""
    ring = M.ring
    rt = [s + t for s in twists_left for t in M.row_twists]
    ct = [s + t for s in twists_left for t in M.col_twists]
    nr, nc = M.shape
    entries = [[ring.zero] * len(ct) for _ in rt]
    for a in range(len(twists_left)):
        for i in range(nr):
            for j in range(nc):
                f = M.entries[i][j]
                if f.terms:
                    entries[a * nr + i][a * nc + j] = f * sign if sign != 1 else f
    return PresentationMatrix(ring, entries, rt, ct, check=False)


def _kron_identity_right(M: PresentationMatrix, twists_right) -> PresentationMatrix:
    """``M (x) I`` with basis ordering (a, b), b over the right factor."""
    ring = M.ring
    m = len(twists_right)
    rt = [s + t for s in M.row_twists for t in twists_right]
    ct = [s + t for s in M.col_twists for t in twists_right]
    nr, nc = M.shape
    entries = [[ring.zero] * len(ct) for _ in rt]
    for i in range(nr):
        for j in range(nc):
            f = M.entries[i][j]
            if f.terms:
                for b in range(m):
                    entries[i * m + b][j * m + b] = f
    return PresentationMatrix(ring, entries, rt, ct, check=False)


def tensor(X: FreeComplex, Y: FreeComplex) -> FreeComplex:
    ring = X.ring
    if not X.terms or not Y.terms:
        return FreeComplex.zero(ring)
    lo, hi = X.lo + Y.lo, X.hi + Y.hi

    def parts(n):
        return [(i, n - i) for i in X.degrees if Y.lo <= n - i <= Y.hi]

    def group(i, j):
        return tuple(s + t for s in X.term(i) for t in Y.term(j))

    terms = [sum((group(i, j) for i, j in parts(n)), ()) for n in range(lo, hi + 1)]
    diffs = []
    for n in range(lo, hi):
        src = parts(n)
        tgt = parts(n + 1)
        blocks = {}
        for c, (i, j) in enumerate(src):
            for r, (i2, j2) in enumerate(tgt):
                if (i2, j2) == (i + 1, j):
                    blocks[(r, c)] = _kron_identity_right(X.differential(i), Y.term(j))
                elif (i2, j2) == (i, j + 1):
                    blocks[(r, c)] = _kron_identity_left(Y.differential(j), X.term(i), -1 if i % 2 else 1)
        diffs.append(_blocks(ring, [group(*t) for t in tgt], [group(*t) for t in src], blocks))
    return FreeComplex(ring, lo, terms, diffs).trimmed()


def hom_complex(X: FreeComplex, Y: FreeComplex) -> FreeComplex:
    ring = X.ring
    if not X.terms or not Y.terms:
        return FreeComplex.zero(ring)
    lo, hi = Y.lo - X.hi, Y.hi - X.lo

    def parts(n):
        return [i for i in X.degrees if Y.lo <= i + n <= Y.hi]

    def group(i, n):
        # generator (a, b) ordered by a then b
        return tuple(tb - ta for ta in X.term(i) for tb in Y.term(i + n))

    terms = [sum((group(i, n) for i in parts(n)), ()) for n in range(lo, hi + 1)]
    diffs = []
    for n in range(lo, hi):
        src = parts(n)
        tgt = parts(n + 1)
        tgt_groups = [group(i, n + 1) for i in tgt]
        src_groups = [group(i, n) for i in src]
        roff = np.cumsum([0] + [len(g) for g in tgt_groups])
        coff = np.cumsum([0] + [len(g) for g in src_groups])
        rt = [t for g in tgt_groups for t in g]
        ct = [t for g in src_groups for t in g]
        entries = [[ring.zero] * len(ct) for _ in rt]
        tpos = {i: k for k, i in enumerate(tgt)}
        eps = -1 if n % 2 else 1  # (-1)^n
        for c, i in enumerate(src):
            na, nb = len(X.term(i)), len(Y.term(i + n))
            # d_Y o phi lands in Hom(X^i, Y^(i+n+1))
            if i in tpos:
                dY = Y.differential(i + n)
                nb2 = len(Y.term(i + n + 1))
                r = tpos[i]
                for a in range(na):
                    for b in range(nb):
                        for b2 in range(nb2):
                            f = dY.entries[b2][b]
                            if f.terms:
                                entries[roff[r] + a * nb2 + b2][coff[c] + a * nb + b] = f
            # -(-1)^n phi o d_X lands in Hom(X^(i-1), Y^(i+n))
            if (i - 1) in tpos:
                dX = X.differential(i - 1)
                na2 = len(X.term(i - 1))
                r = tpos[i - 1]
                for a in range(na):
                    for b in range(nb):
                        for a2 in range(na2):
                            f = dX.entries[a][a2]
                            if f.terms:
                                entries[roff[r] + a2 * nb + b][coff[c] + a * nb + b] = f * (-eps)
        diffs.append(PresentationMatrix(ring, entries, rt, ct, check=False))
    return FreeComplex(ring, lo, terms, diffs).trimmed()


def multiplication_map(X: FreeComplex, r) -> ChainMap:
    """``r : X -> X`` with the target twisted by ``-|r|`` so the map has degree 0."""
    ring = X.ring
    r = ring(r)
    if r.is_zero():
        d = 0
    else:
        d = r.homogeneous_degree()
        if d is None:
            raise AlgebraError(f"{r} is not homogeneous")
    Y = twist(X, -d)
    comps = {}
    for i in X.degrees:
        tw = X.term(i)
        entries = [[r if a == b else ring.zero for b in range(len(tw))] for a in range(len(tw))]
        comps[i] = PresentationMatrix(ring, entries, Y.term(i), tw, check=False)
    return ChainMap(X, Y, comps, check=False)


def ext_module(C: FreeComplex, D: FreeComplex) -> dict:
    """``{n: H^n Hom(C, D)}`` over the degrees where the Hom complex lives.

    The keys with nonzero modules form the finite set of nonvanishing
    cohomological degrees.
    """
    H = hom_complex(C, D)
    return {n: H.homology(n) for n in H.degrees} if H.terms else {}


def ext_nonzero_degrees(C: FreeComplex, D: FreeComplex) -> list:
    return [n for n, M in ext_module(C, D).items() if not M.is_zero()]
