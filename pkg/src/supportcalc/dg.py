"""DG modules over ``A`` with zero differential, and totalization.

A :class:`DGModule` is stored on a window ``[lo, hi]`` of total degrees: a
basis (with labels) of each component, ``d^n`` for ``lo <= n < hi`` and the
action of each ring variable ``x`` from degree n to ``n + |x|`` when both
ends lie in the window.  Homology is reported for ``lo < n < hi``.

Totalization: ``(tot F)^n = sum_{i+j=n} F^(i,j)``, ``d = delta`` and
``a . f = (-1)^(|a| i) a f`` for f in ``F^(i,j)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg
from .algebra import AlgebraError, GradedRing
from .complexes import FreeComplex, GradedModule
from .graded import map_matrix, piece_basis
from .groebner import PresentationMatrix, hstack, module_membership, radical_membership, syzygies, Ideal


class WindowError(ValueError):
    """A windowed computation was asked about degrees it cannot see."""


def _zeros(r, c):
    return np.zeros((r, c), dtype=np.int64)


@dataclass
class DGModule:
    ring: GradedRing
    lo: int
    hi: int
    labels: dict            # n -> list of basis labels
    d: dict                 # n -> matrix dim(n+1) x dim(n)
    action: dict            # (var, n) -> matrix dim(n+|x|) x dim(n)
    truncated: bool = False

    def dim(self, n: int) -> int:
        if not self.lo <= n <= self.hi:
            raise WindowError(f"degree {n} outside window [{self.lo}, {self.hi}]")
        return len(self.labels[n])

    def differential(self, n: int) -> np.ndarray:
        if n in self.d:
            return self.d[n]
        return _zeros(self.dim(n + 1), self.dim(n))

    def check(self):
        p = self.ring.p
        for n in range(self.lo, self.hi - 1):
            if np.any((self.differential(n + 1) @ self.differential(n)) % p):
                raise AlgebraError(f"d^2 != 0 at degree {n}")
        for (v, n), X in self.action.items():
            e = self.ring.degrees[v]
            if n + 1 > self.hi or n + e + 1 > self.hi:
                continue
            sign = -1 if e % 2 else 1
            lhs = self.differential(n + e) @ X
            rhs = sign * (self.action[(v, n + 1)] @ self.differential(n))
            if np.any((lhs - rhs) % p):
                raise AlgebraError(f"action of {self.ring.names[v]} does not commute with d at {n}")
        return True

    def check_action_commutes(self):
        """Variables act commutatively (all degrees even, or p = 2)."""
        p = self.ring.p
        nv = self.ring.nvars
        for u in range(nv):
            for v in range(u + 1, nv):
                eu, ev = self.ring.degrees[u], self.ring.degrees[v]
                for n in range(self.lo, self.hi + 1):
                    if n + eu + ev > self.hi:
                        continue
                    uv = self.action[(u, n + ev)] @ self.action[(v, n)]
                    vu = self.action[(v, n + eu)] @ self.action[(u, n)]
                    sign = -1 if (eu * ev) % 2 else 1
                    if np.any((uv - sign * vu) % p):
                        return False
        return True

    def homology(self, n: int) -> int:
        if not self.lo < n < self.hi:
            raise WindowError(f"homology at {n} needs degrees {n - 1}..{n + 1} inside [{self.lo}, {self.hi}]")
        p = self.ring.p
        dim = self.dim(n)
        return dim - linalg.rank(self.differential(n), p) - linalg.rank(self.differential(n - 1), p)

    def homology_table(self) -> dict:
        return {n: self.homology(n) for n in range(self.lo + 1, self.hi)}

    def restrict(self, lo: int, hi: int) -> "DGModule":
        if lo < self.lo or hi > self.hi:
            raise WindowError("restriction window is larger than the stored one")
        labels = {n: self.labels[n] for n in range(lo, hi + 1)}
        d = {n: m for n, m in self.d.items() if lo <= n < hi}
        act = {(v, n): m for (v, n), m in self.action.items()
               if lo <= n and n + self.ring.degrees[v] <= hi}
        return DGModule(self.ring, lo, hi, labels, d, act, self.truncated or self._nonzero_outside(lo, hi))

    def _nonzero_outside(self, lo, hi):
        return any(self.labels[n] for n in range(self.lo, self.hi + 1) if n < lo or n > hi)

    def same_as(self, other: "DGModule") -> bool:
        """Identical windows, dimensions, differentials and actions."""
        if (self.lo, self.hi) != (other.lo, other.hi):
            return False
        p = self.ring.p
        for n in range(self.lo, self.hi + 1):
            if self.dim(n) != other.dim(n):
                return False
        for n in range(self.lo, self.hi):
            if np.any((self.differential(n) - other.differential(n)) % p):
                return False
        keys = set(self.action) | set(other.action)
        for key in keys:
            if key not in self.action or key not in other.action:
                return False
            if np.any((self.action[key] - other.action[key]) % p):
                return False
        return True


# ---------------------------------------------------------------------------
# bicomplex input and totalization


class BicomplexInput:
    """Bounded complex of f.g. graded modules with degree-0 connecting maps.

    ``maps[k]`` sends generators of ``modules[k]`` to combinations of the
    generators of ``modules[k+1]``.
    """

    def __init__(self, ring, lo: int, modules: Sequence[GradedModule], maps: Sequence[PresentationMatrix], check=True):
        self.ring = ring
        self.lo = lo
        self.modules = list(modules)
        self.maps = list(maps)
        if len(self.maps) != max(len(self.modules) - 1, 0):
            raise AlgebraError("need one map between consecutive modules")
        for k, f in enumerate(self.maps):
            if f.col_twists != self.modules[k].generator_twists or f.row_twists != self.modules[k + 1].generator_twists:
                raise AlgebraError(f"map {lo + k} does not match generator twists")
        if check:
            self.check()

    @property
    def hi(self):
        return self.lo + len(self.modules) - 1

    def module(self, i):
        k = i - self.lo
        if 0 <= k < len(self.modules):
            return self.modules[k]
        return GradedModule.zero(self.ring)

    def map(self, i):
        k = i - self.lo
        if 0 <= k < len(self.maps):
            return self.maps[k]
        return PresentationMatrix.zero(self.ring, self.module(i + 1).generator_twists,
                                       self.module(i).generator_twists)

    def check(self):
        """Maps send relations to relations and compose to zero."""
        for k, f in enumerate(self.maps):
            src = self.modules[k].presentation
            tgt = self.modules[k + 1].presentation
            image = f @ src if src.shape[1] else None
            if image is not None:
                for j in range(image.shape[1]):
                    if not module_membership(tgt, image.column(j)):
                        raise AlgebraError(f"map {self.lo + k} is not well defined on relations")
        for k in range(len(self.maps) - 1):
            comp = self.maps[k + 1] @ self.maps[k]
            tgt = self.modules[k + 2].presentation
            for j in range(comp.shape[1]):
                if not module_membership(tgt, comp.column(j)):
                    raise AlgebraError(f"consecutive maps at {self.lo + k} do not compose to zero")

    @classmethod
    def from_free_complex(cls, X: FreeComplex) -> "BicomplexInput":
        mods = [GradedModule.free(X.ring, ts) for ts in X.terms]
        return cls(X.ring, X.lo, mods, X.diffs, check=False)

    @classmethod
    def single(cls, M: GradedModule, degree: int = 0) -> "BicomplexInput":
        return cls(M.ring, degree, [M], [], check=False)

    def module_shift(self, d: int) -> "BicomplexInput":
        """Apply ``N -> N[d]`` to every term: generator twists move by ``-d``."""
        def sh(P):
            return PresentationMatrix(self.ring, P.entries, [t - d for t in P.row_twists],
                                      [t - d for t in P.col_twists], check=False)
        return BicomplexInput(self.ring, self.lo, [GradedModule(sh(M.presentation)) for M in self.modules],
                              [sh(f) for f in self.maps], check=False)

    def shift(self, n: int) -> "BicomplexInput":
        sign = -1 if n % 2 else 1
        return BicomplexInput(self.ring, self.lo - n, self.modules,
                              [f.scale(sign) if sign == -1 else f for f in self.maps], check=False)


class _Piece:
    """Degree-j piece of a presented module: quotient of the free piece."""

    def __init__(self, M: GradedModule, j: int):
        ring = M.ring
        P = M.presentation
        self.free = piece_basis(ring, P.row_twists, j)
        n = len(self.free)
        if n and P.shape[1]:
            rel = map_matrix(P, j)
            self.q = linalg.QuotientSpace(n, rel.T, ring.p)
        else:
            self.q = linalg.QuotientSpace(n, np.zeros((0, n), dtype=np.int64), ring.p)
        self.basis = self.q.basis
        self.dim = self.q.dim

    def labels(self):
        return [self.free[b] for b in self.basis]


def totalize(F: BicomplexInput, window, halo: bool = True) -> DGModule:
    """``tot F`` on total degrees ``window``; with ``halo`` one extra degree on each side is built
    so homology is available on the whole window."""
    ring = F.ring
    p = ring.p
    lo, hi = window
    if lo > hi:
        raise WindowError(f"empty window [{lo}, {hi}]")
    if halo:
        lo, hi = lo - 1, hi + 1
    maxdeg = max(ring.degrees) if ring.degrees else 0
    irange = range(F.lo, F.hi + 1)
    pieces = {}

    def piece(i, j):
        key = (i, j)
        if key not in pieces:
            pieces[key] = _Piece(F.module(i), j)
        return pieces[key]

    labels, offsets = {}, {}
    for n in range(lo - maxdeg, hi + maxdeg + 1):
        labs, offs, pos = [], {}, 0
        for i in irange:
            pc = piece(i, n - i)
            offs[i] = pos
            labs.extend((i,) + tuple(lab) for lab in pc.labels())
            pos += pc.dim
        labels[n] = labs
        offsets[n] = offs
    d = {}
    for n in range(lo, hi):
        mat = _zeros(len(labels[n + 1]), len(labels[n]))
        for i in irange:
            if i + 1 > F.hi:
                continue
            src = piece(i, n - i)
            tgt = piece(i + 1, n - i)
            if not src.dim or not tgt.dim:
                continue
            full = map_matrix(F.map(i), n - i)
            block = tgt.q.coords(full[:, src.basis])
            r0, c0 = offsets[n + 1][i + 1], offsets[n][i]
            mat[r0:r0 + tgt.dim, c0:c0 + src.dim] = block
        d[n] = mat % p
    action = {}
    for v in range(ring.nvars):
        e = ring.degrees[v]
        x = ring.gens[v]
        for n in range(lo, hi + 1):
            if n + e > hi:
                continue
            mat = _zeros(len(labels[n + e]), len(labels[n]))
            for i in irange:
                src = piece(i, n - i)
                tgt = piece(i, n - i + e)
                if not src.dim or not tgt.dim:
                    continue
                twists = F.module(i).generator_twists
                mult = PresentationMatrix(ring, [[x if a == b else ring.zero for b in range(len(twists))]
                                                 for a in range(len(twists))],
                                          [t - e for t in twists], twists, check=False)
                # x . (free piece at j) lands in the free piece at j + e; rows re-read at j + e
                full = map_matrix(mult, n - i)
                block = tgt.q.coords(full[:, src.basis])
                sign = -1 if (e * i) % 2 else 1
                r0, c0 = offsets[n + e][i], offsets[n][i]
                mat[r0:r0 + tgt.dim, c0:c0 + src.dim] = (sign * block) % p
            action[(v, n)] = mat
    outside = any(labels[n] for n in labels if n < lo or n > hi)
    M = DGModule(ring, lo, hi, {n: labels[n] for n in range(lo, hi + 1)}, d, action, truncated=outside)
    return M


# ---------------------------------------------------------------------------
# DG-side constructions


def dg_ring(ring: GradedRing, lo: int, hi: int) -> DGModule:
    """``A`` itself with zero differential."""
    labels = {n: [(m,) for m in ring.standard_monomials(n)] if n >= 0 else [] for n in range(lo, hi + 1)}
    action = {}
    for v in range(ring.nvars):
        e = ring.degrees[v]
        x = ring.gens[v]
        for n in range(lo, hi + 1):
            if n + e > hi:
                continue
            src = labels[n]
            tgt = {lab[0]: k for k, lab in enumerate(labels[n + e])}
            mat = _zeros(len(tgt), len(src))
            for c, (m,) in enumerate(src):
                f = ring.reduce(x * ring.monomial(m))
                for mon, coef in f.terms.items():
                    mat[tgt[mon], c] = coef
            action[(v, n)] = mat
    trunc = any(ring.standard_monomials(n) for n in range(hi + 1, hi + 1 + max(ring.degrees or (1,))))
    return DGModule(ring, lo, hi, labels, {}, action, truncated=trunc)


def dg_shift(M: DGModule, n: int) -> DGModule:
    """``(Sigma^n M)^k = M^(k+n)``, differential times ``(-1)^n``, action times ``(-1)^(|a| n)``."""
    p = M.ring.p
    sign = -1 if n % 2 else 1
    labels = {k - n: v for k, v in M.labels.items()}
    d = {k - n: (sign * m) % p for k, m in M.d.items()}
    act = {}
    for (v, k), m in M.action.items():
        s = -1 if (M.ring.degrees[v] * n) % 2 else 1
        act[(v, k - n)] = (s * m) % p
    return DGModule(M.ring, M.lo - n, M.hi - n, labels, d, act, M.truncated)


def _poly_action(M: DGModule, f, n: int):
    """Matrix of multiplication by the polynomial f from degree n."""
    ring = M.ring
    p = ring.p
    e = f.homogeneous_degree()
    out = _zeros(M.dim(n + e), M.dim(n))
    for exp, c in f.terms.items():
        mat = np.eye(M.dim(n), dtype=np.int64)
        k = n
        for v, times in enumerate(exp):
            for _ in range(times):
                mat = M.action[(v, k)] @ mat % p
                k += ring.degrees[v]
        out = (out + c * mat) % p
    return out


@dataclass
class DGMap:
    source: DGModule
    target: DGModule
    components: dict  # n -> target.dim(n) x source.dim(n)


def dg_multiplication(M: DGModule, f) -> DGMap:
    """``f : M -> Sigma^|f| M``."""
    ring = M.ring
    f = ring(f)
    e = f.homogeneous_degree()
    if e is None:
        raise AlgebraError("multiplication by an inhomogeneous element")
    T = dg_shift(M, e)
    comps = {n: _poly_action(M, f, n) for n in range(M.lo, M.hi - e + 1)}
    return DGMap(M, T, comps)


def dg_cone(f: DGMap) -> DGModule:
    """``N^n + M^(n+1)`` with ``[[d_N, f], [0, -d_M]]``; labels tagged ``N`` / ``M``."""
    M, N = f.source, f.target
    ring = M.ring
    p = ring.p
    degs = [n for n in range(N.lo, N.hi + 1) if M.lo <= n + 1 <= M.hi and (n + 1) in f.components]
    if not degs:
        raise WindowError("cone window is empty")
    lo, hi = min(degs), max(degs)
    labels = {n: [("N",) + tuple(lab) for lab in N.labels[n]] + [("M",) + tuple(lab) for lab in M.labels[n + 1]]
              for n in range(lo, hi + 1)}
    d = {}
    for n in range(lo, hi):
        a, b = N.dim(n), M.dim(n + 1)
        a2, b2 = N.dim(n + 1), M.dim(n + 2)
        mat = _zeros(a2 + b2, a + b)
        mat[:a2, :a] = N.differential(n)
        mat[:a2, a:] = f.components[n + 1]
        mat[a2:, a:] = -M.differential(n + 1)
        d[n] = mat % p
    act = {}
    for v in range(ring.nvars):
        e = ring.degrees[v]
        s = -1 if e % 2 else 1
        for n in range(lo, hi + 1):
            if n + e > hi:
                continue
            a, b = N.dim(n), M.dim(n + 1)
            a2, b2 = N.dim(n + e), M.dim(n + e + 1)
            mat = _zeros(a2 + b2, a + b)
            mat[:a2, :a] = N.action[(v, n)]
            mat[a2:, a:] = s * M.action[(v, n + 1)]
            act[(v, n)] = mat % p
    return DGModule(ring, lo, hi, labels, d, act, M.truncated or N.truncated)


def dg_koszul(M: DGModule, gens) -> DGModule:
    """``M//(gens)`` by iterated DG cones; the window shrinks at each step."""
    for g in gens:
        M = dg_cone(dg_multiplication(M, g))
    return M


def dg_homology(M: DGModule, n: int | None = None):
    return M.homology_table() if n is None else M.homology(n)


# ---------------------------------------------------------------------------
# the Koszul complex and the explicit isomorphism


def koszul_free_complex(ring: GradedRing, elements) -> FreeComplex:
    """Exterior Koszul complex: ``E^(-s)`` has basis ``e_S``, ``|S| = s``, twist ``sum_{t in S} |a_t|``.

    ``d(e_S) = sum_k (-1)^k a_{S_k} e_{S - S_k}`` (k counts positions in S).
    """
    els = [ring(a) for a in elements]
    c = len(els)
    degs = [a.homogeneous_degree() for a in els]
    if any(dg is None for dg in degs):
        raise AlgebraError("Koszul elements must be homogeneous and nonzero")
    subsets = {s: list(itertools.combinations(range(c), s)) for s in range(c + 1)}
    terms = [tuple(sum(degs[t] for t in S) for S in subsets[s]) for s in range(c, -1, -1)]
    diffs = []
    for s in range(c, 0, -1):
        src, tgt = subsets[s], subsets[s - 1]
        index = {S: k for k, S in enumerate(tgt)}
        entries = [[ring.zero] * len(src) for _ in tgt]
        for j, S in enumerate(src):
            for k, t in enumerate(S):
                rest = S[:k] + S[k + 1:]
                entries[index[rest]][j] = els[t] * (-1 if k % 2 else 1)
        diffs.append(PresentationMatrix(ring, entries, terms[c - s + 1], terms[c - s]))
    return FreeComplex(ring, -c, terms, diffs)


@dataclass
class TotKoszulReport:
    elements: list
    shift: int
    window: tuple
    passed: bool
    signs: dict = field(default_factory=dict)
    homology_match: bool = False
    positive_shift_homology_match: bool = False
    detail: str = ""


def _subset_of_cone_label(lab, c):
    """Cone labels look like (tag_c, ..., tag_1, monomial): outermost step first."""
    tags = lab[:c]
    S = tuple(sorted(c - 1 - k for k, t in enumerate(tags) if t == "M"))
    return S, lab[c]


def check_tot_koszul(ring: GradedRing, elements, window=None) -> TotKoszulReport:
    """Compare ``tot E`` with ``Sigma^s (A//a)`` through an explicit signed relabelling.

    With E in cohomological degrees ``-c..0`` and ``e_S`` of internal degree
    ``sum |a_t|``, the component of ``e_S m`` in ``tot E`` has total degree
    ``|m| + sum_{t in S} (|a_t| - 1)``, which matches ``Sigma^(-d) (A//a)``.
    """
    els = [ring(a) for a in elements]
    c = len(els)
    d = sum(a.homogeneous_degree() for a in els)
    s = -d
    if window is None:
        window = (0, 2 * d + 12)
    lo, hi = window
    E = koszul_free_complex(ring, els) if c else FreeComplex.free_module(ring)
    T = totalize(BicomplexInput.from_free_complex(E), window)
    # build A//a on a wide enough window, then shift and restrict
    pad = d + c + 2
    base = dg_ring(ring, T.lo + s - pad, T.hi + s + pad)
    K = dg_shift(dg_koszul(base, els), s).restrict(T.lo, T.hi)
    rep = TotKoszulReport([str(a) for a in els], s, (lo, hi), False)

    def key_tot(lab):
        i, j, m = lab
        S = list(itertools.combinations(range(c), -i))[j]
        return S, m

    def key_cone(lab):
        return _subset_of_cone_label(lab, c)

    p = ring.p
    subsets = [S for k in range(c + 1) for S in itertools.combinations(range(c), k)]
    perms = {}
    for n in range(T.lo, T.hi + 1):
        kt = [key_tot(lab) for lab in T.labels[n]]
        kk = {key_cone(lab): idx for idx, lab in enumerate(K.labels[n])}
        if len(kt) != len(kk) or any(k not in kk for k in kt):
            rep.detail = f"labels differ in degree {n}"
            return rep
        perms[n] = [(kk[k], k[0]) for k in kt]

    def iso(n, signs):
        m = _zeros(len(K.labels[n]), len(T.labels[n]))
        for col, (row, S) in enumerate(perms[n]):
            m[row, col] = signs[S] % p
        return m

    def commutes(signs):
        for n in range(T.lo, T.hi):
            if np.any((K.differential(n) @ iso(n, signs) - iso(n + 1, signs) @ T.differential(n)) % p):
                return False
        for (v, n), X in T.action.items():
            Y = K.action.get((v, n))
            if Y is None:
                continue
            e = ring.degrees[v]
            if np.any((Y @ iso(n, signs) - iso(n + e, signs) @ X) % p):
                return False
        return True

    for choice in itertools.product((1, -1), repeat=len(subsets)):
        signs = dict(zip(subsets, choice))
        if signs[()] != 1:
            continue
        if commutes(signs):
            rep.signs = {",".join(map(str, S)) or "-": v for S, v in signs.items()}
            rep.passed = True
            break
    else:
        rep.detail = "no sign assignment makes the relabelling a chain map"
    inner = range(T.lo + 1, T.hi)
    rep.homology_match = all(T.homology(n) == K.homology(n) for n in inner)
    # the other sign of the suspension, for the record
    Kp = dg_shift(dg_koszul(dg_ring(ring, T.lo + d - pad, T.hi + d + pad), els), d)
    if Kp.lo <= T.lo and Kp.hi >= T.hi:
        Kp = Kp.restrict(T.lo, T.hi)
        rep.positive_shift_homology_match = all(T.homology(n) == Kp.homology(n) for n in inner)
    return rep


# ---------------------------------------------------------------------------
# the Thick(k) witness


@dataclass
class ThickWitnessReport:
    generators: list
    squares_kill_homology: bool
    radical_equal: bool
    ideal_part_killed: bool
    quotient_part_killed: bool
    finite_length: bool
    power_needed: int | None
    passed: bool
    homology_degrees: list
    detail: list = field(default_factory=list)


def _ideal_times_module(M: GradedModule, gens) -> tuple:
    """Presentations of ``(gens) M`` and ``M / (gens) M``."""
    ring = M.ring
    P = M.presentation
    k = P.shape[0]
    cols, twists = [], []
    for a in gens:
        e = a.homogeneous_degree()
        for i in range(k):
            cols.append([a if r == i else ring.zero for r in range(k)])
            twists.append(P.row_twists[i] + e)
    if not cols:
        zero = GradedModule.zero(ring)
        return zero, M
    B = PresentationMatrix(ring, [[c[r] for c in cols] for r in range(k)], P.row_twists, twists, check=False)
    quotient = GradedModule(hstack([P, B]) if P.shape[1] else B)
    stacked = hstack([B, P]) if P.shape[1] else B
    S = syzygies(stacked)
    nb = len(twists)
    sub = GradedModule(PresentationMatrix(ring, S.entries[:nb], twists, S.col_twists, check=False))
    return sub, quotient


def _least_power(M: GradedModule, p_ideal: Ideal, bound: int = 16):
    if M.ngens == 0:
        return 0
    ann = M.annihilator
    for m in range(1, bound + 1):
        if ann.contains_ideal(p_ideal.power(m)):
            return m
    return None


def thick_witness_koszul_square(ring: GradedRing, p_gens, window=None) -> ThickWitnessReport:
    """Two-step filtration witness for the Koszul complex on the squares of ``p_gens``.

    ``H`` is the total homology of the Koszul complex on ``a_1^2, ..., a_c^2``.
    The check requires ``(a^2) H = 0`` and that ``p`` kills both ``(a) H`` and
    ``H / (a) H``.  ``power_needed`` is the least m with ``p^m H = 0``, i.e. the
    length of the p-adic filtration whose subquotients are killed by p.
    """
    a = [ring(g) for g in p_gens]
    for g in a:
        if len(g.terms) != 1 or sum(next(iter(g.terms))) != 1:
            raise AlgebraError(f"{g} is not a variable; the witness needs a monomial prime")
    p_ideal = Ideal(ring, a)
    sq = [g * g for g in a]
    E = koszul_free_complex(ring, sq) if a else FreeComplex.free_module(ring)
    sq_ideal = Ideal(ring, sq)
    ok_sq = ok_sub = ok_quot = finite = True
    power = 0
    nz = []
    detail = []
    for i in E.degrees:
        H = E.homology(i)
        if H.is_zero():
            continue
        nz.append(i)
        ann = H.annihilator
        if not ann.contains_ideal(sq_ideal):
            ok_sq = False
            detail.append(f"(a^2) does not kill H^{i}")
        sub, quot = _ideal_times_module(H, a)
        if not sub.is_zero() and not sub.annihilator.contains_ideal(p_ideal):
            ok_sub = False
            detail.append(f"p does not kill (a)H^{i}")
        if not quot.is_zero() and not quot.annihilator.contains_ideal(p_ideal):
            ok_quot = False
            detail.append(f"p does not kill H^{i}/(a)H^{i}")
        if a and not all(radical_membership(g, ann) for g in a):
            finite = False
        m = _least_power(H, p_ideal)
        power = None if m is None or power is None else max(power, m)
    radical = all(radical_membership(g, sq_ideal) for g in a)
    passed = ok_sq and ok_sub and ok_quot and radical and finite
    return ThickWitnessReport([str(g) for g in a], ok_sq, radical, ok_sub, ok_quot, finite, power,
                              passed, nz, detail)
