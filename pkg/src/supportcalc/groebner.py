"""Buchberger-based ideal and module arithmetic over ``F_p[x]/I``.

Everything runs on one engine that works with submodules of a free module
``S^m`` over the polynomial ring ``S``; an ideal is the case ``m = 1``.  Module
elements are dicts ``{(component, exponent): coeff}``.  Computations over the
quotient ring ``A = S/I`` add ``I * e_k`` to the generators.

Pair selection is the normal strategy: the pair whose lcm has the smallest
(degree, term) is processed first, ties broken by pair indices.  Reduced
bases are monic and sorted by descending leading term, hence canonical.
"""

from __future__ import annotations

import contextlib
import hashlib
import heapq
import os
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import AlgebraError, GradedPoly, GradedRing, format_poly


class ResourceError(RuntimeError):
    """A Groebner computation crossed the configured degree or pair ceiling."""


LIMITS = {"degree_ceiling": 64, "max_pairs": 200_000}


@contextlib.contextmanager
def limits(degree_ceiling: int | None = None, max_pairs: int | None = None):
    saved = dict(LIMITS)
    if degree_ceiling is not None:
        LIMITS["degree_ceiling"] = int(degree_ceiling)
    if max_pairs is not None:
        LIMITS["max_pairs"] = int(max_pairs)
    try:
        yield
    finally:
        LIMITS.update(saved)


# ---------------------------------------------------------------------------
# term orders on module terms (comp, exp)


class TermOrder:
    """Order on terms ``(comp, exp)`` of ``S^m``.

    kind: ``grevlex`` (weighted degree incl. component twist, then grevlex),
    ``lex``, ``plain`` (unweighted grevlex, for inhomogeneous work) or
    ``elim`` (eliminates the last ``n_elim`` variables, grevlex on the rest).
    Components ``>= split`` form a block that is smaller than every term of
    the first block.
    """

    def __init__(self, kind, weights, twists=(0,), split=None, n_elim=0):
        self.kind = kind
        self.weights = tuple(weights)
        self.twists = tuple(twists)
        self.split = len(self.twists) if split is None else split
        self.n_elim = n_elim
        self._cache = {}
        n = len(self.weights)
        w = self.weights
        tw = self.twists
        sp = self.split
        if kind == "grevlex":
            def k(t):
                c, e = t
                return (-(c >= sp), sum(a * b for a, b in zip(w, e)) + tw[c], sum(e),
                        tuple(-x for x in reversed(e)), -c)
        elif kind == "lex":
            def k(t):
                c, e = t
                return (-(c >= sp), e, -c)
        elif kind == "plain":
            def k(t):
                c, e = t
                return (-(c >= sp), sum(e), tuple(-x for x in reversed(e)), -c)
        elif kind == "elim":
            m = n - n_elim

            def k(t):
                c, e = t
                head, rest = e[m:], e[:m]
                return (-(c >= sp), sum(head), head,
                        sum(a * b for a, b in zip(w[:m], rest)) + tw[c], sum(rest),
                        tuple(-x for x in reversed(rest)), -c)
        else:
            raise AlgebraError(f"unknown term order kind {kind!r}")
        self._raw_key = k

    def key(self, t):
        v = self._cache.get(t)
        if v is None:
            v = self._cache[t] = self._raw_key(t)
        return v

    def degree(self, t):
        c, e = t
        return sum(abs(a) * b for a, b in zip(self.weights, e)) + abs(self.twists[c])


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _reduce(f: dict, by_comp: dict, order: TermOrder, p: int, full: bool = True) -> dict:
    """Remainder of f modulo monic elements grouped as {comp: [(lt_exp, g)]}."""
    f = dict(f)
    rem = {}
    key = order.key
    while f:
        t = max(f, key=key)
        c = f[t]
        comp, e = t
        for ge, g in by_comp.get(comp, ()):
            if _divides(ge, e):
                q = tuple(y - x for x, y in zip(ge, e))
                for (gc, gx), gv in g.items():
                    tt = (gc, tuple(a + b for a, b in zip(gx, q)))
                    v = (f.get(tt, 0) - c * gv) % p
                    if v:
                        f[tt] = v
                    else:
                        f.pop(tt, None)
                break
        else:
            rem[t] = c
            del f[t]
            if not full:
                rem.update(f)
                return rem
    return rem


def _monic(f: dict, order: TermOrder, p: int):
    lt = max(f, key=order.key)
    inv = pow(f[lt], p - 2, p)
    return lt, {t: c * inv % p for t, c in f.items()}


def _spoly(lt1, g1, lt2, g2, p):
    comp = lt1[0]
    l = _lcm(lt1[1], lt2[1])
    q1 = tuple(a - b for a, b in zip(l, lt1[1]))
    q2 = tuple(a - b for a, b in zip(l, lt2[1]))
    out = {}
    for (c, e), v in g1.items():
        out[(c, tuple(a + b for a, b in zip(e, q1)))] = v
    for (c, e), v in g2.items():
        t = (c, tuple(a + b for a, b in zip(e, q2)))
        w = (out.get(t, 0) - v) % p
        if w:
            out[t] = w
        else:
            out.pop(t, None)
    return out


def groebner_engine(gens: Sequence[dict], order: TermOrder, p: int, product_criterion: bool) -> list:
    """Reduced monic Groebner basis as a list of dicts, largest leading term first."""
    ceiling = LIMITS["degree_ceiling"]
    max_pairs = LIMITS["max_pairs"]
    key = order.key
    G: list = []      # (lt, g)
    alive: list = []
    pairs: list = []  # heap of (deg, key(lcm), i, j)
    by_comp: dict = {}
    npairs = 0

    def add(lt, g):
        k = len(G)
        comp, le = lt
        # B criterion on existing pairs
        keep = []
        for item in pairs:
            _, _, i, j = item
            li, lj = G[i][0][1], G[j][0][1]
            if G[i][0][0] == comp:
                lij = _lcm(li, lj)
                if _divides(le, lij) and _lcm(li, le) != lij and _lcm(lj, le) != lij:
                    continue
            keep.append(item)
        if len(keep) != len(pairs):
            pairs[:] = keep
            heapq.heapify(pairs)
        groups: dict = {}
        for i in range(k):
            if not alive[i] or G[i][0][0] != comp:
                continue
            groups.setdefault(_lcm(G[i][0][1], le), []).append(i)
        kept = []
        for L in sorted(groups, key=lambda L: key((comp, L))):
            if any(_divides(K, L) for K in kept):
                continue
            kept.append(L)
            members = groups[L]
            if product_criterion and any(
                all(a == 0 or b == 0 for a, b in zip(G[i][0][1], le)) for i in members
            ):
                continue
            i = min(members)
            heapq.heappush(pairs, (order.degree((comp, L)), key((comp, L)), i, k))
        G.append((lt, g))
        alive.append(True)
        by_comp.setdefault(comp, []).append((le, g))

    for f in gens:
        f = _reduce(f, by_comp, order, p)
        if f:
            add(*_monic(f, order, p))

    while pairs:
        deg, _, i, j = heapq.heappop(pairs)
        npairs += 1
        if deg > ceiling:
            raise ResourceError(f"S-pair degree {deg} exceeds ceiling {ceiling}")
        if npairs > max_pairs:
            raise ResourceError(f"more than {max_pairs} S-pairs")
        s = _spoly(G[i][0], G[i][1], G[j][0], G[j][1], p)
        s = _reduce(s, by_comp, order, p)
        if s:
            add(*_monic(s, order, p))

    # minimalize then interreduce
    elems = sorted(G, key=lambda lg: key(lg[0]))
    minimal = []
    for lt, g in elems:
        if any(m[0][0] == lt[0] and _divides(m[0][1], lt[1]) for m in minimal):
            continue
        minimal.append((lt, g))
    out = []
    for idx, (lt, g) in enumerate(minimal):
        others: dict = {}
        for jdx, (lt2, g2) in enumerate(minimal):
            if jdx != idx:
                others.setdefault(lt2[0], []).append((lt2[1], g2))
        r = _reduce(g, others, order, p)
        out.append(_monic(r, order, p))
    out.sort(key=lambda lg: key(lg[0]), reverse=True)
    return [g for _, g in out]


def reduce_vector(f: dict, basis: Sequence[dict], order: TermOrder, p: int) -> dict:
    by_comp: dict = {}
    for g in basis:
        lt = max(g, key=order.key)
        by_comp.setdefault(lt[0], []).append((lt[1], g))
    return _reduce(f, by_comp, order, p)


# ---------------------------------------------------------------------------
# helpers between GradedPoly and engine dicts


def _as_vec(f: GradedPoly, comp: int = 0) -> dict:
    return {(comp, e): c for e, c in f.terms.items()}


def _from_vec(ring: GradedRing, v: dict, comp: int = 0) -> GradedPoly:
    return GradedPoly._raw(ring, {e: c for (k, e), c in v.items() if k == comp})


def _ring_order(ring: GradedRing, twists=(0,), split=None) -> TermOrder:
    return TermOrder(ring.order, ring.degrees, twists, split)


def _relation_basis(ring: GradedRing) -> list:
    """Reduced GB of the defining relations, as raw term dicts."""
    if not ring.relations:
        return []
    return [_as_vec(g) for g in ring.relation_gb().basis]


# ---------------------------------------------------------------------------
# persistent cache


class GBCache:
    """Reduced bases on disk, one file per (ring, generators, order) key.

    File format: a header ``# ring=<digest> order=<name>`` followed by one
    polynomial string per line.  Writers hold a per-key lock.
    """

    def __init__(self, directory):
        self.directory = os.fspath(directory)
        os.makedirs(self.directory, exist_ok=True)

    @staticmethod
    def key(ring: GradedRing, gens: Sequence[GradedPoly], order: str) -> str:
        text = "\n".join([ring.digest, order] + sorted(str(g) for g in gens))
        return hashlib.sha256(text.encode()).hexdigest()[:32]

    def path(self, key: str) -> str:
        return os.path.join(self.directory, key + ".gb")

    def get(self, ring: GradedRing, gens, order: str):
        path = self.path(self.key(ring, gens, order))
        if not os.path.exists(path):
            return None
        with open(path) as fh:
            lines = fh.read().splitlines()
        if not lines or lines[0] != f"# ring={ring.digest} order={order}":
            return None
        return [ring.parse(line) for line in lines[1:] if line.strip()]

    def put(self, ring: GradedRing, gens, order: str, basis: Sequence[GradedPoly]):
        from filelock import FileLock

        key = self.key(ring, gens, order)
        path = self.path(key)
        with FileLock(path + ".lock"):
            tmp = path + ".tmp"
            with open(tmp, "w") as fh:
                fh.write(f"# ring={ring.digest} order={order}\n")
                for g in basis:
                    fh.write(str(g) + "\n")
            os.replace(tmp, path)


_ACTIVE_CACHE: list = [None]
_MEMO: dict = {}


@contextlib.contextmanager
def use_cache(directory):
    saved = _ACTIVE_CACHE[0]
    _ACTIVE_CACHE[0] = GBCache(directory) if directory else None
    try:
        yield _ACTIVE_CACHE[0]
    finally:
        _ACTIVE_CACHE[0] = saved


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Homogeneous ideal of the quotient ring ``A = S/I`` given by generators."""

    def __init__(self, ring: GradedRing, generators: Sequence = ()):
        gens = []
        for g in generators:
            g = ring(g)
            if g.is_zero():
                continue
            if g.homogeneous_degree() is None:
                raise AlgebraError(f"ideal generator {g} is not homogeneous")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None

    def gb(self, order: str | None = None) -> "GroebnerBasis":
        if order is None and self._gb is not None:
            return self._gb
        gbasis = buchberger(self, order)
        if order is None:
            self._gb = gbasis
        return gbasis

    def contains(self, f) -> bool:
        return ideal_membership(f, self)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.gb().basis)

    def is_zero(self) -> bool:
        """Zero as an ideal of the quotient ring."""
        return all(self.ring.reduce(g).is_zero() for g in self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def power(self, n: int) -> "Ideal":
        out = Ideal(self.ring, [self.ring.one])
        for _ in range(n):
            out = out * self
        return out

    def same_as(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def __repr__(self):
        return "Ideal(" + ", ".join(map(str, self.generators)) + ")"


@dataclass
class GroebnerBasis:
    """Reduced monic basis of ``ideal + relations`` in the polynomial ring."""

    basis: list
    order: str
    source: Ideal
    _by_comp: dict = field(default=None, repr=False)
    _torder: TermOrder = field(default=None, repr=False)

    def _prep(self):
        if self._by_comp is None:
            ring = self.source.ring
            self._torder = TermOrder(self.order, ring.degrees)
            by = {}
            for g in self.basis:
                by.setdefault(0, []).append((g.leading_exp_under(self._torder), dict(_as_vec(g))))
            self._by_comp = by

    def normal_form(self, f) -> GradedPoly:
        ring = self.source.ring
        f = ring(f)
        if f.is_zero() or not self.basis:
            return f
        self._prep()
        r = _reduce(_as_vec(f), self._by_comp, self._torder, ring.p)
        return _from_vec(ring, r)

    def strings(self) -> list:
        return [str(g) for g in self.basis]


def _leading_exp_under(self, torder: TermOrder):
    return max(((0, e) for e in self.terms), key=torder.key)[1]


GradedPoly.leading_exp_under = _leading_exp_under


def buchberger(I: Ideal, order: str | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I + relations``."""
    ring = I.ring
    order = order or ring.order
    gens = list(I.generators) + list(ring.relations)
    memo_key = (ring.digest, order, tuple(sorted(str(g) for g in gens)))
    hit = _MEMO.get(memo_key)
    if hit is None and _ACTIVE_CACHE[0] is not None:
        hit = _ACTIVE_CACHE[0].get(ring, gens, order)
    if hit is None:
        torder = TermOrder(order, ring.degrees)
        raw = groebner_engine([_as_vec(g) for g in gens], torder, ring.p, product_criterion=True)
        hit = [_from_vec(ring, v) for v in raw]
        if _ACTIVE_CACHE[0] is not None:
            _ACTIVE_CACHE[0].put(ring, gens, order, hit)
    _MEMO[memo_key] = hit
    return GroebnerBasis(list(hit), order, I)


def normal_form(f, G: GroebnerBasis) -> GradedPoly:
    return G.normal_form(f)


def ideal_membership(f, I: Ideal) -> bool:
    f = I.ring(f)
    return I.gb().normal_form(f).is_zero()


def radical_membership(f, I: Ideal) -> bool:
    """``f in sqrt(I)`` via ``1 in I + (1 - t f)`` in ``S[t]``."""
    ring = I.ring
    f = ring(f)
    if f.is_zero():
        return True
    n = ring.nvars
    deg = f.homogeneous_degree() or 0
    weights = tuple(ring.degrees) + (-deg,)
    gens = []
    for g in list(I.generators) + list(ring.relations):
        gens.append({(0, e + (0,)): c for e, c in g.terms.items()})
    h = {(0, (0,) * (n + 1)): 1}
    for e, c in f.terms.items():
        t = (0, e + (1,))
        h[t] = (h.get(t, 0) - c) % ring.p
    gens.append({t: c for t, c in h.items() if c})
    order = TermOrder("plain", weights)
    basis = groebner_engine(gens, order, ring.p, product_criterion=True)
    return any(all(not any(e) for (_, e) in g) for g in basis)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I cap J`` via elimination of t from ``t*I + (1-t)*J`` (t of degree 0)."""
    ring = I.ring
    if ring is not J.ring and ring != J.ring:
        raise AlgebraError("ring mismatch")
    n = ring.nvars
    weights = tuple(ring.degrees) + (0,)
    rel = [{(0, e + (0,)): c for e, c in g.terms.items()} for g in ring.relations]
    gens = list(rel)
    p = ring.p
    for g in I.generators:
        gens.append({(0, e + (1,)): c for e, c in g.terms.items()})
    for g in J.generators:
        v = {}
        for e, c in g.terms.items():
            v[(0, e + (0,))] = c
            v[(0, e + (1,))] = (p - c) % p
        gens.append(v)
    order = TermOrder("elim", weights, n_elim=1)
    basis = groebner_engine(gens, order, p, product_criterion=True)
    out = []
    for g in basis:
        if all(e[n] == 0 for (_, e) in g):
            poly = ring.reduce(GradedPoly._raw(ring, {e[:n]: c for (_, e), c in g.items()}))
            if not poly.is_zero():
                out.append(poly)
    return Ideal(ring, out)


# ---------------------------------------------------------------------------
# modules


class PresentationMatrix:
    """Matrix of homogeneous polynomials describing a degree-0 map of free modules.

    ``row_twists[i]`` / ``col_twists[j]`` are the internal degrees of the
    target / source basis vectors, so entry ``(i, j)`` is zero or homogeneous
    of degree ``col_twists[j] - row_twists[i]``.
    """

    def __init__(self, ring: GradedRing, entries, row_twists, col_twists, check: bool = True):
        self.ring = ring
        self.row_twists = tuple(int(t) for t in row_twists)
        self.col_twists = tuple(int(t) for t in col_twists)
        nr, nc = len(self.row_twists), len(self.col_twists)
        rows = [[ring(x) for x in row] for row in entries]
        if len(rows) != nr or any(len(r) != nc for r in rows):
            raise AlgebraError(f"matrix shape does not match twists {nr}x{nc}")
        self.entries = rows
        if check:
            for i in range(nr):
                for j in range(nc):
                    f = rows[i][j]
                    if f.is_zero():
                        continue
                    d = f.homogeneous_degree()
                    if d is None or d != self.col_twists[j] - self.row_twists[i]:
                        raise AlgebraError(
                            f"entry ({i},{j}) = {f} has degree {d}, expected "
                            f"{self.col_twists[j] - self.row_twists[i]}"
                        )

    @property
    def shape(self):
        return len(self.row_twists), len(self.col_twists)

    @classmethod
    def zero(cls, ring, row_twists, col_twists):
        return cls(ring, [[ring.zero] * len(col_twists) for _ in row_twists], row_twists, col_twists, check=False)

    @classmethod
    def identity(cls, ring, twists):
        n = len(twists)
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)],
                   twists, twists, check=False)

    def column(self, j) -> list:
        return [row[j] for row in self.entries]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.shape[1])]

    def column_vec(self, j, offset: int = 0) -> dict:
        v = {}
        for i, row in enumerate(self.entries):
            for e, c in row[j].terms.items():
                v[(i + offset, e)] = c
        return v

    def __matmul__(self, other: "PresentationMatrix") -> "PresentationMatrix":
        if self.col_twists != other.row_twists:
            raise AlgebraError("twist mismatch in matrix product")
        ring = self.ring
        nr, nk = self.shape
        nc = other.shape[1]
        out = []
        for i in range(nr):
            row = []
            for j in range(nc):
                acc = ring.zero
                for k in range(nk):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PresentationMatrix(ring, out, self.row_twists, other.col_twists, check=False)

    def scale(self, c) -> "PresentationMatrix":
        c = self.ring(c)
        return PresentationMatrix(self.ring, [[x * c for x in row] for row in self.entries],
                                  self.row_twists, self.col_twists, check=False)

    def reduced(self) -> "PresentationMatrix":
        """Entries in normal form modulo the ring relations."""
        ring = self.ring
        return PresentationMatrix(ring, [[ring.reduce(x) for x in row] for row in self.entries],
                                  self.row_twists, self.col_twists, check=False)

    def is_zero(self) -> bool:
        ring = self.ring
        return all(ring.reduce(x).is_zero() for row in self.entries for x in row)

    def __eq__(self, other):
        if not isinstance(other, PresentationMatrix):
            return NotImplemented
        return (self.row_twists == other.row_twists and self.col_twists == other.col_twists
                and self.reduced().entries == other.reduced().entries)

    def to_strings(self):
        return [[str(x) for x in row] for row in self.entries]

    def __repr__(self):
        return f"PresentationMatrix({self.shape[0]}x{self.shape[1]}, rows={self.row_twists}, cols={self.col_twists})"


def hstack(mats: Sequence[PresentationMatrix]) -> PresentationMatrix:
    ring = mats[0].ring
    rt = mats[0].row_twists
    rows = [[] for _ in rt]
    cols = []
    for m in mats:
        if m.row_twists != rt:
            raise AlgebraError("row twists differ in hstack")
        for i, r in enumerate(m.entries):
            rows[i].extend(r)
        cols.extend(m.col_twists)
    return PresentationMatrix(ring, rows, rt, cols, check=False)


class SubmoduleGB:
    """Groebner basis of ``span(columns) + I * A^m`` inside ``S^m``."""

    def __init__(self, ring: GradedRing, columns: Sequence[dict], twists: Sequence[int]):
        self.ring = ring
        self.twists = tuple(twists)
        self.order = _ring_order(ring, self.twists)
        gens = list(columns)
        for g in _relation_basis(ring):
            for k in range(len(self.twists)):
                gens.append({(k, e): c for (_, e), c in g.items()})
        self.basis = groebner_engine(gens, self.order, ring.p, product_criterion=len(self.twists) == 1)

    def reduce(self, v: dict) -> dict:
        return reduce_vector(v, self.basis, self.order, self.ring.p)

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def _syzygy_vectors(ring: GradedRing, columns: Sequence[dict], row_twists, col_twists) -> list:
    """Generators (as dicts on components 0..s-1) of the syzygies over A."""
    m = len(row_twists)
    s = len(col_twists)
    twists = tuple(row_twists) + tuple(col_twists)
    order = _ring_order(ring, twists, split=m)
    gens = []
    for j, col in enumerate(columns):
        v = dict(col)
        v[(m + j, (0,) * ring.nvars)] = 1
        gens.append(v)
    rel = _relation_basis(ring)
    for g in rel:
        for k in range(m + s):
            gens.append({(k, e): c for (_, e), c in g.items()})
    basis = groebner_engine(gens, order, ring.p, product_criterion=False)
    out = []
    rel_by = {}
    if rel:
        rel_order = TermOrder(ring.order, ring.degrees)
        for g in rel:
            lt = max(g, key=rel_order.key)
            rel_by.setdefault(0, []).append((lt[1], g))
    for g in basis:
        if max(g, key=order.key)[0] < m:
            continue
        vec = {(c - m, e): v for (c, e), v in g.items()}
        if rel:
            # drop pure relation multiples I * e_j
            comps = {}
            for (c, e), v in vec.items():
                comps.setdefault(c, {})[(0, e)] = v
            if all(not _reduce(poly, rel_by, rel_order, ring.p) for poly in comps.values()):
                continue
        out.append(vec)
    return out


def minimize_generators(ring: GradedRing, vectors: Sequence[dict], twists) -> list:
    """Drop generators lying in the span of the others of no larger degree.

    Only valid for homogeneous vectors over a positively graded ring.
    """
    order = _ring_order(ring, twists)

    def deg(v):
        return order.degree(max(v, key=order.key)) if v else 0

    items = sorted((v for v in vectors if v), key=lambda v: (deg(v), order.key(max(v, key=order.key))))
    kept: list = []
    for v in items:
        if kept:
            sub = SubmoduleGB(ring, kept, twists)
            if sub.contains(v):
                continue
        elif ring.relations:
            if SubmoduleGB(ring, [], twists).contains(v):
                continue
        kept.append(v)
    return kept


def _vec_to_columns(ring: GradedRing, vecs: Sequence[dict], nrows: int) -> list:
    cols = []
    for v in vecs:
        col = [dict() for _ in range(nrows)]
        for (c, e), val in v.items():
            col[c][e] = val
        cols.append([GradedPoly._raw(ring, d) for d in col])
    return cols


def _vec_degree(ring, v, twists):
    (c, e) = next(iter(v))
    return ring.degree_of(e) + twists[c]


def syzygies(M: PresentationMatrix, minimal: bool = True) -> PresentationMatrix:
    """Columns generating the kernel of ``M : A^cols -> A^rows``."""
    ring = M.ring
    nr, nc = M.shape
    if nc == 0:
        return PresentationMatrix(ring, [], (), (), check=False)
    vecs = _syzygy_vectors(ring, [M.column_vec(j) for j in range(nc)], M.row_twists, M.col_twists)
    if minimal and len(vecs) > 1:
        vecs = minimize_generators(ring, vecs, M.col_twists)
    cols = _vec_to_columns(ring, vecs, nc)
    degs = [_vec_degree(ring, v, M.col_twists) for v in vecs]
    entries = [[cols[j][i] for j in range(len(cols))] for i in range(nc)]
    return PresentationMatrix(ring, entries, M.col_twists, degs, check=False)


def colon_ideal(I: Ideal, f) -> Ideal:
    """``(I : f) = {g : g f in I}``."""
    ring = I.ring
    f = ring(f)
    if f.is_zero():
        return Ideal(ring, [ring.one])
    df = f.homogeneous_degree()
    if df is None:
        raise AlgebraError("colon by an inhomogeneous element")
    gens = [g for g in I.generators]
    cols = [_as_vec(f)] + [_as_vec(g) for g in gens]
    twists = [df] + [g.homogeneous_degree() for g in gens]
    vecs = _syzygy_vectors(ring, cols, (0,), twists)
    out = [_from_vec(ring, v, 0) for v in vecs]
    return Ideal(ring, [ring.reduce(g) for g in out if not ring.reduce(g).is_zero()])


def submodule_colon(ring: GradedRing, columns: Sequence[dict], row_twists, v: dict, v_twist: int) -> Ideal:
    """``(N : v)`` for N spanned by ``columns`` inside ``A^m``."""
    if not v:
        return Ideal(ring, [ring.one])
    cols = [v] + list(columns)
    twists = [v_twist] + [_vec_degree(ring, c, row_twists) for c in columns]
    vecs = _syzygy_vectors(ring, cols, row_twists, twists)
    gens = []
    for s in vecs:
        g = ring.reduce(_from_vec(ring, s, 0))
        if not g.is_zero():
            gens.append(g)
    return Ideal(ring, gens)


def annihilator(M: PresentationMatrix) -> Ideal:
    """Annihilator of ``coker M``: intersection of ``(span M : e_i)`` over rows."""
    ring = M.ring
    nr, nc = M.shape
    if nr == 0:
        return Ideal(ring, [ring.one])
    cols = [M.column_vec(j) for j in range(nc)]
    cols = [c for c in cols if c]
    result = None
    zero = (0,) * ring.nvars
    for i in range(nr):
        J = submodule_colon(ring, cols, M.row_twists, {(i, zero): 1}, M.row_twists[i])
        if result is None:
            result = J
        elif result.is_unit():
            result = J
        elif not J.is_unit():
            result = intersect(result, J)
        if result is not None and not result.is_unit() and result.is_zero():
            break
    return _clean_ideal(result)


def _clean_ideal(I: Ideal) -> Ideal:
    """Replace generators by the reduced basis minus relation multiples."""
    ring = I.ring
    if I.is_unit():
        return Ideal(ring, [ring.one])
    gens = [ring.reduce(g) for g in I.gb().basis]
    return Ideal(ring, [g for g in gens if not g.is_zero()])


def module_membership(M: PresentationMatrix, v: Sequence) -> bool:
    """Whether the column vector ``v`` lies in the column span of M (mod relations)."""
    ring = M.ring
    vec = {}
    for i, f in enumerate(v):
        for e, c in ring(f).terms.items():
            vec[(i, e)] = c
    if not vec:
        return True
    sub = SubmoduleGB(ring, [M.column_vec(j) for j in range(M.shape[1])], M.row_twists)
    return sub.contains(vec)


def format_vector(ring: GradedRing, v: dict) -> str:
    comps = {}
    for (c, e), val in v.items():
        comps.setdefault(c, {})[e] = val
    return "(" + ", ".join(f"{c}: {format_poly(ring, comps[c])}" for c in sorted(comps)) + ")"
