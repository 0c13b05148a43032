"""Koszul objects, torsion tests and supports over a declared spectrum.

For a finitely generated module M the support is ``V(Ann M)``; for a
perfect complex it is the union over the homology modules.  Every function
takes the :class:`SpecModel` explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraError
from .complexes import (
    ChainMap,
    FreeComplex,
    GradedModule,
    cone,
    ext_module,
    multiplication_map,
    twist,
)
from .groebner import Ideal, PresentationMatrix, radical_membership
from .specmodel import SpecModel, bits


@dataclass(frozen=True)
class SupportSet:
    """Subset of the declared primes, as a bitmask."""

    spec: SpecModel
    mask: int

    def labels(self) -> list:
        """Member labels in declaration order."""
        return [self.spec.labels[i] for i in bits(self.mask)]

    def __contains__(self, label) -> bool:
        return bool(self.mask >> self.spec.index[label] & 1)

    def __or__(self, other):
        return SupportSet(self.spec, self.mask | other.mask)

    def __and__(self, other):
        return SupportSet(self.spec, self.mask & other.mask)

    def __sub__(self, other):
        return SupportSet(self.spec, self.mask & ~other.mask)

    def __le__(self, other):
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        return isinstance(other, SupportSet) and self.mask == other.mask and self.spec is other.spec

    def __hash__(self):
        return hash(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")

    def __bool__(self):
        return bool(self.mask)

    def closure(self) -> "SupportSet":
        return SupportSet(self.spec, self.spec.poset.closure(self.mask))

    def __str__(self):
        return ", ".join(self.labels())

    def __repr__(self):
        return f"SupportSet({self.labels()})"

    @classmethod
    def of_labels(cls, spec: SpecModel, labels) -> "SupportSet":
        return cls(spec, sum(1 << spec.index[lab] for lab in labels))


# ---------------------------------------------------------------------------
# Koszul objects


def koszul_object(X: FreeComplex, r) -> FreeComplex:
    """Cone of multiplication by r from X to its internal twist by ``-|r|``."""
    return cone(multiplication_map(X, X.ring(r)))


def koszul_ideal(X: FreeComplex, gens: Sequence) -> FreeComplex:
    """Iterate :func:`koszul_object` over ``gens`` from left to right."""
    for r in gens:
        X = koszul_object(X, r)
    return X


def koszul_tower_map(X: FreeComplex, r, n: int) -> ChainMap:
    """The map ``X//r^n -> X//r^(n+1)``: multiplication by r on the target summand, identity on the shifted one."""
    ring = X.ring
    r = ring(r)
    A = koszul_object(X, r ** n)
    B = koszul_object(X, r ** (n + 1))
    comps = {}
    for i in set(A.degrees) | set(B.degrees):
        top, bot = X.term(i), X.term(i + 1)
        ent = []
        for a in range(len(top) + len(bot)):
            row = []
            for b in range(len(top) + len(bot)):
                if a == b:
                    row.append(r if a < len(top) else ring.one)
                else:
                    row.append(ring.zero)
            ent.append(row)
        comps[i] = PresentationMatrix(ring, ent, B.term(i), A.term(i), check=False)
    return ChainMap(A, B, comps)


@dataclass
class TowerReport:
    passed: bool
    window: tuple
    degrees_checked: int
    failures: list


def koszul_tower_triangle(X: FreeComplex, r, n: int, window=None) -> TowerReport:
    """Degreewise certificate for the triangle ``X//r^n -> X//r^(n+1) -> X//r`` (twisted by ``-n|r|``).

    Checks, for every cohomological i and internal d in the window:
    * the third term is quasi-isomorphic to the cone of the tower map
      (equal homology dimensions),
    * ``dim H^i(B) <= dim H^i(A) + dim H^i(C)``,
    * the alternating sum over the long exact sequence vanishes.
    """
    if n < 1:
        raise AlgebraError("tower index must be at least 1")
    ring = X.ring
    r = ring(r)
    deg = r.homogeneous_degree()
    f = koszul_tower_map(X, r, n)
    A, B = f.source, f.target
    C = twist(koszul_object(X, r), -n * deg)
    K = cone(f)
    if window is None:
        lo = min([0] + B.all_twists())
        window = (lo, 4 * max([0] + [abs(t) for t in B.all_twists()]) + 16)
    lo, hi = window
    degs = set(A.degrees) | set(B.degrees) | set(C.degrees) | set(K.degrees)
    if not degs:
        return TowerReport(True, tuple(window), 0, [])
    imin, imax = min(degs) - 1, max(degs) + 1
    failures = []
    count = 0
    for d in range(lo, hi + 1):
        alt = 0
        for i in range(imin, imax + 1):
            a, b, c, k = (Z.homology_dim(i, d) for Z in (A, B, C, K))
            count += 1
            if c != k:
                failures.append(f"H^{i}_{d}: third term {c}, cone {k}")
            if b > a + c:
                failures.append(f"H^{i}_{d}: {b} > {a} + {c}")
            alt += (-1) ** (i % 2) * (a - b + c)
        if alt != 0:
            failures.append(f"alternating sum {alt} in internal degree {d}")
    return TowerReport(not failures, (lo, hi), count, failures)


# ---------------------------------------------------------------------------
# torsion and supports


def is_torsion(M: GradedModule, r) -> bool:
    """Every element of M is killed by a power of r, i.e. ``r in sqrt(Ann M)``."""
    return radical_membership(M.ring(r), M.annihilator)


def v_set(I: Ideal, spec: SpecModel) -> SupportSet:
    return SupportSet(spec, spec.containing(I))


def z_set(label, spec: SpecModel) -> SupportSet:
    """Declared primes not contained in the given one."""
    j = spec.index[label] if isinstance(label, str) else int(label)
    return SupportSet(spec, sum(1 << i for i in range(len(spec)) if not spec.containment[i][j]))


def supp_module(M: GradedModule, spec: SpecModel) -> SupportSet:
    if spec is None:
        raise AlgebraError("no spectrum given")
    if M.ngens == 0:
        return SupportSet(spec, 0)
    return v_set(M.annihilator, spec)


def supp_complex(X: FreeComplex, spec: SpecModel) -> SupportSet:
    out = SupportSet(spec, 0)
    for i in X.degrees:
        out = out | supp_module(X.homology(i), spec)
        if out.mask == spec.full():
            break
    return out


def big_supp(X: FreeComplex, spec: SpecModel) -> SupportSet:
    return supp_complex(X, spec).closure()


def rickard_support(U: SupportSet) -> SupportSet:
    return SupportSet(U.spec, U.spec.poset.rickard(U.mask))


def dim_subset(U: SupportSet):
    return U.spec.poset.dim(U.mask)


def specialization_closure(U: SupportSet) -> SupportSet:
    return U.closure()


def is_generalization_closed(U: SupportSet) -> bool:
    return U.spec.poset.is_generalization_closed(U.mask)


def local_global_filtration(U: SupportSet) -> list:
    return [SupportSet(U.spec, m) for m in U.spec.poset.layers(U.mask)]


@dataclass
class MinimalityReport:
    passed: bool
    prime: str
    nonzero_degrees: list
    detail: str = ""


def check_minimality_witness(X: FreeComplex, Y: FreeComplex, prime, spec: SpecModel) -> MinimalityReport:
    """With ``supp X = supp Y = {p}``, the graded Hom between them must be nonzero."""
    target = SupportSet.of_labels(spec, [prime])
    for name, Z in (("X", X), ("Y", Y)):
        s = supp_complex(Z, spec)
        if s != target:
            raise AlgebraError(f"support of {name} is {s.labels()}, expected [{prime}]")
    nz = [n for n, M in ext_module(X, Y).items() if not M.is_zero()]
    return MinimalityReport(bool(nz), prime, nz)


def generator_complex(ring, gens) -> FreeComplex:
    """``A//(gens)`` on the free module A in degree 0."""
    return koszul_ideal(FreeComplex.free_module(ring), gens)


__all__ = [
    "SupportSet", "koszul_object", "koszul_ideal", "koszul_tower_map", "koszul_tower_triangle",
    "is_torsion", "v_set", "z_set", "supp_module", "supp_complex", "big_supp", "rickard_support",
    "dim_subset", "specialization_closure", "is_generalization_closed", "local_global_filtration",
    "check_minimality_witness", "generator_complex",
]
