"""Finite spectra and the support-subset model of localizing subcategories.

Subsets of an n-element poset are bitmasks.  ``up[i]`` is the mask of all
``j`` with ``p_i <= p_j`` (primes that specialize ``p_i``).

In the stratified model a localizing subcategory is determined by the family
``p -> S(p)`` with each ``S(p)`` either 0 or all of ``Gamma_p T``; the
pieces ``Gamma_p T`` are mutually orthogonal, which is what the check
routines encode.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import AlgebraError, GradedRing
from .groebner import Ideal

ENUMERATION_CAP = 20


def bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Poset:
    """Finite partial order on ``range(n)`` given by up-set masks."""

    def __init__(self, up: Sequence[int], check: bool = True):
        self.up = tuple(up)
        self.n = len(self.up)
        self.full = (1 << self.n) - 1
        self.down = tuple(sum(1 << i for i in range(self.n) if self.up[i] >> j & 1) for j in range(self.n))
        if check:
            self.check()

    @classmethod
    def from_relation(cls, n: int, leq) -> "Poset":
        """``leq(i, j)`` decides ``i <= j``; the relation is closed transitively."""
        up = [sum(1 << j for j in range(n) if i == j or leq(i, j)) for i in range(n)]
        return cls(_transitive_closure(up))

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def check(self):
        for i in range(self.n):
            if not self.up[i] >> i & 1:
                raise AlgebraError(f"order is not reflexive at {i}")
            for j in bits(self.up[i]):
                if j != i and self.up[j] >> i & 1:
                    raise AlgebraError(f"order is not antisymmetric at {i}, {j}")
                if self.up[j] & ~self.up[i]:
                    raise AlgebraError(f"order is not transitive through {j}")

    # subsets ----------------------------------------------------------
    def closure(self, U: int) -> int:
        """Specialization closure: everything above some member of U."""
        out = 0
        for i in bits(U):
            out |= self.up[i]
        return out

    def is_specialization_closed(self, U: int) -> bool:
        return self.closure(U) == U

    def is_generalization_closed(self, U: int) -> bool:
        return self.is_specialization_closed(self.full & ~U)

    def minimal(self, U: int) -> int:
        return sum(1 << i for i in bits(U) if not (self.down[i] & U & ~(1 << i)))

    def dim(self, U: int) -> float:
        """Length of the longest chain inside U; ``-inf`` for the empty set."""
        if not U:
            return -math.inf
        longest = {}
        # process from the top so chain lengths above are known
        order = sorted(bits(U), key=lambda i: -popcount(self.down[i]))
        for i in order:
            above = self.up[i] & U & ~(1 << i)
            longest[i] = 1 + max((longest[j] for j in bits(above)), default=-1)
        return max(longest.values())

    def layers(self, U: int) -> list:
        """Peel off minimal elements until nothing is left."""
        out = []
        while U:
            m = self.minimal(U)
            out.append(m)
            U &= ~m
        return out

    def is_discrete(self, U: int) -> bool:
        return self.dim(U) == 0

    def rickard(self, U: int) -> int:
        """``{p : V(p) cap U = empty}``."""
        return sum(1 << i for i in range(self.n) if not (self.up[i] & U))

    def thick_of(self, V: int) -> int:
        """Union of the supports of compacts supported in V.

        A compact object has specialization-closed support, so this is the
        set of p with ``V(p)`` inside V.
        """
        return sum(1 << i for i in range(self.n) if self.up[i] & ~V == 0)


def _transitive_closure(up):
    up = list(up)
    n = len(up)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in bits(up[i]):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    return up


def natural_posets(n: int):
    """Every naturally labeled poset on n points (``i <= j`` implies ``i <= j`` as integers).

    Every isomorphism class of n-element posets occurs at least once.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                up[i] |= 1 << j
        if _transitive_closure(up) == up:
            yield Poset(up, check=False)


def random_poset(rng: random.Random, n: int, density: float | None = None) -> Poset:
    """Transitive closure of a random DAG on the natural order; density uniform in [0.1, 0.7]."""
    if density is None:
        density = rng.uniform(0.1, 0.7)
    up = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                up[i] |= 1 << j
    return Poset(_transitive_closure(up), check=False)


# ---------------------------------------------------------------------------
# declared spectra


@dataclass
class Prime:
    label: str
    ideal: Ideal
    status: str  # "verified_monomial" or "asserted"


def _variable_prime_status(ring: GradedRing, ideal: Ideal):
    """``True`` / ``False`` if decidable by the monomial rule, ``None`` otherwise."""
    gens = [ring.reduce(g) for g in ideal.generators]
    gens = [g for g in gens if not g.is_zero()]
    if any(len(g.terms) != 1 for g in gens):
        return None
    # monomial ideal of the polynomial ring: prime iff its minimal generators are variables
    full = Ideal(ring, gens)
    mons = [next(iter(g.terms)) for g in gens]
    minimal = [m for m in mons if not any(o != m and all(a <= b for a, b in zip(o, m)) for o in mons)]
    if any(sum(m) != 1 for m in minimal):
        return False
    return all(full.contains(r) for r in ring.relations)


class SpecModel:
    """Declared homogeneous primes with containment decided by ideal membership."""

    def __init__(self, ring: GradedRing, primes: Sequence):
        self.ring = ring
        plist = []
        for entry in primes:
            if isinstance(entry, Prime):
                plist.append(entry)
                continue
            label, gens, asserted = entry if len(entry) == 3 else (*entry, False)
            I = Ideal(ring, gens)
            verdict = _variable_prime_status(ring, I)
            if verdict is True:
                status = "verified_monomial"
            elif verdict is False:
                raise AlgebraError(f"{label} is a monomial ideal that is not prime")
            elif asserted:
                status = "asserted"
            else:
                raise AlgebraError(f"{label} is not a monomial prime; declare it with assert_prime")
            if I.is_unit():
                raise AlgebraError(f"{label} is the unit ideal")
            plist.append(Prime(str(label), I, status))
        labels = [p.label for p in plist]
        if len(set(labels)) != len(labels):
            raise AlgebraError("duplicate prime labels")
        self.primes = plist
        self.labels = labels
        n = len(plist)
        table = [[i == j or plist[j].ideal.contains_ideal(plist[i].ideal) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and table[i][j] and table[j][i]:
                    raise AlgebraError(f"{labels[i]} and {labels[j]} are the same ideal")
        self.containment = table
        self.poset = Poset([sum(1 << j for j in range(n) if table[i][j]) for i in range(n)])
        self.index = {lab: i for i, lab in enumerate(labels)}

    def __len__(self):
        return len(self.primes)

    def asserted(self) -> list:
        return [p.label for p in self.primes if p.status == "asserted"]

    def containing(self, I: Ideal) -> int:
        """Mask of declared primes containing the ideal I."""
        mask = 0
        for k, p in enumerate(self.primes):
            if p.ideal.contains_ideal(I):
                mask |= 1 << k
        return mask

    def full(self):
        return self.poset.full

    def describe(self) -> dict:
        return {
            "primes": [{"label": p.label, "generators": [str(g) for g in p.ideal.generators],
                        "status": p.status} for p in self.primes],
        }


# ---------------------------------------------------------------------------
# model-level checks


@dataclass
class ModelReport:
    name: str
    size: int
    passed: bool
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def fail(self, msg):
        self.passed = False
        if len(self.failures) < 20:
            self.failures.append(msg)


def _check_bound(P: Poset):
    if P.n > ENUMERATION_CAP:
        raise AlgebraError(f"enumeration over 2^{P.n} subsets exceeds the cap 2^{ENUMERATION_CAP}")


@dataclass(frozen=True)
class SubsetFamily:
    """``p -> S(p)`` with ``S(p)`` zero (False) or all of ``Gamma_p T`` (True)."""

    members: tuple

    @classmethod
    def from_mask(cls, n, mask):
        return cls(tuple(bool(mask >> i & 1) for i in range(n)))

    def mask(self) -> int:
        return sum(1 << i for i, b in enumerate(self.members) if b)


def _gamma_on_family(F: SubsetFamily, q: int) -> bool:
    """Whether ``Gamma_q`` of the subcategory generated by the family is nonzero.

    ``Gamma_q Gamma_p T`` vanishes for ``p != q``, so only ``S(q)`` contributes.
    """
    return F.members[q]


def sigma(F: SubsetFamily) -> int:
    """Support of the localizing subcategory generated by the family."""
    return sum(1 << q for q in range(len(F.members)) if _gamma_on_family(F, q))


def tau(n: int, U: int) -> SubsetFamily:
    """Family ``p -> Gamma_p T`` for ``p`` in U, zero elsewhere."""
    return SubsetFamily.from_mask(n, U)


def check_sigma_tau(P: Poset) -> ModelReport:
    _check_bound(P)
    n = P.n
    rep = ModelReport("sigma_tau", n, True)
    for U in range(1 << n):
        if sigma(tau(n, U)) != U:
            rep.fail(f"sigma(tau({U:b})) != {U:b}")
        F = SubsetFamily.from_mask(n, U)
        if tau(n, sigma(F)) != F:
            rep.fail(f"tau(sigma(F)) != F for {U:b}")
        for i in range(n):
            V = U | (1 << i)
            if sigma(tau(n, U)) & ~sigma(tau(n, V)):
                rep.fail(f"not inclusion preserving at {U:b} <= {V:b}")
    rep.counts = {"subsets": 1 << n, "families": 1 << n}
    return rep


def check_thick_classification(P: Poset) -> ModelReport:
    _check_bound(P)
    n = P.n
    rep = ModelReport("thick_classification", n, True)
    closed = [U for U in range(1 << n) if P.is_specialization_closed(U)]
    images = sorted({P.closure(U) for U in range(1 << n)})
    if images != closed:
        rep.fail("closure images differ from specialization-closed subsets")
    for V in range(1 << n):
        t = P.thick_of(V)
        if P.thick_of(t) != t:
            rep.fail(f"thick_of not idempotent at {V:b}")
        if (t == V) != P.is_specialization_closed(V):
            rep.fail(f"fixed points of thick_of differ from closed sets at {V:b}")
        for i in range(n):
            W = V | (1 << i)
            if t & ~P.thick_of(W):
                rep.fail(f"thick_of not monotone at {V:b} <= {W:b}")
    rep.counts = {"specialization_closed": len(closed)}
    return rep


def check_smash(P: Poset) -> ModelReport:
    _check_bound(P)
    n = P.n
    rep = ModelReport("smash", n, True)
    spec_closed = {U for U in range(1 << n) if P.is_specialization_closed(U)}
    gen_closed = {U for U in range(1 << n) if P.is_generalization_closed(U)}
    if len(spec_closed) != len(gen_closed):
        rep.fail("counts differ")
    for U in gen_closed:
        matches = [V for V in spec_closed if P.full & ~V == U]
        if len(matches) != 1:
            rep.fail(f"{U:b} has {len(matches)} complementary closed sets")
    if 0 not in gen_closed or P.full not in gen_closed:
        rep.fail("empty or full set missing")
    rep.counts = {"generalization_closed": len(gen_closed), "specialization_closed": len(spec_closed)}
    return rep


def check_rickard(P: Poset) -> ModelReport:
    _check_bound(P)
    n = P.n
    rep = ModelReport("rickard", n, True)
    for U in range(1 << n):
        R = P.rickard(U)
        for i in range(n):
            if bool(R >> i & 1) != (P.up[i] & U == 0):
                rep.fail(f"defining property fails at U={U:b}, p={i}")
        if not P.is_specialization_closed(R):
            rep.fail(f"result for U={U:b} is not specialization closed")
        if P.closure(R) & U:
            rep.fail(f"closure of result meets U={U:b}")
    return rep


def check_filtration(P: Poset) -> ModelReport:
    _check_bound(P)
    n = P.n
    rep = ModelReport("local_global_filtration", n, True)
    for U in range(1 << n):
        L = P.layers(U)
        acc = 0
        for layer in L:
            if acc & layer:
                rep.fail(f"layers overlap for {U:b}")
            acc |= layer
            if not P.is_discrete(layer):
                rep.fail(f"layer {layer:b} of {U:b} is not discrete")
        if acc != U:
            rep.fail(f"layers of {U:b} do not cover it")
        expected = 0 if not U else P.dim(U) + 1
        if len(L) != expected:
            rep.fail(f"{len(L)} layers for {U:b}, dim {P.dim(U)}")
    return rep


MODEL_CHECKS = (check_sigma_tau, check_thick_classification, check_smash, check_rickard, check_filtration)


def run_model_checks(P: Poset) -> list:
    return [chk(P) for chk in MODEL_CHECKS]
