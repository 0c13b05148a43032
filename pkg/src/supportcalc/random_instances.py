"""Seeded random ring elements, matrices and perfect complexes.

Distribution (kept fixed so suites are comparable between runs):

* twists are multiples of the smallest variable degree in ``[0, 8]``;
* a matrix entry of admissible degree ``e`` (``0 <= e <= 8``) is nonzero with
  probability 0.6 and then has 1 or 2 random monomials with nonzero
  coefficients; other entries are zero;
* a complex is, with equal odds, one free module of rank 1-2, a two-term
  complex ``A^m -> A^n`` with ``m, n <= 3``, or a three-term complex built as
  the Koszul object of a one- or two-term complex on a random element;
* it is then shifted by -1, 0 or 1, and with probability 0.2 summed with a
  second independent complex.
"""

from __future__ import annotations

import random

from .algebra import GradedRing
from .complexes import FreeComplex, direct_sum, shift
from .groebner import PresentationMatrix
from .support import koszul_object

MAX_ENTRY_DEGREE = 8


def random_homogeneous(ring: GradedRing, degree: int, rng: random.Random, max_terms: int = 2):
    """Random element of degree ``degree`` with up to ``max_terms`` monomials; zero if none exist."""
    if degree < 0:
        return ring.zero
    mons = ring.standard_monomials(degree) if ring.relations else ring.monomials_of_degree(degree)
    if not mons:
        return ring.zero
    k = rng.randint(1, min(max_terms, len(mons)))
    chosen = rng.sample(list(mons), k)
    return ring.poly({m: rng.randint(1, ring.p - 1) for m in chosen})


def random_twists(rng: random.Random, k: int, ring: GradedRing):
    step = min(ring.degrees) if ring.degrees else 2
    top = MAX_ENTRY_DEGREE // step
    return sorted(step * rng.randint(0, top) for _ in range(k))


def random_matrix(ring: GradedRing, row_twists, col_twists, rng: random.Random, density: float = 0.6):
    rows = []
    for rt in row_twists:
        row = []
        for ct in col_twists:
            e = ct - rt
            if 0 <= e <= MAX_ENTRY_DEGREE and rng.random() < density:
                row.append(random_homogeneous(ring, e, rng))
            else:
                row.append(ring.zero)
        rows.append(row)
    return PresentationMatrix(ring, rows, row_twists, col_twists)


def random_element(ring: GradedRing, rng: random.Random, max_degree: int = 4):
    step = min(ring.degrees)
    for _ in range(20):
        f = random_homogeneous(ring, step * rng.randint(1, max_degree // step), rng)
        if not f.is_zero():
            return f
    return ring.gens[0]


def _base_complex(ring: GradedRing, rng: random.Random) -> FreeComplex:
    kind = rng.randrange(3)
    if kind == 0:
        return FreeComplex.free_module(ring, random_twists(rng, rng.randint(1, 2), ring))
    m, n = rng.randint(1, 3), rng.randint(1, 3)
    src = random_twists(rng, m, ring)
    # target twists sit below the source twists so entries can be nonzero
    tgt = sorted(max(0, t - 2 * rng.randint(0, 3)) for t in random_twists(rng, n, ring))
    two = FreeComplex(ring, -1, [tuple(src), tuple(tgt)], [random_matrix(ring, tgt, src, rng)])
    if kind == 1:
        return two
    base = two if rng.random() < 0.5 else FreeComplex.free_module(ring, random_twists(rng, 1, ring))
    return koszul_object(base, random_element(ring, rng))


def random_complex(ring: GradedRing, rng: random.Random) -> FreeComplex:
    X = shift(_base_complex(ring, rng), rng.choice((-1, 0, 1)))
    if rng.random() < 0.2:
        X = direct_sum(X, shift(_base_complex(ring, rng), rng.choice((-1, 0, 1))))
    return X


def random_acyclic_complex(ring: GradedRing, rng: random.Random) -> FreeComplex:
    """Cones of identities of random complexes, with shifts and sums."""
    from .complexes import ChainMap, cone

    def one():
        X = _base_complex(ring, rng)
        ident = {i: PresentationMatrix.identity(ring, X.term(i)) for i in X.degrees}
        return shift(cone(ChainMap(X, X, ident, check=False)), rng.choice((-2, -1, 0, 1, 2)))

    X = one()
    if rng.random() < 0.3:
        X = direct_sum(X, one())
    return X
