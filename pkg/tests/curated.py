"""Twenty-five ideals in F_101[x,y,z] (all variables in degree 2) and the
degreewise comparisons run against them."""

import random

import oracles
from supportcalc import GradedRing, Ideal, PresentationMatrix, annihilator, buchberger, radical_membership
from supportcalc.groebner import TermOrder, _as_vec, _from_vec, groebner_engine

R3 = GradedRing(101, [("x", 2), ("y", 2), ("z", 2)])

IDEALS = [
    ["x^2 - y^2", "x*y"],
    ["x", "y"],
    ["x^2", "y^2"],
    ["x*y", "y*z", "x*z"],
    ["x^2 - y*z", "y^2 - x*z"],
    ["x^3", "y^3", "z^3"],
    ["x*y - z^2"],
    ["x^2 + y^2 + z^2"],
    ["x*y", "x*z"],
    ["x^2", "x*y"],
    ["x - y", "y - z"],
    ["x*y*z"],
    ["x^2 - 2*y^2", "x*z - y*z"],
    ["x^2 + y*z", "y^2 + x*z", "z^2 + x*y"],
    ["x^2*y", "y^2*z", "z^2*x"],
    ["x + y + z", "x*y + y*z + x*z", "x*y*z"],
    ["x^2", "y^2", "z^2"],
    ["x^2 - 2*x*y + y^2", "y^2 - 2*y*z + z^2"],
    ["x^3 - y^3"],
    ["x*z - y^2", "x^2*y - z^3"],
    ["1"],
    [],
    ["x^4", "x*y^2", "y^4"],
    ["3*x^2 + 5*x*y + 7*z^2", "y*z"],
    ["x^2 - y^2", "y^2 - z^2", "x*y"],
]

MAX_DEGREE = 8
DEGREES = range(0, MAX_DEGREE + 1, 2)
# power witnesses for radical membership can sit above the membership range
RADICAL_WITNESS_DEGREE = 24
RADICAL_PROBES = ["x", "y", "z", "x + y", "x*y", "x - y", "x*y*z"]


def gens_of(k):
    return [R3(g) for g in IDEALS[k]]


def random_element(ring, d, rng):
    mons = ring.monomials_of_degree(d)
    return ring.poly({m: rng.randrange(ring.p) for m in rng.sample(list(mons), min(3, len(mons)))})


def random_ideal_element(ring, gens, d, rng):
    f = ring.zero
    for g in gens:
        e = d - g.homogeneous_degree()
        if e >= 0 and ring.monomials_of_degree(e):
            f = f + g * random_element(ring, e, rng)
    return f


def shuffled_bases(gens, rng, times=5):
    """Reduced bases computed from shuffled, rescaled and recombined generators."""
    order = TermOrder("grevlex", R3.degrees)
    out = []
    for _ in range(times):
        gs = list(gens)
        rng.shuffle(gs)
        mixed = []
        for i, g in enumerate(gs):
            h = g * R3.const(rng.randint(1, 100))
            for g2 in gs[:i]:
                e = g.homogeneous_degree() - g2.homogeneous_degree()
                if e >= 0 and R3.monomials_of_degree(e):
                    h = h + g2 * random_element(R3, e, rng)
            mixed.append(h)
        basis = groebner_engine([_as_vec(g) for g in mixed], order, R3.p, product_criterion=True)
        out.append(sorted(str(_from_vec(R3, v)) for v in basis))
    return out


def check_ideal(k, rng):
    """All degreewise comparisons for ideal k; returns a list of mismatch strings."""
    bad = []
    gens = gens_of(k)
    I = Ideal(R3, gens)
    G = buchberger(I)
    ref = sorted(G.strings())
    for s in shuffled_bases(gens, rng):
        if s != ref:
            bad.append(f"ideal {k}: shuffled basis {s} != {ref}")
    lts = [g.leading_exp() for g in G.basis]
    for d in DEGREES:
        mons = R3.monomials_of_degree(d)
        std = sum(1 for m in mons if not any(all(a <= b for a, b in zip(lt, m)) for lt in lts))
        if len(mons) - std != oracles.ideal_dim(R3, gens, d):
            bad.append(f"ideal {k}: dim I_{d} disagrees with standard monomials")
        for f in [random_ideal_element(R3, gens, d, rng) for _ in range(2)] + \
                 [random_element(R3, d, rng) for _ in range(3)]:
            if I.contains(f) != oracles.in_ideal(R3, gens, f):
                bad.append(f"ideal {k}: membership of {f}")
    for probe in RADICAL_PROBES:
        got = radical_membership(R3(probe), I)
        want = oracles.power_in_ideal(R3, gens, probe, max_degree=RADICAL_WITNESS_DEGREE) is not None
        if got != want:
            bad.append(f"ideal {k}: radical membership of {probe}: engine {got}, brute force {want}")
    # annihilator of A/I + A/J(2) for the next ideal J, checked against the degreewise kernel
    other = gens_of((k + 1) % len(IDEALS))
    P = presentation_of_sum(gens, other)
    ann = annihilator(P)
    for d in DEGREES:
        if oracles.ideal_dim(R3, ann.generators, d) != oracles.annihilator_dim(P, d):
            bad.append(f"ideal {k}: annihilator dimension in degree {d}")
    return bad


def presentation_of_sum(gens_a, gens_b, twist_b=2):
    cols = [(0, g, g.homogeneous_degree()) for g in gens_a if not g.is_zero()]
    cols += [(1, g, g.homogeneous_degree() + twist_b) for g in gens_b if not g.is_zero()]
    entries = [[g if row == r else R3.zero for r, g, _ in cols] for row in (0, 1)]
    return PresentationMatrix(R3, entries, [0, twist_b], [t for _, _, t in cols])


def run_all(seed=0):
    rng = random.Random(seed)
    bad = []
    for k in range(len(IDEALS)):
        bad += check_ideal(k, rng)
    return bad
