import random

import pytest
from hypothesis import given, settings, strategies as st

from supportcalc import AlgebraError, GradedRing, Ideal, PresentationMatrix
from supportcalc.complexes import (
    ChainMap,
    FreeComplex,
    GradedModule,
    cone,
    direct_sum,
    ext_nonzero_degrees,
    hom_complex,
    shift,
    tensor,
    twist,
)
from supportcalc.random_instances import random_acyclic_complex, random_complex
from supportcalc.support import koszul_object

R = GradedRing(101, [("x", 2), ("y", 2)])
Q = GradedRing(101, [("x", 2), ("y", 2)], ["x*y"])
A = FreeComplex.free_module(R)
WINDOW = range(-4, 20, 2)

seeds = st.integers(0, 10**6)


def homology_dims(X, i):
    return [X.homology_dim(i, d) for d in WINDOW]


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_homology_two_routes(seed):
    """Presented homology modules agree with the degreewise linear algebra."""
    X = random_complex(R, random.Random(seed))
    for i in X.degrees:
        H = X.homology(i)
        assert [H.dim(d) for d in WINDOW] == homology_dims(X, i)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_homology_two_routes_quotient_ring(seed):
    X = random_complex(Q, random.Random(seed))
    for i in X.degrees:
        H = X.homology(i)
        assert [H.dim(d) for d in WINDOW] == homology_dims(X, i)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_euler_characteristic(seed):
    X = random_complex(R, random.Random(seed))
    for d in WINDOW:
        alt = sum((-1) ** (i % 2) * X.homology_dim(i, d) for i in X.degrees)
        assert alt == X.euler_characteristic(d)


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(-2, 2), st.sampled_from([-4, -2, 0, 2]))
def test_shift_and_twist(seed, n, s):
    X = random_complex(R, random.Random(seed))
    S, T = shift(X, n), twist(X, s)
    for i in X.degrees:
        for d in WINDOW:
            assert S.homology_dim(i - n, d) == X.homology_dim(i, d)
            assert T.homology_dim(i, d + s) == X.homology_dim(i, d)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_direct_sum_adds(seed):
    rng = random.Random(seed)
    X, Y = random_complex(R, rng), random_complex(R, rng)
    Z = direct_sum(X, Y)
    for i in set(X.degrees) | set(Y.degrees):
        for d in WINDOW:
            assert Z.homology_dim(i, d) == X.homology_dim(i, d) + Y.homology_dim(i, d)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_cone_of_identity_is_acyclic(seed):
    X = random_acyclic_complex(R, random.Random(seed))
    assert X.is_acyclic()
    assert all(X.homology_dim(i, d) == 0 for i in X.degrees for d in WINDOW)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_constructions_square_to_zero(seed):
    rng = random.Random(seed)
    X, Y = random_complex(R, rng), random_complex(R, rng)
    for Z in (tensor(X, Y), hom_complex(X, Y), koszul_object(X, "x+y")):
        Z.check()


def test_hom_from_unit_is_identity():
    rng = random.Random(3)
    X = random_complex(R, rng)
    H = hom_complex(A, X)
    for i in X.degrees:
        assert homology_dims(H, i) == homology_dims(X, i)


def test_koszul_on_x():
    K = koszul_object(A, "x")
    assert list(K.degrees) == [-1, 0]
    assert homology_dims(K, -1) == [0] * len(WINDOW)
    assert [K.homology_dim(0, d) for d in (-2, 0, 2, 4)] == [1, 1, 1, 1]
    assert K.homology(0).annihilator.same_as(Ideal(R, ["x"]))


def test_ext_of_koszul_on_itself():
    K = koszul_object(A, "x")
    assert ext_nonzero_degrees(K, K) == [0, 1]
    assert ext_nonzero_degrees(A, K) == [0]


def test_bad_differentials():
    d0 = PresentationMatrix(R, [["x"]], [0], [2])
    d1 = PresentationMatrix(R, [["y"]], [-2], [0])
    with pytest.raises(AlgebraError, match="not zero"):
        FreeComplex(R, 0, [(2,), (0,), (-2,)], [d0, d1])
    with pytest.raises(AlgebraError, match="match"):
        FreeComplex(R, 0, [(4,), (0,)], [d0])


def test_chain_map_must_commute():
    K = koszul_object(A, "x")
    bad = {i: PresentationMatrix.identity(R, K.term(i)) for i in K.degrees}
    bad[0] = PresentationMatrix.zero(R, K.term(0), K.term(0))
    with pytest.raises(AlgebraError):
        ChainMap(K, K, bad)


def test_zero_complex():
    Z = FreeComplex.zero(R)
    assert Z.is_acyclic()
    assert list(Z.degrees) == []
    assert cone(ChainMap(Z, Z, {})).rank() == 0


def test_graded_module_dims():
    M = GradedModule.cyclic(R, ["x", "y^2"])
    assert [M.dim(d) for d in (0, 2, 4, 6)] == [1, 1, 0, 0]
    assert GradedModule.cyclic(R, ["1"]).is_zero()
