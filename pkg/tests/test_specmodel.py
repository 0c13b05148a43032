import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from supportcalc import AlgebraError
from supportcalc.specmodel import (
    MODEL_CHECKS,
    Poset,
    SubsetFamily,
    bits,
    natural_posets,
    popcount,
    random_poset,
    run_model_checks,
    sigma,
    tau,
)

# (0) < (x), (y) < (x,y)
DIAMOND = Poset([0b1111, 0b1010, 0b1100, 0b1000])


def brute_closure(P, U):
    return {j for i in range(P.n) if U >> i & 1 for j in range(P.n) if P.leq(i, j)}


def test_natural_poset_counts():
    # naturally labeled posets on n points: 1, 1, 2, 7, 40, 357
    assert [sum(1 for _ in natural_posets(n)) for n in range(6)] == [1, 1, 2, 7, 40, 357]


def test_diamond():
    P = DIAMOND
    assert P.closure(0b0010) == 0b1010
    assert P.minimal(0b1110) == 0b0110
    assert P.dim(P.full) == 2
    assert P.dim(0) == -math.inf
    assert P.layers(P.full) == [0b0001, 0b0110, 0b1000]
    assert P.rickard(0b0010) == 0b1100
    assert P.thick_of(0b1010) == 0b1010
    assert P.is_specialization_closed(0b1010)
    assert P.is_generalization_closed(0b0011)
    assert all(r.passed for r in run_model_checks(P))


def test_bad_poset():
    with pytest.raises(AlgebraError):
        Poset([0b11, 0b11])  # antisymmetry fails
    with pytest.raises(AlgebraError):
        Poset([0b10, 0b10])  # not reflexive


def test_sigma_tau_inverse():
    for U in range(16):
        assert sigma(tau(4, U)) == U
    F = SubsetFamily((True, False, True))
    assert tau(3, sigma(F)) == F


def test_enumeration_cap():
    P = Poset([1 << i for i in range(21)])
    with pytest.raises(AlgebraError, match="cap"):
        MODEL_CHECKS[0](P)


def test_bits():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert popcount(0b10110) == 3


posets = st.integers(0, 10**6).map(lambda s: random_poset(random.Random(s), random.Random(s).randint(1, 7)))


@settings(max_examples=100, deadline=None)
@given(posets, st.integers(0, 2**7 - 1))
def test_closure_laws(P, U):
    U &= P.full
    c = P.closure(U)
    assert c & U == U
    assert P.closure(c) == c
    assert {i for i in bits(c)} == brute_closure(P, U)
    assert P.is_specialization_closed(c)
    assert P.is_generalization_closed(P.full & ~c)


@settings(max_examples=100, deadline=None)
@given(posets, st.integers(0, 2**7 - 1))
def test_rickard_laws(P, U):
    U &= P.full
    W = P.rickard(U)
    assert P.closure(W) & U == 0
    assert P.is_specialization_closed(W)
    for i in range(P.n):
        assert (W >> i & 1) == (P.up[i] & U == 0)


@settings(max_examples=100, deadline=None)
@given(posets, st.integers(0, 2**7 - 1))
def test_layers_partition_and_dimension(P, U):
    U &= P.full
    layers = P.layers(U)
    acc = 0
    for L in layers:
        assert acc & L == 0
        assert P.is_discrete(L)
        acc |= L
    assert acc == U
    assert (len(layers) - 1 if layers else -math.inf) == P.dim(U)


@settings(max_examples=60, deadline=None)
@given(posets)
def test_model_checks_pass(P):
    assert all(r.passed for r in run_model_checks(P))
