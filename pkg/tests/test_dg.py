import random

import pytest
from hypothesis import given, settings, strategies as st

from supportcalc import AlgebraError, GradedRing, PresentationMatrix
from supportcalc.complexes import FreeComplex, GradedModule
from supportcalc.dg import (
    BicomplexInput,
    WindowError,
    check_tot_koszul,
    dg_homology,
    dg_koszul,
    dg_ring,
    dg_shift,
    koszul_free_complex,
    thick_witness_koszul_square,
    totalize,
)
from supportcalc.random_instances import random_acyclic_complex, random_complex
from supportcalc.support import koszul_object

R = GradedRing(101, [("x", 2), ("y", 2)])
R1 = GradedRing(101, [("x", 2)])
WINDOW = (-6, 16)

seeds = st.integers(0, 10**6)


def test_dg_ring():
    A = dg_ring(R, 0, 8)
    assert [A.dim(n) for n in range(9)] == [1, 0, 2, 0, 3, 0, 4, 0, 5]
    assert A.check() and A.check_action_commutes()
    assert A.truncated
    with pytest.raises(WindowError):
        A.dim(9)
    with pytest.raises(WindowError):
        A.homology(0)


def test_tot_of_unit():
    T = totalize(BicomplexInput.single(GradedModule.free(R, [0])), (0, 12))
    assert T.same_as(dg_ring(R, T.lo, T.hi))


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_tot_homology_matches_complex_homology(seed):
    """For a free complex, H^n(tot F) is the sum of H^i(F) in internal degree n - i."""
    X = random_complex(R, random.Random(seed))
    T = totalize(BicomplexInput.from_free_complex(X), WINDOW)
    assert T.check() and T.check_action_commutes()
    for n, h in T.homology_table().items():
        assert h == sum(X.homology_dim(i, n - i) for i in X.degrees)


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(-2, 2))
def test_tot_commutes_with_shift(seed, n):
    F = BicomplexInput.from_free_complex(random_complex(R, random.Random(seed)))
    lo, hi = WINDOW
    assert totalize(F.shift(n), WINDOW).same_as(dg_shift(totalize(F, (lo + n, hi + n)), n))


@pytest.mark.parametrize("d", [-2, -1, 0, 1, 2, 4])
def test_tot_of_module_shift(d):
    F = BicomplexInput.single(GradedModule.cyclic(R, ["x", "y^2"]))
    lo, hi = WINDOW
    assert totalize(F.module_shift(d), WINDOW).same_as(dg_shift(totalize(F, (lo + d, hi + d)), d))


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_tot_preserves_acyclicity(seed):
    X = random_acyclic_complex(R, random.Random(seed))
    T = totalize(BicomplexInput.from_free_complex(X), WINDOW)
    assert not any(dg_homology(T).values())


def test_bicomplex_with_relations():
    # y : A/(x) -> A/(x)(2) is well defined
    M = GradedModule.cyclic(R, ["x"])
    N = GradedModule(PresentationMatrix(R, [["x"]], [-2], [0]))
    F = BicomplexInput(R, 0, [M, N], [PresentationMatrix(R, [["y"]], [-2], [0])])
    T = totalize(F, WINDOW)
    assert T.check()
    # A -> A/(x) needs no relation check
    BicomplexInput(R, 0, [GradedModule.free(R, [0]), M], [PresentationMatrix(R, [["1"]], [0], [0])])


def test_bicomplex_relations_must_map_to_relations():
    M = GradedModule.cyclic(R, ["x"])
    with pytest.raises(AlgebraError, match="relations"):
        BicomplexInput(R, 0, [M, GradedModule.free(R, [0])], [PresentationMatrix(R, [["1"]], [0], [0])])


def test_dg_koszul_matches_free_koszul():
    A = dg_ring(R, -8, 20)
    K = dg_koszul(A, ["x"])
    X = koszul_object(FreeComplex.free_module(R), "x")
    T = totalize(BicomplexInput.from_free_complex(X), (K.lo + 1, K.hi - 1))
    for n in range(K.lo + 2, K.hi - 1):
        assert K.homology(n) == T.homology(n)


def test_koszul_free_complex_shape():
    E = koszul_free_complex(R, ["x", "y"])
    assert list(E.degrees) == [-2, -1, 0]
    assert E.term(-2) == (4,) and E.term(-1) == (2, 2) and E.term(0) == (0,)
    with pytest.raises(AlgebraError):
        koszul_free_complex(R, ["x + 1"])


@pytest.mark.parametrize("elements,shift", [([], 0), (["x"], -2), (["x", "y"], -4)])
def test_tot_koszul_isomorphism(elements, shift):
    rep = check_tot_koszul(R, elements)
    assert rep.passed and rep.homology_match
    assert rep.shift == shift


def test_tot_koszul_signs_for_two_elements():
    rep = check_tot_koszul(R, ["x", "y"])
    assert rep.signs == {"-": 1, "0": 1, "1": 1, "0,1": -1}
    # the suspension in the other direction does not even match homology dimensions
    assert not rep.positive_shift_homology_match


def test_thick_witness_one_variable():
    rep = thick_witness_koszul_square(R1, ["x"])
    assert rep.passed
    assert rep.power_needed == 2
    assert rep.radical_equal and rep.finite_length


def test_thick_witness_two_variables():
    rep = thick_witness_koszul_square(R, ["x", "y"])
    assert rep.squares_kill_homology and rep.radical_equal and rep.quotient_part_killed
    # (x,y) H is not killed by (x,y): x*y survives in (x,y) A/(x^2,y^2)
    assert not rep.ideal_part_killed
    assert rep.power_needed == 3


def test_thick_witness_empty():
    rep = thick_witness_koszul_square(R, [])
    assert rep.passed and rep.homology_degrees == [0]


def test_thick_witness_rejects_non_variables():
    with pytest.raises(AlgebraError):
        thick_witness_koszul_square(R, ["x + y"])
