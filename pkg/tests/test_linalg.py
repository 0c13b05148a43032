import numpy as np
import sympy
from hypothesis import given, settings, strategies as st

from supportcalc.linalg import QuotientSpace, in_span, inverse, nullspace, rank, rref

P = 101

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, 100), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def sympy_rank(a):
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF

    return DomainMatrix([[GF(P)(int(x)) for x in row] for row in a], (len(a), len(a[0])), GF(P)).rank()


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_matches_sympy(a):
    assert rank(np.array(a), P) == sympy_rank(a)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_nullspace(a):
    a = np.array(a, dtype=np.int64)
    K = nullspace(a, P)
    assert not np.any((a @ K) % P)
    assert K.shape[1] + rank(a, P) == a.shape[1]


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_rref_is_idempotent(a):
    r, piv = rref(np.array(a), P)
    r2, piv2 = rref(r, P)
    assert piv == piv2 and np.array_equal(r, r2)


def test_inverse():
    a = np.array([[1, 2], [3, 4]])
    assert np.array_equal((a @ inverse(a, P)) % P, np.eye(2, dtype=np.int64))
    m = sympy.Matrix(a).inv_mod(P)
    assert np.array_equal(inverse(a, P), np.array(m.tolist(), dtype=np.int64))


def test_in_span():
    v = np.array([[1, 0], [0, 0]])
    assert in_span(v, [5, 0], P)
    assert not in_span(v, [0, 1], P)
    assert in_span(np.zeros((2, 0)), [0, 0], P)


def test_quotient_space():
    Q = QuotientSpace(3, [[1, 1, 0]], P)
    assert Q.dim == 2
    assert not np.any(Q.coords(np.array([[1, 1, 0]])) % P)
    a = Q.coords(np.array([[1, 0, 0]]))
    b = Q.coords(np.array([[0, 100, 0]]))
    assert np.array_equal(a % P, b % P)
