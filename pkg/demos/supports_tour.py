"""Supports of small perfect complexes over F_101[x, y].

Run: python3 demos/supports_tour.py
"""

from supportcalc import GradedRing
from supportcalc.complexes import FreeComplex, ext_nonzero_degrees, tensor
from supportcalc.specmodel import SpecModel
from supportcalc.support import (
    SupportSet,
    koszul_ideal,
    koszul_object,
    koszul_tower_triangle,
    rickard_support,
    supp_complex,
)

A_ring = GradedRing(101, [("x", 2), ("y", 2)])
spec = SpecModel(A_ring, [("(0)", []), ("(x)", ["x"]), ("(y)", ["y"]), ("(x,y)", ["x", "y"])])
A = FreeComplex.free_module(A_ring)


def show(name, X):
    print(f"{name:<22} supp = {{{supp_complex(X, spec)}}}")


show("A", A)
Kx = koszul_object(A, "x")
Ky = koszul_object(A, "y")
show("A//x", Kx)
show("A//y", Ky)
show("A//(x+y)", koszul_object(A, "x + y"))
show("A//(x,y)", koszul_ideal(A, ["x", "y"]))
# tensor products intersect supports
show("A//x (x) A//y", tensor(Kx, Ky))

print("Ext(A//x, A//x) nonzero in degrees", ext_nonzero_degrees(Kx, Kx))

rep = koszul_tower_triangle(A, "x", 2, window=(0, 24))
print(f"tower A//x^2 -> A//x^3 -> A//x: {'pass' if rep.passed else 'fail'} "
      f"({rep.degrees_checked} degrees checked)")

U = SupportSet.of_labels(spec, ["(x)"])
print("primes whose closure misses (x):", rickard_support(U).labels())
