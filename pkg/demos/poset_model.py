"""Finite-poset model of the prime spectrum.

Run: python3 demos/poset_model.py
"""

import random

from supportcalc.specmodel import Poset, bits, random_poset, run_model_checks

names = ["(0)", "(x)", "(y)", "(x,y)"]
P = Poset([0b1111, 0b1010, 0b1100, 0b1000])


def fmt(mask):
    return "{" + ", ".join(names[i] for i in bits(mask)) + "}"


print("layers of the whole spectrum:", " | ".join(fmt(L) for L in P.layers(P.full)))
print("dimension:", P.dim(P.full))
print("closure of {(x)}:", fmt(P.closure(0b0010)))
print("rickard({(x)}):", fmt(P.rickard(0b0010)))
for rep in run_model_checks(P):
    print(f"  {rep.name}: {'pass' if rep.passed else 'fail'}")

rng = random.Random(7)
Q = random_poset(rng, 6)
print("random 6-element poset, all model checks pass:", all(r.passed for r in run_model_checks(Q)))
