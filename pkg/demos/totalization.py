"""Totalizing Koszul complexes into dg modules.

Run: python3 demos/totalization.py
"""

from supportcalc import GradedRing
from supportcalc.dg import BicomplexInput, check_tot_koszul, koszul_free_complex, totalize

R = GradedRing(101, [("x", 2), ("y", 2)])

for elements in ([], ["x"], ["x", "y"]):
    rep = check_tot_koszul(R, elements)
    print(f"tot of Koszul on {elements or '()'}: shift {rep.shift}, "
          f"{'isomorphic' if rep.passed else 'NOT isomorphic'} on window {rep.window}")
    if rep.signs:
        print("  sign twist per Koszul basis element:", rep.signs)

E = koszul_free_complex(R, ["x"])
T = totalize(BicomplexInput.from_free_complex(E), (-4, 10))
print("H^n(tot E) for E the Koszul complex on x:",
      {n: h for n, h in T.homology_table().items() if h})
