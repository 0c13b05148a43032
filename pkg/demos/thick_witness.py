"""The two-step filtration witness for A//a^2 and where it breaks.

With a = (x) the filtration {0} <= (x)H <= H has both pieces killed by x.
With a = (x, y) the middle piece (x, y)H of H = A/(x^2, y^2) contains x and y,
and y * x = xy is nonzero, so two steps are not enough; (x, y)^3 kills H.

Run: python3 demos/thick_witness.py
"""

from supportcalc import GradedRing
from supportcalc.dg import thick_witness_koszul_square

for ring in (GradedRing(101, [("x", 2)]), GradedRing(101, [("x", 2), ("y", 2)])):
    gens = [str(g) for g in ring.gens]
    rep = thick_witness_koszul_square(ring, gens)
    print(f"a = ({', '.join(gens)}):")
    print(f"  a^2 kills H             {rep.squares_kill_homology}")
    print(f"  same radical as p       {rep.radical_equal}")
    print(f"  p kills H / aH          {rep.quotient_part_killed}")
    print(f"  p kills aH              {rep.ideal_part_killed}")
    print(f"  least power of p on H   {rep.power_needed}")
    print(f"  two-step witness        {'pass' if rep.passed else 'fail'}")
