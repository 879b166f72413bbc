"""Exact checks of the inequalities g(n)*B^n < |S|^(n/3) over classical groups.

Each comparison is cubed so only integers are compared.  Where the coarse
bound on automorphism orders is not enough (PSL3(3), PSL3(4)) the exact
maximum element order of Aut(S)^n is used instead.
"""

from fractions import Fraction

from cyclegroups.bounds import CONSTANTS, bounds_grid, radical_index_bound

print(f"e1 = {CONSTANTS.e1:.6f}, E1 = {CONSTANTS.E1:.6f}, e2 = {CONSTANTS.e2:.6f}, E2 = {CONSTANTS.E2:.6f}")
print(f"(1/10)^E1 = {radical_index_bound(Fraction(1, 10)):.6f}")
print(f"(1/4)^E2  = {radical_index_bound(Fraction(1, 4), 'affine'):.6f}")

rows = bounds_grid()
print(f"{len(rows)} cases, all hold: {all(r.holds for r in rows)}")
for r in rows:
    if r.failures:
        print(f"  {r.label}: {r.route} route fails at n = {r.failures}; {r.fallback}")
