"""Longest cycles for the automorphism groups of PSL2(q).

For each q the group PGammaL2(q) = Aut(PSL2(q)) is built on the projective
line.  Its longest automorphism cycle is q+1, and its longest affine cycle
follows a three-way split on q.
"""

from cyclegroups.affine import lambda_aff_semisimple, lambda_auto
from cyclegroups.matgrp import build_pgammal2
from cyclegroups.numtheory import prime_power


def predicted_affine(q):
    p, f = prime_power(q)
    if f == 1:
        return q * (q + 1)
    return q * q - 1 if p == 2 else (q * q - 1) // 2


print(f"{'q':>3} {'|Aut|':>7} {'Lambda':>7} {'Lambda_aff':>11} {'predicted':>10}")
for q in (5, 7, 8, 9, 11, 13, 16, 25, 27):
    A = build_pgammal2(q)
    lam = lambda_auto(A)
    aff = lambda_aff_semisimple(A).value
    print(f"{q:>3} {A.order:>7} {lam:>7} {aff:>11} {predicted_affine(q):>10}")
