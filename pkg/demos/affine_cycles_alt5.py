"""Longest cycles of automorphisms and affine maps of Alt5.

Builds Alt5, finds the longest cycle of an automorphism acting on the group's
elements and the longest cycle of an affine map g -> x*alpha(g), and prints a
witness for each.
"""

from fractions import Fraction

from cyclegroups.affine import AffineMap, lambda_aff_exact, lambda_aff_semisimple, lambda_auto
from cyclegroups.group import alternating, automorphism_group
from cyclegroups.perm import Permutation, cycle_decompose

G = alternating(5)
aut = automorphism_group(G)
print(f"{G.name}: order {G.order}, |Aut| = {aut.order}, automorphism orders {sorted(set(aut.element_orders.tolist()))}")

lam = lambda_auto(G)
print(f"longest automorphism cycle: {lam} = {Fraction(lam, G.order)} of the group")

w = lambda_aff_exact(G)
print(f"longest affine cycle: {w.value} = {Fraction(w.value, G.order)} of the group")
A = AffineMap(G, w.x, aut.automorphism(w.alpha))
dec = cycle_decompose(Permutation(A.permutation()))
print(f"  witness: automorphism #{w.alpha} (order {A.alpha.order}), translation by element #{w.x}")
print(f"  its cycle lengths: {sorted(dec.lengths, reverse=True)}, map order {A.order}")

# Alt5 has trivial solvable radical, so every affine map has a cycle as long
# as its order and the maximum can be read off from orders alone.
fast = lambda_aff_semisimple(G)
print(f"order-only route gives the same value: {fast.value}")
