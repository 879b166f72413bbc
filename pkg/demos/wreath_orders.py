"""Element orders in wreath products without enumerating the base group.

An element (g, psi) of G wr Sym_n has order ord(psi) times the lcm of the
orders of the orbit products raised to ord(psi)/|orbit|.  This script checks
that against repeated multiplication and then uses the order spectrum alone
to get maximum element orders of Aut(S)^n and Aut(S) wr Sym_n.
"""

import numpy as np

from cyclegroups.group import symmetric
from cyclegroups.matgrp import build_pgammal2, build_psl2
from cyclegroups.wreath import (
    direct_power_meo,
    lambda_aut_power,
    random_wreath_element,
    wreath_meo,
    wreath_order,
    wreath_order_oracle,
)

rng = np.random.default_rng(1)
G = symmetric(5)
for _ in range(5):
    w = random_wreath_element(G, 2, rng)
    print(f"base {w.base}, top {w.top}: formula {wreath_order(w)}, multiplication {wreath_order_oracle(w)}")

p9 = build_pgammal2(9)
print(f"meo(Aut(PSL2(9)) wr Sym2) = {wreath_meo(p9, 2)}")
print(f"meo(Aut(PSL2(9)) wr Sym3) = {wreath_meo(p9, 3)}")
print(f"meo(Aut(PSL2(5))^4)      = {direct_power_meo(build_pgammal2(5), 4)}")
S = build_psl2(5)
for n in (1, 2, 3):
    print(f"longest automorphism cycle of PSL2(5)^{n}: {lambda_aut_power(S, n)}")
