"""Symbolic wreath products G ≀ Symₙ and their element orders.

An element is a pair (g, ψ) with g an n-tuple of element indices of G and ψ a
permutation of the n coordinates.  Multiplication is
``(g, ψ)(h, φ) = (g·ψ(h), ψφ)`` where ``ψ(h)_i = h_{ψ⁻¹(i)}``.
Orders come from the cycle structure of ψ: raising to ord(ψ) lands in the
base group, and coordinate i there is ``el_i^{ord(ψ)/cl_ψ(i)}`` with
``el_i = g_i·g_{ψ⁻¹(i)}⋯g_{ψ^{-cl+1}(i)}``.  No element of Gⁿ is enumerated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .group import ConcreteGroup, automorphism_group
from .numtheory import partitions
from .perm import Permutation, cycle_decompose, order_of


@dataclass(frozen=True)
class WreathElement:
    group: ConcreteGroup
    base: tuple[int, ...]
    top: Permutation

    def __post_init__(self):
        if len(self.base) != self.top.degree:
            raise ValueError("base length must equal the degree of the top permutation")

    @property
    def n(self) -> int:
        return len(self.base)

    @classmethod
    def identity(cls, G: ConcreteGroup, n: int) -> "WreathElement":
        return cls(G, (0,) * n, Permutation.identity(n))

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        G = self.group
        pinv = self.top.inverse()
        moved = [other.base[pinv(i)] for i in range(self.n)]
        base = tuple(int(v) for v in G.mul_many(np.array(self.base), np.array(moved)))
        return WreathElement(G, base, self.top * other.top)

    def __pow__(self, k: int) -> "WreathElement":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = WreathElement.identity(self.group, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return all(b == 0 for b in self.base) and self.top.is_identity()


def orbit_product(w: WreathElement, i: int) -> int:
    """el_i = g_i·g_{ψ⁻¹(i)}⋯ over the ψ-orbit of i."""
    G = w.group
    pinv = w.top.inverse()
    out = w.base[i]
    j = pinv(i)
    while j != i:
        out = G.mul(out, w.base[j])
        j = pinv(j)
    return out


def component_power(w: WreathElement, i: int) -> int:
    """Coordinate i of w^{ord(ψ)}, computed as el_i^{ord(ψ)/cl_ψ(i)}."""
    m = order_of(w.top)
    cl = next(len(c) for c in cycle_decompose(w.top).cycles if i in c)
    return w.group.power(orbit_product(w, i), m // cl)


def wreath_order(w: WreathElement) -> int:
    """ord(ψ)·lcm of ord(el_O^{ord(ψ)/|O|}) over the orbits O of ψ."""
    G = w.group
    m = order_of(w.top)
    reps = [c[0] for c in cycle_decompose(w.top).cycles]
    return m * math.lcm(*(G.element_order(component_power(w, i)) for i in reps))


def wreath_order_oracle(w: WreathElement, limit: int | None = None) -> int:
    """Order by repeated multiplication."""
    limit = limit or 10**7
    cur = w
    for k in range(1, limit + 1):
        if cur.is_identity():
            return k
        cur = cur * w
    raise RuntimeError("order exceeds limit")


def random_wreath_element(G: ConcreteGroup, n: int, rng: np.random.Generator) -> WreathElement:
    base = tuple(int(v) for v in rng.integers(0, G.order, n))
    return WreathElement(G, base, Permutation(rng.permutation(n).tolist()))


def _spectrum(G_or_orders) -> list[int]:
    if isinstance(G_or_orders, ConcreteGroup):
        return G_or_orders.order_spectrum
    return sorted({int(o) for o in G_or_orders})


def _max_lcm(choices: list[set[int]]) -> int:
    """Max lcm picking one value from each set."""
    acc = {1}
    for c in choices:
        acc = {math.lcm(a, v) for a in acc for v in c}
    return max(acc)


def cycle_type_meo(spectrum: Iterable[int], cycle_type: tuple[int, ...]) -> int:
    """Maximum order of an element of G ≀ Symₙ whose top has the given cycle type.

    A cycle of length c contributes ord(el)/gcd(ord(el), L/c) with L the lcm
    of the cycle lengths; every element order of G occurs as some el.
    """
    spectrum = sorted(set(spectrum))
    L = math.lcm(*cycle_type)
    choices = [{o // math.gcd(o, L // c) for o in spectrum} for c in cycle_type]
    return L * _max_lcm(choices)


def wreath_meo(G_or_orders, n: int) -> int:
    """meo(G ≀ Symₙ) from the order spectrum of G, maximizing over cycle types."""
    if n < 1:
        raise ValueError("n must be >= 1")
    spectrum = _spectrum(G_or_orders)
    return max(cycle_type_meo(spectrum, p) for p in partitions(n))


def direct_power_meo(G_or_orders, n: int) -> int:
    """meo(Gⁿ): the largest lcm of n element orders."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return cycle_type_meo(_spectrum(G_or_orders), (1,) * n)


def lambda_aut_power(S: ConcreteGroup, n: int) -> int:
    """Λ(Aut(Sⁿ)) = meo(Aut(S) ≀ Symₙ) for a nonabelian simple S."""
    if "nonabelian_simple" not in S.tags:
        raise ValueError(f"{S.name} is not known to be nonabelian simple")
    return wreath_meo(automorphism_group(S).element_orders, n)
