"""Standard constructions: symmetric, alternating, cyclic, dihedral groups and products."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..perm import Permutation
from .core import MAX_GROUP_ORDER, ConcreteGroup, GuardExceeded, enumerate_from_generators


def _cycle(n: int, pts) -> Permutation:
    return Permutation.from_cycles(n, [list(pts)])


def trivial_group(degree: int = 1) -> ConcreteGroup:
    return ConcreteGroup(np.arange(degree)[None, :], [], "1")


@lru_cache(maxsize=None)
def symmetric(n: int) -> ConcreteGroup:
    if n < 1:
        raise ValueError("Sym_n needs n >= 1")
    if n == 1:
        return ConcreteGroup(np.zeros((1, 1)), [], "Sym:1")
    gens = [_cycle(n, (0, 1))]
    if n > 2:
        gens.append(_cycle(n, range(n)))
    tags = {"centerless", "indecomposable", "complete"} if n >= 3 else set()
    # Sym_6 has an outer automorphism, so it is not complete
    if n == 6:
        tags.discard("complete")
    carrier = (lambda: symmetric(n)) if n >= 3 and n != 6 else None
    return enumerate_from_generators(gens, f"Sym:{n}", carrier=carrier, tags=tags)


@lru_cache(maxsize=None)
def alternating(n: int) -> ConcreteGroup:
    if n < 1:
        raise ValueError("Alt_n needs n >= 1")
    if n < 3:
        return ConcreteGroup(np.arange(n)[None, :], [], f"Alt:{n}")
    gens = [_cycle(n, (0, 1, 2))]
    if n > 3:
        gens.append(_cycle(n, range(n)) if n % 2 else _cycle(n, range(1, n)))
    tags = set()
    if n >= 4:
        tags |= {"centerless", "indecomposable"}
    if n >= 5:
        tags.add("nonabelian_simple")
    carrier = (lambda: symmetric(n)) if n >= 4 and n != 6 else None
    return enumerate_from_generators(gens, f"Alt:{n}", carrier=carrier, tags=tags)


@lru_cache(maxsize=None)
def cyclic(n: int) -> ConcreteGroup:
    if n < 1:
        raise ValueError("Cyclic:n needs n >= 1")
    if n == 1:
        return ConcreteGroup(np.zeros((1, 1)), [], "Cyclic:1")
    return enumerate_from_generators([_cycle(n, range(n))], f"Cyclic:{n}")


@lru_cache(maxsize=None)
def dihedral(n: int) -> ConcreteGroup:
    """Symmetries of the regular n-gon, order 2n (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral groups here need n >= 3")
    rot = _cycle(n, range(n))
    refl = Permutation([(-i) % n for i in range(n)])
    return enumerate_from_generators([rot, refl], f"Dih:{2 * n}")


@lru_cache(maxsize=None)
def quaternion() -> ConcreteGroup:
    """Q8 in its regular representation on 8 points."""
    units = []
    for axis in range(4):
        for sign in (1, -1):
            v = [0, 0, 0, 0]
            v[axis] = sign
            units.append(tuple(v))

    def hamilton(a, b):
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def left(g):
        return Permutation([units.index(hamilton(g, h)) for h in units])

    return enumerate_from_generators([left(units[2]), left(units[4])], "Q8")


def direct_product(G: ConcreteGroup, H: ConcreteGroup, max_order: int = MAX_GROUP_ORDER) -> ConcreteGroup:
    """G × H acting on the disjoint union of the two point sets.

    Element ``i + |G|·j`` is the pair (G[i], H[j]).
    """
    n1, n2 = G.order, H.order
    if n1 * n2 > max_order:
        raise GuardExceeded("max group order", max_order, n1 * n2)
    d1 = G.degree
    left = np.tile(G.perms, (n2, 1))
    right = np.repeat(H.perms, n1, axis=0) + d1
    perms = np.concatenate([left, right], axis=1)
    gens = list(G.gens) + [n1 * h for h in H.gens]
    carrier = None
    if (
        G.carrier_factory is not None
        and H.carrier_factory is not None
        and "nonabelian_simple" in G.tags
        and "nonabelian_simple" in H.tags
        and G.order != H.order
    ):
        # distinct nonabelian simple factors: Aut(G×H) = Aut(G) × Aut(H)
        carrier = lambda: direct_product(G.carrier_factory(), H.carrier_factory())
    tags = {"centerless"} if {"centerless"} <= G.tags & H.tags else set()
    return ConcreteGroup(perms, gens, f"{G.name} x {H.name}", carrier=carrier, tags=tags)


def direct_power(G: ConcreteGroup, n: int, max_order: int = MAX_GROUP_ORDER) -> ConcreteGroup:
    """Gⁿ acting on n disjoint copies of G's points."""
    if n < 1:
        raise ValueError("power must be >= 1")
    if n == 1:
        return G
    if G.order**n > max_order:
        raise GuardExceeded("max group order", max_order, G.order**n)
    out = G
    for _ in range(n - 1):
        out = direct_product(out, G, max_order)
    carrier = None
    if G.carrier_factory is not None and {"centerless", "indecomposable"} <= G.tags:
        carrier = lambda: _power_carrier(G, n)
    tags = {"centerless"} if "centerless" in G.tags else set()
    return ConcreteGroup(out.perms, out.gens, f"{G.name}^{n}", carrier=carrier, tags=tags)


@lru_cache(maxsize=None)
def _power_carrier(G: ConcreteGroup, n: int) -> ConcreteGroup:
    """Aut(G) ≀ Symₙ; complete when G is nonabelian simple, so it carries its own automorphisms."""
    W = wreath_product(G.carrier_factory(), n)
    if "nonabelian_simple" in G.tags:
        from .automorphism import self_carrier

        self_carrier(W)
    return W


def wreath_product(G: ConcreteGroup, n: int, max_order: int = MAX_GROUP_ORDER) -> ConcreteGroup:
    """G ≀ Symₙ in its imprimitive action on n blocks of G's points."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = G.degree
    size = G.order**n
    for k in range(2, n + 1):
        size *= k
    if size > max_order:
        raise GuardExceeded("max group order", max_order, size)
    gens = []
    for g in G.gens:
        img = np.arange(n * d)
        img[:d] = G.perms[g]
        gens.append(img)
    if n >= 2:
        blocks = np.arange(n * d).reshape(n, d)
        swap = blocks.copy()
        swap[[0, 1]] = swap[[1, 0]]
        gens.append(np.argsort(swap.ravel()))
        if n > 2:
            gens.append(np.argsort(np.roll(blocks, 1, axis=0).ravel()))
    if not gens:
        gens = [np.arange(n * d)]
    return enumerate_from_generators(gens, f"({G.name}) wr Sym:{n}", max_order=max_order)
