"""Automorphisms, automorphism groups, holomorphs and mao.

Two realizations of Aut(G) are supported:

``conjugation``
    G sits inside a larger permutation group C on the same points with
    C_C(G) = 1, and every automorphism of G is conjugation by an element of C.
    Automorphism ``k`` is conjugation by ``C[k]``.  Used for the families whose
    automorphism group is known (symmetric, alternating, projective linear).

``bruteforce``
    Backtracking over images of a short generating sequence, for groups of at
    most ``BRUTEFORCE_LIMIT`` elements.  The automorphisms are stored as
    permutations of G's element indices, forming a group of degree |G|.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .core import ConcreteGroup, GuardExceeded, closure, enumerate_from_generators
from .structure import centralizer_of_perms, class_labels, class_representatives, conjugacy_classes

BRUTEFORCE_LIMIT = 400


class Automorphism:
    """A bijection of element indices preserving multiplication."""

    __slots__ = ("group", "mapping")

    def __init__(self, group: ConcreteGroup, mapping, verify: bool = True):
        self.group = group
        self.mapping = np.asarray(mapping, dtype=np.int64)
        if verify:
            check_automorphism(group, self.mapping)

    @classmethod
    def identity(cls, group: ConcreteGroup) -> "Automorphism":
        return cls(group, np.arange(group.order), verify=False)

    @classmethod
    def inner(cls, group: ConcreteGroup, r: int) -> "Automorphism":
        """τ_r: g ↦ r g r⁻¹."""
        return cls(group, group.conj_map(group.perms[r]), verify=False)

    def __call__(self, g):
        return self.mapping[g]

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return Automorphism(self.group, self.mapping[other.mapping], verify=False)

    def __pow__(self, k: int) -> "Automorphism":
        if k < 0:
            return self.inverse() ** (-k)
        m = np.arange(self.group.order)
        base = self.mapping
        while k:
            if k & 1:
                m = base[m]
            base = base[base]
            k >>= 1
        return Automorphism(self.group, m, verify=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Automorphism) and np.array_equal(self.mapping, other.mapping)

    def __hash__(self) -> int:
        return hash(self.mapping.tobytes())

    def inverse(self) -> "Automorphism":
        return Automorphism(self.group, np.argsort(self.mapping), verify=False)

    @property
    def order(self) -> int:
        from ..perm import batch_cycle_stats

        return int(batch_cycle_stats(self.mapping)[1][0])

    def is_identity(self) -> bool:
        return bool((self.mapping == np.arange(len(self.mapping))).all())


def check_automorphism(G: ConcreteGroup, mapping: np.ndarray) -> None:
    """Raise ValueError unless ``mapping`` is an automorphism of G.

    Checks bijectivity, ``mapping[0] = 0`` and ``φ(g·s) = φ(g)·φ(s)`` for every
    element g and generator s, which forces φ to be a homomorphism.
    """
    n = G.order
    if mapping.shape != (n,) or mapping[0] != 0:
        raise ValueError("mapping must fix the identity and have one entry per element")
    if len(np.unique(mapping)) != n:
        raise ValueError("mapping is not bijective")
    allg = np.arange(n)
    for s in G.gens:
        lhs = mapping[G.mul_many(allg, s)]
        rhs = G.mul_many(mapping, mapping[s])
        if not np.array_equal(lhs, rhs):
            raise ValueError("mapping does not preserve multiplication")


class AutomorphismGroup:
    """Aut(G), realized by a carrier group (see module docstring)."""

    def __init__(self, group: ConcreteGroup, carrier: ConcreteGroup, kind: str):
        if kind not in ("conjugation", "bruteforce"):
            raise ValueError(kind)
        self.group = group
        self.carrier = carrier
        self.kind = kind

    @property
    def order(self) -> int:
        return self.carrier.order

    def __len__(self) -> int:
        return self.order

    def mapping(self, k: int) -> np.ndarray:
        if self.kind == "bruteforce":
            return self.carrier.perms[k].astype(np.int64)
        return self.group.conj_map(self.carrier.perms[k])

    def automorphism(self, k: int) -> Automorphism:
        return Automorphism(self.group, self.mapping(k), verify=False)

    def __iter__(self) -> Iterator[Automorphism]:
        for k in range(self.order):
            yield self.automorphism(k)

    def index_of(self, alpha: Automorphism) -> int:
        """Carrier index of an automorphism given by its element mapping."""
        if self.kind == "bruteforce":
            return self.carrier.index_of(alpha.mapping)
        # conjugation: determined by its action on generators; search the carrier
        G = self.group
        for k in range(self.order):
            if all(alpha.mapping[s] == m for s, m in zip(G.gens, self._gen_images(k))):
                return k
        raise KeyError("automorphism not realized by the carrier")

    def _gen_images(self, k: int) -> list[int]:
        G = self.group
        a = self.carrier.perms[k]
        ainv = np.argsort(a)
        return [int(G.index_of(a[G.perms[s][ainv]])) for s in G.gens]

    @property
    def element_orders(self) -> np.ndarray:
        # the carrier acts faithfully, so carrier orders are automorphism orders
        return self.carrier.orders

    @property
    def meo(self) -> int:
        return self.carrier.meo

    def class_representatives(self) -> np.ndarray:
        return class_representatives(self.carrier)

    def class_sizes(self) -> np.ndarray:
        return np.array([len(c) for c in conjugacy_classes(self.carrier)], dtype=np.int64)

    def top_orders(self, k: int) -> list[int]:
        """The k largest distinct automorphism orders, descending."""
        return sorted({int(o) for o in self.element_orders}, reverse=True)[:k]


def _verify_conjugation_carrier(G: ConcreteGroup, C: ConcreteGroup) -> None:
    if C.degree != G.degree:
        raise ValueError("carrier must act on the same points")
    for s in G.gens:
        if G.perms[s] not in C:
            raise ValueError("group is not contained in its carrier")
    for c in C.gens:
        G.conj_map(C.perms[c])  # raises if c does not normalize G
    cent = centralizer_of_perms(C, G.perms[list(G.gens)])
    if cent.order != 1:
        raise ValueError("carrier centralizes part of the group; conjugation is not faithful")


def greedy_generating_sequence(G: ConcreteGroup) -> list[int]:
    """Repeatedly add the element whose addition generates the largest subgroup."""
    gens: list[int] = []
    current = np.array([0])
    while len(current) < G.order:
        inside = np.zeros(G.order, dtype=bool)
        inside[current] = True
        best, best_size = -1, -1
        # one candidate per class suffices for the first pick
        pool = class_representatives(G) if not gens else np.flatnonzero(~inside)
        for c in pool:
            if inside[c]:
                continue
            size = len(closure(G, gens + [int(c)]))
            if size > best_size:
                best, best_size = int(c), size
                if size == G.order:
                    break
        gens.append(best)
        current = closure(G, gens)
    return gens


def bruteforce_automorphisms(G: ConcreteGroup, max_order: int = BRUTEFORCE_LIMIT) -> np.ndarray:
    """All automorphisms of G as an ``(|Aut|, |G|)`` array of index maps, identity first."""
    n = G.order
    if n > max_order:
        raise GuardExceeded("brute-force automorphism group order", max_order, n)
    if n == 1:
        return np.zeros((1, 1), dtype=np.int64)
    T = G.table
    orders = G.orders
    labels = class_labels(G)
    csize = np.bincount(labels)
    gens = greedy_generating_sequence(G)
    k = len(gens)

    # breadth-first layers: each element reached as parent·gens[j]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    layers = []
    frontier = np.array([0])
    while frontier.size:
        elems, pars, js = [], [], []
        for j, s in enumerate(gens):
            prod = T[frontier, s]
            for p, e in zip(frontier, prod):
                if not seen[e]:
                    seen[e] = True
                    elems.append(e)
                    pars.append(p)
                    js.append(j)
        layers.append((np.array(elems, dtype=np.int64), np.array(pars, dtype=np.int64), np.array(js, dtype=np.int64)))
        frontier = np.array(elems, dtype=np.int64)
    if not seen.all():
        raise AssertionError("generating sequence does not generate")

    cands = [
        np.flatnonzero((orders == orders[g]) & (csize[labels] == csize[labels[g]])) for g in gens
    ]
    pair_orders = {(i, j): orders[T[gens[i], gens[j]]] for i in range(k) for j in range(i + 1, k)}
    allg = np.arange(n)
    found = []

    def build(imgs):
        phi = np.full(n, -1, dtype=np.int64)
        phi[0] = 0
        img = np.asarray(imgs, dtype=np.int64)
        for elems, pars, js in layers:
            if elems.size:
                phi[elems] = T[phi[pars], img[js]]
        for j, s in enumerate(gens):
            if not np.array_equal(phi[T[allg, s]], T[phi, img[j]]):
                return None
        if len(np.unique(phi)) != n:
            return None
        return phi

    def search(chosen):
        j = len(chosen)
        if j == k:
            phi = build(chosen)
            if phi is not None:
                found.append(phi)
            return
        for c in cands[j]:
            if all(orders[T[chosen[i], c]] == pair_orders[(i, j)] for i in range(j)):
                search(chosen + [int(c)])

    search([])
    maps = np.array(found, dtype=np.int64)
    ident = np.flatnonzero((maps == allg).all(axis=1))
    order = np.concatenate([ident, np.setdiff1d(np.arange(len(maps)), ident)])
    return maps[order]


def _bruteforce_group(G: ConcreteGroup) -> ConcreteGroup:
    maps = bruteforce_automorphisms(G)
    A = ConcreteGroup(maps, [], f"Aut({G.name})")
    gens = greedy_generating_sequence(A) if A.order > 1 else []
    return ConcreteGroup(maps, gens, f"Aut({G.name})")


def automorphism_group(G: ConcreteGroup, method: str = "auto") -> AutomorphismGroup:
    """Aut(G) via the group's conjugation carrier when known, else by brute force."""
    key = f"aut:{method}"
    if key in G.cache:
        return G.cache[key]
    if method not in ("auto", "conjugation", "bruteforce"):
        raise ValueError(f"unknown method {method!r}")
    use_carrier = method == "conjugation" or (method == "auto" and G.carrier_factory is not None)
    if use_carrier:
        if G.carrier_factory is None:
            raise ValueError(f"no conjugation carrier known for {G.name}")
        C = G.carrier_factory()
        _verify_conjugation_carrier(G, C)
        out = AutomorphismGroup(G, C, "conjugation")
    else:
        out = AutomorphismGroup(G, _bruteforce_group(G), "bruteforce")
    G.cache[key] = out
    return out


def mao(G: ConcreteGroup) -> int:
    """Maximum order of an automorphism of G."""
    return automorphism_group(G).meo


def holomorph(G: ConcreteGroup, max_order: int | None = None) -> ConcreteGroup:
    """G ⋊ Aut(G) acting on G's elements by g ↦ x·α(g)."""
    aut = automorphism_group(G)
    n = G.order
    allg = np.arange(n)
    gens = [G.mul_many(s, allg) for s in G.gens]
    gens += [aut.mapping(c) for c in aut.carrier.gens]
    if not gens:
        gens = [allg]
    kw = {} if max_order is None else {"max_order": max_order}
    return enumerate_from_generators(gens, f"Hol({G.name})", **kw)


def self_carrier(G: ConcreteGroup) -> ConcreteGroup:
    """Mark a complete group as its own automorphism carrier."""
    G.carrier_factory = lambda: G
    G.tags = G.tags | {"complete", "centerless"}
    return G
