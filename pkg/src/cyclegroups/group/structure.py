"""Conjugacy classes, normal subgroups, solvable radical, socle, centralizers, quotients."""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import ConcreteGroup, GuardExceeded, Subgroup, closure, enumerate_from_generators

NORMAL_SUBGROUP_LIMIT = 10**4


def _whole(G: ConcreteGroup) -> Subgroup:
    return G.subgroup(np.arange(G.order), G.gens)


def _trivial(G: ConcreteGroup) -> Subgroup:
    return G.subgroup([0], [])


def conjugation_maps(G: ConcreteGroup) -> list[np.ndarray]:
    """For each generator s, the index map g ↦ s g s⁻¹."""
    if "conj_maps" not in G.cache:
        G.cache["conj_maps"] = [G.conj_map(G.perms[s]) for s in G.gens]
    return G.cache["conj_maps"]


def class_labels(G: ConcreteGroup) -> np.ndarray:
    """Class number of each element; classes numbered by their smallest member."""
    if "class_labels" not in G.cache:
        n = G.order
        maps = conjugation_maps(G)
        if maps:
            src = np.concatenate([np.arange(n)] * len(maps))
            dst = np.concatenate(maps)
            graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
            _, raw = connected_components(graph, directed=True, connection="weak")
        else:
            raw = np.zeros(n, dtype=np.int64)
        # renumber components by their smallest element
        uniq, first = np.unique(raw, return_index=True)
        rank = np.argsort(np.argsort(first))
        G.cache["class_labels"] = rank[np.searchsorted(uniq, raw)]
    return G.cache["class_labels"]


def conjugacy_classes(G: ConcreteGroup) -> list[np.ndarray]:
    labels = class_labels(G)
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    return np.split(order, bounds)


def class_representatives(G: ConcreteGroup) -> np.ndarray:
    return np.array([c[0] for c in conjugacy_classes(G)], dtype=np.int64)


def conjugate(G: ConcreteGroup, a: int, g: int) -> int:
    """a g a⁻¹."""
    return G.mul(G.mul(a, g), G.inv(a))


def normal_closure(G: ConcreteGroup, X) -> Subgroup:
    gens = [int(x) for x in np.unique(np.asarray(list(X), dtype=np.int64)) if x != 0]
    members = closure(G, gens)
    mask = np.zeros(G.order, dtype=bool)
    mask[members] = True
    maps = conjugation_maps(G)
    changed = True
    while changed:
        changed = False
        for cmap in maps:
            imgs = cmap[np.asarray(gens, dtype=np.int64)] if gens else np.zeros(0, dtype=np.int64)
            missing = [int(c) for c in imgs if not mask[c]]
            if missing:
                gens.extend(dict.fromkeys(missing))
                members = closure(G, gens)
                mask[members] = True
                changed = True
    return G.subgroup(members, gens)


def class_closures(G: ConcreteGroup) -> list[Subgroup]:
    """Normal closure of each conjugacy class (the identity class gives the trivial subgroup)."""
    if "class_closures" not in G.cache:
        out = []
        for cls in conjugacy_classes(G):
            out.append(normal_closure(G, [cls[0]]))
        G.cache["class_closures"] = out
    return G.cache["class_closures"]


def join(G: ConcreteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    gens = list(A.gens) + list(B.gens)
    return G.subgroup(closure(G, gens), gens)


def normal_subgroups(G: ConcreteGroup, max_order: int = NORMAL_SUBGROUP_LIMIT) -> list[Subgroup]:
    """All normal subgroups, sorted by order then by element indices.

    Every normal subgroup is the join of the normal closures of the classes it
    contains, so closing the set of class closures under joins finds them all.
    """
    if G.order > max_order:
        raise GuardExceeded("normal subgroup enumeration order", max_order, G.order)
    if "normal_subgroups" not in G.cache:
        found: dict[bytes, Subgroup] = {}
        for N in class_closures(G):
            found.setdefault(N.indices.tobytes(), N)
        atoms = list(found.values())
        frontier = list(atoms)
        while frontier:
            nxt = []
            for A in frontier:
                for B in atoms:
                    if B.issubset(A) or A.issubset(B):
                        continue
                    J = join(G, A, B)
                    key = J.indices.tobytes()
                    if key not in found:
                        if G.order % J.order:
                            raise AssertionError("join produced a non-subgroup")
                        found[key] = J
                        nxt.append(J)
            frontier = nxt
        G.cache["normal_subgroups"] = sorted(found.values(), key=lambda N: (N.order, tuple(N.indices)))
    return G.cache["normal_subgroups"]


def minimal_normal_subgroups(G: ConcreteGroup) -> list[Subgroup]:
    """Minimal elements among the nontrivial class closures."""
    cands = {}
    for N in class_closures(G):
        if N.order > 1:
            cands.setdefault(N.indices.tobytes(), N)
    cands = sorted(cands.values(), key=lambda N: (N.order, tuple(N.indices)))
    return [N for N in cands if not any(M.order < N.order and M.issubset(N) for M in cands)]


def socle(G: ConcreteGroup) -> Subgroup:
    mins = minimal_normal_subgroups(G)
    gens = [g for N in mins for g in N.gens]
    return G.subgroup(closure(G, gens), gens)


def commutator(G: ConcreteGroup, a: int, b: int) -> int:
    """a⁻¹ b⁻¹ a b."""
    return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b))


def derived_subgroup(G: ConcreteGroup) -> Subgroup:
    gens = G.gens
    comms = [commutator(G, a, b) for i, a in enumerate(gens) for b in gens[i + 1 :]]
    return normal_closure(G, comms)


def derived_series(G: ConcreteGroup) -> list[ConcreteGroup]:
    """G = G⁰ ⊇ G¹ ⊇ … until it stabilizes; each term as a group in its own right."""
    series = [G]
    while True:
        H = series[-1]
        D = derived_subgroup(H)
        if D.order == H.order:
            return series
        series.append(D.as_group(f"{G.name}'"))
        if D.order == 1:
            return series


def is_solvable(G: ConcreteGroup) -> bool:
    return derived_series(G)[-1].order == 1


def is_abelian(G: ConcreteGroup) -> bool:
    return G.is_abelian()


def is_simple(G: ConcreteGroup) -> bool:
    if G.order == 1:
        return False
    return all(N.order in (1, G.order) for N in class_closures(G))


def is_semisimple(G: ConcreteGroup) -> bool:
    """True iff the solvable radical is trivial.

    A nontrivial solvable normal subgroup contains an abelian minimal normal
    subgroup, so it suffices to check that every minimal normal subgroup is
    nonabelian.  This avoids enumerating all normal subgroups.
    """
    if "semisimple" not in G.cache:
        if G.order == 1:
            G.cache["semisimple"] = True
        else:
            G.cache["semisimple"] = all(
                not N.as_group().is_abelian() for N in minimal_normal_subgroups(G)
            )
    return G.cache["semisimple"]


def solvable_radical(G: ConcreteGroup, max_order: int = NORMAL_SUBGROUP_LIMIT) -> Subgroup:
    """The largest solvable normal subgroup."""
    best = _trivial(G)
    for N in normal_subgroups(G, max_order):
        if N.order > best.order and is_solvable(N.as_group()):
            best = N
    for N in normal_subgroups(G, max_order):
        if is_solvable(N.as_group()) and not N.issubset(best):
            raise AssertionError("solvable normal subgroups are not nested in the maximal one")
    return best


def centralizer(G: ConcreteGroup, X) -> Subgroup:
    """Elements of G commuting with every element (index) in X."""
    mask = np.ones(G.order, dtype=bool)
    P = G.perms
    for x in np.unique(np.asarray(list(X), dtype=np.int64)):
        px = P[x]
        mask &= (P[:, px] == px[P]).all(axis=1)
    return G.subgroup(np.flatnonzero(mask))


def centralizer_of_perms(G: ConcreteGroup, perms) -> Subgroup:
    """Elements of G commuting with each of the given permutations (same degree)."""
    mask = np.ones(G.order, dtype=bool)
    P = G.perms
    for px in perms:
        px = np.asarray(px, dtype=np.int32)
        mask &= (P[:, px] == px[P]).all(axis=1)
    return G.subgroup(np.flatnonzero(mask))


def center(G: ConcreteGroup) -> Subgroup:
    return centralizer(G, G.gens)


def coset_labels(G: ConcreteGroup, N: Subgroup) -> np.ndarray:
    """Label of the left coset gN containing each element, numbered by smallest member."""
    labels = np.full(G.order, -1, dtype=np.int64)
    k = 0
    for g in range(G.order):
        if labels[g] < 0:
            labels[G.mul_many(g, N.indices)] = k
            k += 1
    return labels


def quotient(G: ConcreteGroup, N: Subgroup) -> tuple[ConcreteGroup, np.ndarray]:
    """G/N as the left-multiplication action on cosets, with the projection G → G/N.

    Returns the quotient group and an array giving the image of each element of G.
    """
    labels = coset_labels(G, N)
    m = int(labels.max()) + 1
    reps = np.array([int(np.flatnonzero(labels == c)[0]) for c in range(m)], dtype=np.int64)

    def action(g):
        return labels[G.mul_many(g, reps)]

    gens = [action(s) for s in G.gens] or [np.arange(m)]
    Q = enumerate_from_generators(gens, f"{G.name}/N")
    images = np.stack([action(g) for g in range(G.order)])
    proj = Q.index_of_many(images)
    return Q, proj
