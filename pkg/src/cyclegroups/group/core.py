"""Finite groups realized as explicit lists of permutations.

A :class:`ConcreteGroup` stores every element as a row of an ``(order, degree)``
integer array, with the identity in row 0.  The product ``g·h`` is the
composition ``g ∘ h`` (apply ``h`` first).  Element lookup goes through a
short *base*: a list of points whose images already tell the elements apart,
so a permutation is located by encoding its base images as one integer and
binary-searching a sorted key array.
"""

from __future__ import annotations

from functools import cached_property
from math import lcm
from typing import Callable, Iterable, Sequence

import numpy as np

from ..perm import Permutation, batch_cycle_stats

MAX_GROUP_ORDER = 2_000_000
TABLE_LIMIT = 3000


class GuardExceeded(RuntimeError):
    """A size guard stopped a computation before it finished."""

    def __init__(self, guard: str, limit: int, reached: int | None = None):
        self.guard = guard
        self.limit = limit
        self.reached = reached
        msg = f"{guard} exceeded: limit {limit}"
        if reached is not None:
            msg += f", reached {reached}"
        super().__init__(msg)


def _as_array(p) -> np.ndarray:
    if isinstance(p, Permutation):
        return np.asarray(p.images, dtype=np.int32)
    return np.asarray(p, dtype=np.int32)


class _Lookup:
    """Maps permutations to element indices."""

    def __init__(self, perms: np.ndarray):
        n, d = perms.shape
        self.perms = perms
        self.base: list[int] = []
        self.weights = np.zeros(0, dtype=np.int64)
        self.table: dict[bytes, int] | None = None
        keys = np.zeros(n, dtype=np.int64)
        distinct = 1
        limit = 2**62
        radix = 1
        for pt in range(d):
            if distinct == n:
                break
            if radix * d >= limit:
                break
            cand = keys * d + perms[:, pt]
            c = len(np.unique(cand))
            if c > distinct:
                self.base.append(pt)
                keys = cand
                distinct = c
                radix *= d
        if distinct < n:
            # base too long for int64 keys
            self.table = {row.tobytes(): i for i, row in enumerate(perms)}
            return
        k = len(self.base)
        self.weights = np.array([d ** (k - 1 - j) for j in range(k)], dtype=np.int64)
        self.order = np.argsort(keys, kind="stable")
        self.sorted_keys = keys[self.order]

    def find(self, arr: np.ndarray) -> np.ndarray:
        arr = np.asarray(arr, dtype=np.int32)
        if arr.ndim == 1:
            arr = arr[None, :]
        if self.table is not None:
            return np.array([self.table.get(row.tobytes(), -1) for row in arr], dtype=np.int64)
        if not self.base:
            # trivial group
            out = np.zeros(len(arr), dtype=np.int64)
        else:
            keys = arr[:, self.base].astype(np.int64) @ self.weights
            pos = np.searchsorted(self.sorted_keys, keys)
            pos = np.minimum(pos, len(self.sorted_keys) - 1)
            out = np.where(self.sorted_keys[pos] == keys, self.order[pos], -1)
        ok = out >= 0
        if ok.any():
            same = (self.perms[out[ok]] == arr[ok]).all(axis=1)
            idx = np.flatnonzero(ok)
            out[idx[~same]] = -1
        return out


class ConcreteGroup:
    """A finite permutation group with all elements listed.

    ``carrier`` is an optional zero-argument callable returning a group on the
    same points that contains this one, normalizes it, has trivial centralizer
    over it and realizes every automorphism by conjugation.  ``tags`` records
    structural facts known from the construction (``nonabelian_simple``,
    ``centerless``, ``indecomposable``, ``complete``).
    """

    def __init__(
        self,
        perms,
        gens: Iterable[int],
        name: str = "G",
        *,
        carrier: Callable[[], "ConcreteGroup"] | None = None,
        tags: Iterable[str] = (),
    ):
        arr = np.ascontiguousarray(perms, dtype=np.int32)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise ValueError("perms must be a non-empty (order, degree) array")
        if not np.array_equal(arr[0], np.arange(arr.shape[1])):
            raise ValueError("row 0 must be the identity")
        self.perms = arr
        self.gens = tuple(dict.fromkeys(int(g) for g in gens if int(g) != 0))
        self.name = name
        self.carrier_factory = carrier
        self.tags = frozenset(tags)
        self.cache: dict = {}

    # --- basic data ----------------------------------------------------------

    @property
    def order(self) -> int:
        return self.perms.shape[0]

    @property
    def degree(self) -> int:
        return self.perms.shape[1]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<{self.name}: order {self.order}, degree {self.degree}>"

    def element(self, i: int) -> Permutation:
        return Permutation(self.perms[i].tolist(), check=False)

    @cached_property
    def _lookup(self) -> _Lookup:
        return _Lookup(self.perms)

    def index_of_many(self, arr) -> np.ndarray:
        """Indices of the rows of ``arr``; ``-1`` for permutations outside the group."""
        return self._lookup.find(arr)

    def index_of(self, p) -> int:
        i = int(self.index_of_many(_as_array(p))[0])
        if i < 0:
            raise KeyError("permutation is not in the group")
        return i

    def __contains__(self, p) -> bool:
        arr = _as_array(p)
        return arr.shape == (self.degree,) and int(self.index_of_many(arr)[0]) >= 0

    # --- arithmetic ----------------------------------------------------------

    @cached_property
    def table(self) -> np.ndarray | None:
        """Full multiplication table for small groups, else ``None``."""
        if self.order > TABLE_LIMIT:
            return None
        n = self.order
        out = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            out[i] = self.index_of_many(self.perms[i][self.perms])
        return out

    def mul_many(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        t = self.table
        if t is not None:
            return t[a, b].astype(np.int64)
        flat_a = a.ravel()
        flat_b = b.ravel()
        out = np.empty(flat_a.size, dtype=np.int64)
        step = max(1, 2_000_000 // max(1, self.degree))
        for s in range(0, flat_a.size, step):
            pa = self.perms[flat_a[s : s + step]]
            pb = self.perms[flat_b[s : s + step]]
            out[s : s + step] = self.index_of_many(np.take_along_axis(pa, pb, axis=1))
        return out.reshape(a.shape)

    def mul(self, a: int, b: int) -> int:
        t = self.table
        if t is not None:
            return int(t[a, b])
        return self.index_of(self.perms[a][self.perms[b]])

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.empty_like(self.perms)
        rows = np.arange(self.order)[:, None]
        inv[rows, self.perms] = np.arange(self.degree, dtype=np.int32)[None, :]
        return self.index_of_many(inv)

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result, base = 0, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def power_many(self, a, k: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        result = np.zeros_like(a)
        base = a
        while k:
            if k & 1:
                result = self.mul_many(result, base)
            base = self.mul_many(base, base)
            k >>= 1
        return result

    def conj_map(self, a) -> np.ndarray:
        """Index map ``g ↦ a g a⁻¹`` for a permutation ``a`` normalizing the group."""
        a = _as_array(a)
        ainv = np.argsort(a).astype(np.int32)
        out = self.index_of_many(a[self.perms[:, ainv]])
        if (out < 0).any():
            raise ValueError("the permutation does not normalize the group")
        return out

    # --- element orders --------------------------------------------------------

    @cached_property
    def orders(self) -> np.ndarray:
        return batch_cycle_stats(self.perms)[1]

    def element_order(self, i: int) -> int:
        return int(self.orders[i])

    @property
    def meo(self) -> int:
        return int(self.orders.max())

    @property
    def exponent(self) -> int:
        return lcm(*(int(o) for o in np.unique(self.orders)))

    @property
    def order_spectrum(self) -> list[int]:
        return [int(o) for o in np.unique(self.orders)]

    def is_abelian(self) -> bool:
        g = self.perms[list(self.gens)]
        for x in g:
            for y in g:
                if not np.array_equal(x[y], y[x]):
                    return False
        return True

    def subgroup(self, indices, gens=None) -> "Subgroup":
        return Subgroup(self, np.unique(np.asarray(indices, dtype=np.int64)), gens)


class Subgroup:
    """A subgroup of a :class:`ConcreteGroup`, stored as sorted element indices."""

    def __init__(self, parent: ConcreteGroup, indices: np.ndarray, gens=None):
        self.parent = parent
        self.indices = indices
        self._gens = None if gens is None else tuple(int(g) for g in gens if int(g) != 0)

    @property
    def order(self) -> int:
        return len(self.indices)

    def __len__(self) -> int:
        return self.order

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.indices] = True
        return m

    def __contains__(self, i: int) -> bool:
        return bool(self.mask[i])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.parent is self.parent
            and np.array_equal(other.indices, self.indices)
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"<subgroup of order {self.order} in {self.parent.name}>"

    def is_trivial(self) -> bool:
        return self.order == 1

    def issubset(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.indices].all())

    @property
    def gens(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = _greedy_generators(self.parent, self.indices)
        return self._gens

    def as_group(self, name: str | None = None) -> ConcreteGroup:
        """The subgroup as a group in its own right; index ``k`` here is ``indices[k]`` in the parent."""
        pos = {int(v): k for k, v in enumerate(self.indices)}
        return ConcreteGroup(
            self.parent.perms[self.indices],
            [pos[g] for g in self.gens],
            name or f"sub({self.parent.name})",
        )


def closure(G: ConcreteGroup, gens: Sequence[int]) -> np.ndarray:
    """Sorted indices of the subgroup generated by ``gens``."""
    gens = np.unique(np.asarray([g for g in gens if g != 0], dtype=np.int64))
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    if gens.size == 0:
        return np.array([0], dtype=np.int64)
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        prod = G.mul_many(frontier[:, None], gens[None, :]).ravel()
        prod = np.unique(prod)
        new = prod[~mask[prod]]
        mask[new] = True
        frontier = new
    return np.flatnonzero(mask)


def _greedy_generators(G: ConcreteGroup, indices: np.ndarray) -> tuple[int, ...]:
    """A short generating set: repeatedly add the highest-order element not yet covered."""
    target = len(indices)
    cand = indices[np.argsort(-G.orders[indices], kind="stable")]
    gens: list[int] = []
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    covered = 1
    for c in cand:
        if covered == target:
            break
        if mask[c]:
            continue
        gens.append(int(c))
        sub = closure(G, gens)
        mask[sub] = True
        covered = len(sub)
    return tuple(gens)


def enumerate_from_generators(
    gens: Sequence,
    name: str = "G",
    max_order: int = MAX_GROUP_ORDER,
    **kwargs,
) -> ConcreteGroup:
    """Breadth-first closure of the generators under right multiplication.

    Elements appear layer by layer; inside a layer, in the order they were
    first produced (outer loop over the previous layer, inner over generators).
    """
    arrs = [_as_array(g) for g in gens]
    if not arrs:
        raise ValueError("need at least one generator (pass the identity for the trivial group)")
    d = arrs[0].shape[0]
    if any(a.shape != (d,) for a in arrs):
        raise ValueError("generators must share one degree")
    for a in arrs:
        if not np.array_equal(np.sort(a), np.arange(d)):
            raise ValueError("generator is not a permutation")
    ident = np.arange(d, dtype=np.int32)
    gen_stack = np.stack(arrs)
    rows = [ident]
    seen = {ident.tobytes(): 0}
    frontier = ident[None, :]
    row_bytes = 4 * d
    while frontier.shape[0]:
        # (m, k, d): frontier[i] ∘ gen[j]
        prod = frontier[:, gen_stack]
        flat = np.ascontiguousarray(prod.reshape(-1, d))
        buf = flat.tobytes()
        fresh = []
        for r in range(flat.shape[0]):
            b = buf[r * row_bytes : (r + 1) * row_bytes]
            if b not in seen:
                seen[b] = len(rows) + len(fresh)
                fresh.append(r)
        if len(rows) + len(fresh) > max_order:
            raise GuardExceeded("max group order", max_order, len(rows) + len(fresh))
        new = flat[fresh]
        rows.extend(new)
        frontier = new
    perms = np.stack(rows)
    gen_idx = [seen[a.astype(np.int32).tobytes()] for a in arrs]
    return ConcreteGroup(perms, gen_idx, name, **kwargs)
