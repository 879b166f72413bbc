"""Permutations on {0, ..., n-1} and their cycle structure.

Besides the scalar :class:`Permutation` type, this module carries the batch
kernels used by every exhaustive sweep in the package: given an ``(m, n)``
array whose rows are permutations, compute the maximum cycle length and the
order of each row, or the cycle length of every point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np
from numba import njit


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles of a permutation, each starting at its smallest point."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    @property
    def order(self) -> int:
        return reduce(lcm, self.lengths, 1)

    @property
    def max_length(self) -> int:
        return max(self.lengths, default=1)


class Permutation:
    """Immutable bijection of ``{0, ..., degree-1}``; point ``i`` maps to ``images[i]``."""

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        imgs = tuple(int(i) for i in images)
        if check and sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation of 0..{len(imgs) - 1}: {imgs}")
        self._images = imgs
        self._hash = hash(imgs)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        imgs = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for k, a in enumerate(cyc):
                if a in seen or not 0 <= a < degree:
                    raise ValueError(f"bad cycle {tuple(cyc)} for degree {degree}")
                seen.add(a)
                imgs[a] = cyc[(k + 1) % len(cyc)]
        return cls(imgs, check=False)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def array(self) -> np.ndarray:
        return np.asarray(self._images, dtype=np.int64)

    def __call__(self, i: int) -> int:
        return self._images[i]

    def __len__(self) -> int:
        return len(self._images)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self._images):
            inv[j] = i
        return Permutation(inv, check=False)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._images))

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)})"

    def __str__(self) -> str:
        return cycle_notation(self)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a ∘ b``, the map ``i ↦ a(b(i))``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    ai = a.images
    return Permutation((ai[j] for j in b.images), check=False)


def cycle_decompose(p: Permutation) -> CycleDecomposition:
    seen = [False] * p.degree
    cycles = []
    for start in range(p.degree):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p(j)
        cycles.append(tuple(cyc))
    return CycleDecomposition(tuple(cycles))


def lambda_of(p: Permutation) -> int:
    """Maximum length of a cycle of ``p``."""
    return cycle_decompose(p).max_length


def order_of(p: Permutation) -> int:
    return cycle_decompose(p).order


def has_regular_cycle(p: Permutation) -> bool:
    """True iff some cycle of ``p`` is as long as the order of ``p``."""
    dec = cycle_decompose(p)
    return dec.max_length == dec.order


def cycle_notation(p: Permutation) -> str:
    """Render as ``(0 1 2)(3 4)`` with fixed points omitted; ``()`` for the identity."""
    parts = [
        "(" + " ".join(map(str, c)) + ")"
        for c in cycle_decompose(p).cycles
        if len(c) > 1
    ]
    return "".join(parts) or "()"


def product_permutation(perms: Sequence[Permutation]) -> Permutation:
    """The product map ``(x_1, ..., x_r) ↦ (p_1(x_1), ..., p_r(x_r))``.

    Tuples are encoded mixed-radix, little-endian: ``x_1 + n_1*x_2 + n_1*n_2*x_3 + ...``.
    """
    degrees = [p.degree for p in perms]
    total = reduce(lambda a, b: a * b, degrees, 1)
    images = np.zeros(total, dtype=np.int64)
    idx = np.arange(total)
    radix = 1
    for p, n in zip(perms, degrees):
        digit = (idx // radix) % n
        images += p.array()[digit] * radix
        radix *= n
    return Permutation(images.tolist(), check=False)


def product_index(coords: Sequence[int], degrees: Sequence[int]) -> int:
    out, radix = 0, 1
    for x, n in zip(coords, degrees):
        out += x * radix
        radix *= n
    return out


# --- batch kernels ---------------------------------------------------------


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _cycle_stats(perms):
    m, n = perms.shape
    lam = np.ones(m, dtype=np.int64)
    order = np.ones(m, dtype=np.int64)
    seen = np.zeros(n, dtype=np.bool_)
    for r in range(m):
        for i in range(n):
            seen[i] = False
        best = 1
        o = 1
        for i in range(n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perms[r, j]
                length += 1
            if length > best:
                best = length
            o = o // _gcd(o, length) * length
        lam[r] = best
        order[r] = o
    return lam, order


@njit(cache=True)
def _point_cycle_lengths(perms):
    m, n = perms.shape
    out = np.zeros((m, n), dtype=np.int64)
    for r in range(m):
        for i in range(n):
            if out[r, i]:
                continue
            length = 1
            j = perms[r, i]
            while j != i:
                j = perms[r, j]
                length += 1
            out[r, i] = length
            j = perms[r, i]
            while j != i:
                out[r, j] = length
                j = perms[r, j]
    return out


def _as_batch(perms) -> np.ndarray:
    arr = np.ascontiguousarray(perms)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.dtype != np.int64 and arr.dtype != np.int32:
        arr = arr.astype(np.int64)
    return arr


def batch_cycle_stats(perms) -> tuple[np.ndarray, np.ndarray]:
    """Per-row (maximum cycle length, order) of an array of permutations."""
    arr = _as_batch(perms)
    if arr.shape[0] == 0:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    return _cycle_stats(arr)


def batch_point_cycle_lengths(perms) -> np.ndarray:
    """Length of the cycle through each point, for each row."""
    arr = _as_batch(perms)
    if arr.shape[0] == 0:
        return np.zeros(arr.shape, np.int64)
    return _point_cycle_lengths(arr)


def batch_orders(perms) -> np.ndarray:
    return batch_cycle_stats(perms)[1]


def lcm_all(values: Iterable[int]) -> int:
    return reduce(lcm, (int(v) for v in values), 1)


def gcd_all(values: Iterable[int]) -> int:
    return reduce(gcd, (int(v) for v in values), 0)
