"""Landau's function, Chebyshev's function and the explicit bounds on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import lcm
from typing import Iterator

import numpy as np

MASSIAS_CONSTANT = 1.05314
ROSSER_SCHOENFELD_CONSTANT = 1.03883
SIEVE_LIMIT = 10**6


@lru_cache(maxsize=8)
def _sieve(limit: int) -> np.ndarray:
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if is_p[i]:
            is_p[i * i :: i] = False
    return is_p


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    if n > SIEVE_LIMIT:
        raise ValueError(f"sieve limited to {SIEVE_LIMIT}")
    size = min(SIEVE_LIMIT, 1 << max(10, (n - 1).bit_length()))
    return np.flatnonzero(_sieve(size)[: n + 1]).tolist()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n <= SIEVE_LIMIT:
        return bool(_sieve(SIEVE_LIMIT)[n])
    return all(n % p for p in primes_up_to(math.isqrt(n)))


def nth_prime(k: int) -> int:
    """The k-th prime counting from ``p_0 = 2``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    limit = 100
    while True:
        ps = primes_up_to(limit)
        if len(ps) > k:
            return ps[k]
        limit *= 4


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, f)`` with ``q = p**f``, or ``None`` if ``q`` is not a prime power."""
    if q < 2:
        return None
    for p in primes_up_to(min(q, SIEVE_LIMIT)):
        if q % p == 0:
            f = 0
            r = q
            while r % p == 0:
                r //= p
                f += 1
            return (p, f) if r == 1 else None
        if p * p > q:
            break
    return (q, 1) if is_prime(q) else None


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer stored as increasing ``(prime, exponent)`` pairs."""

    factors: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, n: int) -> "FactoredInteger":
        if n < 1:
            raise ValueError("only positive integers can be factored")
        out = []
        r = n
        for p in primes_up_to(min(math.isqrt(n), SIEVE_LIMIT)):
            if p * p > r:
                break
            e = 0
            while r % p == 0:
                r //= p
                e += 1
            if e:
                out.append((p, e))
        if r > 1:
            out.append((r, 1))
        return cls(tuple(out))

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def valuation(self, p: int) -> int:
        for prime, e in self.factors:
            if prime == p:
                return e
        return 0

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def log(self) -> float:
        return sum(e * math.log(p) for p, e in self.factors)

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        exps = dict(self.factors)
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) + e
        return FactoredInteger(tuple(sorted(exps.items())))

    def __int__(self) -> int:
        return self.value


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def landau_g(n: int) -> int:
    """Maximum order of an element of Sym_n.

    Knapsack over prime powers: ``best[b]`` is the largest product of powers of
    distinct primes (processed so far) whose sum is at most ``b``.
    """
    if n < 1:
        raise ValueError("landau_g requires n >= 1")
    best = [1] * (n + 1)
    for p in primes_up_to(n):
        new = best[:]
        pk = p
        while pk <= n:
            for b in range(pk, n + 1):
                cand = best[b - pk] * pk
                if cand > new[b]:
                    new[b] = cand
            pk *= p
        best = new
    return best[n]


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``n`` in non-increasing part order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def max_lcm_over_partitions(n: int) -> int:
    """Brute force: max lcm of the parts over all partitions of n."""
    return max(reduce(lcm, part, 1) for part in partitions(n))


def chebyshev_psi(n: int) -> tuple[FactoredInteger, float]:
    """``Ψ(n) = lcm(1..n)`` in factored form together with ``ψ(n) = log Ψ(n)``."""
    if n < 1:
        raise ValueError("chebyshev_psi requires n >= 1")
    factors = []
    for p in primes_up_to(n):
        e = 0
        pk = p
        while pk <= n:
            e += 1
            pk *= p
        factors.append((p, e))
    big = FactoredInteger(tuple(factors))
    return big, big.log()


def check_massias(n: int) -> bool:
    """``log g(n) <= 1.05314 * sqrt(n log n)``, evaluated in double precision."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = math.log(landau_g(n))
    if n == 1:
        return lhs <= 0.0
    return lhs <= MASSIAS_CONSTANT * math.sqrt(n * math.log(n))


def check_rosser_schoenfeld(n: int) -> bool:
    return chebyshev_psi(n)[1] < ROSSER_SCHOENFELD_CONSTANT * n


def check_landau_exponential(n: int) -> tuple[bool, bool]:
    """Compare ``g(n)`` with ``3**(n/3)`` exactly, via ``g(n)**3`` vs ``3**n``."""
    lhs = landau_g(n) ** 3
    rhs = 3**n
    return lhs <= rhs, lhs == rhs


def landau_table(n_max: int) -> list[dict]:
    """Rows of n, g(n), psi(n) and the slack of each analytic bound."""
    rows = []
    for n in range(1, n_max + 1):
        g = landau_g(n)
        _, psi = chebyshev_psi(n)
        massias_rhs = MASSIAS_CONSTANT * math.sqrt(n * math.log(n)) if n > 1 else 0.0
        rows.append(
            {
                "n": n,
                "g": g,
                "psi": psi,
                "massias_margin": massias_rhs - math.log(g),
                "rosser_schoenfeld_margin": ROSSER_SCHOENFELD_CONSTANT * n - psi,
                "exp3_margin": n / 3 * math.log(3) - math.log(g),
            }
        )
    return rows
