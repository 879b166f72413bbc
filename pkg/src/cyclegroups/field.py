"""Explicit finite fields GF(p^f) = GF(p)[t]/(m(t)).

Elements are coefficient vectors (little-endian, constant term first).  The
field also numbers its elements ``0..q-1`` by reading the coefficient vector as
base-``p`` digits; the group constructions work with these integer codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .numtheory import FactoredInteger, is_prime

MAX_FIELD_SIZE = 2**16


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``m`` over GF(p)."""
    r = _trim([x % p for x in a])
    dm = len(m) - 1
    while len(r) - 1 >= dm:
        lead = r[-1]
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            r[shift + i] = (r[shift + i] - lead * mi) % p
        _trim(r)
    return r


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division of the monic ``m`` by every monic polynomial of degree <= deg/2."""
    deg = len(m) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(m, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree f, comparing coefficients from the top degree down.

    Equivalently the one whose coefficient vector, read as base-p digits with
    the constant term least significant, is smallest: x^2+1 over GF(3), x^3+x+1
    over GF(2).
    """
    for high_first in product(range(p), repeat=f):
        low = list(reversed(high_first))
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True, eq=False)
class FqField:
    p: int
    f: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if len(self.modulus) != self.f + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        if not is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over GF({self.p})")

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def order(self) -> int:
        return self.q

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FqField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.f})"

    __str__ = __repr__

    # --- integer codes -----------------------------------------------------

    @cached_property
    def _digits(self) -> np.ndarray:
        idx = np.arange(self.q)
        return np.stack([(idx // self.p**i) % self.p for i in range(self.f)], axis=1)

    @cached_property
    def _weights(self) -> np.ndarray:
        return self.p ** np.arange(self.f)

    def _code(self, coeffs: Sequence[int]) -> int:
        out = 0
        for i, c in enumerate(coeffs):
            out += (c % self.p) * self.p**i
        return out

    def _coeffs(self, code: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self._digits[code])

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray, int]:
        """exp/log tables with respect to the first primitive element in code order."""
        q = self.q
        n = q - 1
        odd = [n // r for r in FactoredInteger.of(n).primes()] if n > 1 else []

        def mul_codes(a: int, b: int) -> int:
            return self._code(_poly_mod(_poly_mul(self._coeffs(a), self._coeffs(b), self.p), self.modulus, self.p))

        def power(a: int, k: int) -> int:
            r, base = 1, a
            while k:
                if k & 1:
                    r = mul_codes(r, base)
                base = mul_codes(base, base)
                k >>= 1
            return r

        gen = next(a for a in range(1, q) if all(power(a, k) != 1 for k in odd))
        exp = np.zeros(2 * n + 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for k in range(n):
            exp[k] = x
            log[x] = k
            x = mul_codes(x, gen)
        exp[n : 2 * n] = exp[:n]
        return exp, log, gen

    def add_codes(self, a, b):
        d = self._digits
        return ((d[a] + d[b]) % self.p) @ self._weights

    def neg_codes(self, a):
        return ((-self._digits[a]) % self.p) @ self._weights

    def sub_codes(self, a, b):
        d = self._digits
        return ((d[a] - d[b]) % self.p) @ self._weights

    def mul_codes(self, a, b):
        exp, log, _ = self._tables
        a = np.asarray(a)
        b = np.asarray(b)
        out = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        exp, log, _ = self._tables
        return int(exp[(self.q - 1 - log[a]) % (self.q - 1)])

    def pow_code(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        exp, log, _ = self._tables
        return int(exp[(int(log[a]) * k) % (self.q - 1)])

    def is_square_code(self, a: int) -> bool:
        if a == 0:
            return True
        if self.p == 2:
            return True
        return int(self._tables[1][a]) % 2 == 0

    @property
    def primitive_code(self) -> int:
        return int(self._tables[2])

    # --- element API -------------------------------------------------------

    def element(self, value: int | Sequence[int]) -> "FqElement":
        if isinstance(value, (int, np.integer)):
            coeffs = [int(value) % self.p] + [0] * (self.f - 1)
        else:
            coeffs = [int(c) % self.p for c in value]
            if len(coeffs) > self.f:
                coeffs = _poly_mod(coeffs, self.modulus, self.p)
            coeffs = coeffs + [0] * (self.f - len(coeffs))
        return FqElement(self, tuple(coeffs))

    def from_code(self, code: int) -> "FqElement":
        return FqElement(self, self._coeffs(int(code)))

    def zero(self) -> "FqElement":
        return self.element(0)

    def one(self) -> "FqElement":
        return self.element(1)

    def gen(self) -> "FqElement":
        """The class of ``t``."""
        if self.f == 1:
            # x - 0 is the modulus for prime fields, so t reduces to 0
            return self.zero()
        return self.element([0, 1])

    def primitive_element(self) -> "FqElement":
        return self.from_code(self.primitive_code)

    def elements(self) -> Iterator["FqElement"]:
        for code in range(self.q):
            yield self.from_code(code)


@dataclass(frozen=True)
class FqElement:
    field: FqField
    coeffs: tuple[int, ...]

    @property
    def code(self) -> int:
        return self.field._code(self.coeffs)

    def _wrap(self, code) -> "FqElement":
        return self.field.from_code(int(code))

    def _check(self, other: "FqElement") -> None:
        if other.field != self.field:
            raise ValueError(f"elements of different fields: {self.field} vs {other.field}")

    def __add__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        return self._wrap(self.field.add_codes(self.code, other.code))

    def __sub__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        return self._wrap(self.field.sub_codes(self.code, other.code))

    def __neg__(self) -> "FqElement":
        return self._wrap(self.field.neg_codes(self.code))

    def __mul__(self, other: "FqElement") -> "FqElement":
        self._check(other)
        return self._wrap(self.field.mul_codes(self.code, other.code))

    def __truediv__(self, other: "FqElement") -> "FqElement":
        return self * other.inv()

    def __pow__(self, k: int) -> "FqElement":
        return self._wrap(self.field.pow_code(self.code, k))

    def inv(self) -> "FqElement":
        return self._wrap(self.field.inv_code(self.code))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"


def make_field(p: int, f: int = 1) -> FqField:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f < 1:
        raise ValueError("degree must be >= 1")
    if p**f > MAX_FIELD_SIZE:
        raise ValueError(f"GF({p}^{f}) exceeds the size guard {MAX_FIELD_SIZE}")
    modulus = (0, 1) if f == 1 else smallest_irreducible(p, f)
    return FqField(p, f, modulus)


def frobenius(a: FqElement, k: int = 1) -> FqElement:
    """``a ** (p**k)``."""
    return a ** (a.field.p**k)


def multiplicative_order(a: FqElement) -> int:
    if a.is_zero():
        raise ValueError("0 has no multiplicative order")
    n = a.field.q - 1
    order = n
    for r in FactoredInteger.of(n).primes() if n > 1 else ():
        while order % r == 0 and (a ** (order // r)).coeffs == a.field.one().coeffs:
            order //= r
    return order
