"""Constants, order formulas and exact inequality checks for the bound estimates.

Every inequality of the form ``g(n)·Bⁿ < |S|^{n/3}`` is decided in integer
arithmetic: with ``B = num/den`` it is equivalent to
``g(n)³·num^{3n} < |S|ⁿ·den^{3n}``.  No float is consulted there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .numtheory import is_prime, landau_g, nth_prime, prime_power
from .wreath import direct_power_meo

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)


@dataclass(frozen=True)
class BoundConstants:
    e1: float
    E1: float
    e2: float
    E2: float

    @classmethod
    def compute(cls) -> "BoundConstants":
        e1 = math.log(6) / math.log(60)
        e2 = math.log(30) / math.log(60)
        return cls(e1, 1 / (e1 - 1), e2, 1 / (e2 - 1))


CONSTANTS = BoundConstants.compute()


def radical_index_bound(rho, kind: str = "automorphism") -> float:
    """ρ^{E₁} (automorphism cycles) or ρ^{E₂} (affine cycles)."""
    rho = Fraction(rho)
    if not 0 < rho < 1:
        raise ValueError("rho must lie strictly between 0 and 1")
    if kind == "automorphism":
        return float(rho) ** CONSTANTS.E1
    if kind == "affine":
        return float(rho) ** CONSTANTS.E2
    raise ValueError(f"unknown kind {kind!r}")


# --- orders of simple groups ---------------------------------------------------


def _require_q(q: int) -> tuple[int, int]:
    pf = prime_power(q)
    if pf is None:
        raise ValueError(f"{q} is not a prime power")
    return pf


def _prod(values: Iterable[int]) -> int:
    return math.prod(values)


def order_psl2(q: int) -> int:
    _require_q(q)
    return q * (q * q - 1) // math.gcd(2, q - 1)


def order_psl(d: int, q: int) -> int:
    _require_q(q)
    return q ** (d * (d - 1) // 2) * _prod(q**i - 1 for i in range(2, d + 1)) // math.gcd(d, q - 1)


def order_psu(d: int, q: int) -> int:
    _require_q(q)
    return (
        q ** (d * (d - 1) // 2)
        * _prod(q**i - (-1) ** i for i in range(2, d + 1))
        // math.gcd(d, q + 1)
    )


def order_psp(m: int, q: int) -> int:
    """|PSp_{2m}(q)|, also |PΩ_{2m+1}(q)|."""
    _require_q(q)
    return q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // math.gcd(2, q - 1)


def order_omega_plus(m: int, q: int) -> int:
    _require_q(q)
    qm = q**m - 1
    return q ** (m * (m - 1)) * qm * _prod(q ** (2 * i) - 1 for i in range(1, m)) // math.gcd(4, qm)


def order_omega_minus(m: int, q: int) -> int:
    _require_q(q)
    qm = q**m + 1
    return q ** (m * (m - 1)) * qm * _prod(q ** (2 * i) - 1 for i in range(1, m)) // math.gcd(4, qm)


FAMILIES = ("PSL", "PSU", "PSp", "POmegaOdd", "POmegaPlus", "POmegaMinus")


@dataclass(frozen=True)
class SimpleGroupOrderFormula:
    """A classical simple group by family and parameters, with its order and an upper bound on mao."""

    family: str
    rank: int  # d for PSL/PSU, m otherwise
    q: int
    order: int
    mao_bound: Fraction

    @property
    def label(self) -> str:
        if self.family in ("PSL", "PSU"):
            return f"{self.family}_{self.rank}({self.q})"
        if self.family == "PSp":
            return f"PSp_{2 * self.rank}({self.q})"
        if self.family == "POmegaOdd":
            return f"POmega_{2 * self.rank + 1}({self.q})"
        sign = "+" if self.family == "POmegaPlus" else "-"
        return f"POmega{sign}_{2 * self.rank}({self.q})"


def simple_group_formula(family: str, rank: int, q: int) -> SimpleGroupOrderFormula:
    """Order and mao bound, rejecting parameters outside the family's range."""
    p, _ = _require_q(q)
    if family == "PSL":
        if rank < 3 or (rank, q) == (3, 2):
            raise ValueError("PSL_d(q) here needs d >= 3 and (d,q) != (3,2)")
        return SimpleGroupOrderFormula(family, rank, q, order_psl(rank, q), Fraction(q**rank - 1, q - 1))
    if family == "PSU":
        if rank < 3 or (rank, q) == (3, 2):
            raise ValueError("PSU_d(q) here needs d >= 3 and (d,q) != (3,2)")
        bound = {3: q * q + q, 4: q**3 + 4}.get(rank, q**rank)
        return SimpleGroupOrderFormula(family, rank, q, order_psu(rank, q), Fraction(bound))
    if family in ("PSp", "POmegaOdd"):
        if family == "PSp" and (rank < 2 or (rank, q) == (2, 2)):
            raise ValueError("PSp_2m(q) here needs m >= 2 and (m,q) != (2,2)")
        if family == "POmegaOdd" and (rank < 3 or p == 2):
            raise ValueError("POmega_{2m+1}(q) here needs m >= 3 and q odd")
        return SimpleGroupOrderFormula(family, rank, q, order_psp(rank, q), Fraction(q ** (rank + 1), q - 1))
    if family in ("POmegaPlus", "POmegaMinus"):
        if rank < 4:
            raise ValueError("POmega±_2m(q) here needs m >= 4")
        order = order_omega_plus(rank, q) if family == "POmegaPlus" else order_omega_minus(rank, q)
        return SimpleGroupOrderFormula(family, rank, q, order, Fraction(q ** (rank + 1), q - 1))
    raise ValueError(f"unknown family {family!r}")


# --- exact comparisons ---------------------------------------------------------


def power_bound_holds(n: int, base: Fraction, order: int, factor: int | None = None) -> bool:
    """factor·baseⁿ < order^{n/3}, decided exactly by cubing.  factor defaults to g(n)."""
    base = Fraction(base)
    f = landau_g(n) if factor is None else factor
    return f**3 * base.numerator ** (3 * n) < order**n * base.denominator ** (3 * n)


def check_case_inequality(
    family: str, params: tuple[int, int], n_range: Iterable[int]
) -> list[tuple[int, bool]]:
    """g(n)·mao_boundⁿ < |S|^{n/3} for each n, with S given by family and (rank, q)."""
    S = simple_group_formula(family, *params)
    return [(n, power_bound_holds(n, S.mao_bound, S.order)) for n in n_range]


def psu3_reduced_holds(q: int) -> bool:
    """gcd(3,q+1) < (q²−q+1)/(q+1)·(1−1/q), the sufficient condition for PSU₃ after absorbing g(n)."""
    _require_q(q)
    return math.gcd(3, q + 1) < Fraction(q * q - q + 1, q + 1) * (1 - Fraction(1, q))


# Element-order spectra of Aut(PSL₃(3)) and Aut(PSL₃(4)), as computed from
# the concrete constructions in matgrp (checked again by the tests).
AUT_PSL3_SPECTRA = {
    3: (1, 2, 3, 4, 6, 8, 12, 13),
    4: (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 15, 21),
}


def psl3_refined_holds(q: int, n: int, spectrum: Sequence[int] | None = None) -> bool:
    """g(n)·meo(Aut(PSL₃(q))ⁿ) < |PSL₃(q)|^{n/3} with the exact direct-power meo."""
    spectrum = AUT_PSL3_SPECTRA[q] if spectrum is None else spectrum
    return power_bound_holds(n, Fraction(1), order_psl(3, q), landau_g(n) * direct_power_meo(spectrum, n))


# Two exceptional groups with sharpened o(S) = meo(S)·|Out(S)|.
@dataclass(frozen=True)
class ExceptionalCase:
    name: str
    meo: int
    out_order: int
    order: int

    @property
    def o_value(self) -> int:
        return self.meo * self.out_order


def _order_3d4(q: int) -> int:
    return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)


def _order_2f4(q: int) -> int:
    return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)


EXCEPTIONAL_CASES = (
    ExceptionalCase("3D4(2)", 18, 3, _order_3d4(2)),
    ExceptionalCase("2F4(2)'", 16, 2, _order_2f4(2) // 2),  # Tits group: index 2 in 2F4(2)
)


def check_exceptional(case: ExceptionalCase, n_range: Iterable[int]) -> list[tuple[int, bool]]:
    return [(n, power_bound_holds(n, Fraction(case.o_value), case.order)) for n in n_range]


# --- grid ----------------------------------------------------------------------


@dataclass
class GridRow:
    label: str
    family: str
    rank: int
    q: int
    route: str
    failures: list[int] = field(default_factory=list)
    fallback: str | None = None

    @property
    def holds(self) -> bool:
        return not self.failures or self.fallback is not None


def prime_powers_up_to(q_max: int, q_min: int = 2) -> list[int]:
    return [q for q in range(q_min, q_max + 1) if prime_power(q) is not None]


def _family_ranks(d_max: int, m_max: int):
    for d in range(3, d_max + 1):
        yield "PSL", d
    for d in range(3, d_max + 1):
        yield "PSU", d
    for m in range(2, m_max + 1):
        yield "PSp", m
    for m in range(3, m_max + 1):
        yield "POmegaOdd", m
    for m in range(4, m_max + 1):
        yield "POmegaPlus", m
        yield "POmegaMinus", m


def bounds_grid(q_max: int = 64, d_max: int = 8, m_max: int = 6, n_max: int = 12) -> list[GridRow]:
    """Run every case inequality over the grid.

    Where the mao-based inequality fails, the sharper argument for that group
    is tried: the exact direct-power meo for PSL₃(3), PSL₃(4).  The reduced
    PSU₃ condition is reported alongside; at q = 5 it fails and the PSU₃ case
    rests on the mao inequality itself.
    """
    ns = range(1, n_max + 1)
    rows = []
    for family, rank in _family_ranks(d_max, m_max):
        for q in prime_powers_up_to(q_max):
            try:
                S = simple_group_formula(family, rank, q)
            except ValueError:
                continue
            fails = [n for n, ok in check_case_inequality(family, (rank, q), ns) if not ok]
            row = GridRow(S.label, family, rank, q, "mao", fails)
            if fails and family == "PSL" and rank == 3 and q in AUT_PSL3_SPECTRA:
                if all(psl3_refined_holds(q, n) for n in ns):
                    row.fallback = "exact meo of Aut(S)^n"
            rows.append(row)
    for q in prime_powers_up_to(q_max, 3):
        ok = psu3_reduced_holds(q)
        mao_ok = all(h for _, h in check_case_inequality("PSU", (3, q), ns))
        # the reduced condition does not depend on n, so it fails for all n or none
        row = GridRow(f"PSU_3({q})", "PSU", 3, q, "reduced", [] if ok else list(ns))
        if not ok and mao_ok:
            row.fallback = "mao inequality checked directly"
        rows.append(row)
    for case in EXCEPTIONAL_CASES:
        fails = [n for n, ok in check_exceptional(case, ns) if not ok]
        rows.append(GridRow(case.name, "exceptional", 0, 2, "o-value", fails))
    return rows


# --- exception values and monotone convergence ---------------------------------


@dataclass(frozen=True)
class ExceptionValues:
    q: int
    lambda_aut_1: int
    lambda_aff_1: int
    lambda_aut_sq: int | None
    lambda_aut_cube: int | None
    exponent_aut_1: float
    exponent_aff_1: float
    exponent_aut_sq: float | None
    aut_1_above_third: bool
    aff_1_above_two_thirds: bool | None
    aut_sq_above_third: bool | None
    aut_cube_equals_third: bool | None


def _exceeds_root(value: int, order: int, k: int) -> bool:
    """value > order^{1/k}, exactly."""
    return value**k > order


def psl2_exception_values(q: int) -> ExceptionValues:
    """Closed-form Λ values for Aut(PSL₂(q)ⁿ), n ≤ 3, and their exponents relative to |PSL₂(q)ⁿ|."""
    pf = prime_power(q)
    if pf is None or q < 5:
        raise ValueError("q must be a prime power >= 5")
    p, f = pf
    order = order_psl2(q)
    prime = f == 1
    if prime:
        aff = q * (q + 1)
    elif p == 2:
        aff = q * q - 1
    else:
        aff = (q * q - 1) // 2
    sq = p * (p + 1) if prime else None
    cube = p * (p * p - 1) // 2 if prime else None
    lo = math.log(order)
    return ExceptionValues(
        q=q,
        lambda_aut_1=q + 1,
        lambda_aff_1=aff,
        lambda_aut_sq=sq,
        lambda_aut_cube=cube,
        exponent_aut_1=math.log(q + 1) / lo,
        exponent_aff_1=math.log(aff) / lo,
        exponent_aut_sq=math.log(sq) / (2 * lo) if prime else None,
        aut_1_above_third=_exceeds_root(q + 1, order, 3),
        aff_1_above_two_thirds=(aff**3 > order**2) if prime else None,
        aut_sq_above_third=_exceeds_root(sq, order**2, 3) if prime else None,
        aut_cube_equals_third=(cube**3 == order**3) if prime else None,
    )


def exception_exponent(case: str, q: int) -> float:
    """The bound whose convergence is claimed, for one parameter value.

    ``aut`` : log(q+1)/log(½q(q²−1))
    ``aut_sq`` : log(p(p+1))/log((½p(p²−1))²)
    ``aff`` : log(p(p+1))/log(½p(p²−1))
    """
    half = q * (q * q - 1) / 2
    if case == "aut":
        return math.log(q + 1) / math.log(half)
    if case == "aut_sq":
        return math.log(q * (q + 1)) / (2 * math.log(half))
    if case == "aff":
        return math.log(q * (q + 1)) / math.log(half)
    raise ValueError(f"unknown case {case!r}")


def check_monotone_convergence(case: str, q_range: Sequence[int]) -> bool:
    """Strictly decreasing along q_range and above the limit (1/3, or 2/3 for ``aff``)."""
    qs = list(q_range)
    if any(b <= a for a, b in zip(qs, qs[1:])):
        raise ValueError("q_range must be increasing")
    for q in qs:
        if case == "aut":
            if prime_power(q) is None or q < 5:
                raise ValueError(f"{q} is not a prime power >= 5")
        elif not is_prime(q) or q < 5:
            raise ValueError(f"{q} is not a prime >= 5")
    vals = [exception_exponent(case, q) for q in qs]
    limit = 2 / 3 if case == "aff" else 1 / 3
    if case == "aut":
        # the exponent over the true order |PSL₂(q)| must exceed 1/3 as well
        if not all(_exceeds_root(q + 1, order_psl2(q), 3) for q in qs):
            return False
    return all(v > limit for v in vals) and all(b < a for a, b in zip(vals, vals[1:]))


@dataclass(frozen=True)
class SequenceWitness:
    n: int
    p: int
    label: str
    order: int
    aut_exponent: float
    aff_exponent: float
    aut_holds: bool
    aff_holds: bool


def pgl2_prime_sequence(n: int) -> SequenceWitness:
    """G_n = PGL₂(p_{n+2}) with primes indexed from p₀ = 2, and the two exponent checks.

    The checks are exact: (p+1)³ > |G| and (p(p+1))³ > |G|², |G| = p(p²−1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    p = nth_prime(n + 2)
    order = p * (p * p - 1)
    lo = math.log(order)
    return SequenceWitness(
        n=n,
        p=p,
        label=f"PGL2:{p}",
        order=order,
        aut_exponent=math.log(p + 1) / lo,
        aff_exponent=math.log(p * (p + 1)) / lo,
        aut_holds=(p + 1) ** 3 > order,
        aff_holds=(p * (p + 1)) ** 3 > order**2,
    )
