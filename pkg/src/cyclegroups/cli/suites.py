"""Named verification suites.  Each returns a list of items with expected and observed values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .. import affine, bounds, numtheory, wreath
from ..group import (
    alternating,
    cyclic,
    dihedral,
    quaternion,
    symmetric,
)
from ..matgrp import build_pgammal2, build_pgl2, build_psl2


@dataclass
class SuiteItem:
    name: str
    expected: object
    observed: object
    passed: bool


def _item(name, expected, observed) -> SuiteItem:
    return SuiteItem(name, expected, observed, expected == observed)


SMALL_SIMPLE_AFF_FRACTIONS = {
    5: Fraction(1, 4),
    7: Fraction(1, 6),
    9: Fraction(1, 9),
    8: Fraction(1, 8),
    11: Fraction(1, 10),
    13: Fraction(1, 12),
    17: Fraction(1, 16),
}
ALT7_FRACTION = Fraction(1, 42)


def suite_small_simple(opts=None) -> list[SuiteItem]:
    out = []
    for q, frac in SMALL_SIMPLE_AFF_FRACTIONS.items():
        G = build_psl2(q)
        lam = affine.lambda_aff_semisimple(G).value
        out.append(_item(f"lambda_aff(PSL2({q}))", frac, Fraction(lam, G.order)))
    G = alternating(7)
    lam = affine.lambda_aff_semisimple(G).value
    out.append(_item("lambda_aff(Alt7)", ALT7_FRACTION, Fraction(lam, G.order)))
    return out


AUT_PSL2_Q = (5, 7, 8, 9, 11, 13, 16, 25, 27)


def aut_psl2_aff_value(q: int) -> int:
    p, f = numtheory.prime_power(q)
    if f == 1:
        return q * (q + 1)
    if p == 2:
        return q * q - 1
    return (q * q - 1) // 2


def suite_aut_psl2(opts=None) -> list[SuiteItem]:
    out = []
    for q in AUT_PSL2_Q:
        A = build_pgammal2(q)
        out.append(_item(f"Lambda(Aut(PSL2({q})))", q + 1, affine.lambda_auto(A)))
    for q in AUT_PSL2_Q:
        A = build_pgammal2(q)
        out.append(_item(f"Lambda_aff(Aut(PSL2({q})))", aut_psl2_aff_value(q), affine.lambda_aff_semisimple(A).value))
    return out


REGULAR_CYCLE_GROUPS = {
    "Alt5": lambda: alternating(5),
    "Sym5": lambda: symmetric(5),
    "PGL2(5)": lambda: build_pgl2(5),
    "Alt6": lambda: alternating(6),
    "PSL2(7)": lambda: build_psl2(7),
    "PGL2(7)": lambda: build_pgl2(7),
}


def suite_regular_cycle(opts=None) -> list[SuiteItem]:
    sweep = getattr(opts, "max_affine_sweep", affine.MAX_AFFINE_SWEEP)
    out = []
    for name, make in REGULAR_CYCLE_GROUPS.items():
        rep = affine.check_regular_cycles(make(), max_sweep=sweep)
        out.append(SuiteItem(f"every affine map of {name} has a regular cycle ({rep.maps_checked} maps)", True, rep.holds, rep.holds))
    return out


def small_corpus() -> dict[str, Callable]:
    """Groups of order at most 24 used for exhaustive checks."""
    return {
        "Cyclic:1": lambda: cyclic(1),
        "Cyclic:2": lambda: cyclic(2),
        "Cyclic:5": lambda: cyclic(5),
        "Cyclic:6": lambda: cyclic(6),
        "Cyclic:8": lambda: cyclic(8),
        "Cyclic:12": lambda: cyclic(12),
        "Sym:3": lambda: symmetric(3),
        "Dih:8": lambda: dihedral(4),
        "Q8": quaternion,
        "Dih:10": lambda: dihedral(5),
        "Dih:12": lambda: dihedral(6),
        "Alt:4": lambda: alternating(4),
        "Sym:4": lambda: symmetric(4),
    }


def suite_shift_lemmas(opts=None) -> list[SuiteItem]:
    out = []
    for name, make in small_corpus().items():
        G = make()
        checks = {**affine.check_affine_lemmas(G), **affine.check_inner_lemmas(G)}
        for key, c in checks.items():
            out.append(SuiteItem(f"{name}: {key} ({c.checked} cases)", 0, c.failed, c.failed == 0))
    return out


def suite_wreath_order(opts=None) -> list[SuiteItem]:
    rng = np.random.default_rng(20240607)
    out = []
    for G, n, count in ((symmetric(5), 2, 10000), (symmetric(3), 3, 10000)):
        bad = 0
        for _ in range(count):
            w = wreath.random_wreath_element(G, n, rng)
            bad += wreath.wreath_order(w) != wreath.wreath_order_oracle(w)
        out.append(SuiteItem(f"wreath_order vs repeated multiplication, {G.name} wr Sym:{n} ({count} elements)", 0, bad, bad == 0))
    p9 = build_pgammal2(9)
    p5 = build_pgammal2(5)
    out.append(_item("meo(Aut(PSL2(9)^2))", 40, wreath.wreath_meo(p9, 2)))
    out.append(_item("meo(Aut(PSL2(9)^3))", 120, wreath.wreath_meo(p9, 3)))
    out.append(_item("meo(Aut(PSL2(5))^4)", 60, wreath.direct_power_meo(p5, 4)))
    out.append(_item("Lambda(Aut(PSL2(5)^2))", 30, wreath.lambda_aut_power(build_psl2(5), 2)))
    out.append(_item("Lambda(Aut(PSL2(5)^3))", 60, wreath.lambda_aut_power(build_psl2(5), 3)))
    return out


def suite_landau(opts=None) -> list[SuiteItem]:
    out = []
    bad = [n for n in range(1, 26) if numtheory.landau_g(n) != numtheory.max_lcm_over_partitions(n)]
    out.append(SuiteItem("g(n) = partition brute force, n <= 25", [], bad, not bad))
    equal_at = []
    exceed = []
    for n in range(1, 201):
        le, eq = numtheory.check_landau_exponential(n)
        if not le:
            exceed.append(n)
        if eq:
            equal_at.append(n)
    out.append(SuiteItem("g(n) <= 3^(n/3) for n <= 200", [], exceed, not exceed))
    out.append(_item("g(n) = 3^(n/3) exactly at", [3], equal_at))
    bad = [n for n in range(2, 201) if not numtheory.check_massias(n)]
    out.append(SuiteItem("log g(n) <= 1.05314 sqrt(n log n), 2 <= n <= 200", [], bad, not bad))
    bad = [n for n in range(1, 1001) if not numtheory.check_rosser_schoenfeld(n)]
    out.append(SuiteItem("psi(n) < 1.03883 n, n <= 1000", [], bad, not bad))
    return out


def suite_case_inequalities(opts=None) -> list[SuiteItem]:
    kw = {}
    for key in ("q_max", "d_max", "m_max", "n_max"):
        if getattr(opts, key, None) is not None:
            kw[key] = getattr(opts, key)
    rows = bounds.bounds_grid(**kw)
    out = []
    for r in rows:
        note = f" [{r.route} fails at n={r.failures}; {r.fallback}]" if r.failures else ""
        out.append(SuiteItem(f"{r.label} ({r.route}){note}", True, r.holds, r.holds))
    return out


def suite_alt5_sharpness(opts=None) -> list[SuiteItem]:
    A5 = alternating(5)
    out = [
        _item("Lambda(Alt5)", 6, affine.lambda_auto(A5)),
        _item("Lambda_aff(Alt5)", 15, affine.lambda_aff_exact(A5).value),
        _item("lambda(Alt5)", Fraction(1, 10), Fraction(affine.lambda_auto(A5), 60)),
        _item("lambda_aff(Alt5)", Fraction(1, 4), Fraction(affine.lambda_aff_exact(A5).value, 60)),
    ]
    b1 = bounds.radical_index_bound(Fraction(1, 10), "automorphism")
    b2 = bounds.radical_index_bound(Fraction(1, 4), "affine")
    out.append(SuiteItem("(1/10)^E1 = 60", 60, b1, math.isclose(b1, 60, rel_tol=1e-6)))
    out.append(SuiteItem("(1/4)^E2 = 3600", 3600, b2, math.isclose(b2, 3600, rel_tol=1e-6)))
    return out


SUITES: dict[str, Callable] = {
    "table1": suite_small_simple,
    "psl-theo": suite_aut_psl2,
    "regular-cycle": suite_regular_cycle,
    "shift-lemmas": suite_shift_lemmas,
    "wreath-order": suite_wreath_order,
    "landau": suite_landau,
    "case-inequalities": suite_case_inequalities,
    "main-cor": suite_alt5_sharpness,
}


def run_suite(name: str, opts=None) -> list[SuiteItem]:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](opts)
