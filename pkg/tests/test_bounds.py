import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclegroups.affine import lambda_aff_semisimple, lambda_auto
from cyclegroups.bounds import (
    CONSTANTS,
    EXCEPTIONAL_CASES,
    bounds_grid,
    check_case_inequality,
    check_exceptional,
    check_monotone_convergence,
    order_omega_minus,
    order_omega_plus,
    order_psl,
    order_psl2,
    order_psp,
    order_psu,
    pgl2_prime_sequence,
    power_bound_holds,
    prime_powers_up_to,
    psl2_exception_values,
    psl3_refined_holds,
    psu3_reduced_holds,
    radical_index_bound,
    simple_group_formula,
)
from cyclegroups.matgrp import build_pgammal2, build_psl2
from cyclegroups.numtheory import landau_g, primes_up_to


def test_constants():
    assert CONSTANTS.e1 == pytest.approx(0.437618, abs=1e-6)
    assert CONSTANTS.E1 == pytest.approx(-1.778151, abs=1e-6)
    assert CONSTANTS.E2 == pytest.approx(-5.906890, abs=1e-6)


def test_radical_index_bound_roundtrip():
    assert radical_index_bound(Fraction(1, 10), "automorphism") == pytest.approx(60, rel=1e-6)
    assert radical_index_bound(Fraction(1, 4), "affine") == pytest.approx(3600, rel=1e-6)
    assert radical_index_bound(Fraction(999999, 1000000)) == pytest.approx(1, rel=1e-4)
    for bad in (0, 1, Fraction(3, 2), -1):
        with pytest.raises(ValueError):
            radical_index_bound(bad)
    with pytest.raises(ValueError):
        radical_index_bound(Fraction(1, 2), "other")


# standard orders of small simple groups
KNOWN_ORDERS = [
    (order_psl, (3, 2), 168),
    (order_psl, (3, 3), 5616),
    (order_psl, (3, 4), 20160),
    (order_psl, (4, 2), 20160),
    (order_psu, (3, 3), 6048),
    (order_psu, (4, 2), 25920),
    (order_psu, (3, 5), 126000),
    (order_psp, (2, 3), 25920),
    (order_psp, (3, 2), 1451520),
    (order_psp, (3, 3), 4585351680),
    (order_omega_plus, (4, 2), 174182400),
    (order_omega_minus, (4, 2), 197406720),
]


@pytest.mark.parametrize("fn,args,expected", KNOWN_ORDERS)
def test_known_orders(fn, args, expected):
    assert fn(*args) == expected


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13])
def test_psl2_order_matches_construction(q):
    assert order_psl2(q) == build_psl2(q).order


def test_formula_validation():
    for fam, rank, q in [("PSL", 3, 2), ("PSL", 2, 5), ("PSU", 3, 2), ("PSp", 2, 2), ("POmegaOdd", 3, 4),
                         ("POmegaPlus", 3, 3), ("PSL", 3, 6), ("Foo", 3, 3)]:
        with pytest.raises(ValueError):
            simple_group_formula(fam, rank, q)


def test_labels():
    assert simple_group_formula("PSp", 2, 3).label == "PSp_4(3)"
    assert simple_group_formula("POmegaMinus", 4, 2).label == "POmega-_8(2)"


def cube_free_oracle(n, base, order):
    # compare (g(n) * base^n)^3 with order^n using Fractions
    lhs = (landau_g(n) * Fraction(base) ** n) ** 3
    return lhs < order**n


@given(st.integers(1, 30), st.fractions(min_value=1, max_value=10**4, max_denominator=50), st.integers(2, 10**12))
def test_power_bound_is_exact(n, base, order):
    assert power_bound_holds(n, base, order) == cube_free_oracle(n, base, order)


def test_power_bound_boundary_is_strict():
    # g(3)=3 and 3 * 1^3 < 27^(3/3)=27; with order 1 and factor 1 equality must fail
    assert not power_bound_holds(3, Fraction(1), 1, factor=1)
    assert power_bound_holds(1, Fraction(2), 9, factor=1)  # 2 < 9^(1/3)
    assert not power_bound_holds(1, Fraction(2), 8, factor=1)  # 2 = 8^(1/3)


@pytest.mark.parametrize("family,params", [("PSL", (3, 5)), ("PSU", (3, 3)), ("PSp", (2, 3))])
def test_named_cases_hold(family, params):
    assert all(ok for _, ok in check_case_inequality(family, params, range(1, 11)))


def test_psl3_small_q_need_refinement():
    fails3 = [n for n, ok in check_case_inequality("PSL", (3, 3), range(1, 13)) if not ok]
    assert fails3 == [2, 3, 4, 5, 7, 8, 9, 10, 12]
    for q in (3, 4):
        assert all(psl3_refined_holds(q, n) for n in range(1, 13))


def test_psu3_reduced_condition():
    assert not psu3_reduced_holds(5)
    assert all(psu3_reduced_holds(q) for q in prime_powers_up_to(64, 7))
    assert all(ok for _, ok in check_case_inequality("PSU", (3, 5), range(1, 13)))


def test_exceptional_cases():
    orders = {c.name: c.order for c in EXCEPTIONAL_CASES}
    assert orders == {"3D4(2)": 211341312, "2F4(2)'": 17971200}
    assert {c.name: c.o_value for c in EXCEPTIONAL_CASES} == {"3D4(2)": 54, "2F4(2)'": 32}
    for c in EXCEPTIONAL_CASES:
        assert all(ok for _, ok in check_exceptional(c, range(1, 13)))


def test_grid_holds():
    rows = bounds_grid()
    assert len(rows) == 730
    assert all(r.holds for r in rows)
    raw = sorted(r.label for r in rows if r.failures)
    assert raw == ["PSL_3(3)", "PSL_3(4)", "PSU_3(5)"]
    assert all(r.fallback for r in rows if r.failures)


def test_exception_values_q5():
    v = psl2_exception_values(5)
    assert (v.lambda_aut_1, v.lambda_aff_1, v.lambda_aut_sq, v.lambda_aut_cube) == (6, 30, 30, 60)
    assert v.exponent_aut_1 == pytest.approx(CONSTANTS.e1)
    assert v.aut_1_above_third and v.aut_sq_above_third and v.aut_cube_equals_third
    assert math.log(30) / math.log(3600) > 1 / 3
    with pytest.raises(ValueError):
        psl2_exception_values(6)


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27])
def test_exception_value_matches_exhaustive(q):
    assert psl2_exception_values(q).lambda_aut_1 == lambda_auto(build_pgammal2(q))


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11])
def test_exception_aff_value_matches_exhaustive(q):
    assert psl2_exception_values(q).lambda_aff_1 == lambda_aff_semisimple(build_pgammal2(q)).value


def test_monotone_convergence():
    assert check_monotone_convergence("aut", prime_powers_up_to(64, 5))
    primes = [p for p in primes_up_to(97) if p >= 5]
    assert check_monotone_convergence("aut_sq", primes)
    assert check_monotone_convergence("aff", primes)
    with pytest.raises(ValueError):
        check_monotone_convergence("aut", [7, 5])
    with pytest.raises(ValueError):
        check_monotone_convergence("aff", [5, 9])


def test_pgl2_prime_sequence():
    w0 = pgl2_prime_sequence(0)
    assert w0.label == "PGL2:5" and w0.order == 120
    assert w0.aut_exponent == pytest.approx(math.log(6) / math.log(120))
    assert round(w0.aut_exponent, 3) == 0.374 and round(w0.aff_exponent, 3) == 0.710
    assert pgl2_prime_sequence(1).p == 7
    for n in range(21):
        w = pgl2_prime_sequence(n)
        assert w.aut_holds and w.aff_holds
        assert w.aut_exponent > 1 / 3 and w.aff_exponent > 2 / 3
