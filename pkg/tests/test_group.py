import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclegroups.group import (
    GuardExceeded,
    alternating,
    automorphism_group,
    bruteforce_automorphisms,
    center,
    check_automorphism,
    conjugacy_classes,
    cyclic,
    derived_series,
    derived_subgroup,
    dihedral,
    direct_power,
    direct_product,
    holomorph,
    is_semisimple,
    is_simple,
    is_solvable,
    minimal_normal_subgroups,
    normal_subgroups,
    quaternion,
    quotient,
    socle,
    solvable_radical,
    symmetric,
    wreath_product,
)
from cyclegroups.matgrp import build_pgammal2, build_pgl2, build_psl2
from cyclegroups.perm import Permutation

SMALL = {
    "Sym3": symmetric(3),
    "Sym4": symmetric(4),
    "Alt4": alternating(4),
    "Dih8": dihedral(4),
    "Q8": quaternion(),
    "Cyclic12": cyclic(12),
}


def test_family_orders():
    assert [symmetric(n).order for n in range(1, 7)] == [1, 2, 6, 24, 120, 720]
    assert [alternating(n).order for n in range(1, 7)] == [1, 1, 3, 12, 60, 360]
    assert cyclic(7).order == 7 and dihedral(5).order == 10 and quaternion().order == 8


@pytest.mark.parametrize("name", sorted(SMALL))
def test_multiplication_matches_composition(name):
    G = SMALL[name]
    rng = np.random.default_rng(0)
    for a, b in rng.integers(0, G.order, size=(50, 2)):
        pa, pb = G.element(a), G.element(b)
        assert G.element(G.mul(a, b)) == pa * pb
    assert all(G.mul(g, G.inv(g)) == 0 for g in range(G.order))


@given(st.integers(0, 119), st.integers(0, 119), st.integers(0, 119))
def test_associativity_sym5(a, b, c):
    G = symmetric(5)
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


@given(st.integers(0, 119), st.integers(-7, 30))
def test_power_consistent_with_order(a, k):
    G = symmetric(5)
    o = G.element_order(a)
    assert G.power(a, k) == G.power(a, k % o)
    assert G.power(a, o) == 0


def test_class_counts():
    counts = {n: len(conjugacy_classes(G)) for n, G in SMALL.items()}
    assert counts == {"Sym3": 3, "Sym4": 5, "Alt4": 4, "Dih8": 5, "Q8": 5, "Cyclic12": 12}
    assert len(conjugacy_classes(alternating(5))) == 5
    assert len(conjugacy_classes(symmetric(5))) == 7


def test_normal_subgroups():
    assert sorted(N.order for N in normal_subgroups(symmetric(4))) == [1, 4, 12, 24]
    assert len(normal_subgroups(dihedral(4))) == 6
    assert len(normal_subgroups(quaternion())) == 6
    assert sorted(N.order for N in normal_subgroups(alternating(5))) == [1, 60]


def test_center_derived_series():
    assert center(dihedral(4)).order == 2
    assert center(quaternion()).order == 2
    assert center(symmetric(3)).order == 1
    assert derived_subgroup(symmetric(4)).order == 12
    assert [H.order for H in derived_series(symmetric(4))] == [24, 12, 4, 1]


def test_solvability_and_simplicity():
    assert is_solvable(symmetric(4)) and not is_solvable(alternating(5))
    assert is_simple(alternating(5)) and is_simple(build_psl2(7))
    assert not is_simple(symmetric(5)) and not is_simple(alternating(4))


def test_semisimple_radical_socle():
    for G in (alternating(5), symmetric(5), build_pgl2(5), build_pgammal2(9)):
        assert is_semisimple(G)
    for G in (symmetric(4), cyclic(6), direct_product(symmetric(3), alternating(5))):
        assert not is_semisimple(G)
    assert solvable_radical(direct_product(symmetric(3), alternating(5))).order == 6
    assert solvable_radical(symmetric(4)).order == 24
    assert socle(symmetric(4)).order == 4
    assert socle(symmetric(5)).order == 60
    assert socle(direct_power(alternating(5), 2)).order == 3600
    assert sorted(N.order for N in minimal_normal_subgroups(direct_power(alternating(5), 2))) == [60, 60]


def test_quotient():
    G = symmetric(4)
    V = [N for N in normal_subgroups(G) if N.order == 4][0]
    Q, labels = quotient(G, V)
    assert Q.order == 6 and not Q.is_abelian()
    assert len(set(labels.tolist())) == 6


AUT_ORDERS = {
    "Cyclic12": 4,
    "Sym3": 6,
    "Sym4": 24,
    "Alt4": 24,
    "Dih8": 8,
    "Q8": 24,
}


@pytest.mark.parametrize("name", sorted(AUT_ORDERS))
def test_small_automorphism_groups(name):
    assert automorphism_group(SMALL[name]).order == AUT_ORDERS[name]


def test_cyclic_automorphisms_are_units():
    for n, phi in [(5, 4), (8, 4), (9, 6), (10, 4), (12, 4)]:
        assert automorphism_group(cyclic(n)).order == phi


@pytest.mark.parametrize(
    "make",
    [lambda: alternating(5), lambda: symmetric(5), lambda: build_pgl2(5), lambda: build_pgl2(7), lambda: build_psl2(7)],
)
def test_carrier_agrees_with_bruteforce(make):
    G = make()
    carrier = automorphism_group(G, "conjugation")
    brute = automorphism_group(G, "bruteforce")
    assert carrier.order == brute.order
    assert sorted(carrier.element_orders.tolist()) == sorted(brute.element_orders.tolist())


def test_alt6_has_exceptional_automorphisms():
    # brute force on Alt6 gives the order of PGammaL2(9), which is Aut(PSL2(9))
    A = automorphism_group(alternating(6))
    assert A.kind == "bruteforce"
    assert A.order == 1440 == build_pgammal2(9).order
    assert sorted(A.element_orders.tolist()) == sorted(build_pgammal2(9).orders.tolist())


def test_check_automorphism_rejects_non_homomorphism():
    G = symmetric(3)
    bad = np.array([0, 2, 1, 3, 4, 5])
    good = automorphism_group(G).mapping(1)
    check_automorphism(G, good)
    with pytest.raises(ValueError):
        check_automorphism(G, bad[: G.order] if G.order == 6 else bad)


def test_bruteforce_count_matches():
    assert len(bruteforce_automorphisms(dihedral(4))) == 8


def test_holomorph_orders():
    assert holomorph(cyclic(5)).order == 20
    assert holomorph(symmetric(3)).order == 36
    assert holomorph(quaternion()).order == 192


def test_power_and_product_carriers():
    A5 = alternating(5)
    assert automorphism_group(direct_power(A5, 2)).order == 120 * 120 * 2
    assert automorphism_group(direct_product(A5, build_psl2(7))).order == 120 * 336


def test_wreath_product_order():
    assert wreath_product(symmetric(3), 2).order == 72
    assert wreath_product(cyclic(2), 3).order == 48


def test_guards():
    with pytest.raises(GuardExceeded):
        direct_power(alternating(5), 4)
    with pytest.raises(GuardExceeded):
        wreath_product(symmetric(4), 3, max_order=10**4)


def test_element_lookup_roundtrip():
    G = symmetric(4)
    for i in range(G.order):
        assert G.index_of(G.element(i)) == i
    assert G.index_of(Permutation.identity(4)) == 0
