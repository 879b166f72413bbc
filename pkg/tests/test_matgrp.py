from math import gcd

import numpy as np
import pytest

from cyclegroups.bounds import AUT_PSL3_SPECTRA
from cyclegroups.group import automorphism_group, is_simple
from cyclegroups.matgrp import (
    build_pgammal2,
    build_pgl2,
    build_psl2,
    build_psl3,
    build_psl3_with_aut,
    classify_pgl2_element,
    pgl_mask,
    psl3_socle,
    psl_mask,
)
from cyclegroups.numtheory import prime_power

QS = [4, 5, 7, 8, 9, 11, 13, 16, 25, 27]


@pytest.mark.parametrize("q", QS)
def test_orders(q):
    f = prime_power(q)[1]
    pgl = q * (q * q - 1)
    assert build_pgl2(q).order == pgl
    assert build_psl2(q).order == pgl // gcd(2, q - 1)
    assert build_pgammal2(q).order == f * pgl
    assert build_psl2(q).degree == q + 1


def test_rejects_bad_q():
    for q in (3, 6, 12):
        with pytest.raises(ValueError):
            build_psl2(q)


@pytest.mark.parametrize("q", [5, 8, 9, 25])
def test_membership_masks(q):
    A = build_pgammal2(q)
    assert pgl_mask(A).sum() == build_pgl2(q).order
    G = build_pgl2(q)
    assert psl_mask(G).sum() == build_psl2(q).order


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13])
def test_pgl2_element_classes(q):
    G = build_pgl2(q)
    counts = {"identity": 0, "unipotent": 0, "split-torus": 0, "nonsplit-torus": 0}
    for i in range(G.order):
        counts[classify_pgl2_element(G, i).tag] += 1
    assert counts == {
        "identity": 1,
        "unipotent": q * q - 1,
        "split-torus": q * (q + 1) // 2 * (q - 2),
        "nonsplit-torus": q * (q - 1) // 2 * q,
    }


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
def test_torus_elements_in_psl2_by_order(q):
    # split torus: in PSL2 iff order divides (q-1)/2; nonsplit: iff order divides (q+1)/2
    G = build_pgl2(q)
    inside = psl_mask(G)
    for i in range(1, G.order):
        c = classify_pgl2_element(G, i)
        if c.tag == "split-torus":
            assert inside[i] == (((q - 1) // 2) % c.order == 0)
        elif c.tag == "nonsplit-torus":
            assert inside[i] == (((q + 1) // 2) % c.order == 0)
        else:
            assert inside[i]


def test_split_torus_literal_half_plus_one_fails():
    # the (q+1)/2 criterion for diagonal elements is wrong: PGL2(7) has a split element of order 3 in PSL2(7)
    q = 7
    G = build_pgl2(q)
    inside = psl_mask(G)
    hits = [i for i in range(1, G.order) if classify_pgl2_element(G, i).tag == "split-torus"
            and inside[i] and ((q + 1) // 2) % G.element_order(i) != 0]
    assert hits


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11, 13])
def test_mao_psl2(q):
    assert automorphism_group(build_psl2(q)).meo == q + 1


def test_top_automorphism_orders_psl2_9():
    assert automorphism_group(build_psl2(9)).top_orders(4) == [10, 8, 6, 5]


def test_psl2_25_order_12_outside_pgl2():
    A = build_pgammal2(25)
    outside = ~pgl_mask(A)
    assert (A.orders[outside] == 12).any()


def test_psl3_3_and_its_automorphisms():
    A = build_psl3_with_aut(3)
    assert A.degree == 26
    assert A.order == 11232
    assert A.order_spectrum == [1, 2, 3, 4, 6, 8, 12, 13]
    S = build_psl3(3)
    assert S.order == 5616
    assert psl3_socle(A).order == 5616
    assert automorphism_group(S).order == 11232


def test_psl3_2_is_simple_of_order_168():
    S = build_psl3(2)
    assert S.order == 168
    assert is_simple(S)
    assert automorphism_group(S).meo == 8


def test_aut_psl3_spectra_match_constructions():
    for q, spectrum in AUT_PSL3_SPECTRA.items():
        assert tuple(build_psl3_with_aut(q).order_spectrum) == spectrum
    assert build_psl3_with_aut(4).order == 241920


def test_psl2_abstract_isomorphism_witness():
    # PSL2(4) and PSL2(5) have the same order spectrum (both Alt5)
    assert build_psl2(4).order_spectrum == build_psl2(5).order_spectrum == [1, 2, 3, 5]
    assert np.array_equal(np.sort(build_psl2(4).orders), np.sort(build_psl2(5).orders))
