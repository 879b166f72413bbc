import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclegroups.affine import lambda_auto
from cyclegroups.group import alternating, cyclic, direct_power, symmetric, wreath_product
from cyclegroups.matgrp import build_pgammal2, build_psl2
from cyclegroups.perm import Permutation, order_of
from cyclegroups.wreath import (
    WreathElement,
    component_power,
    cycle_type_meo,
    direct_power_meo,
    lambda_aut_power,
    orbit_product,
    random_wreath_element,
    wreath_meo,
    wreath_order,
    wreath_order_oracle,
)


def as_permutation(w):
    """(g, psi) acting on n blocks: (j, p) -> (psi(j), g_{psi(j)}(p))."""
    G = w.group
    d = G.degree
    imgs = [0] * (w.n * d)
    for j in range(w.n):
        t = w.top(j)
        g = G.perms[w.base[t]]
        for p in range(d):
            imgs[j * d + p] = t * d + int(g[p])
    return Permutation(imgs)


def elements(G, n):
    return st.tuples(
        st.lists(st.integers(0, G.order - 1), min_size=n, max_size=n),
        st.permutations(range(n)),
    ).map(lambda t: WreathElement(G, tuple(t[0]), Permutation(t[1])))


@settings(max_examples=150)
@given(st.data())
def test_multiplication_is_permutation_composition(data):
    G = symmetric(3)
    n = data.draw(st.integers(1, 4))
    a, b = data.draw(elements(G, n)), data.draw(elements(G, n))
    assert as_permutation(a * b) == as_permutation(a) * as_permutation(b)


@settings(max_examples=200)
@given(st.data())
def test_order_formula_matches_oracles(data):
    G = data.draw(st.sampled_from([symmetric(3), symmetric(4), cyclic(6), alternating(5)]))
    n = data.draw(st.integers(1, 4))
    w = data.draw(elements(G, n))
    assert wreath_order(w) == wreath_order_oracle(w) == order_of(as_permutation(w))


def test_random_elements_sym5_wr_2_and_sym3_wr_3():
    rng = np.random.default_rng(20240607)
    for G, n in ((symmetric(5), 2), (symmetric(3), 3)):
        for _ in range(10_000):
            w = random_wreath_element(G, n, rng)
            assert wreath_order(w) == wreath_order_oracle(w)


def test_orbit_product_and_power():
    G = symmetric(3)
    top = Permutation.from_cycles(3, [(0, 1, 2)])
    w = WreathElement(G, (1, 2, 3), top)
    # psi^-1 orbit of 0 is 0, 2, 1
    assert orbit_product(w, 0) == G.mul(G.mul(1, 3), 2)
    cube = w**3
    assert cube.top.is_identity()
    assert all(cube.base[i] == component_power(w, i) for i in range(3))


def test_bad_base_length():
    with pytest.raises(ValueError):
        WreathElement(symmetric(3), (0, 0), Permutation.identity(3))


@pytest.mark.parametrize(
    "make,n",
    [(lambda: symmetric(3), 2), (lambda: symmetric(4), 2), (lambda: symmetric(3), 3), (lambda: alternating(5), 2),
     (lambda: symmetric(3), 4), (lambda: cyclic(4), 3)],
)
def test_wreath_meo_matches_explicit_group(make, n):
    G = make()
    assert wreath_meo(G, n) == wreath_product(G, n).meo


@pytest.mark.parametrize("make,n", [(lambda: symmetric(3), 2), (lambda: alternating(5), 2), (lambda: cyclic(6), 3)])
def test_direct_power_meo_matches_explicit_group(make, n):
    G = make()
    assert direct_power_meo(G, n) == direct_power(G, n).meo


def test_cycle_type_examples():
    # a single n-cycle on top: meo is n times the meo of G
    assert cycle_type_meo([1, 2, 3], (3,)) == 9
    assert cycle_type_meo([1, 2, 3], (1, 1)) == 6
    assert wreath_meo([1], 5) == 6  # Sym5


def test_anchor_values():
    p9 = build_pgammal2(9)
    assert wreath_meo(p9, 2) == 40
    assert wreath_meo(p9, 3) == 120
    assert direct_power_meo(build_pgammal2(5), 4) == 60
    assert lambda_aut_power(build_psl2(5), 2) == 30
    assert lambda_aut_power(build_psl2(5), 3) == 60


def test_formula_agrees_with_concrete_automorphisms():
    S = build_psl2(5)
    assert lambda_auto(direct_power(S, 2)) == lambda_aut_power(S, 2)


def test_lambda_aut_power_needs_simple():
    with pytest.raises(ValueError):
        lambda_aut_power(symmetric(4), 2)
