import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclegroups.numtheory import (
    FactoredInteger,
    chebyshev_psi,
    check_landau_exponential,
    check_massias,
    check_rosser_schoenfeld,
    is_prime,
    landau_g,
    landau_table,
    max_lcm_over_partitions,
    nth_prime,
    partitions,
    prime_power,
    primes_up_to,
    valuation,
)

# Landau's function for n = 1..30, frozen from the partition brute force
LANDAU_FROZEN = [
    1, 2, 3, 4, 6, 6, 12, 15, 20, 30, 30, 60, 60, 84, 105,
    140, 210, 210, 420, 420, 420, 420, 840, 840, 1260, 1260, 1540, 2310, 2520, 4620,
]


def test_primes_and_indexing():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [nth_prime(k) for k in range(5)] == [2, 3, 5, 7, 11]
    assert not is_prime(1) and is_prime(97) and not is_prime(91)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(27) == (3, 3)
    assert prime_power(13) == (13, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


@given(st.integers(1, 10**6))
def test_factorization_roundtrip(n):
    f = FactoredInteger.of(n)
    assert f.value == n
    for p in f.primes():
        assert is_prime(p)
        assert n % p**f.valuation(p) == 0
        assert valuation(n, p) == f.valuation(p)


def test_partitions_count():
    # partition numbers p(1..10)
    assert [sum(1 for _ in partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_landau_matches_frozen_and_bruteforce():
    assert [landau_g(n) for n in range(1, 31)] == LANDAU_FROZEN
    for n in range(1, 26):
        assert landau_g(n) == max_lcm_over_partitions(n)


def test_landau_exponential_bound_equality_only_at_3():
    equal = []
    for n in range(1, 201):
        le, eq = check_landau_exponential(n)
        assert le
        if eq:
            equal.append(n)
    assert equal == [3]


def test_landau_exponential_is_exact():
    # g(n)^3 <= 3^n decided in integers
    for n in range(1, 60):
        assert check_landau_exponential(n) == (landau_g(n) ** 3 <= 3**n, landau_g(n) ** 3 == 3**n)


def test_analytic_bounds():
    assert all(check_massias(n) for n in range(2, 201))
    assert all(check_rosser_schoenfeld(n) for n in range(1, 1001))


def test_chebyshev_psi_is_log_lcm():
    for n in (1, 2, 10, 30):
        f, psi = chebyshev_psi(n)
        assert f.value == math.lcm(*range(1, n + 1))
        assert psi == pytest.approx(math.log(f.value))


def test_landau_table_rows():
    rows = landau_table(12)
    assert [r["g"] for r in rows] == LANDAU_FROZEN[:12]
    assert rows[2]["exp3_margin"] == pytest.approx(0.0, abs=1e-12)
    assert all(r["rosser_schoenfeld_margin"] > 0 for r in rows)
