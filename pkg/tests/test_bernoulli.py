"""Bernoulli numbers, polynomials, and 2-adic facts."""

import threading
from fractions import Fraction as Fr

import pytest

from denumerant.bernoulli import (
    MINUS_INFINITY,
    bernoulli_number,
    bernoulli_poly,
    staudt_clausen_denominator,
    v2,
)
from denumerant.exact import RatPoly

KNOWN = {
    0: Fr(1),
    1: Fr(-1, 2),
    2: Fr(1, 6),
    4: Fr(-1, 30),
    6: Fr(1, 42),
    8: Fr(-1, 30),
    10: Fr(5, 66),
    12: Fr(-691, 2730),
}


def test_number_table():
    for n, value in KNOWN.items():
        assert bernoulli_number(n) == value


def test_odd_numbers_vanish():
    assert all(bernoulli_number(n) == 0 for n in range(3, 50, 2))


def test_index_bounds():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    with pytest.raises(ValueError):
        bernoulli_poly(-1)


def test_poly_is_monic_of_degree_n():
    for n in range(12):
        p = bernoulli_poly(n)
        assert p.degree == n
        assert p.coeffs[-1] == 1


def test_poly_endpoints():
    """B_n(0) = B_n always; B_n(1) = B_n for n != 1 and B_1(1) = +1/2."""
    for n in range(15):
        assert bernoulli_poly(n).eval(0) == bernoulli_number(n)
    assert bernoulli_poly(1).eval(1) == Fr(1, 2)
    for n in range(2, 15):
        assert bernoulli_poly(n).eval(1) == bernoulli_number(n)


def test_difference_identity():
    # B_n(x+1) - B_n(x) = n x^(n-1)
    for n in range(1, 20):
        p = bernoulli_poly(n)
        assert p.shift(1) - p == RatPoly.monomial(n - 1, n)


def test_reflection_identity():
    for n in range(20):
        p = bernoulli_poly(n)
        assert p.substitute_linear(-1, 1) == p * Fr((-1) ** n)


def test_unit_integral_identity():
    # integral of B_n over [x, x+1] is x^n, here at a few awkward points
    for n in range(1, 15):
        p = bernoulli_poly(n)
        for x in (Fr(0), Fr(1, 3), Fr(-7, 5), Fr(12)):
            assert p.integrate(x, x + 1) == x**n


def test_specific_poly():
    assert bernoulli_poly(2) == RatPoly((Fr(1, 6), -1, 1))
    assert bernoulli_poly(3).eval(Fr(1, 2)) == 0


def test_v2():
    assert v2(0) is MINUS_INFINITY
    assert MINUS_INFINITY < -(10**9)
    assert v2(12) == 2
    assert v2(Fr(3, 8)) == -3
    assert v2(Fr(-4, 7)) == 2
    assert all(v2(bernoulli_number(2 * n)) == -1 for n in range(1, 30))


def test_staudt_clausen():
    for n in range(2, 40, 2):
        assert bernoulli_number(n).denominator == staudt_clausen_denominator(n)
    assert staudt_clausen_denominator(2) == 6
    assert staudt_clausen_denominator(12) == 2730
    with pytest.raises(ValueError):
        staudt_clausen_denominator(3)
    with pytest.raises(ValueError):
        staudt_clausen_denominator(0)


def test_cache_is_thread_safe():
    """Concurrent extensions must agree; snapshots mean readers never see a torn table."""
    results = []

    def worker():
        results.append(bernoulli_number(150))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1
    assert results[0] == bernoulli_number(150)
