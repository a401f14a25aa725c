"""Bernoulli numbers, Bernoulli polynomials, and 2-adic valuation facts.

Numbers use the B_1 = -1/2 convention and come from the recurrence
sum_{k=0}^{n} C(n+1, k) B_k = 0; polynomials from
B_n(x) = sum_k C(n, k) B_{n-k} x^k.  A single shared cache grows both
tables; extensions swap in complete immutable snapshots, so concurrent
readers never observe a partially built table.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .exact import Fr, RatPoly, Rational

#: Distinguished value of v2(0); compares below every integer.
MINUS_INFINITY = float("-inf")


class BernoulliCache:
    """Growable tables of B_n and B_n(x) behind a snapshot-on-extend lock."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._numbers: tuple[Fraction, ...] = (Fr(1),)
        self._polys: tuple[RatPoly, ...] = (RatPoly.const(1),)

    def number(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        snap = self._numbers
        if n < len(snap):
            return snap[n]
        with self._lock:
            table = list(self._numbers)
            while len(table) <= n:
                m = len(table)
                # sum_{k=0}^{m} C(m+1, k) B_k = 0, solved for B_m.
                acc = Fr(0)
                for k in range(m):
                    acc += comb(m + 1, k) * table[k]
                table.append(-acc / (m + 1))
            self._numbers = tuple(table)
        return self._numbers[n]

    def poly(self, n: int) -> RatPoly:
        if n < 0:
            raise ValueError("Bernoulli index must be >= 0")
        snap = self._polys
        if n < len(snap):
            return snap[n]
        self.number(n)  # make sure the number table is long enough
        with self._lock:
            table = list(self._polys)
            nums = self._numbers
            while len(table) <= n:
                m = len(table)
                table.append(RatPoly([comb(m, k) * nums[m - k] for k in range(m + 1)]))
            self._polys = tuple(table)
        return self._polys[n]


_CACHE = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    """Exact B_n (B_0=1, B_1=-1/2, B_2=1/6, ..., 0 for odd n >= 3)."""
    return _CACHE.number(n)


def bernoulli_poly(n: int) -> RatPoly:
    """Exact B_n(x), monic of degree n."""
    return _CACHE.poly(n)


def v2(q: Rational | int):
    """2-adic valuation of a rational; v2(0) is MINUS_INFINITY."""
    q = Fr(q)
    if q == 0:
        return MINUS_INFINITY
    num = abs(q.numerator)
    den = q.denominator
    val = 0
    while num % 2 == 0:
        num //= 2
        val += 1
    while den % 2 == 0:
        den //= 2
        val -= 1
    return val


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def staudt_clausen_denominator(n: int) -> int:
    """Denominator of B_n for even n >= 2: the product of primes p with (p-1) | n."""
    if n < 2 or n % 2 != 0:
        raise ValueError("von Staudt-Clausen applies to even n >= 2")
    out = 1
    for d in range(1, n + 1):
        if n % d == 0 and _is_prime(d + 1):
            out *= d + 1
    return out
