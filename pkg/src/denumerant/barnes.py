"""Bernoulli-Barnes numbers B_j(a) and the special zeta values built from them.

Two independent routes compute B_j(a): the multinomial sum over compositions
of j (primary) and the coefficient extraction from the product of the r
truncated generating series (cross-check).  The double derivation is the
module's defense against index-convention mistakes, so both are exported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterator, Optional

from .bernoulli import bernoulli_number
from .exact import Fr, multinomial


@dataclass(frozen=True)
class PartitionSpec:
    """A part tuple a = (a_1, ..., a_r) together with a common multiple D."""

    a: tuple[int, ...]
    D: int

    def __post_init__(self) -> None:
        if len(self.a) < 1:
            raise ValueError("need at least one part")
        if any(x < 1 for x in self.a):
            raise ValueError(f"parts must be positive: {self.a}")
        for x in self.a:
            if self.D % x != 0:
                raise ValueError(f"D={self.D} is not a multiple of part {x}")

    @classmethod
    def of(cls, *parts: int, D: Optional[int] = None) -> "PartitionSpec":
        """Build a spec; D defaults to lcm(a_1, ..., a_r)."""
        if D is None:
            D = lcm(*parts) if parts else 1
        return cls(tuple(parts), D)

    @property
    def r(self) -> int:
        return len(self.a)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.a) + f"; D={self.D})"


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of `total` into `parts` non-negative entries, lexicographic.

    Entries that are odd and >= 3 are skipped outright: their Bernoulli
    factor vanishes, so the dropped terms are all zero.
    """
    if parts == 1:
        if total <= 1 or total % 2 == 0:
            yield (total,)
        return
    for head in range(total + 1):
        if head <= 1 or head % 2 == 0:
            for rest in _compositions(total - head, parts - 1):
                yield (head,) + rest


@lru_cache(maxsize=None)
def barnes_number(j: int, spec: PartitionSpec) -> Fraction:
    """B_j(a) = sum over i_1+...+i_r=j of C(j; i_1..i_r) B_{i_1}...B_{i_r} a_1^{i_1-1}...a_r^{i_r-1}.

    Note the exponents i_k - 1: a part with i_k = 0 contributes a factor
    1/a_k, which is why B_0(a) = 1/(a_1...a_r).
    """
    if j < 0:
        raise ValueError("index must be >= 0")
    total = Fr(0)
    for comp in _compositions(j, spec.r):
        term = Fr(multinomial(j, comp))
        for i_k, a_k in zip(comp, spec.a):
            term *= bernoulli_number(i_k)
            if term == 0:
                break
            if i_k == 0:
                term /= a_k
            else:
                term *= a_k ** (i_k - 1)
        total += term
    return total


def barnes_number_via_series(j: int, spec: PartitionSpec) -> Fraction:
    """B_j(a) via j! * [z^j] of the product of (1/a_i) * sum_n B_n (a_i z)^n / n!."""
    if j < 0:
        raise ValueError("index must be >= 0")
    # Truncated series as plain coefficient lists in z, length j+1.
    prod = [Fr(0)] * (j + 1)
    prod[0] = Fr(1)
    for a_i in spec.a:
        series = [bernoulli_number(n) * a_i**n / factorial(n) / a_i for n in range(j + 1)]
        nxt = [Fr(0)] * (j + 1)
        for p, cp in enumerate(prod):
            if cp == 0:
                continue
            for q in range(j + 1 - p):
                if series[q]:
                    nxt[p + q] += cp * series[q]
        prod = nxt
    return prod[j] * factorial(j)


def zeta_special(n: int, spec: PartitionSpec) -> Fraction:
    """The zeta value at -n: (-1)^r n!/(n+r)! B_{r+n}(a), minus 1 when n = 0."""
    if n < 0:
        raise ValueError("index must be >= 0")
    r = spec.r
    value = Fr((-1) ** r) * Fr(factorial(n), factorial(n + r)) * barnes_number(r + n, spec)
    if n == 0:
        value -= 1
    return value
