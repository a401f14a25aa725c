"""Exact scalars and dense univariate polynomial arithmetic.

Every quantity in this package is an exact rational; the scalar type is
``fractions.Fraction``, which already maintains the two invariants we rely
on everywhere (lowest terms, positive denominator).  This module fixes the
remaining conventions: polynomials are dense coefficient sequences in
ascending power order, the zero polynomial is the empty sequence, and its
degree is -1.  Floats are rejected at the boundary so they can never leak
into a computation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

Fr = Fraction

Rational = Fraction
RationalLike = Union[int, Fraction]


def _as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int/Fraction to Fraction; anything else is an error."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fr(value)
    raise TypeError(f"exact arithmetic only: got {type(value).__name__}")


def rat(num: int, den: int = 1) -> Fraction:
    """Canonical rational num/den; zero denominators are rejected."""
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fr(num, den)


def format_rational(q: RationalLike) -> str:
    """Serialize as "num/den", always reduced, e.g. Fr(-1,144) -> "-1/144"."""
    q = _as_fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (or a bare integer, read as n/1)."""
    return Fr(text.strip())


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(j: int, parts: Sequence[int]) -> int:
    """j! / (i_1! ... i_r!) for parts summing to j."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be non-negative")
    if sum(parts) != j:
        raise ValueError(f"multinomial parts {parts!r} do not sum to {j}")
    out = factorial(j)
    for p in parts:
        out //= factorial(p)
    return out


class RatPoly:
    """Dense univariate polynomial with Fraction coefficients.

    Immutable; ``coeffs[k]`` is the coefficient of x^k and the last entry is
    nonzero (the zero polynomial is the empty tuple, degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def const(cls, c: RationalLike) -> "RatPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, coeff: RationalLike = 1) -> "RatPoly":
        """coeff * x^power."""
        if power < 0:
            raise ValueError("power must be >= 0")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "RatPoly") -> "RatPoly":
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["RatPoly", RationalLike]) -> "RatPoly":
        if isinstance(other, RatPoly):
            if not self.coeffs or not other.coeffs:
                return RatPoly()
            out = [Fr(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RatPoly(out)
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return RatPoly(tuple(c * q for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def eval(self, x: RationalLike) -> Fraction:
        """Exact value at x (Horner)."""
        x = _as_fraction(x)
        acc = Fr(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def antiderivative(self) -> "RatPoly":
        """The antiderivative with zero constant term."""
        return RatPoly((Fr(0),) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))

    def integrate(self, lo: RationalLike, hi: RationalLike) -> Fraction:
        """Exact definite integral over [lo, hi]."""
        anti = self.antiderivative()
        return anti.eval(hi) - anti.eval(lo)

    def substitute_linear(self, scale: RationalLike, shift: RationalLike) -> "RatPoly":
        """The polynomial p(scale*x + shift), composed exactly."""
        inner = RatPoly((shift, scale))
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + RatPoly.const(c)
        return acc

    def shift(self, step: RationalLike = 1) -> "RatPoly":
        """p(x + step)."""
        return self.substitute_linear(1, step)


def forward_diff(p: RatPoly, step: RationalLike = 1) -> RatPoly:
    """The forward difference p(x + step) - p(x).

    Drops the degree by exactly one for nonconstant p and annihilates
    constants.
    """
    return p.shift(step) - p


def falling_factorial(D: int, shift: RationalLike = 0, scale: RationalLike = 1) -> RatPoly:
    """(scale*x + shift)(scale*x + shift - 1)...(scale*x + shift - D + 1).

    With the defaults this is the falling factorial (x)_D, degree D.
    """
    if D < 1:
        raise ValueError("falling_factorial needs D >= 1")
    shift = _as_fraction(shift)
    out = RatPoly.const(1)
    for i in range(D):
        out = out * RatPoly((shift - i, scale))
    return out
