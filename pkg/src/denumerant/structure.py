"""Structural identities behind the non-vanishing results.

Three groups of machinery live here:

* the difference-operator apparatus: the coefficient polynomials A_{j,l}
  with x^{j-1} Delta^r S(x) = Delta(sum_l A_{j,l}(x) S(x+l)), their
  reflection symmetry, and the basis polynomials S_t whose integrals
  I_{j,t} assemble the reduced r x r determinant Delta';
* the D = 1 Hankel picture: the determinant as a checkerboard/Hankel form
  and its decomposition into a squared permutation sum;
* the 2-adic valuation argument: permutation scores, their unique
  maximizers, and the certificate that the D = 1 determinants cannot
  vanish because a single term of minimal valuation survives.

The basis polynomials carry the falling factorial in Dx, i.e.
S_t(x) = q_t(x) * (Dx)_{Dr} with q_0 = 1 and q_t = (x-r)(x-r/2)^{t-1}:
that scaling is what makes the decomposition exact (the degree-(Dr+t)
pieces sum to functions vanishing at all x = v/D) and gives the parity
vanishing of the I_{j,t} below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Sequence

from .bernoulli import bernoulli_number, bernoulli_poly, v2
from .detsolver import ZeroDeterminantError, delta, fraction_det
from .exact import Fr, RatPoly, falling_factorial, forward_diff


# ---------------------------------------------------------------------------
# difference-operator apparatus


def a_poly(r: int, j: int, ell: int) -> RatPoly:
    """A_{j,l}(x) = (-1)^(r-1) sum_{t=0}^{l} (-1)^t C(r,t) (x+l-t)^(j-1); degree j-1."""
    if not (1 <= j <= r and 0 <= ell <= r - 1):
        raise ValueError(f"need 1 <= j <= r and 0 <= ell <= r-1, got r={r} j={j} ell={ell}")
    acc = RatPoly()
    for t in range(ell + 1):
        power = RatPoly.monomial(j - 1).shift(ell - t)
        acc = acc + power * Fr((-1) ** t * comb(r, t))
    return acc * Fr((-1) ** (r - 1))


def difference_identity_check(r: int, j: int, s_poly: RatPoly) -> bool:
    """x^(j-1) Delta^r S(x) == Delta(sum_l A_{j,l}(x) S(x+l)), exactly."""
    if not 1 <= j <= r:
        raise ValueError("need 1 <= j <= r")
    iterated = s_poly
    for _ in range(r):
        iterated = forward_diff(iterated)
    lhs = RatPoly.monomial(j - 1) * iterated
    combo = RatPoly()
    for ell in range(r):
        combo = combo + a_poly(r, j, ell) * s_poly.shift(ell)
    return lhs == forward_diff(combo)


def a_symmetry_check(r: int, j: int, ell: int) -> bool:
    """A_{j,l}(x) == (-1)^(r+j) A_{j,r-1-l}(1-x), exactly."""
    lhs = a_poly(r, j, ell)
    rhs = a_poly(r, j, r - 1 - ell).substitute_linear(-1, 1) * Fr((-1) ** (r + j))
    return lhs == rhs


def s_basis_poly(r: int, D: int, t: int) -> RatPoly:
    """S_t: the falling factorial (Dx)_{Dr} times q_t, degree Dr + t.

    q_0 = 1 and q_t = (x - r)(x - r/2)^(t-1) for t >= 1; the q_t form a
    basis of polynomials of degree <= r-1 adapted to the reflection
    x -> r - x, which is where the parity vanishing of the integrals
    comes from.
    """
    if not 0 <= t <= r - 1:
        raise ValueError("need 0 <= t <= r-1")
    ff = falling_factorial(D * r, 0, D)
    if t == 0:
        return ff
    q = RatPoly((-r, 1))
    half = RatPoly((Fr(-r, 2), 1))
    for _ in range(t - 1):
        q = q * half
    return q * ff


@lru_cache(maxsize=None)
def phi_jt(r: int, D: int, j: int, t: int) -> RatPoly:
    """Phi_{j,t}(x) = sum_l A_{j,l}(x) S_t(x + l)."""
    if not (1 <= j <= r and 0 <= t <= r - 1):
        raise ValueError("need 1 <= j <= r and 0 <= t <= r-1")
    st = s_basis_poly(r, D, t)
    acc = RatPoly()
    for ell in range(r):
        acc = acc + a_poly(r, j, ell) * st.shift(ell)
    return acc


@lru_cache(maxsize=None)
def i_jt(r: int, D: int, j: int, t: int) -> Fraction:
    """I_{j,t} = integral of Phi_{j,t} over [0, 1], exact."""
    return phi_jt(r, D, j, t).integrate(0, 1)


def i_vanishing_parity(r: int, D: int, j: int, t: int) -> bool:
    """True when the reflection argument forces I_{j,t} = 0.

    Substituting x -> 1 - x maps the integral to (-1)^(t + (D+1)r + j)
    times itself, so it vanishes exactly when that exponent is odd.  For
    odd D this reduces to t + j odd.
    """
    return (t + (D + 1) * r + j) % 2 == 1


def delta_prime(r: int, D: int) -> Fraction:
    """The reduced r x r determinant det(I_{j,t}), j = 1..r, t = 0..r-1.

    For r = 1 this is the single integral I_{1,0} = (1/D) * the integral of
    (x)_D over [0, D], which is strictly positive.
    """
    rows = [[i_jt(r, D, j, t) for t in range(r)] for j in range(1, r + 1)]
    return fraction_det(rows)


def falling_factorial_integral(D: int) -> Fraction:
    """Integral of (x)_D over [0, D]; strictly positive for every D >= 1."""
    return falling_factorial(D).integrate(0, D)


# ---------------------------------------------------------------------------
# the D = 1 Hankel picture


def hankel_delta(r: int) -> Fraction:
    """(-1)^r det[ B_{i+j-1} / (i+j-1) ]; equals the (r, 1) system determinant."""
    rows = [
        [bernoulli_number(i + j - 1) / (i + j - 1) for j in range(1, r + 1)]
        for i in range(1, r + 1)
    ]
    return Fr((-1) ** r) * fraction_det(rows)


def checkerboard_matrix(xs: Sequence[Fraction], size: int) -> list[list[Fraction]]:
    """The size x size matrix with entry x_{i+j-1}, zeroed at odd index >= 3.

    xs[n-1] supplies x_n.  Keeping x_1 while zeroing the other odd positions
    is exactly the shape the Bernoulli Hankel matrix takes, since B_1 is the
    only nonzero odd Bernoulli number.
    """
    out = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            idx = i + j - 1
            row.append(Fr(xs[idx - 1]) if idx == 1 or idx % 2 == 0 else Fr(0))
        out.append(row)
    return out


def checkerboard_identity_check(k: int, xs: Sequence[Fraction]) -> bool:
    """Both checkerboard determinant identities on the given values.

    Size 2k:   det = (-1)^k * det[ x_{2(i+j-1)} ]^2
    Size 2k+1: det = (-1)^k * x_1 * det[ x_{2(i+j)} ]^2
    """
    if len(xs) < 4 * k:
        raise ValueError(f"need at least 4k = {4 * k} values")
    even_lhs = fraction_det(checkerboard_matrix(xs, 2 * k))
    even_rhs = Fr((-1) ** k) * fraction_det(
        [[Fr(xs[2 * (i + j - 1) - 1]) for j in range(1, k + 1)] for i in range(1, k + 1)]
    ) ** 2
    odd_lhs = fraction_det(checkerboard_matrix(xs, 2 * k + 1))
    odd_rhs = Fr((-1) ** k) * Fr(xs[0]) * fraction_det(
        [[Fr(xs[2 * (i + j) - 1]) for j in range(1, k + 1)] for i in range(1, k + 1)]
    ) ** 2
    return even_lhs == even_rhs and odd_lhs == odd_rhs


def hankel_perm_sum(k: int, odd: bool) -> Fraction:
    """The permutation sum inside the squared-determinant decomposition.

    Even case (r = 2k):  sum over S_k of eps(sigma) * prod_i
        B_{2(sigma(i)+i-1)} / (sigma(i)+i-1);
    odd case (r = 2k+1): same with sigma(i)+i in place of sigma(i)+i-1.
    """
    shift = 0 if odd else -1
    total = Fr(0)
    for perm in permutations(range(1, k + 1)):
        term = Fr(perm_sign(perm))
        for i, s in enumerate(perm, start=1):
            idx = s + i + shift
            term *= bernoulli_number(2 * idx) / idx
        total += term
    return total


# ---------------------------------------------------------------------------
# permutation scores and the valuation certificate


def perm_sign(perm: Sequence[int]) -> int:
    """Signature of a permutation of {1..k} given in one-line notation."""
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _v2_int(n: int) -> int:
    val = 0
    while n % 2 == 0:
        n //= 2
        val += 1
    return val


def phi_score(perm: Sequence[int]) -> int:
    """sum_j v2(j + sigma(j) - 1) over 1-based positions."""
    return sum(_v2_int(j + s - 1) for j, s in enumerate(perm, start=1))


def psi_score(perm: Sequence[int]) -> int:
    """sum_j v2(j + sigma(j)) over 1-based positions."""
    return sum(_v2_int(j + s) for j, s in enumerate(perm, start=1))


def perm_score(perm: Sequence[int], which: str) -> int:
    """The phi ("sigma") or psi ("tau") score of a permutation."""
    if which == "sigma":
        return phi_score(perm)
    if which == "tau":
        return psi_score(perm)
    raise ValueError(f"which must be 'sigma' or 'tau', got {which!r}")


@dataclass(frozen=True)
class PermScore:
    """A permutation of {1..k} together with its score."""

    k: int
    sigma: tuple[int, ...]
    score: int

    def __post_init__(self) -> None:
        if sorted(self.sigma) != list(range(1, self.k + 1)):
            raise ValueError(f"{self.sigma} is not a permutation of 1..{self.k}")

    @classmethod
    def evaluate(cls, perm: Sequence[int], which: str) -> "PermScore":
        perm = tuple(perm)
        return cls(len(perm), perm, perm_score(perm, which))


def sigma_perm(k: int) -> tuple[int, ...]:
    """The unique phi-score maximizer: reverse the tail up to the next power of two.

    With m = 2^t the least power of two >= k (t = floor(log2(k-1)) + 1 for
    k >= 2), positions m-k+1..k hold m+1-j and the head recurses on m-k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    t = (k - 1).bit_length()
    m = 1 << t
    head = sigma_perm(m - k) if m - k >= 1 else ()
    return head + tuple(m + 1 - j for j in range(m - k + 1, k + 1))


def tau_perm(k: int) -> tuple[int, ...]:
    """The unique psi-score maximizer; same tail reversal with m = 2^t - 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    t = k.bit_length()
    m = (1 << t) - 1
    head = tau_perm(m - k) if m - k >= 1 else ()
    return head + tuple(m + 1 - j for j in range(m - k + 1, k + 1))


def score_maximizers(k: int, which: str) -> list[tuple[int, ...]]:
    """All score-maximizing permutations of {1..k}, by brute force."""
    best = -1
    winners: list[tuple[int, ...]] = []
    for perm in permutations(range(1, k + 1)):
        score = perm_score(perm, which)
        if score > best:
            best = score
            winners = [perm]
        elif score == best:
            winners.append(perm)
    return winners


def _hankel_terms(k: int, odd: bool) -> list[tuple[tuple[int, ...], Fraction]]:
    shift = 0 if odd else -1
    out = []
    for perm in permutations(range(1, k + 1)):
        term = Fr(1)
        for i, s in enumerate(perm, start=1):
            idx = s + i + shift
            term *= bernoulli_number(2 * idx) / idx
        out.append((perm, term))
    return out


def valuation_certificate(r: int) -> int:
    """v2 of the (r, 1) determinant, certified finite by the minimal-term argument.

    For r = 2k the expansion of the inner Hankel determinant has one term of
    strictly minimal 2-adic valuation (at the phi-maximizer), so the sum --
    and with it the determinant -- cannot vanish; the term-level valuations
    are v2(T_sigma) = -k - phi(sigma).  Odd r works the same with the psi
    score.  Verifies the strict minimum and the determinant's own valuation
    against it, then returns v2(determinant).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    det = delta(r, 1)
    if det == 0:
        raise ZeroDeterminantError(r, 1)
    val = v2(det)
    k, odd = divmod(r, 2)
    if k == 0:  # r = 1: nothing to enumerate, v2(1/2) = -1
        return val
    extremal = tau_perm(k) if odd else sigma_perm(k)
    terms = _hankel_terms(k, odd)
    best = None
    for perm, term in terms:
        tval = v2(term)
        expected = -k - (psi_score(perm) if odd else phi_score(perm))
        if tval != expected:
            raise ArithmeticError(f"term valuation mismatch at {perm}: {tval} != {expected}")
        if perm == extremal:
            best = tval
    assert best is not None
    for perm, term in terms:
        if perm != extremal and v2(term) <= best:
            raise ArithmeticError(f"minimal term not strict: {perm} has v2 {v2(term)}")
    expected_det = 2 * (best - k) - (1 if odd else 0)
    if val != expected_det:
        raise ArithmeticError(f"determinant valuation {val} != certified {expected_det}")
    return val


# ---------------------------------------------------------------------------
# the Phi family and its vanishing constraints


@dataclass(frozen=True)
class PhiFamily:
    """Phi_j(x) = sum_i b_i B_{i+j-1}(x) / (i+j-1) for j = 1..r."""

    r: int
    D: int
    b: tuple[Fraction, ...]
    phi: tuple[RatPoly, ...]

    @classmethod
    def from_coeffs(cls, r: int, D: int, b: Sequence[Fraction]) -> "PhiFamily":
        b = tuple(Fr(x) for x in b)
        if len(b) != r * D:
            raise ValueError(f"need rD = {r * D} coefficients, got {len(b)}")
        phis = []
        for j in range(1, r + 1):
            acc = RatPoly()
            for i in range(1, r * D + 1):
                acc = acc + bernoulli_poly(i + j - 1) * (b[i - 1] / (i + j - 1))
            phis.append(acc)
        return cls(r, D, b, tuple(phis))


def constraint_matrix(r: int, D: int) -> list[list[Fraction]]:
    """The rD x rD matrix of the conditions Phi_j(v/D) = 0.

    Row (j, v) for j = 1..r and v = 0..D-1, column i = 1..rD, entry
    B_{i+j-1}(v/D) / (i+j-1); b lies in its kernel exactly when every
    Phi_j vanishes at all of 0, 1/D, ..., (D-1)/D.
    """
    rows = []
    for j in range(1, r + 1):
        for v in range(D):
            rows.append(
                [bernoulli_poly(i + j - 1).eval(Fr(v, D)) / (i + j - 1) for i in range(1, r * D + 1)]
            )
    return rows


def constraint_rank_agreement(r: int, D: int) -> bool:
    """True when the constraint matrix is nonsingular exactly where delta is nonzero."""
    return (fraction_det(constraint_matrix(r, D)) != 0) == (delta(r, D) != 0)
