"""The master linear system: exact determinants and coefficient recovery.

The system has one row per n = 0..rD-1 and one column per coefficient
d[m][v] (columns ordered m-major: column index mD + v, 1-based).  The matrix
entry at (n, (m, v)) is D^{n+m} B_{n+m+1}(v/D) / (n+m+1); the right-hand
side is assembled from the special zeta values.  Coefficients come out via
Cramer's rule: one determinant for the system, one per replaced column.

Determinants run fraction-free: each row is scaled by the lcm of its entry
denominators (the scalar is tracked and divided back out), then Bareiss
elimination works over plain big integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Optional, Sequence

from .barnes import PartitionSpec, barnes_number
from .bernoulli import bernoulli_poly
from .exact import Fr, Rational, format_rational
from .partition import QuasiPolynomial


class ZeroDeterminantError(RuntimeError):
    """Raised when a system determinant vanishes.

    A vanishing determinant here is not a bug but a finding: it would be a
    counterexample candidate for the non-vanishing conjecture the sweep
    probes, so it carries its (r, D) cell.
    """

    def __init__(self, r: int, D: int):
        self.r = r
        self.D = D
        super().__init__(
            f"determinant vanished at r={r}, D={D}: conjecture counterexample candidate"
        )


@dataclass(frozen=True)
class DetSystem:
    r: int
    D: int
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: Optional[tuple[Fraction, ...]] = None


def build_matrix(r: int, D: int) -> DetSystem:
    """The rD x rD coefficient matrix, columns ordered m-major then v."""
    if r < 1 or D < 1:
        raise ValueError("need r >= 1 and D >= 1")
    size = r * D
    rows = []
    for n in range(size):
        row = []
        for m in range(r):
            poly = bernoulli_poly(n + m + 1)
            scale = Fr(D) ** (n + m) / (n + m + 1)
            for v in range(1, D + 1):
                row.append(scale * poly.eval(Fr(v, D)))
        rows.append(tuple(row))
    return DetSystem(r, D, tuple(rows))


def build_rhs(spec: PartitionSpec) -> tuple[Fraction, ...]:
    """Right-hand side entries (-1)^(r-1) n!/(n+r)! B_{r+n}(a) + [n = 0].

    The n = 0 entry adds +1.  The opposite sign is wrong: it makes even the
    one-part system a = (1) produce d = -3 where direct counting forces
    d = 1 (pinned by a regression test).
    """
    r, D = spec.r, spec.D
    sign = Fr((-1) ** (r - 1))
    out = []
    for n in range(r * D):
        value = sign * Fr(factorial(n), factorial(n + r)) * barnes_number(r + n, spec)
        if n == 0:
            value += 1
        out.append(value)
    return tuple(out)


def fraction_det(rows: Sequence[Sequence[Rational]]) -> Fraction:
    """Exact determinant of a square rational matrix (fraction-free path)."""
    n = len(rows)
    if n == 0:
        return Fr(1)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    scale = 1
    work: list[list[int]] = []
    for row in rows:
        frs = [Fr(x) for x in row]
        g = lcm(*(x.denominator for x in frs))
        scale *= g
        work.append([int(x * g) for x in frs])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if pivot is None:
                return Fr(0)
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        pkk = work[k][k]
        for i in range(k + 1, n):
            row_i, row_k = work[i], work[k]
            mik = row_i[k]
            for j in range(k + 1, n):
                # Bareiss update: exact division by the previous pivot.
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return Fr(sign * work[n - 1][n - 1], scale)


def gauss_det(rows: Sequence[Sequence[Rational]]) -> Fraction:
    """Plain rational Gaussian elimination; slow reference for fraction_det."""
    n = len(rows)
    work = [[Fr(x) for x in row] for row in rows]
    det = Fr(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if work[i][k] != 0), None)
        if pivot is None:
            return Fr(0)
        if pivot != k:
            work[k], work[pivot] = work[pivot], work[k]
            det = -det
        det *= work[k][k]
        inv = 1 / work[k][k]
        for i in range(k + 1, n):
            if work[i][k] != 0:
                f = work[i][k] * inv
                work[i] = [a - f * b for a, b in zip(work[i], work[k])]
    return det


def determinant(system: DetSystem) -> Fraction:
    return fraction_det(system.matrix)


@lru_cache(maxsize=None)
def delta(r: int, D: int) -> Fraction:
    """The system determinant for the (r, D) cell, cached."""
    return determinant(build_matrix(r, D))


@lru_cache(maxsize=None)
def cramer_solve(spec: PartitionSpec) -> QuasiPolynomial:
    """Recover the full d-table of `spec` as ratios of determinants.

    Column mD + v (1-based) replaced by the right-hand side gives the
    numerator of d[m][v]; the unreplaced determinant is the shared
    denominator.  Raises ZeroDeterminantError if the latter vanishes.
    """
    r, D = spec.r, spec.D
    system = build_matrix(r, D)
    det = determinant(system)
    if det == 0:
        raise ZeroDeterminantError(r, D)
    rhs = build_rhs(spec)
    table = [[Fr(0)] * D for _ in range(r)]
    for m in range(r):
        for v in range(1, D + 1):
            col = m * D + v - 1
            replaced = [
                row[:col] + (rhs[i],) + row[col + 1 :]
                for i, row in enumerate(system.matrix)
            ]
            table[m][v - 1] = fraction_det(replaced) / det
    return QuasiPolynomial(spec, tuple(tuple(row) for row in table))


def transform_check(r: int, D: int) -> tuple[Fraction, Fraction]:
    """The determinant two ways: directly, and from the reflected evaluation points.

    The second form evaluates the Bernoulli polynomials at (D-v)/D instead of
    v/D and compensates with an explicit sign and power of D; the two values
    must coincide.
    """
    direct = delta(r, D)
    size = r * D
    rows = []
    for n in range(size):
        row = []
        for m in range(r):
            poly = bernoulli_poly(n + m + 1)
            for v in range(1, D + 1):
                row.append(poly.eval(Fr(D - v, D)) / (n + m + 1))
        rows.append(row)
    sign = Fr((-1) ** ((size * (size + r)) // 2))
    power = Fr(D) ** ((size * (size + r - 2)) // 2)
    reflected = sign * power * fraction_det(rows)
    return direct, reflected


def det_record(r: int, D: int) -> dict:
    """Serializable record of one determinant cell."""
    value = delta(r, D)
    return {
        "r": r,
        "D": D,
        "delta": format_rational(value),
        "nonzero": value != 0,
    }
