"""Ground-truth partition counting and the quasi-polynomial coefficient model.

`dp_count` is the oracle everything else is judged against: a coin-style
dynamic program that counts solutions of a_1 x_1 + ... + a_r x_r = n in
non-negative integers, exactly, with big integers.  `qp_fit_oracle` recovers
the quasi-polynomial coefficients d[m][v] from those counts by exact
interpolation, independently of any determinant machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .barnes import PartitionSpec
from .exact import Fr, Rational


def dp_count(spec: PartitionSpec, n_max: int) -> list[int]:
    """p_a(0), p_a(1), ..., p_a(n_max) by one forward pass per part."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    counts = [0] * (n_max + 1)
    counts[0] = 1
    for part in spec.a:
        for s in range(part, n_max + 1):
            counts[s] += counts[s - part]
    return counts


def residue_class(n: int, D: int) -> int:
    """The representative v in {1..D} with v congruent to n mod D (v = D when D | n)."""
    v = n % D
    return D if v == 0 else v


@dataclass(frozen=True)
class QuasiPolynomial:
    """Coefficient table d[m][v], 0 <= m <= r-1, 1 <= v <= D.

    Evaluation picks the column of n's residue class and sums d[m][v] * n^m.
    For a counting function every value is a non-negative integer, even
    though the coefficients themselves are rationals.
    """

    spec: PartitionSpec
    d: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.d) != self.spec.r:
            raise ValueError("coefficient table must have r rows")
        if any(len(row) != self.spec.D for row in self.d):
            raise ValueError("coefficient table must have D columns per row")

    def coeff(self, m: int, v: int) -> Fraction:
        """d_{a,m}(v) with 0 <= m <= r-1 and 1 <= v <= D."""
        return self.d[m][v - 1]

    def eval(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be >= 0")
        v = residue_class(n, self.spec.D)
        acc = Fr(0)
        power = 1
        for m in range(self.spec.r):
            acc += self.d[m][v - 1] * power
            power *= n
        return acc

    def to_json_dict(self) -> dict:
        """JSON-ready document; rationals as "num/den", keys as strings."""
        from .exact import format_rational

        return {
            "a": list(self.spec.a),
            "D": self.spec.D,
            "d": {
                str(m): {
                    str(v): format_rational(self.d[m][v - 1])
                    for v in range(1, self.spec.D + 1)
                }
                for m in range(self.spec.r)
            },
        }


def _solve_linear(matrix: Sequence[Sequence[Rational]], rhs: Sequence[Rational]) -> list[Fraction]:
    """Solve a small nonsingular rational system by Gaussian elimination."""
    n = len(matrix)
    aug = [[Fr(x) for x in row] + [Fr(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise ValueError("singular interpolation system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def qp_fit_oracle(spec: PartitionSpec) -> QuasiPolynomial:
    """Recover the d-table from dp_count by exact interpolation.

    For each residue class v the counts at n = v, v+D, ..., v+(r-1)D pin the
    r polynomial coefficients of that class (a Vandermonde system with
    distinct nodes).  The result is checked against dp_count on 0..2rD
    before it is returned.
    """
    r, D = spec.r, spec.D
    counts = dp_count(spec, 2 * r * D)
    columns: list[list[Fraction]] = []
    for v in range(1, D + 1):
        nodes = [v + k * D for k in range(r)]
        vander = [[Fr(n) ** m for m in range(r)] for n in nodes]
        columns.append(_solve_linear(vander, [Fr(counts[n]) for n in nodes]))
    table = tuple(tuple(columns[v - 1][m] for v in range(1, D + 1)) for m in range(r))
    fitted = QuasiPolynomial(spec, table)
    for n in range(2 * r * D + 1):
        if fitted.eval(n) != counts[n]:
            raise ArithmeticError(
                f"interpolated table fails to reproduce counts at n={n} for {spec}"
            )
    return fitted


#: Fixed corpus of specs used by the oracle-equivalence checks: small enough
#: for desk-scale exactness, varied in gcd structure.
CORPUS: tuple[PartitionSpec, ...] = (
    PartitionSpec.of(1),
    PartitionSpec.of(2),
    PartitionSpec.of(3),
    PartitionSpec.of(1, 1),
    PartitionSpec.of(1, 2),
    PartitionSpec.of(2, 3),
    PartitionSpec.of(1, 1, 1),
    PartitionSpec.of(1, 2, 3),
    PartitionSpec.of(2, 3, 4),
    PartitionSpec.of(4, 6),
    PartitionSpec.of(1, 2, 3, 4),
)
