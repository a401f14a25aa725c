"""Line-oriented verification suites.

Each suite re-derives a family of identities in exact arithmetic and
reports one record per checked statement (PASS/FAIL plus a witness).  The
CLI's `verify` command renders these; the test suite asserts on them.  All
randomness is seeded, so suites are deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Callable, Iterable

from . import barnes, bernoulli, detsolver, partition, structure
from .exact import Fr, RatPoly


@dataclass(frozen=True)
class CheckRecord:
    suite: str
    name: str
    passed: bool
    witness: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite}:{self.name} — {self.witness}"


def _random_rational(rng: random.Random, span: int = 20) -> Fraction:
    return Fr(rng.randint(-span, span), rng.randint(1, 12))


def _random_poly(rng: random.Random, max_degree: int) -> RatPoly:
    degree = rng.randint(0, max_degree)
    return RatPoly([_random_rational(rng, 9) for _ in range(degree + 1)])


def suite_bernoulli() -> list[CheckRecord]:
    rng = random.Random(0xB0B)
    records: list[CheckRecord] = []

    def rec(name: str, passed: bool, witness: str) -> None:
        records.append(CheckRecord("bernoulli", name, passed, witness))

    bad = None
    for n in range(1, 41):
        poly = bernoulli.bernoulli_poly(n)
        for _ in range(20):
            x = _random_rational(rng)
            if poly.integrate(x, x + 1) != x**n:
                bad = (n, x)
                break
        if bad:
            break
    rec(
        "unit-integral identity",
        bad is None,
        "integral of B_n over [x, x+1] equals x^n, n <= 40, 20 random x each"
        if bad is None
        else f"fails at n={bad[0]}, x={bad[1]}",
    )

    bad = next(
        (
            n
            for n in range(1, 41)
            if bernoulli.bernoulli_poly(n).shift(1) - bernoulli.bernoulli_poly(n)
            != RatPoly.monomial(n - 1, n)
        ),
        None,
    )
    rec(
        "difference identity",
        bad is None,
        "B_n(x+1) - B_n(x) = n x^(n-1) as polynomials, n <= 40" if bad is None else f"fails at n={bad}",
    )

    bad = next(
        (
            n
            for n in range(41)
            if bernoulli.bernoulli_poly(n).substitute_linear(-1, 1)
            != bernoulli.bernoulli_poly(n) * Fr((-1) ** n)
        ),
        None,
    )
    rec(
        "reflection identity",
        bad is None,
        "B_n(1-x) = (-1)^n B_n(x) as polynomials, n <= 40" if bad is None else f"fails at n={bad}",
    )

    ok = all(
        bernoulli.bernoulli_poly(n).eval(0) == bernoulli.bernoulli_number(n) for n in range(41)
    )
    ok = ok and all(
        bernoulli.bernoulli_poly(n).eval(1) == bernoulli.bernoulli_number(n)
        for n in range(2, 41)
    )
    ok = ok and bernoulli.bernoulli_poly(1).eval(1) == Fr(1, 2)
    rec("endpoint values", ok, "B_n(0) = B_n; B_n(1) = B_n for n >= 2; B_1(1) = 1/2")

    known = {0: Fr(1), 1: Fr(-1, 2), 2: Fr(1, 6), 4: Fr(-1, 30), 12: Fr(-691, 2730)}
    ok = all(bernoulli.bernoulli_number(n) == q for n, q in known.items())
    ok = ok and all(bernoulli.bernoulli_number(n) == 0 for n in range(3, 50, 2))
    rec("table values", ok, "B_0..B_12 spot values; odd B_n = 0 for 3 <= n <= 49")

    bad = next(
        (n for n in range(1, 51) if bernoulli.v2(bernoulli.bernoulli_number(2 * n)) != -1),
        None,
    )
    rec(
        "2-adic valuation",
        bad is None,
        "v2(B_{2n}) = -1 for n <= 50" if bad is None else f"fails at 2n={2 * bad}",
    )

    bad = next(
        (
            n
            for n in range(1, 26)
            if bernoulli.bernoulli_number(2 * n).denominator
            != bernoulli.staudt_clausen_denominator(2 * n)
        ),
        None,
    )
    rec(
        "von Staudt-Clausen denominators",
        bad is None,
        "denominator(B_{2n}) = product of primes p with (p-1) | 2n, n <= 25"
        if bad is None
        else f"fails at 2n={2 * bad}",
    )
    return records


def suite_barnes() -> list[CheckRecord]:
    rng = random.Random(0xBA2)
    records: list[CheckRecord] = []

    def rec(name: str, passed: bool, witness: str) -> None:
        records.append(CheckRecord("barnes", name, passed, witness))

    bad = None
    for spec in partition.CORPUS:
        for j in range(21):
            if barnes.barnes_number(j, spec) != barnes.barnes_number_via_series(j, spec):
                bad = (spec, j)
                break
        if bad:
            break
    rec(
        "two derivations agree",
        bad is None,
        "multinomial sum = series coefficient, j <= 20, all corpus specs"
        if bad is None
        else f"fails at {bad[0]}, j={bad[1]}",
    )

    ok = True
    for parts in [(1, 2, 3), (2, 3, 4), (1, 2, 3, 4)]:
        base = barnes.PartitionSpec.of(*parts)
        for _ in range(4):
            shuffled = list(parts)
            rng.shuffle(shuffled)
            other = barnes.PartitionSpec.of(*shuffled, D=base.D)
            ok = ok and all(
                barnes.barnes_number(j, base) == barnes.barnes_number(j, other)
                for j in range(13)
            )
    rec("permutation symmetry", ok, "B_j(a) invariant under reordering parts, j <= 12")

    ok = all(
        barnes.barnes_number(j, barnes.PartitionSpec.of(a))
        == bernoulli.bernoulli_number(j) * Fr(a) ** (j - 1)
        for a in range(1, 5)
        for j in range(16)
    )
    rec("single-part collapse", ok, "B_j((a)) = B_j a^(j-1), a <= 4, j <= 15")

    ok = all(
        barnes.barnes_number(0, spec) == Fr(1, _product(spec.a)) for spec in partition.CORPUS
    )
    rec("zeroth value", ok, "B_0(a) = 1/(a_1...a_r) on the corpus")
    return records


def _product(xs: Iterable[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def suite_partition() -> list[CheckRecord]:
    records: list[CheckRecord] = []

    def rec(name: str, passed: bool, witness: str) -> None:
        records.append(CheckRecord("partition", name, passed, witness))

    bad = None
    for spec in partition.CORPUS:
        counts = partition.dp_count(spec, 5 * spec.D)
        fitted = partition.qp_fit_oracle(spec)
        for n in range(5 * spec.D + 1):
            if fitted.eval(n) != counts[n]:
                bad = (spec, n)
                break
        if bad:
            break
    rec(
        "interpolation reproduces counts",
        bad is None,
        "fitted table matches the DP on 0..5D for every corpus spec"
        if bad is None
        else f"fails at {bad[0]}, n={bad[1]}",
    )

    ok = all(
        partition.dp_count(barnes.PartitionSpec.of(*([1] * r)), 30)[n] == comb(n + r - 1, r - 1)
        for r in range(1, 6)
        for n in range(31)
    )
    rec("stars and bars", ok, "p_(1,..,1)(n) = C(n+r-1, r-1), r <= 5, n <= 30")

    # With g = gcd(a), counts vanish off multiples of g and p_a(n) = p_{a/g}(n/g)
    # on them, so the top coefficient is g/((r-1)! a_1...a_r) on classes divisible
    # by g and 0 elsewhere; g = 1 recovers the familiar class-independent value.
    ok = True
    for spec in partition.CORPUS:
        fitted = partition.qp_fit_oracle(spec)
        g = gcd(*spec.a)
        lead = Fr(g, factorial(spec.r - 1) * _product(spec.a))
        ok = ok and all(
            fitted.coeff(spec.r - 1, v) == (lead if v % g == 0 else 0)
            for v in range(1, spec.D + 1)
        )
    rec(
        "leading coefficient",
        ok,
        "d[r-1][v] = gcd(a)/((r-1)! a_1...a_r) on classes hit by gcd(a), 0 off them",
    )
    return records


def suite_detsolver() -> list[CheckRecord]:
    rng = random.Random(0xDE7)
    records: list[CheckRecord] = []

    def rec(name: str, passed: bool, witness: str) -> None:
        records.append(CheckRecord("detsolver", name, passed, witness))

    bad = None
    for spec in partition.CORPUS:
        solved = detsolver.cramer_solve(spec)
        fitted = partition.qp_fit_oracle(spec)
        if solved.d != fitted.d:
            bad = (spec, "coefficient tables differ")
            break
        counts = partition.dp_count(spec, 5 * spec.D)
        for n in range(5 * spec.D + 1):
            if solved.eval(n) != counts[n]:
                bad = (spec, f"evaluation differs at n={n}")
                break
        if bad:
            break
    rec(
        "coefficient recovery equals oracle",
        bad is None,
        "Cramer table = interpolation table and both count exactly, 0 <= n <= 5D"
        if bad is None
        else f"{bad[0]}: {bad[1]}",
    )

    goldens = {
        (1, 1): Fr(1, 2),
        (2, 1): Fr(-1, 144),
        (3, 1): Fr(-1, 28800),
        (4, 1): Fr(6241, 91445760000),
        (2, 2): Fr(-1, 57600),
        (2, 3): Fr(-47, 1714608),
        (3, 2): Fr(167, 32006016000),
    }
    bad = next(((r, D) for (r, D), q in goldens.items() if detsolver.delta(r, D) != q), None)
    rec(
        "determinant goldens",
        bad is None,
        "seven hand/oracle-frozen determinant values" if bad is None else f"fails at {bad}",
    )

    ok = True
    for _ in range(5):
        size = rng.randint(3, 6)
        rows = [[_random_rational(rng, 9) for _ in range(size)] for _ in range(size)]
        base = detsolver.fraction_det(rows)
        ok = ok and base == detsolver.gauss_det(rows)
        i, j = rng.sample(range(size), 2)
        swapped = list(rows)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        ok = ok and detsolver.fraction_det(swapped) == -base
        dup = list(rows)
        dup[i] = dup[j]
        ok = ok and detsolver.fraction_det(dup) == 0
        c = _random_rational(rng, 5)
        scaled = list(rows)
        scaled[i] = [c * x for x in rows[i]]
        ok = ok and detsolver.fraction_det(scaled) == c * base
    rec(
        "determinant algebra",
        ok,
        "fraction-free = reference; row swap flips sign; duplicate row kills; row scaling",
    )

    bad = next(
        (
            (r, D)
            for r in range(1, 4)
            for D in range(1, 5)
            if detsolver.transform_check(r, D)[0] != detsolver.transform_check(r, D)[1]
        ),
        None,
    )
    rec(
        "reflected evaluation form",
        bad is None,
        "direct and reflected determinant forms agree, r <= 3, D <= 4"
        if bad is None
        else f"fails at {bad}",
    )

    bad = next((D for D in range(1, 13) if detsolver.delta(1, D) == 0), None)
    rec(
        "one-part column nonzero",
        bad is None,
        "delta(1, D) != 0 for D <= 12" if bad is None else f"zero at D={bad}",
    )
    return records


def suite_structure() -> list[CheckRecord]:
    rng = random.Random(0x57C)
    records: list[CheckRecord] = []

    def rec(name: str, passed: bool, witness: str) -> None:
        records.append(CheckRecord("structure", name, passed, witness))

    bad = None
    for r in range(1, 6):
        for j in range(1, r + 1):
            for _ in range(5):
                s_poly = _random_poly(rng, 6)
                if not structure.difference_identity_check(r, j, s_poly):
                    bad = (r, j, s_poly)
                    break
    rec(
        "difference operator identity",
        bad is None,
        "x^(j-1) Delta^r S = Delta(sum A_{j,l} S(x+l)), r <= 5, 5 random S each"
        if bad is None
        else f"fails at r={bad[0]}, j={bad[1]}",
    )

    ok = all(
        structure.a_symmetry_check(r, j, ell)
        for r in range(1, 6)
        for j in range(1, r + 1)
        for ell in range(r)
    )
    rec("coefficient reflection symmetry", ok, "A_{j,l}(x) = (-1)^(r+j) A_{j,r-1-l}(1-x), r <= 5")

    ok = all(
        structure.a_poly(r, j, 0) == RatPoly.monomial(j - 1, (-1) ** (r - 1))
        and structure.a_poly(r, j, r - 1).shift(1) == RatPoly.monomial(j - 1)
        for r in range(1, 6)
        for j in range(1, r + 1)
    )
    rec("coefficient endpoints", ok, "A_{j,0} = (-1)^(r-1) x^(j-1) and A_{j,r-1}(x+1) = x^(j-1)")

    violations = []
    missing_nonzero = []
    for r in range(1, 5):
        for D in range(1, 5):
            nonexcluded_nonzero = r == 1  # no t >= 1 cells exist for r = 1
            for j in range(1, r + 1):
                for t in range(1, r):
                    value = structure.i_jt(r, D, j, t)
                    if structure.i_vanishing_parity(r, D, j, t):
                        if value != 0:
                            violations.append((r, D, j, t, value))
                    elif value != 0:
                        nonexcluded_nonzero = True
            if not nonexcluded_nonzero:
                missing_nonzero.append((r, D))
    rec(
        "integral parity vanishing",
        not violations and not missing_nonzero,
        "I_{j,t} = 0 exactly when t+(D+1)r+j is odd, r <= 4, D <= 4; nonzero cells present"
        if not violations and not missing_nonzero
        else f"violations={violations[:3]} missing_nonzero={missing_nonzero}",
    )

    bad = next(
        (
            (r, D)
            for r in range(1, 4)
            for D in range(1, 5)
            if (detsolver.delta(r, D) != 0) != (structure.delta_prime(r, D) != 0)
        ),
        None,
    )
    rec(
        "reduced determinant equivalence",
        bad is None,
        "delta != 0 iff delta' != 0, cell-by-cell for r <= 3, D <= 4"
        if bad is None
        else f"fails at {bad}",
    )

    bad = next((D for D in range(1, 16) if structure.falling_factorial_integral(D) <= 0), None)
    rec(
        "factorial integral positivity",
        bad is None,
        "integral of (x)_D over [0, D] > 0 for D <= 15" if bad is None else f"fails at D={bad}",
    )

    bad = next((r for r in range(1, 7) if structure.hankel_delta(r) != detsolver.delta(r, 1)), None)
    rec(
        "hankel form agreement",
        bad is None,
        "(-1)^r det[B_{i+j-1}/(i+j-1)] = delta(r, 1) for r <= 6" if bad is None else f"fails at r={bad}",
    )

    ok = all(
        structure.checkerboard_identity_check(
            k, [_random_rational(rng, 9) for _ in range(4 * k)]
        )
        for k in range(1, 4)
        for _ in range(3)
    )
    rec("checkerboard identities", ok, "both squared-minor identities, k <= 3, random rationals")

    factors = []
    ok = True
    for k in range(1, 4):
        even_sum = structure.hankel_perm_sum(k, odd=False)
        true_even = detsolver.delta(2 * k, 1)
        ok = ok and true_even == Fr((-1) ** k) * (even_sum / 2**k) ** 2
        naive_even = Fr((-1) ** k, 2**k) * even_sum**2
        factors.append(f"2k={2 * k}: {naive_even / true_even}")
        odd_sum = structure.hankel_perm_sum(k, odd=True)
        true_odd = detsolver.delta(2 * k + 1, 1)
        ok = ok and true_odd == Fr((-1) ** k, 2) * (odd_sum / 2**k) ** 2
        naive_odd = Fr((-1) ** (k + 1), 2 ** (k + 1)) * odd_sum**2
        factors.append(f"2k+1={2 * k + 1}: {naive_odd / true_odd}")
    rec(
        "squared-sum decomposition",
        ok,
        "delta(2k,1) = (-1)^k (S/2^k)^2 and delta(2k+1,1) = (-1)^k/2 (S/2^k)^2, k <= 3; "
        "naive-normalization factors: " + ", ".join(factors),
    )

    ok = True
    witness_parts = []
    for k in range(1, 7):
        for which, builder in (("sigma", structure.sigma_perm), ("tau", structure.tau_perm)):
            winners = structure.score_maximizers(k, which)
            ok = ok and len(winners) == 1 and winners[0] == builder(k)
        witness_parts.append(str(k))
    rec(
        "unique score maximizers",
        ok,
        "brute force over S_k confirms the recursive maximizers, k in {" + ",".join(witness_parts) + "}",
    )

    ok = True
    witness = []
    try:
        for r in range(1, 8):
            witness.append(f"v2(delta({r},1))={structure.valuation_certificate(r)}")
    except (ArithmeticError, detsolver.ZeroDeterminantError) as exc:
        ok = False
        witness.append(str(exc))
    ok = ok and structure.valuation_certificate(1) == -1 and structure.valuation_certificate(2) == -4
    rec("valuation certificate", ok, "; ".join(witness))

    bad = next(
        (
            (r, D)
            for r in range(1, 4)
            for D in range(1, 5)
            if not structure.constraint_rank_agreement(r, D)
        ),
        None,
    )
    rec(
        "vanishing-constraint rank",
        bad is None,
        "constraint matrix nonsingular exactly where delta != 0, r <= 3, D <= 4"
        if bad is None
        else f"fails at {bad}",
    )

    ok = True
    for r, D in [(1, 2), (2, 2), (3, 2), (2, 3)]:
        b = [_random_rational(rng, 9) for _ in range(r * D)]
        family = structure.PhiFamily.from_coeffs(r, D, b)
        for j in range(1, r + 1):
            ok = ok and family.phi[j - 1].degree <= r * D + j - 1
        unit = structure.PhiFamily.from_coeffs(r, D, [1] + [0] * (r * D - 1))
        ok = ok and unit.phi[0] == bernoulli.bernoulli_poly(1)
    rec("phi family shape", ok, "deg Phi_j <= rD + j - 1; unit coefficients pick out B_j(x)/j")
    return records


SUITES: dict[str, Callable[[], list[CheckRecord]]] = {
    "bernoulli": suite_bernoulli,
    "barnes": suite_barnes,
    "partition": suite_partition,
    "detsolver": suite_detsolver,
    "structure": suite_structure,
}


def run_suite(name: str) -> list[CheckRecord]:
    """Run one named suite, or all of them for name == "all"."""
    if name == "all":
        out: list[CheckRecord] = []
        for suite_name in SUITES:
            out.extend(SUITES[suite_name]())
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
