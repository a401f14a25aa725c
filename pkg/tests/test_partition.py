"""The counting oracle and the interpolation-based coefficient recovery."""

from fractions import Fraction as Fr
from math import comb

import pytest

from denumerant.barnes import PartitionSpec
from denumerant.partition import (
    CORPUS,
    QuasiPolynomial,
    dp_count,
    qp_fit_oracle,
    residue_class,
)


def test_dp_small_sequences():
    assert dp_count(PartitionSpec.of(1, 2), 7) == [1, 1, 2, 2, 3, 3, 4, 4]
    assert dp_count(PartitionSpec.of(2), 5) == [1, 0, 1, 0, 1, 0]
    assert dp_count(PartitionSpec.of(2, 3), 8) == [1, 0, 1, 1, 1, 1, 2, 1, 2]


def test_dp_stars_and_bars():
    for r in (1, 2, 3, 4):
        counts = dp_count(PartitionSpec.of(*([1] * r)), 20)
        assert counts == [comb(n + r - 1, r - 1) for n in range(21)]


def test_dp_rejects_negative_bound():
    with pytest.raises(ValueError):
        dp_count(PartitionSpec.of(1), -1)


def test_residue_class():
    assert residue_class(0, 3) == 3
    assert residue_class(5, 3) == 2
    assert residue_class(6, 3) == 3
    assert residue_class(1, 1) == 1


def test_quasi_polynomial_shape_validation():
    spec = PartitionSpec.of(1, 2)
    with pytest.raises(ValueError):
        QuasiPolynomial(spec, ((Fr(1), Fr(1)),))  # must have r = 2 rows
    with pytest.raises(ValueError):
        QuasiPolynomial(spec, ((Fr(1),), (Fr(1),)))  # must have D = 2 columns


def test_fitted_table_for_one_two():
    """p_(1,2) is n/2 + 1 on even n and n/2 + 1/2 on odd n."""
    q = qp_fit_oracle(PartitionSpec.of(1, 2))
    assert q.coeff(0, 2) == 1 and q.coeff(1, 2) == Fr(1, 2)   # class of even n
    assert q.coeff(0, 1) == Fr(1, 2) and q.coeff(1, 1) == Fr(1, 2)
    assert [q.eval(n) for n in range(6)] == [1, 1, 2, 2, 3, 3]


def test_fit_matches_dp_on_corpus():
    for spec in CORPUS:
        counts = dp_count(spec, 3 * spec.D)
        fitted = qp_fit_oracle(spec)
        assert all(fitted.eval(n) == counts[n] for n in range(3 * spec.D + 1))


def test_eval_rejects_negative():
    q = qp_fit_oracle(PartitionSpec.of(1))
    with pytest.raises(ValueError):
        q.eval(-1)


def test_json_document():
    doc = qp_fit_oracle(PartitionSpec.of(1, 2)).to_json_dict()
    assert doc["a"] == [1, 2]
    assert doc["D"] == 2
    assert doc["d"]["0"]["2"] == "1/1"
    assert doc["d"]["1"]["1"] == "1/2"


def test_corpus_composition():
    assert len(CORPUS) == 11
    assert PartitionSpec.of(4, 6) in CORPUS
    # the corpus deliberately mixes gcd = 1 and gcd > 1 tuples
    from math import gcd

    assert any(gcd(*spec.a) > 1 for spec in CORPUS if spec.r > 1)
