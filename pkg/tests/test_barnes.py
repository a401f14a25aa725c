"""Bernoulli-Barnes numbers and the special zeta values."""

from fractions import Fraction as Fr
from itertools import permutations

import pytest

from denumerant.barnes import (
    PartitionSpec,
    barnes_number,
    barnes_number_via_series,
    zeta_special,
)
from denumerant.bernoulli import bernoulli_number


def test_spec_defaults_to_lcm():
    assert PartitionSpec.of(2, 3).D == 6
    assert PartitionSpec.of(4, 6).D == 12
    assert PartitionSpec.of(1).D == 1
    assert PartitionSpec.of(2, 3, D=12).D == 12


def test_spec_validation():
    with pytest.raises(ValueError):
        PartitionSpec.of(2, 3, D=4)  # 4 is not a multiple of 3
    with pytest.raises(ValueError):
        PartitionSpec.of(0, 2)
    with pytest.raises(ValueError):
        PartitionSpec((), 1)
    assert str(PartitionSpec.of(1, 2)) == "(1,2; D=2)"


def test_zeroth_value():
    # B_0(a) = 1/(a_1 ... a_r): every i_k is 0, so every part contributes 1/a_k
    assert barnes_number(0, PartitionSpec.of(2, 3, 4)) == Fr(1, 24)
    assert barnes_number(0, PartitionSpec.of(7)) == Fr(1, 7)


def test_single_part_collapse():
    for a in (1, 2, 5):
        spec = PartitionSpec.of(a)
        for j in range(12):
            assert barnes_number(j, spec) == bernoulli_number(j) * Fr(a) ** (j - 1)


def test_hand_expanded_value():
    # B_2((1,1)) = B_0 B_2 + 2 B_1 B_1 + B_2 B_0 = 1/6 + 1/2 + 1/6
    assert barnes_number(2, PartitionSpec.of(1, 1)) == Fr(5, 6)


def test_permutation_symmetry():
    base = (1, 2, 3)
    values = {
        perm: [barnes_number(j, PartitionSpec.of(*perm)) for j in range(10)]
        for perm in permutations(base)
    }
    reference = values[base]
    assert all(v == reference for v in values.values())


def test_two_derivations_agree():
    for parts in [(1,), (3,), (1, 2), (2, 3), (2, 3, 4), (1, 2, 3, 4)]:
        spec = PartitionSpec.of(*parts)
        for j in range(15):
            assert barnes_number(j, spec) == barnes_number_via_series(j, spec)


def test_zeta_special_values():
    # hand expansion: zeta at 0 for a=(1) is -B_1 - 1 = 1/2 - 1 = -1/2
    assert zeta_special(0, PartitionSpec.of(1)) == Fr(-1, 2)
    # a=(1,2): B_3((1,2)) = -3/4, so the value at -1 is (1/6)(-3/4) = -1/8
    assert zeta_special(1, PartitionSpec.of(1, 2)) == Fr(-1, 8)


def test_index_bounds():
    spec = PartitionSpec.of(1, 2)
    with pytest.raises(ValueError):
        barnes_number(-1, spec)
    with pytest.raises(ValueError):
        zeta_special(-1, spec)
