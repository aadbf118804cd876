import collections

import pytest
from hypothesis import given

from sdimtools.data_structures.partition import Partition
from sdimtools.errors import HookViolation
from sdimtools.invariants.blocks import is_maximal_atypical
from sdimtools.invariants.covariant import (
    column_pieri,
    contained_partitions,
    covariant_sdim_oracle,
    ground_tensor_pi,
    horizontal_strips,
    hook_condition,
    is_covariant_max_atypical,
    lr_expand,
    partitions_of,
    skew_lr,
    to_highest_weight,
    vertical_strips,
)
from sdimtools.invariants.multiplicity import sdim

from strategies import partitions


def P(*parts):
    return Partition(parts)


def test_partitions_of():
    assert partitions_of(3) == [P(3), P(2, 1), P(1, 1, 1)]
    assert len(partitions_of(4)) == 5
    assert partitions_of(4, max_parts=2) == [P(4), P(3, 1), P(2, 2)]
    assert partitions_of(4, max_part=2) == [P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
    assert partitions_of(0) == [P()]
    assert partitions_of(-1) == []
    assert partitions_of(5, max_parts=2, max_part=2) == []


def test_contained_partitions():
    assert contained_partitions(P(2, 1)) == [P(), P(1), P(1, 1), P(2), P(2, 1)]
    assert contained_partitions(P()) == [P()]


@given(partitions())
def test_contained_partitions_fit(p):
    inside = contained_partitions(p)
    assert P() in inside and p in inside
    assert all(p.contains(q) for q in inside)
    assert len(set(inside)) == len(inside)


def test_hook_condition_and_highest_weight():
    assert not hook_condition(P(3, 3, 3), 2, 1)
    assert hook_condition(P(2, 2, 1), 2, 1)
    assert to_highest_weight(P(2, 1), 2, 1).parts == (2, 1, 0)
    assert to_highest_weight(P(2, 2, 1), 2, 1).parts == (2, 2, 1)
    assert to_highest_weight(P(1, 1, 1), 1, 1).parts == (1, 2)
    with pytest.raises(HookViolation):
        to_highest_weight(P(3, 3, 3), 2, 1)


def test_covariant_max_atypical():
    assert is_covariant_max_atypical(P(1), 3, 1)
    assert not is_covariant_max_atypical(P(1, 1, 1), 3, 1)
    assert not is_covariant_max_atypical(P(4, 2), 2, 2)
    assert is_covariant_max_atypical(P(), 2, 2)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)])
def test_covariant_max_atypical_matches_labeling(m, n):
    for degree in range(7):
        for p in partitions_of(degree):
            if hook_condition(p, m, n):
                assert is_covariant_max_atypical(p, m, n) == is_maximal_atypical(
                    to_highest_weight(p, m, n)
                )


def test_strips():
    assert horizontal_strips(P(1), 1) == [P(2), P(1, 1)]
    assert vertical_strips(P(1), 1) == [P(2), P(1, 1)]
    assert horizontal_strips(P(2), 2) == [P(4), P(3, 1), P(2, 2)]
    assert vertical_strips(P(2), 2) == [P(3, 1), P(2, 1, 1)]
    assert horizontal_strips(P(1), -1) == []


def test_column_pieri():
    assert column_pieri(P(2), 2) == [P(3, 1), P(2, 1, 1)]
    assert column_pieri(P(), 3) == [P(1, 1, 1)]


def test_skew_lr():
    assert skew_lr(P(2, 1), P(1)) == collections.Counter({P(2): 1, P(1, 1): 1})
    assert skew_lr(P(3, 2, 1), P(2, 1)) == collections.Counter(
        {P(3): 1, P(2, 1): 2, P(1, 1, 1): 1}
    )
    assert skew_lr(P(1), P(2)) == collections.Counter()


def test_lr_expand():
    assert lr_expand(P(1), P(1)) == collections.Counter({P(2): 1, P(1, 1): 1})
    assert lr_expand(P(2, 1), P(2, 1)) == collections.Counter(
        {
            P(4, 2): 1,
            P(4, 1, 1): 1,
            P(3, 3): 1,
            P(3, 2, 1): 2,
            P(3, 1, 1, 1): 1,
            P(2, 2, 2): 1,
            P(2, 2, 1, 1): 1,
        }
    )
    assert lr_expand(P(), P(3, 1)) == collections.Counter({P(3, 1): 1})


def test_lr_expand_with_column_is_pieri():
    for p in partitions_of(4):
        assert sorted(lr_expand(p, P(1, 1)), reverse=True) == column_pieri(p, 2)
        assert set(lr_expand(p, P(1, 1)).values()) == {1}


@pytest.mark.parametrize(
    "p, m, n, expected",
    [
        (P(1), 3, 1, 2),
        (P(1), 1, 1, 0),
        (P(2), 2, 1, 1),
        (P(1, 1), 2, 1, 0),
        (P(3, 3, 3), 2, 1, 0),
    ],
)
def test_covariant_sdim_oracle(p, m, n, expected):
    assert covariant_sdim_oracle(p, m, n) == expected


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)])
def test_sdim_matches_covariant_decomposition(m, n):
    for degree in range(6):
        for p in partitions_of(degree):
            if hook_condition(p, m, n):
                expected = covariant_sdim_oracle(p, m, n)
                assert sdim(to_highest_weight(p, m, n)).sdim == expected, p


def test_ground_tensor_pi():
    assert ground_tensor_pi(P(1), 3, 1) == [(P(2, 1), True), (P(1, 1, 1), False)]
    with pytest.raises(HookViolation):
        ground_tensor_pi(P(1, 1, 1), 3, 1)


@pytest.mark.parametrize("m, n", [(3, 1), (4, 2), (4, 1), (5, 3)])
def test_ground_tensor_pi_has_one_maximal_atypical_summand(m, n):
    for degree in range(5):
        for p in partitions_of(degree, max_parts=m - n):
            summands = ground_tensor_pi(p, m, n)
            atypical = [rho for rho, flag in summands if flag]
            shifted = P(*(p[i] + 1 for i in range(m - n)))
            assert atypical == [shifted]
