import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sdimtools.data_structures.cup_diagram import CompactedDiagram, build_from_vees
from sdimtools.data_structures.partition import Partition
from sdimtools.data_structures.super_weight import BlockId, twist_by_berezin, validate_weight
from sdimtools.errors import NonDominant, NotMaximalAtypicalBlock
from sdimtools.invariants.blocks import ground_state, is_maximal_atypical
from sdimtools.invariants.multiplicity import (
    m_closed,
    multinomial,
    one_segment_recursion,
    phi_image,
    rho_of_block,
    sdim,
    verify_identities,
    weyl_dim,
)

from strategies import diagrams, weights


@pytest.mark.parametrize(
    "parts, expected",
    [((1, 1), 2), ((1, 1, 1), 6), ((2, 1), 3), ((), 1), ((0, 0), 1), ((4,), 1), ((2, -1), 0)],
)
def test_multinomial(parts, expected):
    assert multinomial(parts) == expected


def test_multinomial_is_exact():
    assert multinomial([1] * 30) == math.factorial(30)
    assert multinomial((20, 20)) == math.comb(40, 20)


@pytest.mark.parametrize(
    "vees, expected",
    [
        ((), 1),
        ((0, 1, 2), 1),
        ((0, 1, 3), 2),
        ((0, 2, 3), 3),
        ((0, 2, 4), 6),
        ((0, 1, 3, 6), 8),
        ((0, 1, 4, 7), 12),
    ],
)
def test_m_closed(vees, expected):
    assert m_closed(build_from_vees(vees)) == expected
    assert m_closed(CompactedDiagram(vees)) == expected


@given(diagrams(max_n=6, high=15))
def test_m_closed_bounds(d):
    value = m_closed(d)
    assert 1 <= value <= math.factorial(d.n)
    assert m_closed(d.with_vees(x + 11 for x in d.vees)) == value


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_m_closed_extremes(n):
    assert m_closed(CompactedDiagram(range(n))) == 1
    assert m_closed(CompactedDiagram(range(0, 2 * n, 2))) == math.factorial(n)
    for vees in itertools.combinations(range(2 * n + 1), n):
        unnested = build_from_vees(vees).half_lengths() == (1,) * n
        assert (m_closed(CompactedDiagram(vees)) == math.factorial(n)) is unnested


@pytest.mark.parametrize(
    "crosses, m, n, partition, twist",
    [
        ((), 2, 2, (), 0),
        ((-1, 1), 3, 1, (1,), 0),
        ((2,), 2, 1, (), 2),
        ((-3, 0, 4), 5, 2, (5, 2), -1),
    ],
)
def test_rho_of_block(crosses, m, n, partition, twist):
    assert rho_of_block(BlockId(crosses, (), m, n)) == (Partition(partition), twist)


def test_rho_of_block_needs_maximal_atypical():
    with pytest.raises(NotMaximalAtypicalBlock):
        rho_of_block(BlockId((1,), (0,), 1, 1))


@pytest.mark.parametrize(
    "p, N, expected",
    [
        ((), 0, 1),
        ((), 3, 1),
        ((1, 0), 2, 2),
        ((2, 0), 2, 3),
        ((2, 1), 3, 8),
        ((1, 1), 3, 3),
        ((3, 2, 2), 3, 3),
        ((-1, -2), 2, 2),
        ((1, 1, 1), 2, 0),
        ((5,), 1, 1),
    ],
)
def test_weyl_dim(p, N, expected):
    assert weyl_dim(p, N) == expected


def test_weyl_dim_accepts_partitions():
    assert weyl_dim(Partition((2, 1)), 3) == 8


def test_weyl_dim_large_values_are_exact():
    assert weyl_dim((40, 0), 2) == 41
    assert weyl_dim((30, 20, 10), 3) == 11 * 11 * 11


def test_weyl_dim_non_dominant():
    with pytest.raises(NonDominant):
        weyl_dim((0, 1), 2)


def test_sdim_standard_representation():
    result = sdim(validate_weight(3, 1, [1, 0, 0, 0]))
    assert result.maximal_atypical
    assert (result.multiplicity, result.rho, result.dim_rho) == (1, Partition((1,)), 2)
    assert (result.p, result.p_mod2, result.sdim) == (0, 0, 2)


def test_sdim_gl22_example():
    result = sdim(validate_weight(2, 2, [2, 1, -1, -2]))
    assert result.multiplicity == 2
    assert result.p == -3
    assert result.sdim == -2


def test_sdim_not_maximal_atypical():
    result = sdim(validate_weight(1, 1, [1, 0]))
    assert not result.maximal_atypical
    assert result.sdim == 0
    assert result.multiplicity == 0


@pytest.mark.parametrize("m, n", [(1, 1), (2, 2), (3, 1), (3, 2), (4, 4)])
@pytest.mark.parametrize("k", [-2, -1, 0, 1, 3])
def test_sdim_of_berezin_powers(m, n, k):
    berezin = validate_weight(m, n, [k] * m + [-k] * n)
    result = sdim(berezin)
    assert result.p == -k * n
    assert result.sdim == (-1) ** (k * n)


@pytest.mark.parametrize(
    "block", [BlockId((), (), 3, 3), BlockId((-1, 1), (), 3, 1), BlockId((0, 3, 4), (), 5, 2)]
)
def test_berezin_twist_keeps_multiplicity(block):
    w = ground_state(block, 2)
    for k in (-3, 1, 4):
        twisted = sdim(twist_by_berezin(w, k))
        assert twisted.multiplicity == sdim(w).multiplicity
        assert twisted.dim_rho == sdim(w).dim_rho


@pytest.mark.parametrize("m, n", [(2, 1), (3, 1), (3, 2), (4, 2), (2, 2), (1, 1)])
def test_sdim_of_dual_standard_representation(m, n):
    dual = validate_weight(m, n, [0] * m + [0] * (n - 1) + [-1])
    assert sdim(dual).sdim == m - n


def test_sdim_of_twisted_dual():
    result = sdim(validate_weight(2, 1, [1, 1, -2]))
    assert result.p == -2
    assert result.shift == 1
    assert result.sdim == -1


@given(weights(max_m=4), st.integers(min_value=-3, max_value=3))
def test_sdim_under_berezin_twist(w, k):
    sign = -1 if (k * w.n) % 2 else 1
    assert sdim(twist_by_berezin(w, k)).sdim == sign * sdim(w).sdim
    if not is_maximal_atypical(w):
        assert sdim(w).sdim == 0


def test_phi_image():
    image = phi_image(validate_weight(3, 1, [1, 0, 0, 0]))
    assert (image.multiplicity, image.rho, image.det_twist, image.parity) == (
        1,
        Partition((1,)),
        0,
        0,
    )


def test_one_segment_recursion():
    for u, v in itertools.product(range(1, 6), repeat=2):
        assert one_segment_recursion(u, v)
        assert one_segment_recursion(u, v, (1, 2))


def test_verify_identities():
    report = verify_identities(20)
    assert report.passed
    assert report.counterexample is None
    assert report.checked == 400 + 2 * 400 + 3 * 400


def test_verify_identities_bound():
    with pytest.raises(ValueError):
        verify_identities(0)
