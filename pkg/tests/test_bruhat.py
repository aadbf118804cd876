import itertools

import pytest

from sdimtools.data_structures.cup_diagram import CompactedDiagram
from sdimtools.data_structures.super_weight import (
    BlockId,
    Labeling,
    labeling,
    validate_weight,
    weight_from_labeling,
)
from sdimtools.errors import (
    DifferentBlocks,
    Incomparable,
    NotKostant,
    NotMaximalAtypical,
    NotMaximalAtypicalBlock,
)
from sdimtools.invariants.blocks import block_of, ground_state, parity, parity_shift
from sdimtools.invariants.bruhat import (
    bgg_layer,
    bruhat_leq,
    ext_kac_dim,
    ext_self_dims,
    l_distance,
    swap_distance,
)
from sdimtools.invariants.covariant import partitions_of


def weight(*vees, crosses=()):
    return CompactedDiagram(vees, crosses).to_weight()


TRIVIAL = validate_weight(1, 1, [0, 0])
BER_INV = validate_weight(1, 1, [-1, 1])


def test_distance_to_itself():
    w = weight(0, 2, 3)
    assert l_distance(w, w) == 0
    assert bruhat_leq(w, w)


def test_berezin_inverse_is_one_below_trivial():
    assert bruhat_leq(BER_INV, TRIVIAL)
    assert not bruhat_leq(TRIVIAL, BER_INV)
    assert l_distance(BER_INV, TRIVIAL) == 1


def test_distance_gl22():
    assert l_distance(weight(-2, -1), weight(-1, 0)) == 2
    assert l_distance(weight(-1, 0), weight(-2, -1)) == 2


def test_different_blocks():
    with pytest.raises(DifferentBlocks):
        bruhat_leq(validate_weight(2, 1, [1, 1, -1]), validate_weight(2, 1, [0, 0, 0]))


def test_incomparable():
    v, w = weight(0, 3), weight(1, 2)
    assert not bruhat_leq(v, w)
    assert not bruhat_leq(w, v)
    with pytest.raises(Incomparable):
        l_distance(v, w)


def test_requires_maximal_atypical():
    w = validate_weight(1, 1, [1, 0])
    with pytest.raises(NotMaximalAtypical):
        bruhat_leq(w, w)


def test_closed_form_matches_swap_search():
    for n in range(1, 4):
        subsets = list(itertools.combinations(range(8), n))
        for a, b in itertools.product(subsets, repeat=2):
            v, w = weight(*a), weight(*b)
            if bruhat_leq(v, w) or bruhat_leq(w, v):
                assert l_distance(v, w) == swap_distance(
                    CompactedDiagram(a), CompactedDiagram(b)
                )


def test_swap_distance_rejects_different_sizes():
    with pytest.raises(ValueError):
        swap_distance(CompactedDiagram((0,)), CompactedDiagram((0, 1)))


def test_parity_bridges_distance_without_crosses():
    for a, b in itertools.product(itertools.combinations(range(6), 2), repeat=2):
        v, w = weight(*a), weight(*b)
        if bruhat_leq(v, w):
            assert (parity(v)[0] - parity(w)[0]) % 2 == l_distance(v, w) % 2


def test_parity_shift_bridges_distance_with_crosses():
    for crosses in ((1, 4), (-1,), (0, 2, 3)):
        for a, b in itertools.product(itertools.combinations(range(-2, 5), 2), repeat=2):
            v = CompactedDiagram(a, crosses).to_weight()
            w = CompactedDiagram(b, crosses).to_weight()
            if bruhat_leq(v, w):
                distance = l_distance(v, w)
                assert parity_shift(v)[0] - parity_shift(w)[0] == -distance
                assert (parity_shift(v)[1] - parity_shift(w)[1]) % 2 == distance % 2


def test_dual_standard_is_one_step_below_ground_state():
    w = validate_weight(2, 1, [0, 0, -1])
    base = ground_state(block_of(w))
    assert bruhat_leq(base, w)
    assert l_distance(base, w) == 1
    assert parity_shift(w)[1] != parity_shift(base)[1]


def test_ext_kac_dim():
    assert ext_kac_dim(TRIVIAL, TRIVIAL, 0) == 1
    assert ext_kac_dim(TRIVIAL, TRIVIAL, 1) == 0
    assert ext_kac_dim(BER_INV, TRIVIAL, 1) == 1
    assert ext_kac_dim(BER_INV, TRIVIAL, 0) == 0
    assert ext_kac_dim(TRIVIAL, BER_INV, 1) == 0
    assert ext_kac_dim(validate_weight(2, 1, [0, 0, 0]), TRIVIAL, 0) == 0


def test_ext_kac_dim_below_maximal_atypicality():
    mu = validate_weight(2, 2, [5, 1, 4, 0])
    assert labeling(mu) == Labeling(
        crosses=frozenset({5}), circles=frozenset({-5}), vees=frozenset({0})
    )

    def lowered(vee):
        return weight_from_labeling(
            2, 2, Labeling(crosses=frozenset({5}), circles=frozenset({-5}), vees=frozenset({vee}))
        )

    nu = lowered(-1)
    assert nu == validate_weight(2, 2, [5, 0, 4, 1])
    assert ext_kac_dim(nu, mu, 1) == 1
    assert ext_kac_dim(nu, mu, 0) == 0
    assert ext_kac_dim(mu, nu, 1) == 0
    assert ext_kac_dim(lowered(-6), mu, 5) == 1
    assert ext_kac_dim(lowered(-6), mu, 6) == 0


def test_ext_kac_dim_needs_kostant():
    with pytest.raises(NotKostant):
        ext_kac_dim(TRIVIAL, weight(0, 2), 0)


def test_bgg_layer_examples():
    block = BlockId((), (), 1, 1)
    assert bgg_layer(block, 0) == [ground_state(block)]
    for j in range(5):
        assert bgg_layer(block, j) == [validate_weight(1, 1, [-j, j])]
    layer = bgg_layer(BlockId((), (), 2, 2), 2)
    assert layer == [weight(-3, 0), weight(-2, -1)]


def test_bgg_layer_distance():
    block = BlockId((2,), (), 3, 2)
    top = ground_state(block)
    for j in range(5):
        for nu in bgg_layer(block, j):
            assert bruhat_leq(nu, top)
            assert l_distance(nu, top) == j
            assert ext_kac_dim(nu, top, j) == 1


def test_ext_self_dims_examples():
    dims = [p.dimension for p in ext_self_dims(BlockId((), (), 2, 2), 8)]
    assert dims == [1, 0, 1, 0, 2, 0, 2, 0, 3]
    assert [p.degree for p in ext_self_dims(BlockId((), (), 1, 1), 3)] == [0, 1, 2, 3]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ext_self_dims_count_partitions(n):
    for profile in ext_self_dims(BlockId((), (), n, n), 12):
        if profile.degree % 2:
            assert profile.dimension == 0
        else:
            assert profile.dimension == len(partitions_of(profile.degree // 2, max_parts=n))


def test_ext_self_dims_do_not_depend_on_block():
    reference = ext_self_dims(BlockId((), (), 3, 3), 10)
    for crosses in [(0,), (-4, 2), (1, 2, 3)]:
        block = BlockId(crosses, (), 3 + len(crosses), 3)
        assert ext_self_dims(block, 10) == reference


def test_ext_self_dims_needs_maximal_atypical_block():
    with pytest.raises(NotMaximalAtypicalBlock):
        ext_self_dims(BlockId((1,), (0,), 1, 1), 4)
    with pytest.raises(NotMaximalAtypicalBlock):
        bgg_layer(BlockId((1,), (0,), 1, 1), 0)
