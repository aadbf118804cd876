"""
blocks
======

Block-level invariants of weights: atypicality, the block datum, parity, the ground states
λ_N of a maximal atypical block and the Kostant property.

Functions:
    atypicality: Number of labels ∨.
    is_maximal_atypical: True iff every odd label is a ∨.
    block_of: Cross and circle positions of a weight.
    parity: p(λ) = Σ λ_{m+i} and its residue modulo 2.
    parity_shift: The parity that decides the sign of the superdimension.
    ground_state: The higher ground state λ_N of a maximal atypical block.
    ground_state_index: The N with w = λ_N, if any.
    normalize_block: Berezin twist that normalizes the ground state of a block.
    is_kostant: True iff no subsequence ∨∧∨∧ occurs in the labeling.
    labeling_window: The labeling on a window of positions as a string.
"""

from __future__ import annotations

import logging
from typing import Optional

from ..data_structures.cup_diagram import compact_position
from ..data_structures.super_weight import (
    BlockId,
    Labeling,
    SuperWeight,
    labeling,
    weight_from_labeling,
)
from ..errors import NotMaximalAtypical, NotMaximalAtypicalBlock

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)


def atypicality(w: SuperWeight) -> int:
    """The degree of atypicality r = |vees| of a weight."""
    return len(labeling(w).vees)


def is_maximal_atypical(w: SuperWeight) -> bool:
    """True iff the atypicality equals n."""
    return atypicality(w) == w.n


def block_of(w: SuperWeight) -> BlockId:
    """
    The block of a weight.

    Args:
        w (SuperWeight): A valid weight.

    Returns:
        BlockId: Sorted cross and circle positions of the labeling of w.
    """
    lab = labeling(w)
    return BlockId(tuple(sorted(lab.crosses)), tuple(sorted(lab.circles)), w.m, w.n)


def parity(w: SuperWeight) -> tuple[int, int]:
    """
    The parity p(λ) = λ_{m+1} + … + λ_{m+n}.

    Args:
        w (SuperWeight): A valid weight.

    Returns:
        tuple[int, int]: (p, p mod 2).
    """
    p = sum(w.odd_part)
    return p, p % 2


def require_maximal_atypical(b: BlockId):
    """Raises `NotMaximalAtypicalBlock` unless the block has no circles."""
    if not b.is_maximal_atypical:
        logging.error("Block with circles %s is not maximal atypical.", b.circles)
        raise NotMaximalAtypicalBlock(
            f"block with circles {list(b.circles)} is not maximal atypical"
        )


def _ground_anchor(b: BlockId) -> int:
    return min(b.crosses) if b.crosses else 1


def ground_state(b: BlockId, N: int = 0) -> SuperWeight:
    """
    The higher ground state λ_N of a maximal atypical block.

    With j the smallest cross (or 1 without crosses) the labels ∨ of λ_N sit at
    j − 1 − N, …, j − n − N.

    Args:
        b (BlockId): A maximal atypical block.
        N (int, optional): Order of the ground state, N ≥ 0. Defaults to 0.

    Returns:
        SuperWeight: The weight λ_N.

    Raises:
        NotMaximalAtypicalBlock: If the block has circles.
        ValueError: If N is negative.
    """
    require_maximal_atypical(b)
    if N < 0:
        raise ValueError(f"ground state order must be non-negative, got {N}")
    j = _ground_anchor(b)
    vees = frozenset(j - k - N for k in range(1, b.n + 1))
    return weight_from_labeling(b.m, b.n, Labeling(crosses=frozenset(b.crosses), vees=vees))


def ground_state_index(w: SuperWeight) -> Optional[int]:
    """
    Finds N with w = λ_N in the block of w.

    Args:
        w (SuperWeight): A valid weight.

    Returns:
        int or None: N ≥ 0, or None if w is not a ground state (or not maximal atypical).
    """
    lab = labeling(w)
    if lab.circles:
        return None
    if not lab.vees:
        return 0
    j = min(lab.crosses) if lab.crosses else 1
    top = max(lab.vees)
    N = j - 1 - top
    expected = {j - k - N for k in range(1, w.n + 1)}
    if N < 0 or set(lab.vees) != expected:
        return None
    return N


def parity_shift(w: SuperWeight) -> tuple[int, int]:
    """
    The parity of a maximal atypical weight measured from the ground state of its block.

    Every transposition of neighbouring ∨∧ flips the parity, neighbours being separated by
    crosses only. So the value is p(λ_0) plus the total displacement of the ∨ from λ_0 on
    the compacted line. Without crosses it agrees with `parity` modulo 2.

    Args:
        w (SuperWeight): A maximal atypical weight.

    Returns:
        tuple[int, int]: (shift, shift mod 2).

    Raises:
        NotMaximalAtypical: If the labeling of w carries a circle.
    """
    lab = labeling(w)
    if lab.circles:
        logging.error("Weight %s is not maximal atypical.", w)
        raise NotMaximalAtypical(f"weight {w} is not maximal atypical")
    crosses = sorted(lab.crosses)
    base = ground_state(block_of(w), 0)
    moved = sum(compact_position(x, crosses) for x in lab.vees) - sum(
        compact_position(x, crosses) for x in labeling(base).vees
    )
    shift = parity(base)[0] + moved
    return shift, shift % 2


def normalize_block(b: BlockId) -> tuple[int, BlockId]:
    """
    The Berezin twist that normalizes the ground state of a block.

    After twisting by Ber^k the ground state reads (λ_1, …, λ_{m−n−1}, 0, 0, …; 0, …),
    i.e. it is a covariant weight of even parity.

    Args:
        b (BlockId): A maximal atypical block.

    Returns:
        tuple[int, BlockId]: The power k and the twisted block (all labels moved by k).

    Raises:
        NotMaximalAtypicalBlock: If the block has circles.
    """
    require_maximal_atypical(b)
    if b.m == b.n:
        return 0, b
    lowest = ground_state(b, 0).parts[b.m - b.n - 1]
    k = -lowest
    return k, BlockId(tuple(c + k for c in b.crosses), (), b.m, b.n)


def is_kostant(w: SuperWeight) -> bool:
    """
    Tells whether no subsequence ∨∧∨∧ occurs in the labeling of a weight.

    Crosses and circles are skipped. Since every large enough position carries ∧, the
    pattern exists iff some ∧ lies between two ∨, i.e. iff the ∨ do not form one
    interval once crosses and circles are deleted.

    Args:
        w (SuperWeight): A valid weight.

    Returns:
        bool: True for Kostant weights.
    """
    lab = labeling(w)
    removed = sorted(lab.crosses | lab.circles)
    positions = sorted(compact_position(x, removed) for x in lab.vees)
    if len(positions) < 2:
        return True
    return positions[-1] - positions[0] == len(positions) - 1


def labeling_window(
    w: SuperWeight,
    lower: Optional[int] = None,
    upper: Optional[int] = None,
    ascii_only: bool = False,
) -> str:
    """
    Renders the labeling of a weight on the positions lower..upper.

    Args:
        w (SuperWeight): A valid weight.
        lower (int, optional): First position. Defaults to the display window start.
        upper (int, optional): Last position. Defaults to the display window end.
        ascii_only (bool, optional): Use ``v ^ x o``. Defaults to False.

    Returns:
        str: One symbol per position.
    """
    lab = labeling(w)
    default_lower, default_upper = lab.default_window(w.n)
    lower = default_lower if lower is None else lower
    upper = default_upper if upper is None else upper
    return lab.window(lower, upper, ascii_only)
