"""
bruhat
======

Bruhat order, Bruhat distance and the Kostant Ext combinatorics of maximal atypical weights.

Everything is computed on the compacted numberline (crosses deleted, and circles as well for
the Kostant Ext of weights that are not maximal atypical). Moving a label ∨ one step to the
left lowers a weight; l(ν, μ) counts the neighbouring ∨∧ swaps between them.

Functions:
    bruhat_leq: Tells whether v ≤ w in the Bruhat order.
    l_distance: Closed form of the Bruhat distance.
    swap_distance: Breadth-first search over single ∨∧ swaps, an independent check of l.
    ext_kac_dim: dim Ext^i(L(ν), L(μ)) for a Kostant weight μ.
    bgg_layer: Weights of the block at distance j below the ground state.
    ext_self_dims: dim Ext^j(L, L) for the ground state of a maximal atypical block.
"""

from __future__ import annotations

import collections
import logging
from ..data_structures.cup_diagram import CompactedDiagram, compact, compact_position
from ..data_structures.super_weight import BlockId, ExtProfile, SuperWeight, labeling
from ..errors import DifferentBlocks, Incomparable, NotKostant, NotMaximalAtypical
from .blocks import block_of, ground_state, is_kostant, require_maximal_atypical

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)


def _descending_vees(v: SuperWeight, w: SuperWeight) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if block_of(v) != block_of(w):
        logging.error("Weights %s and %s lie in different blocks.", v, w)
        raise DifferentBlocks(f"weights {v} and {w} lie in different blocks")
    if not block_of(v).is_maximal_atypical:
        logging.error("Bruhat order requested for non maximal atypical weight %s.", v)
        raise NotMaximalAtypical(f"weight {v} is not maximal atypical")
    xv = tuple(sorted(compact(v).vees, reverse=True))
    xw = tuple(sorted(compact(w).vees, reverse=True))
    return xv, xw


def bruhat_leq(v: SuperWeight, w: SuperWeight) -> bool:
    """
    Tells whether v ≤ w in the Bruhat order.

    Args:
        v (SuperWeight): A maximal atypical weight.
        w (SuperWeight): A weight in the same block.

    Returns:
        bool: True iff every ∨ of v (sorted descending) lies weakly left of the matching ∨ of w.

    Raises:
        DifferentBlocks: If the blocks differ.
        NotMaximalAtypical: If the block is not maximal atypical.
    """
    xv, xw = _descending_vees(v, w)
    return all(a <= b for a, b in zip(xv, xw))


def l_distance(v: SuperWeight, w: SuperWeight) -> int:
    """
    The Bruhat distance l(v, w) of two comparable weights.

    Args:
        v (SuperWeight): A maximal atypical weight.
        w (SuperWeight): A weight in the same block with v ≤ w or w ≤ v.

    Returns:
        int: Σ_i |x(w)_i − x(v)_i| over the descending compacted ∨ positions.

    Raises:
        DifferentBlocks: If the blocks differ.
        NotMaximalAtypical: If the block is not maximal atypical.
        Incomparable: If neither v ≤ w nor w ≤ v.
    """
    xv, xw = _descending_vees(v, w)
    differences = [b - a for a, b in zip(xv, xw)]
    if all(d >= 0 for d in differences) or all(d <= 0 for d in differences):
        return abs(sum(differences))
    logging.error("Weights %s and %s are not comparable.", v, w)
    raise Incomparable(f"weights {v} and {w} are not comparable in the Bruhat order")


def swap_distance(source: CompactedDiagram, target: CompactedDiagram) -> int:
    """
    Minimal number of single ∨∧ ↔ ∧∨ swaps turning one ∨ set into another.

    The search stays inside the hull of both diagrams; no shorter path leaves it.

    Args:
        source (CompactedDiagram): Start ∨ positions.
        target (CompactedDiagram): Goal ∨ positions with the same number of ∨.

    Returns:
        int: The breadth-first distance.
    """
    if source.n != target.n:
        raise ValueError("diagrams with different numbers of labels ∨ are never connected")
    start, goal = frozenset(source.vees), frozenset(target.vees)
    if start == goal:
        return 0
    lower = min(start | goal)
    upper = max(start | goal)

    seen = {start}
    queue = collections.deque([(start, 0)])
    while queue:
        state, distance = queue.popleft()
        for x in state:
            for y in (x - 1, x + 1):
                if y < lower or y > upper or y in state:
                    continue
                nxt = (state - {x}) | {y}
                if nxt == goal:
                    return distance + 1
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append((nxt, distance + 1))
    raise RuntimeError("swap search exhausted without reaching the target")


def _line_vees(w: SuperWeight) -> tuple[int, ...]:
    lab = labeling(w)
    removed = sorted(lab.crosses | lab.circles)
    return tuple(sorted((compact_position(x, removed) for x in lab.vees), reverse=True))


def ext_kac_dim(nu: SuperWeight, mu: SuperWeight, i: int) -> int:
    """
    dim Ext^i(L(ν), L(μ)) for a Kostant weight μ: 1 iff ν ≤ μ in one block and i = l(ν, μ).

    The ∨ of both weights are compared on the line with crosses and circles deleted, so any
    degree of atypicality is allowed.

    Args:
        nu (SuperWeight): Any weight.
        mu (SuperWeight): A Kostant weight.
        i (int): Degree.

    Returns:
        int: 0 or 1.

    Raises:
        NotKostant: If μ is not a Kostant weight.
    """
    if not is_kostant(mu):
        logging.error("Weight %s is not a Kostant weight.", mu)
        raise NotKostant(f"weight {mu} is not a Kostant weight")
    if nu == mu:
        return int(i == 0)
    if block_of(nu) != block_of(mu):
        return 0
    xv, xw = _line_vees(nu), _line_vees(mu)
    if not all(a <= b for a, b in zip(xv, xw)):
        return 0
    return int(i == sum(b - a for a, b in zip(xv, xw)))


def _layers(start: tuple[int, ...], depth: int) -> list[set[frozenset]]:
    layers = [{frozenset(start)}]
    for _ in range(depth):
        nxt = set()
        for state in layers[-1]:
            for x in state:
                if x - 1 not in state:
                    nxt.add((state - {x}) | {x - 1})
        layers.append(nxt)
    return layers


def bgg_layer(b: BlockId, j: int) -> list[SuperWeight]:
    """
    All weights ν of a maximal atypical block with ν ≤ λ_0 and l(ν, λ_0) = j.

    Args:
        b (BlockId): A maximal atypical block.
        j (int): Distance below the ground state, j ≥ 0.

    Returns:
        list[SuperWeight]: The layer, ordered by descending ∨ positions.

    Raises:
        NotMaximalAtypicalBlock: If the block has circles.
    """
    require_maximal_atypical(b)
    if j < 0:
        return []
    origin = compact(ground_state(b, 0))
    layer = _layers(origin.vees, j)[-1]
    keys = sorted((tuple(sorted(s, reverse=True)) for s in layer), reverse=True)
    return [origin.with_vees(k).to_weight() for k in keys]


def ext_self_dims(b: BlockId, j_max: int) -> list[ExtProfile]:
    """
    dim Ext^j(L, L) for the ground state L of a maximal atypical block, j = 0..j_max.

    Odd degrees vanish; in degree 2t the dimension is the size of the t-th BGG layer.

    Args:
        b (BlockId): A maximal atypical block.
        j_max (int): Largest degree.

    Returns:
        list[ExtProfile]: One profile per degree 0..j_max.

    Raises:
        NotMaximalAtypicalBlock: If the block has circles.
    """
    require_maximal_atypical(b)
    origin = compact(ground_state(b, 0))
    layers = _layers(origin.vees, j_max // 2)
    return [
        ExtProfile(j, 0 if j % 2 else len(layers[j // 2])) for j in range(j_max + 1)
    ]
