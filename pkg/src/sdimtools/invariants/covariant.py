"""
covariant
=========

Partition combinatorics for the covariant representations {λ} = Schur_λ(k^{m|n}).

Functions:
    partitions_of: Partitions of N with bounded length and part size.
    contained_partitions: All partitions inside a Young diagram.
    hook_condition: True iff {λ} ≠ 0, i.e. λ_{m+1} ≤ n.
    to_highest_weight: Highest weight of {λ} as a Gl(m|n) weight.
    is_covariant_max_atypical: True iff {λ} is maximal atypical, i.e. λ_{m−n+1} = 0.
    horizontal_strips: Partitions obtained by adding a horizontal strip.
    vertical_strips: Partitions obtained by adding a vertical strip.
    column_pieri: The Pieri rule for tensoring with Λ^k.
    skew_lr: Littlewood–Richardson contents of a skew shape.
    lr_expand: Littlewood–Richardson decomposition of s_p · s_q.
    covariant_sdim_oracle: Superdimension of {λ} from its Gl(m) × Gl(n) decomposition.
    ground_tensor_pi: Decomposition of {λ} ⊗ Λ^{m−n}(X) for a covariant ground state.
"""

from __future__ import annotations

import collections
import logging
from typing import Optional

from sympy.utilities.iterables import partitions

from ..data_structures.partition import Partition
from ..data_structures.super_weight import SuperWeight, validate_weight
from ..errors import HookViolation
from .multiplicity import weyl_dim

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)


def partitions_of(
    N: int, max_parts: Optional[int] = None, max_part: Optional[int] = None
) -> list[Partition]:
    """
    All partitions of N, largest first in lexicographic order.

    Args:
        N (int): Degree.
        max_parts (int, optional): Largest number of rows.
        max_part (int, optional): Largest row length.

    Returns:
        list[Partition]: The partitions; [()] for N = 0 and [] when none exist.
    """
    if N < 0:
        return []
    if N == 0:
        return [Partition()]
    if max_parts is not None and max_parts < 1 or max_part is not None and max_part < 1:
        return []
    if max_parts is not None and max_part is not None and max_parts * max_part < N:
        return []
    result = []
    for multiplicities in partitions(N, m=max_parts, k=max_part):
        rows = []
        for part, count in sorted(multiplicities.items(), reverse=True):
            rows.extend([part] * count)
        result.append(Partition(tuple(rows)))
    return sorted(result, reverse=True)


def contained_partitions(p: Partition) -> list[Partition]:
    """All partitions whose Young diagram fits inside that of p, including () and p."""
    result = []

    def fill(row: int, prefix: tuple[int, ...]):
        result.append(Partition(prefix))
        if row == p.length:
            return
        cap = p[row] if row == 0 else min(p[row], prefix[-1])
        for x in range(1, cap + 1):
            fill(row + 1, prefix + (x,))

    fill(0, ())
    return sorted(result)


def hook_condition(p: Partition, m: int, n: int) -> bool:
    """True iff λ_{m+1} ≤ n."""
    return p[m] <= n


def _require_hook(p: Partition, m: int, n: int):
    if not hook_condition(p, m, n):
        logging.error("Partition %s violates the hook condition for Gl(%s|%s).", p, m, n)
        raise HookViolation(f"partition {p} has λ_{m + 1} = {p[m]} > {n}")


def to_highest_weight(p: Partition, m: int, n: int) -> SuperWeight:
    """
    The highest weight of {λ}: μ_i = λ_i and μ_{m+i} = max(0, λ*_i − m).

    Args:
        p (Partition): A partition satisfying the hook condition.
        m (int): Even rank.
        n (int): Odd rank.

    Returns:
        SuperWeight: The weight μ.

    Raises:
        HookViolation: If λ_{m+1} > n.
    """
    _require_hook(p, m, n)
    conjugate = p.conjugate()
    even = [p[i] for i in range(m)]
    odd = [max(0, conjugate[i] - m) for i in range(n)]
    return validate_weight(m, n, even + odd)


def is_covariant_max_atypical(p: Partition, m: int, n: int) -> bool:
    """
    True iff {λ} is maximal atypical, i.e. λ_{m−n+1} = 0.

    Raises:
        HookViolation: If λ_{m+1} > n.
    """
    _require_hook(p, m, n)
    return p[m - n] == 0


def horizontal_strips(p: Partition, k: int) -> list[Partition]:
    """
    All partitions λ ⊇ p with |λ/p| = k and no two boxes of λ/p in one column.

    Args:
        p (Partition): The inner partition.
        k (int): Number of added boxes.

    Returns:
        list[Partition]: Sorted results.
    """
    if k < 0:
        return []
    rows = p.length + 1
    results = []

    def fill(row: int, remaining: int, prefix: tuple[int, ...]):
        if row == rows:
            if remaining == 0:
                results.append(Partition(prefix))
            return
        cap = remaining if row == 0 else min(remaining, p[row - 1] - p[row])
        for extra in range(cap, -1, -1):
            fill(row + 1, remaining - extra, prefix + (p[row] + extra,))

    fill(0, k, ())
    return sorted(results, reverse=True)


def vertical_strips(p: Partition, k: int) -> list[Partition]:
    """All partitions λ ⊇ p with |λ/p| = k and no two boxes of λ/p in one row."""
    return sorted(
        (q.conjugate() for q in horizontal_strips(p.conjugate(), k)), reverse=True
    )


def column_pieri(p: Partition, k: int) -> list[Partition]:
    """
    Decomposition of s_p · e_k: every vertical strip of k boxes added to p, coefficient one.

    Example:
        ```python
        column_pieri(Partition((2,)), 2)   # [(3,1), (2,1,1)]
        ```
    """
    return vertical_strips(p, k)


def skew_lr(outer: Partition, inner: Partition) -> collections.Counter:
    """
    Littlewood–Richardson tableaux of the skew shape outer/inner, counted by content.

    Cells are filled in reading order (rows top to bottom, each row right to left); rows
    weakly increase, columns strictly increase and the reading word is a lattice word.

    Args:
        outer (Partition): Outer shape.
        inner (Partition): Inner shape contained in `outer`.

    Returns:
        collections.Counter: content ν ↦ c^{outer}_{inner, ν}.
    """
    if not outer.contains(inner):
        return collections.Counter()
    cells = [
        (r, c)
        for r in range(outer.length)
        for c in range(outer[r] - 1, inner[r] - 1, -1)
    ]
    filling: dict[tuple[int, int], int] = {}
    counts = collections.Counter()
    contents = collections.Counter()

    def place(index: int):
        if index == len(cells):
            top = max(counts) if counts else 0
            contents[Partition(tuple(counts[v] for v in range(1, top + 1)))] += 1
            return
        r, c = cells[index]
        right = filling.get((r, c + 1))
        above = filling.get((r - 1, c), 0)
        top = (max(counts) if counts else 0) + 1
        for value in range(above + 1, top + 1):
            if right is not None and value > right:
                break
            if value > 1 and counts[value - 1] <= counts[value]:
                continue
            filling[(r, c)] = value
            counts[value] += 1
            place(index + 1)
            counts[value] -= 1
            if not counts[value]:
                del counts[value]
            del filling[(r, c)]

    place(0)
    return contents


def _grow(p: Partition, k: int) -> list[Partition]:
    shapes = {p}
    for _ in range(k):
        shapes = {
            Partition(q.parts[:r] + (q[r] + 1,) + q.parts[r + 1 :])
            for q in shapes
            for r in range(q.length + 1)
            if r == 0 or q[r - 1] > q[r]
        }
    return sorted(shapes, reverse=True)


def lr_expand(p: Partition, q: Partition) -> collections.Counter:
    """
    Littlewood–Richardson decomposition s_p · s_q = Σ c^λ_{pq} s_λ.

    Args:
        p (Partition): First factor.
        q (Partition): Second factor.

    Returns:
        collections.Counter: λ ↦ c^λ_{pq} > 0.
    """
    result = collections.Counter()
    for shape in _grow(p, q.degree):
        coefficient = skew_lr(shape, p)[q]
        if coefficient:
            result[shape] = coefficient
    return result


def covariant_sdim_oracle(p: Partition, m: int, n: int) -> int:
    """
    Superdimension of {λ} from Schur_λ(V_0 ⊕ V_1) = ⊕ c^λ_{μν} Schur_μ(V_0) ⊗ Schur_ν(V_1).

    The odd summand Schur_ν of k^{0|n} has dimension dim Schur_{ν*}(k^n) and parity |ν|.

    Args:
        p (Partition): Any partition.
        m (int): Even rank.
        n (int): Odd rank.

    Returns:
        int: Σ c^λ_{μν} · dim_m(μ) · dim_n(ν*) · (−1)^{|ν|}; 0 when the hook condition fails.
    """
    if not hook_condition(p, m, n):
        return 0
    total = 0
    for mu in contained_partitions(p):
        even_dim = weyl_dim(mu, m)
        if not even_dim:
            continue
        for nu, coefficient in skew_lr(p, mu).items():
            odd_dim = weyl_dim(nu.conjugate(), n)
            sign = -1 if nu.degree % 2 else 1
            total += sign * coefficient * even_dim * odd_dim
    return total


def ground_tensor_pi(p: Partition, m: int, n: int) -> list[tuple[Partition, bool]]:
    """
    Decomposes {λ} ⊗ Λ^{m−n}(X) for a covariant ground state {λ}, length(λ) ≤ m − n.

    Args:
        p (Partition): The partition of the ground state.
        m (int): Even rank.
        n (int): Odd rank.

    Returns:
        list[tuple[Partition, bool]]: The nonzero summands {ρ} with their maximal atypical flag;
        only ρ = λ + (1^{m−n}) is maximal atypical.

    Raises:
        HookViolation: If length(λ) > m − n.
    """
    if p.length > m - n:
        logging.error("Partition %s is not a covariant ground state of Gl(%s|%s).", p, m, n)
        raise HookViolation(f"partition {p} is longer than m - n = {m - n}")
    return [
        (rho, is_covariant_max_atypical(rho, m, n))
        for rho in column_pieri(p, m - n)
        if hook_condition(rho, m, n)
    ]
