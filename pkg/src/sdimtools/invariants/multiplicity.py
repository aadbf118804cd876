"""
multiplicity
============

Closed-form multiplicity, the Weyl dimension formula, the block partition ρ and the
superdimension sdim L(λ) = (−1)^{p(λ)} · m(λ) · dim ρ(λ), with p(λ) the parity measured from
the ground state of the block.

Classes:
    SdimResult: All ingredients of the superdimension of a weight.
    PhiImage: m(λ)·ρ(λ) with its parity, the image of L(λ) in Rep(Gl(m−n)) ⊗ svec.
    IdentityReport: Outcome of the binomial identity checks.

Functions:
    multinomial: (Σ parts)! / Π parts_i!.
    m_closed: Multiplicity from the sector recursion.
    rho_of_block: The partition ρ and det twist M of a maximal atypical block.
    weyl_dim: Dimension of the irreducible Gl(N)-module with highest weight p.
    sdim: The superdimension of L(λ).
    phi_image: m, ρ, M and parity of a weight.
    one_segment_recursion: The one-segment multinomial recursion at (u, v, rest).
    verify_identities: Checks the four identities behind the multiplicity recursion.

Example:
    ```python
    w = validate_weight(3, 1, [1, 0, 0, 0])
    sdim(w).sdim    # 2
    ```
"""

from __future__ import annotations

import dataclasses
import functools
import logging
import math
from typing import Optional, Sequence, Union

import numpy as np
from scipy.special import comb

from ..data_structures.cup_diagram import CompactedDiagram, CupDiagram, build_from_vees, compact
from ..data_structures.partition import Partition
from ..data_structures.super_weight import BlockId, SuperWeight
from ..errors import NonDominant
from .blocks import block_of, parity, parity_shift, require_maximal_atypical

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)


def multinomial(parts: Sequence[int]) -> int:
    """
    The multinomial coefficient (Σ parts)! / Π parts_i!.

    Args:
        parts (Sequence[int]): Entries; a negative entry makes the coefficient 0.

    Returns:
        int: The exact coefficient; the empty product is 1.
    """
    if any(x < 0 for x in parts):
        return 0
    result = 1
    total = 0
    for x in parts:
        total += x
        result *= int(comb(total, x, exact=True))
    return result


@functools.lru_cache(maxsize=None)
def _m_closed_key(key: tuple[int, ...]) -> int:
    cups = build_from_vees(key)
    value = multinomial(cups.half_lengths())
    for index in range(len(cups.sectors)):
        value *= _m_closed_key(CompactedDiagram(cups.interior(index).vees).normalized())
    return value


def m_closed(c: Union[CupDiagram, CompactedDiagram]) -> int:
    """
    The multiplicity m = multinomial(n_1, …, n_r) · Π m(interior of sector i).

    Args:
        c (CupDiagram | CompactedDiagram): A diagram; the empty diagram gives 1.

    Returns:
        int: The multiplicity, 1 ≤ m ≤ n!.
    """
    return _m_closed_key(CompactedDiagram(c.vees).normalized())


def rho_of_block(b: BlockId) -> tuple[Partition, int]:
    """
    The Gl(m − n) partition ρ of a maximal atypical block and its det twist.

    With the crosses sorted descending q_1 > … > q_{m−n}, λ_i = q_i + i − 1 and M = λ_{m−n};
    ρ is (λ_1 − M, …, λ_{m−n} − M) ⊗ det^M.

    Args:
        b (BlockId): A maximal atypical block.

    Returns:
        tuple[Partition, int]: The partition and M (0 when m = n).

    Raises:
        NotMaximalAtypicalBlock: If the block has circles.
    """
    require_maximal_atypical(b)
    q = sorted(b.crosses, reverse=True)
    if not q:
        return Partition(()), 0
    lam = [x + i for i, x in enumerate(q)]
    twist = lam[-1]
    return Partition(tuple(x - twist for x in lam)), twist


def weyl_dim(p: Union[Partition, Sequence[int]], N: int) -> int:
    """
    Weyl dimension formula Π_{i<j} (p_i − p_j + j − i) / (j − i) for Gl(N).

    Args:
        p (Partition | Sequence[int]): Weakly decreasing integers; shorter vectors are padded
            with zeros.
        N (int): Rank, N ≥ 0.

    Returns:
        int: The exact dimension; 0 when p has more than N nonzero rows.

    Raises:
        NonDominant: If p is not weakly decreasing.
    """
    values = list(p.parts if isinstance(p, Partition) else p)
    for i in range(len(values) - 1):
        if values[i] < values[i + 1]:
            logging.error("Non dominant weight %s for the Weyl dimension formula.", values)
            raise NonDominant(f"weight {values} is not weakly decreasing at index {i + 1}")
    while len(values) > N and values[-1] == 0:
        values.pop()
    if len(values) > N:
        return 0
    values += [0] * (N - len(values))
    if N < 2:
        return 1

    shifted = np.array(values, dtype=object) - np.array(list(range(N)), dtype=object)
    rows, cols = np.triu_indices(N, k=1)
    numerator = math.prod(int(x) for x in shifted[rows] - shifted[cols])
    denominator = math.prod(int(x) for x in cols - rows)
    return numerator // denominator


@dataclasses.dataclass(frozen=True)
class SdimResult:
    """
    The superdimension of a simple module and its ingredients.

    Attributes:
        maximal_atypical (bool): True iff the weight is maximal atypical.
        p (int): p(λ) = Σ λ_{m+i}.
        p_mod2 (int): p modulo 2.
        shift (int): The parity measured from the ground state, see `parity_shift`; equals p
            when w is not maximal atypical.
        multiplicity (int): m(λ), 0 when not maximal atypical.
        rho (Partition): The block partition.
        det_twist (int): M with ρ = rho ⊗ det^M.
        dim_rho (int): Weyl dimension of ρ for Gl(m − n).
        sdim (int): (−1)^shift · m · dim ρ, or 0.
    """

    maximal_atypical: bool
    p: int
    p_mod2: int
    shift: int
    multiplicity: int
    rho: Partition
    det_twist: int
    dim_rho: int
    sdim: int


def sdim(w: SuperWeight) -> SdimResult:
    """
    The superdimension of L(w).

    Args:
        w (SuperWeight): A valid weight.

    Returns:
        SdimResult: Zero superdimension unless w is maximal atypical.
    """
    p, p_mod2 = parity(w)
    block = block_of(w)
    if not block.is_maximal_atypical:
        return SdimResult(False, p, p_mod2, p, 0, Partition(()), 0, 0, 0)

    m = m_closed(compact(w))
    rho, twist = rho_of_block(block)
    dim_rho = weyl_dim(rho, w.m - w.n)
    shift, shift_mod2 = parity_shift(w)
    sign = -1 if shift_mod2 else 1
    return SdimResult(True, p, p_mod2, shift, m, rho, twist, dim_rho, sign * m * dim_rho)


@dataclasses.dataclass(frozen=True)
class PhiImage:
    multiplicity: int
    rho: Partition
    det_twist: int
    parity: int


def phi_image(w: SuperWeight) -> PhiImage:
    """
    The image m(w) · ρ(w)[p(w)] of L(w) in Rep(Gl(m − n)) ⊗ svec.

    Args:
        w (SuperWeight): A valid weight.

    Returns:
        PhiImage: Multiplicity 0 and empty ρ unless w is maximal atypical.
    """
    result = sdim(w)
    return PhiImage(result.multiplicity, result.rho, result.det_twist, result.shift % 2)


def one_segment_recursion(u: int, v: int, rest: Sequence[int] = ()) -> bool:
    """
    Checks the one-segment recursion of multiplicities on multinomials:

    2·m(u+v, rest)·m(u−1, 1, v−1) − m(u, v, rest)
        = m(u+v, rest)·m(u−1, v)·m(1, v−2) + m(u+v, rest)·m(u, v−1)·m(u−2, 1).

    Args:
        u (int): Half length of the first sector, u ≥ 1.
        v (int): Half length of the second sector, v ≥ 1.
        rest (Sequence[int], optional): Half lengths of the remaining sectors.

    Returns:
        bool: True iff both sides agree.
    """
    rest = tuple(rest)
    outer = multinomial((u + v, *rest))
    lhs = 2 * outer * multinomial((u - 1, 1, v - 1)) - multinomial((u, v, *rest))
    rhs = outer * multinomial((u - 1, v)) * multinomial((1, v - 2)) + outer * multinomial(
        (u, v - 1)
    ) * multinomial((u - 2, 1))
    return lhs == rhs


@dataclasses.dataclass(frozen=True)
class IdentityReport:
    """
    Attributes:
        passed (bool): True iff no counterexample was found.
        checked (int): Number of evaluated instances.
        counterexample (tuple or None): (identity name, arguments) of the first failure.
    """

    passed: bool
    checked: int
    counterexample: Optional[tuple[str, tuple[int, ...]]] = None


def _identity_cases(bound: int):
    for u in range(1, bound + 1):
        for v in range(1, bound + 1):
            yield "product", (u, v), 2 * u * v == (u + v) + v * (u - 1) + u * (v - 1)

    for n1 in range(1, bound + 1):
        for n2 in range(1, bound + 1):
            total = n1 + n2
            middle = multinomial((n1, 1, n2 - 1))
            low = int(comb(total, n1, exact=True))
            high = int(comb(total, n1 + 1, exact=True))
            yield "binomial-first", (n1, n2), 2 * middle == low + high + high * n1 + low * (n2 - 1)
            yield "binomial-second", (n1, n2), 2 * middle == low + low * (n2 - 1) + middle

    for rest in ((), (1,), (2,)):
        for u in range(1, bound + 1):
            for v in range(1, bound + 1):
                yield "one-segment", (u, v, *rest), one_segment_recursion(u, v, rest)


def verify_identities(bound: int = 20) -> IdentityReport:
    """
    Checks the identities behind the multiplicity recursion for all arguments up to a bound:
    2uv = (u+v) + v(u−1) + u(v−1), the two binomial identities of the segment cases, and
    `one_segment_recursion`.

    Args:
        bound (int, optional): Largest argument, bound ≥ 1. Defaults to 20.

    Returns:
        IdentityReport: Success or the first counterexample.
    """
    if bound < 1:
        raise ValueError(f"identity bound must be at least 1, got {bound}")
    checked = 0
    for name, arguments, holds in _identity_cases(bound):
        checked += 1
        if not holds:
            logging.error("Identity %s fails at %s.", name, arguments)
            return IdentityReport(False, checked, (name, arguments))
    return IdentityReport(True, checked)
