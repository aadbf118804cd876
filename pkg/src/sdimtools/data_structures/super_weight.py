"""
This module contains the classes describing highest weights of Gl(m|n) and their labelings.

The `SuperWeight` class holds a dominant integral weight λ = (λ_1..λ_m ; λ_{m+1}..λ_{m+n}).
The `Labeling` class is the decoration of the numberline attached to a weight: every integer
carries one of the labels ∨, ×, ○ or ∧. Only the first three are stored; every other integer
implicitly carries ∧. The `BlockId` class describes a block by its cross and circle positions,
and `ExtProfile` holds one degree of a self-Ext dimension table.

Classes:
    SuperWeight: A dominant integral weight of Gl(m|n).
    Labeling: The ∨/∧/×/○ labeling of the numberline.
    BlockId: The block datum (cross and circle positions).
    ExtProfile: Dimension of an Ext group in one degree.

Functions:
    validate_weight: Builds a `SuperWeight` and checks both dominance chains.
    labeling: Computes the labeling of a weight.
    weight_from_labeling: Inverts `labeling`.
    twist_by_berezin: Tensors a weight with a power of the Berezin.
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Sequence

from ..errors import BadShape, CardinalityMismatch, DominanceViolation

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)

SYMBOLS = {"vee": "∨", "up": "∧", "cross": "×", "circle": "○"}
ASCII_SYMBOLS = {"vee": "v", "up": "^", "cross": "x", "circle": "o"}


@dataclasses.dataclass(frozen=True)
class SuperWeight:
    """
    A dominant integral weight of Gl(m|n).

    Attributes:
        m (int): Rank of the even general linear group, m ≥ 1.
        n (int): Rank of the odd general linear group, 0 ≤ n ≤ m.
        parts (tuple[int, ...]): The m + n entries λ_1..λ_m ; λ_{m+1}..λ_{m+n}.
    """

    m: int
    n: int
    parts: tuple[int, ...]

    @property
    def even_part(self) -> tuple[int, ...]:
        """The entries λ_1..λ_m."""
        return self.parts[: self.m]

    @property
    def odd_part(self) -> tuple[int, ...]:
        """The entries λ_{m+1}..λ_{m+n}."""
        return self.parts[self.m :]

    def __str__(self) -> str:
        even = ",".join(str(x) for x in self.even_part)
        odd = ",".join(str(x) for x in self.odd_part)
        return f"{self.m}|{self.n}: {even} ; {odd}"


@dataclasses.dataclass(frozen=True)
class Labeling:
    """
    The labeling of the numberline attached to a weight.

    Attributes:
        crosses (frozenset[int]): Positions labeled ×, i.e. I_× minus I_○.
        circles (frozenset[int]): Positions labeled ○, i.e. I_○ minus I_×.
        vees (frozenset[int]): Positions labeled ∨, i.e. I_× ∩ I_○.
    """

    crosses: frozenset = frozenset()
    circles: frozenset = frozenset()
    vees: frozenset = frozenset()

    @property
    def i_cross(self) -> frozenset:
        """I_×(λ) = crosses ∪ vees."""
        return self.crosses | self.vees

    @property
    def i_circle(self) -> frozenset:
        """I_○(λ) = circles ∪ vees."""
        return self.circles | self.vees

    def label_at(self, position: int, ascii_only: bool = False) -> str:
        """
        Returns the label symbol at an integer position.

        Args:
            position (int): Position on the numberline.
            ascii_only (bool, optional): Use ``v ^ x o`` instead of ``∨ ∧ × ○``.
                Defaults to False.

        Returns:
            str: One label symbol.
        """
        table = ASCII_SYMBOLS if ascii_only else SYMBOLS
        if position in self.vees:
            return table["vee"]
        if position in self.crosses:
            return table["cross"]
        if position in self.circles:
            return table["circle"]
        return table["up"]

    def default_window(self, n: int) -> tuple[int, int]:
        """
        The display window [min − 2, max + 2n] around all non-∧ labels.

        Args:
            n (int): Number of odd rows of the weight.

        Returns:
            tuple[int, int]: Inclusive window bounds.
        """
        marked = self.crosses | self.circles | self.vees
        if not marked:
            return (-2, 2 * n)
        return (min(marked) - 2, max(marked) + 2 * n)

    def window(self, lower: int, upper: int, ascii_only: bool = False) -> str:
        """
        Renders the labels of the positions lower..upper as a string.

        Args:
            lower (int): First position shown.
            upper (int): Last position shown.
            ascii_only (bool, optional): Use ASCII symbols. Defaults to False.

        Returns:
            str: One symbol per position.
        """
        return "".join(self.label_at(x, ascii_only) for x in range(lower, upper + 1))


@dataclasses.dataclass(frozen=True)
class BlockId:
    """
    A block of Gl(m|n), given by the positions of its crosses and circles.

    Attributes:
        crosses (tuple[int, ...]): Sorted cross positions.
        circles (tuple[int, ...]): Sorted circle positions.
        m (int): Even rank.
        n (int): Odd rank.
    """

    crosses: tuple[int, ...]
    circles: tuple[int, ...]
    m: int
    n: int

    @property
    def atypicality(self) -> int:
        """Degree of atypicality r = n − |circles|."""
        return self.n - len(self.circles)

    @property
    def is_maximal_atypical(self) -> bool:
        """True iff the block carries no circle."""
        return not self.circles


@dataclasses.dataclass(frozen=True)
class ExtProfile:
    """
    Dimension of a self-Ext group in one degree.

    Attributes:
        degree (int): Cohomological degree j ≥ 0.
        dimension (int): dim Ext^j.
    """

    degree: int
    dimension: int


def validate_weight(m: int, n: int, parts: Sequence[int]) -> SuperWeight:
    """
    Checks a weight vector and wraps it into a `SuperWeight`.

    Args:
        m (int): Even rank, m ≥ 1.
        n (int): Odd rank, 0 ≤ n ≤ m.
        parts (Sequence[int]): The m + n entries.

    Returns:
        SuperWeight: The validated weight.

    Raises:
        BadShape: If m < n, m < 1, n < 0 or the vector has the wrong length.
        DominanceViolation: If λ_i < λ_{i+1} inside one of the two chains.
    """
    if m < 1 or n < 0 or m < n:
        logging.error("Invalid shape Gl(%s|%s); need m >= n >= 0 and m >= 1.", m, n)
        raise BadShape(f"invalid shape Gl({m}|{n}): need m >= n >= 0 and m >= 1")
    values = tuple(int(x) for x in parts)
    if len(values) != m + n:
        logging.error("Weight of length %s given for Gl(%s|%s).", len(values), m, n)
        raise BadShape(f"expected {m + n} entries for Gl({m}|{n}), got {len(values)}")

    for start, stop in ((0, m), (m, m + n)):
        for i in range(start, stop - 1):
            if values[i] < values[i + 1]:
                logging.error("Dominance violated at index %s of %s.", i + 1, values)
                raise DominanceViolation(
                    i + 1, f"λ_{i + 1} = {values[i]} < λ_{i + 2} = {values[i + 1]}"
                )
    return SuperWeight(m, n, values)


def labeling(w: SuperWeight) -> Labeling:
    """
    Computes the labeling of the numberline attached to a weight.

    I_× = {λ_i − i + 1 : i = 1..m} and I_○ = {i − m − λ_{m+i} : i = 1..n}; their
    intersection is labeled ∨, the rest of I_× by × and the rest of I_○ by ○.

    Args:
        w (SuperWeight): A valid weight.

    Returns:
        Labeling: The labeling of w.
    """
    i_cross = {w.parts[i] - i for i in range(w.m)}
    i_circle = {(i + 1) - w.m - w.parts[w.m + i] for i in range(w.n)}
    return Labeling(
        crosses=frozenset(i_cross - i_circle),
        circles=frozenset(i_circle - i_cross),
        vees=frozenset(i_cross & i_circle),
    )


def weight_from_labeling(m: int, n: int, lab: Labeling) -> SuperWeight:
    """
    Recovers the weight from its labeling.

    With I_× sorted descending q_1 > … > q_m the even entries are λ_i = q_i + i − 1;
    with I_○ sorted ascending p_1 < … < p_n the odd entries are λ_{m+i} = i − m − p_i.

    Args:
        m (int): Even rank.
        n (int): Odd rank.
        lab (Labeling): A labeling with |crosses| + |vees| = m and |circles| + |vees| = n.

    Returns:
        SuperWeight: The weight whose labeling is `lab`.

    Raises:
        CardinalityMismatch: If the label counts do not fit Gl(m|n) or the sets overlap.
    """
    crosses, circles, vees = set(lab.crosses), set(lab.circles), set(lab.vees)
    if crosses & circles or crosses & vees or circles & vees:
        logging.error("Labeling sets overlap: %s", lab)
        raise CardinalityMismatch("crosses, circles and vees must be pairwise disjoint")
    if len(crosses) + len(vees) != m or len(circles) + len(vees) != n:
        logging.error(
            "Labeling with %s crosses, %s circles, %s vees does not fit Gl(%s|%s).",
            len(crosses), len(circles), len(vees), m, n,
        )
        raise CardinalityMismatch(
            f"need |crosses|+|vees| = {m} and |circles|+|vees| = {n}"
        )
    q = sorted(crosses | vees, reverse=True)
    p = sorted(circles | vees)
    even = [q[i] + i for i in range(m)]
    odd = [(i + 1) - m - p[i] for i in range(n)]
    return validate_weight(m, n, even + odd)


def twist_by_berezin(w: SuperWeight, k: int) -> SuperWeight:
    """
    Tensors a weight with Ber^k: adds k to λ_1..λ_m and subtracts k from λ_{m+1}..λ_{m+n}.

    Args:
        w (SuperWeight): A valid weight.
        k (int): Power of the Berezin, any integer.

    Returns:
        SuperWeight: The twisted weight. Every label moves by +k on the numberline.
    """
    return SuperWeight(
        w.m, w.n, tuple(x + k for x in w.even_part) + tuple(x - k for x in w.odd_part)
    )

