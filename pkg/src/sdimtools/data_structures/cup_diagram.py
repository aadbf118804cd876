"""
cup_diagram
===========

Defines the `CompactedDiagram` and `CupDiagram` classes.

A maximal atypical weight is determined by its crosses (the block) and the n positions of its
labels ∨. Deleting the crosses with the order-preserving map f(x) = x − #{c ∈ crosses : c < x}
gives a `CompactedDiagram`. Matching every ∨ to the nearest free ∧ on its right, exactly like
balanced brackets, gives the `CupDiagram` with its sectors (outermost cups) and segments
(maximal runs of adjacent sectors).

Example:
    Example usage of the cup diagram functions:

    ```python
    diagram = build(CompactedDiagram((0, 1, 3)))
    print(diagram.cups)      # ((0, 5), (1, 2), (3, 4))
    print(diagram.sectors)   # ((0, 5),)
    ```
"""

from __future__ import annotations

import bisect
import dataclasses
import logging
from typing import Iterable, Sequence

from ..errors import BadIndex, NotMaximalAtypical
from .super_weight import Labeling, SuperWeight, labeling, weight_from_labeling

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)


def compact_position(x: int, removed: Sequence[int]) -> int:
    """Applies f(x) = x − #{c ∈ removed : c < x}; `removed` must be sorted."""
    return x - bisect.bisect_left(removed, x)


def expand_position(y: int, removed: Sequence[int]) -> int:
    """Inverse of `compact_position` on the integers not in `removed` (sorted)."""
    x = y
    for c in removed:
        if c <= x:
            x += 1
        else:
            break
    return x


@dataclasses.dataclass(frozen=True)
class CompactedDiagram:
    """
    The ∨ positions of a maximal atypical weight after the crosses have been deleted.

    Attributes:
        vees (tuple[int, ...]): Sorted, distinct compacted ∨ positions.
        crosses (tuple[int, ...]): Sorted cross positions on the real numberline; they
            describe the back map to the weight and are ignored by the combinatorics.
    """

    vees: tuple[int, ...]
    crosses: tuple[int, ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(int(x) for x in self.vees))
        if len(set(ordered)) != len(ordered):
            raise ValueError(f"vee positions must be distinct, got {self.vees}")
        object.__setattr__(self, "vees", ordered)
        object.__setattr__(self, "crosses", tuple(sorted(int(c) for c in self.crosses)))

    @property
    def n(self) -> int:
        """Number of labels ∨."""
        return len(self.vees)

    def with_vees(self, vees: Iterable[int]) -> CompactedDiagram:
        """Same block, other ∨ positions."""
        return CompactedDiagram(tuple(vees), self.crosses)

    def moved(self, source: int, target: int) -> CompactedDiagram:
        """Moves the ∨ at `source` to the free position `target`."""
        vees = set(self.vees)
        vees.discard(source)
        vees.add(target)
        return self.with_vees(vees)

    def normalized(self) -> tuple[int, ...]:
        """The ∨ positions translated so that the smallest one sits at 0."""
        if not self.vees:
            return ()
        low = self.vees[0]
        return tuple(x - low for x in self.vees)

    def real_vees(self) -> tuple[int, ...]:
        """The ∨ positions on the real numberline (crosses put back)."""
        return tuple(expand_position(y, self.crosses) for y in self.vees)

    def to_weight(self) -> SuperWeight:
        """The weight of Gl(n + |crosses| | n) whose diagram this is."""
        n = self.n
        lab = Labeling(
            crosses=frozenset(self.crosses), vees=frozenset(self.real_vees())
        )
        return weight_from_labeling(n + len(self.crosses), n, lab)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.vees) + "}"


@dataclasses.dataclass(frozen=True)
class CupDiagram:
    """
    The cup diagram attached to a set of ∨ positions.

    Attributes:
        vees (tuple[int, ...]): Sorted ∨ positions.
        cups (tuple[tuple[int, int], ...]): (open, close) pairs sorted by open position.
        sectors (tuple[tuple[int, int], ...]): Outermost cups [a_j, b_j], left to right.
        segments (tuple[tuple[int, int], ...]): Maximal runs [s_j, t_j] of adjacent sectors.
    """

    vees: tuple[int, ...]
    cups: tuple[tuple[int, int], ...]
    sectors: tuple[tuple[int, int], ...]
    segments: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        """Number of cups."""
        return len(self.vees)

    def half_lengths(self) -> tuple[int, ...]:
        """The numbers n_j = (b_j − a_j + 1) / 2 of cups per sector."""
        return tuple((b - a + 1) // 2 for a, b in self.sectors)

    def interior(self, sector_index: int) -> CupDiagram:
        """
        The cup diagram strictly inside the outer cup of one sector.

        Args:
            sector_index (int): 0-based sector index.

        Returns:
            CupDiagram: The sub-diagram spanning [a + 1, b − 1].

        Raises:
            BadIndex: If there is no such sector.
        """
        if not 0 <= sector_index < len(self.sectors):
            logging.error(
                "Sector index %s out of range for %s sectors.",
                sector_index, len(self.sectors),
            )
            raise BadIndex(f"no sector with index {sector_index}")
        a, b = self.sectors[sector_index]
        return build_from_vees(x for x in self.vees if a < x < b)

    def is_fully_nested(self) -> bool:
        """True iff there is at most one sector and its interior is fully nested."""
        if not self.vees:
            return True
        if len(self.sectors) != 1:
            return False
        return self.interior(0).is_fully_nested()

    def translate(self, shift: int) -> CupDiagram:
        """Shifts every position by `shift`."""

        def move(pairs):
            return tuple((a + shift, b + shift) for a, b in pairs)

        return CupDiagram(
            vees=tuple(x + shift for x in self.vees),
            cups=move(self.cups),
            sectors=move(self.sectors),
            segments=move(self.segments),
        )

    def enclosing_cups(self, opening: int) -> list[tuple[int, int]]:
        """All cups strictly containing the cup that opens at `opening`."""
        close = dict(self.cups)[opening]
        return [(a, b) for a, b in self.cups if a < opening and b > close]

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.vees) + "}"


def build_from_vees(vees: Iterable[int]) -> CupDiagram:
    """
    Matches ∨ positions like opening brackets.

    Every ∨ is pushed on a stack; every other position closes the most recent open ∨.

    Args:
        vees (Iterable[int]): Distinct ∨ positions.

    Returns:
        CupDiagram: The cup diagram with its sectors and segments.
    """
    ordered = sorted(set(vees))
    if not ordered:
        return CupDiagram((), (), (), ())
    marked = set(ordered)

    cups = []
    sectors = []
    stack = []
    position = ordered[0]
    while position <= ordered[-1] or stack:
        if position in marked:
            stack.append(position)
        elif stack:
            opening = stack.pop()
            cups.append((opening, position))
            if not stack:
                sectors.append((opening, position))
        position += 1

    segments = []
    for a, b in sectors:
        if segments and segments[-1][1] == a - 1:
            segments[-1] = (segments[-1][0], b)
        else:
            segments.append((a, b))

    return CupDiagram(
        vees=tuple(ordered),
        cups=tuple(sorted(cups)),
        sectors=tuple(sectors),
        segments=tuple(segments),
    )


def build(d: CompactedDiagram) -> CupDiagram:
    """
    Builds the cup diagram of a compacted diagram.

    Args:
        d (CompactedDiagram): Compacted ∨ positions.

    Returns:
        CupDiagram: n non-crossing cups with sectors and segments.
    """
    return build_from_vees(d.vees)


def compact(w: SuperWeight) -> CompactedDiagram:
    """
    Deletes the crosses of a maximal atypical weight.

    Args:
        w (SuperWeight): A maximal atypical weight.

    Returns:
        CompactedDiagram: The compacted ∨ positions with the crosses kept as back map.

    Raises:
        NotMaximalAtypical: If the labeling of w carries a circle.
    """
    lab = labeling(w)
    if lab.circles:
        logging.error("Weight %s is not maximal atypical.", w)
        raise NotMaximalAtypical(f"weight {w} is not maximal atypical")
    crosses = tuple(sorted(lab.crosses))
    vees = tuple(compact_position(x, crosses) for x in lab.vees)
    if not vees:
        logging.warning("Weight %s has no labels ∨ (n = 0).", w)
    return CompactedDiagram(vees, crosses)


def translate(c: CupDiagram, shift: int) -> CupDiagram:
    """Shifts every position of a cup diagram by `shift`."""
    return c.translate(shift)


def interior(c: CupDiagram, sector_index: int) -> CupDiagram:
    """The cup diagram strictly inside one sector; see `CupDiagram.interior`."""
    return c.interior(sector_index)


def is_fully_nested(c: CupDiagram) -> bool:
    """True iff the cups of `c` are completely nested; see `CupDiagram.is_fully_nested`."""
    return c.is_fully_nested()
