"""
moves
=====

The basic move of a compacted diagram at a site [i, i+1] and the linear relation it induces on
multiplicities.

A site is a label ∨ at i with ∧ at i + 1, so (i, i + 1) is a cup. The site is encapsulated when
this cup lies inside another cup; (a, b) is then the innermost such cup. Otherwise [i, i + 1] is
a sector and (a, b) = (segment start − 1, segment end + 1). The sectors strictly inside (a, b)
are the interior sectors of the site.

Classes:
    MoveSite: A classified site.
    MiddleConstituent: One middle-layer summand of the expansion.
    MoveExpansion: All middle-layer summands at a site.
    Relation: 2·m(center) = Σ m(middle).

Functions:
    classify_site: Classifies one site of a diagram.
    move_sites: All sites of a diagram.
    expand: The middle layer of the move at a site.
    relation: The multiplicity relation of a site.
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Callable, Literal

from ..data_structures.cup_diagram import CompactedDiagram, build, build_from_vees
from ..errors import BadIndex

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)

MoveKind = Literal["Up", "Boundary", "InternalLower", "InternalUpper"]


@dataclasses.dataclass(frozen=True)
class MoveSite:
    """
    A site [i, i + 1] of a compacted diagram.

    Attributes:
        center (CompactedDiagram): The diagram carrying ∨ at i and ∧ at i + 1.
        i (int): Position of the moving ∨.
        encapsulated (bool): True iff the cup (i, i + 1) lies inside another cup.
        a (int): Left end of the active interval.
        b (int): Right end of the active interval.
        interior_sectors (tuple[tuple[int, int], ...]): Sectors strictly inside (a, b).
    """

    center: CompactedDiagram
    i: int
    encapsulated: bool
    a: int
    b: int
    interior_sectors: tuple[tuple[int, int], ...]

    @property
    def kind(self) -> str:
        return "encapsulated" if self.encapsulated else "unencapsulated"


@dataclasses.dataclass(frozen=True)
class MiddleConstituent:
    diagram: CompactedDiagram
    move: MoveKind
    multiplicity: int = 1


@dataclasses.dataclass(frozen=True)
class MoveExpansion:
    """
    The middle-layer constituents of the move at a site, in the order Up, Boundary,
    InternalLower (left to right), InternalUpper (left to right).
    """

    site: MoveSite
    middle: tuple[MiddleConstituent, ...]

    def diagrams(self) -> tuple[CompactedDiagram, ...]:
        """The middle diagrams, each repeated by its multiplicity."""
        return tuple(
            c.diagram for c in self.middle for _ in range(c.multiplicity)
        )


@dataclasses.dataclass(frozen=True)
class Relation:
    """The relation 2·m(lhs) = Σ_{d ∈ rhs} m(d)."""

    lhs: CompactedDiagram
    rhs: tuple[CompactedDiagram, ...]

    def holds(self, multiplicity: Callable[[CompactedDiagram], int]) -> bool:
        """Evaluates both sides with the given multiplicity function."""
        return 2 * multiplicity(self.lhs) == sum(multiplicity(d) for d in self.rhs)


def classify_site(d: CompactedDiagram, i: int) -> MoveSite:
    """
    Classifies the site [i, i + 1] of a diagram.

    Args:
        d (CompactedDiagram): The center diagram.
        i (int): A ∨ position with i + 1 not a ∨.

    Returns:
        MoveSite: The classified site.

    Raises:
        BadIndex: If there is no ∨ at i or there is a ∨ at i + 1.
    """
    vees = set(d.vees)
    if i not in vees or i + 1 in vees:
        logging.error("Position %s is not a site of %s.", i, d)
        raise BadIndex(f"position {i} is not a site of {d}: need ∨ at i and ∧ at i+1")

    cups = build(d)
    enclosing = cups.enclosing_cups(i)
    if enclosing:
        a, b = max(enclosing)
        inner = build_from_vees(x for x in d.vees if a < x < b)
        return MoveSite(d, i, True, a, b, inner.sectors)

    s, t = next((s, t) for s, t in cups.segments if s <= i <= t)
    sectors = tuple((x, y) for x, y in cups.sectors if s <= x and y <= t)
    return MoveSite(d, i, False, s - 1, t + 1, sectors)


def move_sites(d: CompactedDiagram) -> list[MoveSite]:
    """All sites of a diagram, ordered by position."""
    vees = set(d.vees)
    return [classify_site(d, i) for i in d.vees if i + 1 not in vees]


def expand(site: MoveSite) -> MoveExpansion:
    """
    Lists the middle-layer constituents of the move at a site.

    Args:
        site (MoveSite): A classified site.

    Returns:
        MoveExpansion: Up; Boundary when unencapsulated; InternalLower i → b_j for every
        interior sector with b_j < i; InternalUpper a_j → i + 1 for every interior sector
        with a_j > i + 1. Each constituent has multiplicity one.
    """
    d, i = site.center, site.i
    middle = [MiddleConstituent(d.moved(i, i + 1), "Up")]
    if not site.encapsulated:
        middle.append(MiddleConstituent(d.moved(i, site.a), "Boundary"))
    for _, right in site.interior_sectors:
        if right < i:
            middle.append(MiddleConstituent(d.moved(i, right), "InternalLower"))
    for left, _ in site.interior_sectors:
        if left > i + 1:
            middle.append(MiddleConstituent(d.moved(left, i + 1), "InternalUpper"))
    return MoveExpansion(site, tuple(middle))


def relation(site: MoveSite) -> Relation:
    """The relation 2·m(center) = Σ m(middle) of a site."""
    return Relation(site.center, expand(site).diagrams())
