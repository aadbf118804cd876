"""
weight_parser
=============

Parsers for the text forms used on the command line and in batch files.

* weights: ``"m|n: a1,...,am ; b1,...,bn"`` with optional spaces and negative integers;
* ∨ sets: ``"{0,2,4}"``;
* partitions: ``"(3,1,1)"`` (parentheses optional);
* targets: a weight, or ``"vees {0,2,4}"`` with an optional cross set.

Every failure raises `ParseError` carrying the 0-based character offset.

Example:
    ```python
    w = parse_weight("3|1: 1,0,0 ; 0")
    parse_vee_set("{0, 2, 4}")      # (0, 2, 4)
    ```
"""

from __future__ import annotations

import logging
import re
from typing import Optional

from ..data_structures.cup_diagram import CompactedDiagram
from ..data_structures.partition import Partition
from ..data_structures.super_weight import SuperWeight, validate_weight
from ..errors import ParseError

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)

HEADER_PATTERN = re.compile(r"\s*(\d+)\s*\|\s*(\d+)\s*:")
INTEGER_PATTERN = re.compile(r"\s*([+-]?\d+)\s*")
VEE_SET_PATTERN = re.compile(r"\s*\{(.*)\}\s*")
PARTITION_PATTERN = re.compile(r"\s*\((.*)\)\s*")
VEES_KEYWORD = re.compile(r"\s*vees\s+", re.IGNORECASE)


def _fail(message: str, text: str, position: int):
    logging.error("Cannot parse '%s': %s at position %s.", text, message, position)
    raise ParseError(message, position)


def _integers(text: str, body: str, offset: int) -> list[int]:
    """Comma separated integers of `body`, which starts at `offset` inside `text`."""
    if not body.strip():
        return []
    values = []
    start = 0
    for item in body.split(","):
        match = INTEGER_PATTERN.fullmatch(item)
        if match is None:
            stripped = len(item) - len(item.lstrip())
            _fail(f"expected an integer, got '{item.strip()}'", text, offset + start + stripped)
        values.append(int(match.group(1)))
        start += len(item) + 1
    return values


def parse_weight(text: str) -> SuperWeight:
    """
    Parses ``"m|n: a1,...,am ; b1,...,bn"``.

    Args:
        text (str): The weight text. The ``;`` may be omitted when n = 0.

    Returns:
        SuperWeight: The validated weight.

    Raises:
        ParseError: On malformed text.
        BadShape: On a wrong number of entries.
        DominanceViolation: On a non-dominant vector.
    """
    header = HEADER_PATTERN.match(text)
    if header is None:
        _fail("expected 'm|n:'", text, len(text) - len(text.lstrip()))
    m, n = int(header.group(1)), int(header.group(2))
    body_start = header.end()
    body = text[body_start:]

    if ";" in body:
        split = body.index(";")
        if ";" in body[split + 1 :]:
            _fail("more than one ';'", text, body_start + body.index(";", split + 1))
        even = _integers(text, body[:split], body_start)
        odd = _integers(text, body[split + 1 :], body_start + split + 1)
    elif n == 0:
        even, odd = _integers(text, body, body_start), []
    else:
        _fail("expected ';' between the even and the odd entries", text, len(text))
    return validate_weight(m, n, even + odd)


def parse_vee_set(text: str) -> tuple[int, ...]:
    """
    Parses ``"{0,2,4}"`` into sorted distinct positions.

    Raises:
        ParseError: On malformed text or repeated positions.
    """
    match = VEE_SET_PATTERN.fullmatch(text)
    if match is None:
        _fail("expected '{...}'", text, len(text) - len(text.lstrip()))
    values = _integers(text, match.group(1), match.start(1))
    if len(set(values)) != len(values):
        _fail("repeated position", text, match.start(1))
    return tuple(sorted(values))


def parse_partition(text: str) -> Partition:
    """
    Parses ``"(3,1,1)"`` or ``"3,1,1"``.

    Raises:
        ParseError: On malformed text or a sequence that is not a partition.
    """
    match = PARTITION_PATTERN.fullmatch(text)
    body, offset = (match.group(1), match.start(1)) if match else (text, 0)
    values = _integers(text, body, offset)
    if any(x < 0 for x in values) or any(a < b for a, b in zip(values, values[1:])):
        _fail("parts must be non-negative and weakly decreasing", text, offset)
    return Partition(tuple(values))


def parse_target(text: str, crosses: Optional[str] = None) -> SuperWeight:
    """
    Parses a weight or a compacted ∨ set.

    Args:
        text (str): A weight, or ``"vees {…}"`` with compacted ∨ positions.
        crosses (str, optional): ``"{…}"`` cross positions for the ∨ form. Defaults to none,
            which gives a weight of Gl(n|n).

    Returns:
        SuperWeight: The weight.

    Raises:
        ParseError: On malformed text.
    """
    keyword = VEES_KEYWORD.match(text)
    if keyword is None:
        if crosses:
            _fail("crosses are only accepted with 'vees {...}'", text, 0)
        return parse_weight(text)
    vees = parse_vee_set(text[keyword.end() :])
    cross_set = parse_vee_set(crosses) if crosses else ()
    return CompactedDiagram(vees, cross_set).to_weight()
