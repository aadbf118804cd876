"""
cup_diagram_plot
================

Text and SVG pictures of the cup diagram of a maximal atypical weight.

The labels sit on a horizontal ruler over the real numberline (crosses included); cups hang below
as arcs. The sectors and segments are listed in compacted coordinates.

Functions:
    render_ascii: One text row of labels, one row per nesting height and two summary rows.
    render_svg: A deterministic SVG document drawn with matplotlib.

Example:
    ```python
    print(render_ascii(CompactedDiagram((0, 1)), ascii_only=True))
    # ^ v v ^ ^ ^
    #   | \\_/ |
    #   \\_____/
    # sectors: [0,3]
    # segments: [0,3]
    ```
"""

from __future__ import annotations

import io
import logging

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Arc

from ..data_structures.cup_diagram import CompactedDiagram, build, expand_position
from ..data_structures.super_weight import Labeling

logging.basicConfig(
    level=logging.WARNING, format="%(asctime)s - %(levelname)s - %(message)s"
)


def _real_cups(d: CompactedDiagram) -> list[tuple[int, int, int]]:
    """(open, close, height) on the real line; height 1 for cups with nothing inside."""
    cups = build(d).cups
    heights: dict[tuple[int, int], int] = {}
    for a, b in sorted(cups, key=lambda cup: cup[1] - cup[0]):
        inner = [heights[c] for c in heights if a < c[0] and c[1] < b]
        heights[(a, b)] = 1 + max(inner, default=0)
    return [
        (expand_position(a, d.crosses), expand_position(b, d.crosses), heights[(a, b)])
        for a, b in cups
    ]


def _window(d: CompactedDiagram, cups: list[tuple[int, int, int]]) -> tuple[int, int]:
    marked = [x for cup in cups for x in cup[:2]] + list(d.crosses)
    if not marked:
        return 0, 0
    return min(marked) - 1, max(marked) + 1


def _summary(d: CompactedDiagram) -> list[str]:
    cups = build(d)

    def intervals(pairs):
        return " ".join(f"[{a},{b}]" for a, b in pairs) or "-"

    return [f"sectors: {intervals(cups.sectors)}", f"segments: {intervals(cups.segments)}"]


def render_ascii(d: CompactedDiagram, ascii_only: bool = False) -> str:
    """
    Draws a diagram as text.

    Args:
        d (CompactedDiagram): The diagram; its crosses are drawn as ×.
        ascii_only (bool, optional): Use ``v ^ x`` for the labels. Defaults to False.

    Returns:
        str: The picture, lines separated by newlines, no trailing whitespace.
    """
    cups = _real_cups(d)
    lower, upper = _window(d, cups)
    lab = Labeling(crosses=frozenset(d.crosses), vees=frozenset(d.real_vees()))
    width = 2 * (upper - lower) + 1

    def column(x: int) -> int:
        return 2 * (x - lower)

    lines = [" ".join(lab.label_at(x, ascii_only) for x in range(lower, upper + 1))]
    for row in range(1, max((h for *_, h in cups), default=0) + 1):
        cells = [" "] * width
        for a, b, height in cups:
            if height > row:
                cells[column(a)] = cells[column(b)] = "|"
            elif height == row:
                cells[column(a)], cells[column(b)] = "\\", "/"
                for k in range(column(a) + 1, column(b)):
                    cells[k] = "_"
        lines.append("".join(cells).rstrip())
    lines.extend(_summary(d))
    return "\n".join(lines)


def render_svg(d: CompactedDiagram, ascii_only: bool = False) -> str:
    """
    Draws a diagram as an SVG document.

    The output is byte-identical for identical input: the SVG id salt is fixed and no date is
    written.

    Args:
        d (CompactedDiagram): The diagram.
        ascii_only (bool, optional): Use ASCII label symbols. Defaults to False.

    Returns:
        str: The SVG document.
    """
    cups = _real_cups(d)
    lower, upper = _window(d, cups)
    lab = Labeling(crosses=frozenset(d.crosses), vees=frozenset(d.real_vees()))
    depth = max((h for *_, h in cups), default=0)

    with matplotlib.rc_context({"svg.hashsalt": "sdimtools", "svg.fonttype": "none"}):
        fig = Figure(figsize=(max(2.0, 0.5 * (upper - lower + 2)), 1.5 + 0.5 * depth))
        ax = fig.add_subplot()
        ax.hlines(0, lower - 0.5, upper + 0.5, color="black", linewidth=0.8)
        for x in range(lower, upper + 1):
            symbol = lab.label_at(x, ascii_only)
            if x in d.crosses:
                ax.plot([x], [0], marker="x", color="firebrick", markersize=8)
            else:
                ax.text(x, 0.25, symbol, ha="center", va="bottom", fontsize=12)
            ax.text(x, 0.9, str(x), ha="center", va="bottom", fontsize=7, color="grey")
        for a, b, height in cups:
            ax.add_patch(
                Arc(
                    ((a + b) / 2, 0),
                    width=b - a,
                    height=height,
                    theta1=180,
                    theta2=360,
                    linewidth=1.2,
                )
            )
        ax.text(
            lower - 0.5,
            -0.5 * depth - 0.6,
            "   ".join(_summary(d)),
            ha="left",
            va="top",
            fontsize=8,
        )
        ax.set_xlim(lower - 1, upper + 1)
        ax.set_ylim(-0.5 * depth - 1.2, 1.4)
        ax.set_aspect("equal")
        ax.axis("off")

        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None}, bbox_inches="tight")
    return buffer.getvalue()
