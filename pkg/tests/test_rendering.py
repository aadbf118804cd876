import pytest

from sdimtools.data_structures.cup_diagram import CompactedDiagram, compact
from sdimtools.data_structures.super_weight import validate_weight
from sdimtools.rendering import render_ascii, render_svg


@pytest.mark.parametrize(
    "vees, expected",
    [
        ((0, 1), "^ v v ^ ^ ^\n  | \\_/ |\n  \\_____/\nsectors: [0,3]\nsegments: [0,3]"),
        ((0, 2), "^ v ^ v ^ ^\n  \\_/ \\_/\nsectors: [0,1] [2,3]\nsegments: [0,3]"),
        ((), "^\nsectors: -\nsegments: -"),
    ],
)
def test_render_ascii(vees, expected):
    assert render_ascii(CompactedDiagram(vees), ascii_only=True) == expected


def test_render_ascii_draws_crosses():
    picture = render_ascii(compact(validate_weight(3, 1, [1, 0, 0, 0])), ascii_only=True)
    lines = picture.splitlines()
    assert lines[0] == "^ v x ^ x ^"
    assert lines[1] == "  \\___/"
    assert lines[2] == "sectors: [-2,-1]"


def test_render_ascii_unicode_labels():
    first = render_ascii(CompactedDiagram((0,))).splitlines()[0]
    assert first == "∧ ∨ ∧ ∧"


def test_render_ascii_has_no_trailing_spaces():
    picture = render_ascii(CompactedDiagram((0, 1, 3, 6)), ascii_only=True)
    assert all(line == line.rstrip() for line in picture.splitlines())
    assert len(picture.splitlines()) == 1 + 2 + 2


def test_render_svg_is_deterministic():
    d = CompactedDiagram((0, 2, 3), crosses=(1,))
    first = render_svg(d)
    assert "<svg" in first
    assert first == render_svg(d)
    assert first != render_svg(CompactedDiagram((0, 2, 4)))
