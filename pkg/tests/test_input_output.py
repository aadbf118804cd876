import json

import pytest

from sdimtools.data_structures.cup_diagram import CompactedDiagram
from sdimtools.data_structures.partition import Partition
from sdimtools.data_structures.super_weight import validate_weight
from sdimtools.errors import BadShape, DominanceViolation, ParseError
from sdimtools.input_output import (
    MemoCacheFile,
    dumps,
    parse_partition,
    parse_target,
    parse_vee_set,
    parse_weight,
    to_dict,
)
from sdimtools.input_output.serialization import (
    diagram_from_dict,
    expansion_from_dict,
    sdim_from_dict,
    weight_from_dict,
)
from sdimtools.invariants.moves import classify_site, expand
from sdimtools.invariants.multiplicity import sdim
from sdimtools.invariants.reduction import ReductionEngine, trace_diagram


@pytest.mark.parametrize(
    "text, parts",
    [
        ("3|1: 1,0,0 ; 0", (1, 0, 0, 0)),
        ("2|2:0,0;0,0", (0, 0, 0, 0)),
        ("  2|1 :  1, 1 ; -1 ", (1, 1, -1)),
        ("2|0: 3,-4", (3, -4)),
        ("2|0: 3,-4;", (3, -4)),
    ],
)
def test_parse_weight(text, parts):
    assert parse_weight(text).parts == parts


@pytest.mark.parametrize(
    "text, position",
    [
        ("2|1: 1,a;-1", 7),
        ("abc", 0),
        ("  x", 2),
        ("2|2: 1,0", 8),
        ("2|1: 1,1;-1;0", 11),
        ("2|1: 1,1;", None),
    ],
)
def test_parse_weight_errors(text, position):
    if position is None:
        with pytest.raises(BadShape):
            parse_weight(text)
        return
    with pytest.raises(ParseError) as error:
        parse_weight(text)
    assert error.value.position == position
    assert f"(at position {position})" in str(error.value)


def test_parse_weight_domain_errors():
    with pytest.raises(DominanceViolation) as error:
        parse_weight("2|1: 0,1;0")
    assert error.value.index == 1
    with pytest.raises(BadShape):
        parse_weight("1|2: 0;0,0")


def test_parse_vee_set():
    assert parse_vee_set("{0, 2, 4}") == (0, 2, 4)
    assert parse_vee_set("{3,-1}") == (-1, 3)
    assert parse_vee_set("{}") == ()
    with pytest.raises(ParseError) as error:
        parse_vee_set("{0,x}")
    assert error.value.position == 3
    with pytest.raises(ParseError) as error:
        parse_vee_set("{1,1}")
    assert error.value.position == 1
    with pytest.raises(ParseError):
        parse_vee_set("0,1")


def test_parse_partition():
    assert parse_partition("(3,1,1)") == Partition((3, 1, 1))
    assert parse_partition("2, 2") == Partition((2, 2))
    assert parse_partition("()") == Partition()
    with pytest.raises(ParseError) as error:
        parse_partition("(1,2)")
    assert error.value.position == 1


def test_parse_target():
    assert parse_target("vees {0,2}") == validate_weight(2, 2, [2, 1, -1, -2])
    assert parse_target("3|1: 1,0,0;0") == validate_weight(3, 1, [1, 0, 0, 0])
    with_crosses = parse_target("vees {-2}", crosses="{-1,1}")
    assert with_crosses == validate_weight(3, 1, [1, 0, 0, 0])
    with pytest.raises(ParseError):
        parse_target("3|1: 1,0,0;0", crosses="{1}")


def test_weight_json():
    w = validate_weight(2, 1, [1, 1, -1])
    assert to_dict(w) == {"m": 2, "n": 1, "even": [1, 1], "odd": [-1]}
    assert dumps(w) == '{"even": [1, 1], "m": 2, "n": 1, "odd": [-1]}'
    assert weight_from_dict(json.loads(dumps(w))) == w


def test_diagram_json():
    data = to_dict(CompactedDiagram((0, 1, 3)))
    assert data == {
        "vees": [0, 1, 3],
        "cups": [[0, 5], [1, 2], [3, 4]],
        "sectors": [[0, 5]],
        "segments": [[0, 5]],
        "crosses": [],
    }
    assert diagram_from_dict(data) == CompactedDiagram((0, 1, 3))


def test_expansion_json():
    expansion = expand(classify_site(CompactedDiagram((0, 2)), 2))
    data = to_dict(expansion)
    assert data["site"] == 2
    assert data["kind"] == "unencapsulated"
    assert [c["move"] for c in data["middle"]] == ["Up", "Boundary", "InternalLower"]
    assert [c["vees"] for c in data["middle"]] == [[0, 3], [-1, 0], [0, 1]]
    assert expansion_from_dict(json.loads(dumps(expansion))) == expansion


def test_sdim_json_uses_decimal_strings():
    result = sdim(validate_weight(2, 2, [2, 1, -1, -2]))
    data = to_dict(result)
    assert data["m"] == "2"
    assert data["sdim"] == "-2"
    assert sdim_from_dict(json.loads(dumps(result))) == result


def test_trace_json():
    data = to_dict(trace_diagram(CompactedDiagram((0, 2))))
    assert data["root"] == [0, 2]
    assert data["m"] == "2"
    assert data["steps"] == [
        {"diagram": [0, 2], "algorithm": "II", "depth": 0, "lhs": [0, 1], "site": 1, "rhs": [[0, 2]]}
    ]
    assert data["leaves"] == [{"vees": [0, 1], "coefficient": "2"}]


def test_dumps_plain_values_and_unknown_types():
    assert dumps({"b": 1, "a": "∨"}) == '{"a": "∨", "b": 1}'
    with pytest.raises(TypeError):
        to_dict(object())


def test_memo_cache_file_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        MemoCacheFile(str(tmp_path / "missing.json"))
    MemoCacheFile(str(tmp_path / "missing.json"), must_exist=False)


def test_memo_cache_file_round_trip(tmp_path):
    engine = ReductionEngine()
    engine.multiplicity(CompactedDiagram((0, 2, 4)))
    path = tmp_path / "cache" / "memo.json"
    cache = MemoCacheFile(str(path), must_exist=False)
    cache.write(engine.export())
    text = path.read_text(encoding="utf-8")
    assert '"{0,2,4}": "6"' in text

    loaded = MemoCacheFile(str(path)).read()
    assert loaded == engine.export()
    fresh = ReductionEngine()
    fresh.load(loaded)
    assert fresh.lookup((0, 2, 4)) == 6


def test_memo_cache_file_rejects_lists(tmp_path):
    path = tmp_path / "memo.json"
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ValueError):
        MemoCacheFile(str(path)).read()
