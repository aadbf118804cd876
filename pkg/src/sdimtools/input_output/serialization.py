"""
serialization
=============

JSON forms of the domain objects. Keys are sorted and big integers are written as decimal
strings, so identical inputs give byte-identical documents.

Functions:
    to_dict: JSON-ready dictionary of a domain object.
    dumps: Deterministic JSON text of a domain object.
    weight_from_dict, diagram_from_dict, sdim_from_dict, expansion_from_dict: Inverse maps.
"""

import functools
import json
from typing import Any

from ..data_structures.cup_diagram import CompactedDiagram, CupDiagram, build
from ..data_structures.partition import Partition
from ..data_structures.super_weight import (
    BlockId,
    ExtProfile,
    Labeling,
    SuperWeight,
    validate_weight,
)
from ..invariants.moves import MiddleConstituent, MoveExpansion, MoveSite, classify_site
from ..invariants.multiplicity import IdentityReport, SdimResult
from ..invariants.reduction import KostantChain, ReductionTrace, TraceStep


def _pairs(pairs) -> list[list[int]]:
    return [[a, b] for a, b in pairs]


@functools.singledispatch
def to_dict(obj) -> Any:
    """JSON-ready form of a domain object."""
    raise TypeError(f"no JSON form for {type(obj).__name__}")


@to_dict.register
def _(obj: SuperWeight) -> dict:
    return {"m": obj.m, "n": obj.n, "even": list(obj.even_part), "odd": list(obj.odd_part)}


@to_dict.register
def _(obj: Labeling) -> dict:
    return {
        "crosses": sorted(obj.crosses),
        "circles": sorted(obj.circles),
        "vees": sorted(obj.vees),
    }


@to_dict.register
def _(obj: BlockId) -> dict:
    return {
        "m": obj.m,
        "n": obj.n,
        "crosses": list(obj.crosses),
        "circles": list(obj.circles),
        "atypicality": obj.atypicality,
    }


@to_dict.register
def _(obj: Partition) -> list:
    return list(obj.parts)


@to_dict.register
def _(obj: ExtProfile) -> dict:
    return {"degree": obj.degree, "dimension": str(obj.dimension)}


@to_dict.register
def _(obj: CupDiagram) -> dict:
    return {
        "vees": list(obj.vees),
        "cups": _pairs(obj.cups),
        "sectors": _pairs(obj.sectors),
        "segments": _pairs(obj.segments),
    }


@to_dict.register
def _(obj: CompactedDiagram) -> dict:
    result = to_dict(build(obj))
    result["crosses"] = list(obj.crosses)
    return result


@to_dict.register
def _(obj: MiddleConstituent) -> dict:
    return {"vees": list(obj.diagram.vees), "move": obj.move, "multiplicity": obj.multiplicity}


@to_dict.register
def _(obj: MoveSite) -> dict:
    return {"site": obj.i, "kind": obj.kind, "a": obj.a, "b": obj.b}


@to_dict.register
def _(obj: MoveExpansion) -> dict:
    result = to_dict(obj.site)
    result["center"] = to_dict(obj.site.center)
    result["middle"] = [to_dict(c) for c in obj.middle]
    return result


@to_dict.register
def _(obj: TraceStep) -> dict:
    return {
        "diagram": list(obj.diagram.vees),
        "algorithm": obj.pivot.algorithm,
        "depth": obj.pivot.depth,
        "lhs": list(obj.relation.lhs.vees),
        "site": obj.pivot.site.i,
        "rhs": [list(d.vees) for d in obj.relation.rhs],
    }


@to_dict.register
def _(obj: ReductionTrace) -> dict:
    return {
        "root": list(obj.root.vees),
        "steps": [to_dict(s) for s in obj.steps],
        "leaves": [
            {"vees": list(d.vees), "coefficient": str(c)} for d, c in obj.leaves.items()
        ],
        "m": str(obj.multiplicity),
    }


@to_dict.register
def _(obj: SdimResult) -> dict:
    return {
        "maximal_atypical": obj.maximal_atypical,
        "p": obj.p,
        "p_mod2": obj.p_mod2,
        "shift": obj.shift,
        "m": str(obj.multiplicity),
        "rho": list(obj.rho.parts),
        "det_twist": obj.det_twist,
        "dim_rho": str(obj.dim_rho),
        "sdim": str(obj.sdim),
    }


@to_dict.register
def _(obj: KostantChain) -> dict:
    return {
        "chain": [list(d.vees) for d in obj.chain],
        "pi": list(obj.pi.vees),
        "steps": [to_dict(e) for e in obj.expansions],
        "matches": obj.matches_expected(),
    }


@to_dict.register
def _(obj: IdentityReport) -> dict:
    return {
        "passed": obj.passed,
        "checked": obj.checked,
        "counterexample": (
            None
            if obj.counterexample is None
            else {"identity": obj.counterexample[0], "arguments": list(obj.counterexample[1])}
        ),
    }


def dumps(obj, **kwargs) -> str:
    """Deterministic JSON text of a domain object (or of a plain JSON value)."""
    try:
        payload = to_dict(obj)
    except TypeError:
        payload = obj
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, **kwargs)


def weight_from_dict(data: dict) -> SuperWeight:
    """Inverse of `to_dict` for weights."""
    return validate_weight(int(data["m"]), int(data["n"]), [*data["even"], *data["odd"]])


def diagram_from_dict(data: dict) -> CompactedDiagram:
    """Inverse of `to_dict` for diagrams; cups, sectors and segments are recomputed."""
    return CompactedDiagram(tuple(data["vees"]), tuple(data.get("crosses", ())))


def sdim_from_dict(data: dict) -> SdimResult:
    """Inverse of `to_dict` for superdimension results."""
    return SdimResult(
        maximal_atypical=bool(data["maximal_atypical"]),
        p=int(data["p"]),
        p_mod2=int(data["p_mod2"]),
        shift=int(data["shift"]),
        multiplicity=int(data["m"]),
        rho=Partition(tuple(data["rho"])),
        det_twist=int(data["det_twist"]),
        dim_rho=int(data["dim_rho"]),
        sdim=int(data["sdim"]),
    )


def expansion_from_dict(data: dict) -> MoveExpansion:
    """Inverse of `to_dict` for move expansions."""
    center = diagram_from_dict(data["center"])
    site = classify_site(center, int(data["site"]))
    middle = tuple(
        MiddleConstituent(center.with_vees(c["vees"]), c["move"], int(c["multiplicity"]))
        for c in data["middle"]
    )
    return MoveExpansion(site, middle)
