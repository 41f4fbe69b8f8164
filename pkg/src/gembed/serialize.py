"""JSON documents for groups, cones, states and reports.

All integers are written as decimal strings; on input both strings and JSON
integers are accepted.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from . import lattice as lt
from .cones import Cone, HilbertBasis, cone_from_generators, cone_from_inequalities
from .errors import ParseError, ValidationError
from .rootdata import ParabolicType, RootDatum, WeylElement, build_root_datum, gl, torus
from .states import RepSupport, TorusState


def num(x: int) -> str:
    return str(int(x))


def nums(v) -> list[str]:
    return [num(x) for x in v]


def vectors(vs) -> list[list[str]]:
    return [nums(v) for v in vs]


def to_int(x: Any, what: str = "integer") -> int:
    if isinstance(x, bool):
        raise ParseError(f"{what}: expected an integer, got {x!r}")
    try:
        return lt.vec([x])[0]
    except ParseError:
        raise ParseError(f"{what}: expected an integer, got {x!r}") from None


def parse_vectors(doc: Any, what: str) -> list[lt.Vector]:
    if not isinstance(doc, list) or not all(isinstance(v, list) for v in doc):
        raise ParseError(f"{what}: expected a list of integer arrays")
    return [lt.vec(v) for v in doc]


# -- groups -------------------------------------------------------------------------


def group_from_doc(doc: Any) -> RootDatum:
    if not isinstance(doc, dict):
        raise ParseError("group: expected an object")
    if "gl" in doc:
        return gl(to_int(doc["gl"], "gl"))
    if "torus" in doc:
        return torus(to_int(doc["torus"], "torus"))
    if "family" in doc:
        return build_root_datum(str(doc["family"]), to_int(doc.get("semisimple_rank", 0), "semisimple_rank"),
                                to_int(doc.get("central_rank", 0), "central_rank"))
    if "simple_roots" in doc:
        return RootDatum(to_int(doc["rank"], "rank"),
                         tuple(parse_vectors(doc["simple_roots"], "simple_roots")),
                         tuple(parse_vectors(doc.get("simple_coroots", []), "simple_coroots")))
    raise ParseError("group: expected one of gl, torus, family, simple_roots")


def group_to_doc(rd: RootDatum) -> dict:
    d = rd.descriptor
    if d and d[0] in ("gl", "torus"):
        return {d[0]: num(d[1])}
    if d and d[0] == "family":
        return {"family": d[1], "semisimple_rank": num(d[2]), "central_rank": num(d[3])}
    return {"rank": num(rd.rank), "simple_roots": vectors(rd.simple_roots),
            "simple_coroots": vectors(rd.simple_coroots)}


# -- cones --------------------------------------------------------------------------


def cone_from_doc(doc: Any, rank: Optional[int] = None) -> Cone:
    """Parse {"generators": ...} or {"inequalities": ...}.

    When both are present (as in this package's own output) the cone is
    built from the generators and the inequalities must describe the same
    set.
    """
    if not isinstance(doc, dict):
        raise ParseError("cone: expected an object")
    if "ambient_rank" in doc:
        r = to_int(doc["ambient_rank"], "ambient_rank")
        if rank is not None and r != rank:
            raise ValidationError(f"cone ambient_rank {r} differs from group rank {rank}")
        rank = r
    gens = parse_vectors(doc["generators"], "generators") if "generators" in doc else None
    ineqs = parse_vectors(doc["inequalities"], "inequalities") if "inequalities" in doc else None
    if gens is None and ineqs is None:
        raise ParseError("cone: expected generators or inequalities")
    if rank is None:
        sample = (gens or []) + (ineqs or [])
        if not sample:
            raise ParseError("cone: rank unknown; give ambient_rank")
        rank = len(sample[0])
    if gens is not None:
        cone = cone_from_generators(rank, gens)
        if ineqs is not None and cone_from_inequalities(rank, ineqs) != cone:
            raise ValidationError("cone: generators and inequalities describe different cones")
        return cone
    return cone_from_inequalities(rank, ineqs)


def cone_to_doc(c: Cone) -> dict:
    return {
        "ambient_rank": num(c.ambient_rank),
        "dimension": num(c.dim),
        "pointed": c.is_pointed,
        "generators": vectors(c.generators),
        "inequalities": vectors(c.inequalities),
    }


def hilbert_to_doc(hb: HilbertBasis) -> dict:
    return {"elements": vectors(hb.elements), "units": vectors(hb.units), "has_units": hb.has_units}


# -- states ---------------------------------------------------------------------------


def state_from_doc(doc: Any) -> TorusState:
    if not isinstance(doc, dict) or "chars" not in doc:
        raise ParseError("state: expected an object with chars")
    rep = None
    if doc.get("rep") is not None:
        r = doc["rep"]
        if not isinstance(r, dict):
            raise ParseError("state.rep: expected an object")
        rep = RepSupport(tuple(parse_vectors(r.get("weights", []), "rep.weights")),
                         tuple(parse_vectors(r.get("support", []), "rep.support")))
    return TorusState(tuple(parse_vectors(doc["chars"], "chars")), rep)


def state_to_doc(s: TorusState) -> dict:
    out: dict = {"chars": vectors(s.chars)}
    if s.rep is not None:
        out["rep"] = {"weights": vectors(s.rep.weights), "support": vectors(s.rep.support)}
    return out


# -- Weyl data ---------------------------------------------------------------------------


def weyl_to_doc(w: WeylElement) -> dict:
    return {"matrix": vectors(w.matrix), "word": nums(w.word)}


def parabolic_to_doc(p: ParabolicType) -> dict:
    return {"roots": vectors(p.root_subset), "standard": p.standard_flag}


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
