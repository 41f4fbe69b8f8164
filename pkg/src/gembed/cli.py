"""Command-line interface: one JSON job in, one JSON document out.

Exit codes: 0 success, 1 unparseable input, 2 validation or classification
failure, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import cones as cn
from . import embeddings as emb
from . import rootdata as rdm
from . import serialize as ser
from . import states as st
from .errors import GembedError, ParseError, ResourceLimitError
from .selftest import run_selftest

log = logging.getLogger("gembed")

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class JobSpec:
    command: str
    group: Optional[dict] = None
    cone: Optional[dict] = None
    state: Optional[dict] = None
    params: dict = field(default_factory=dict)
    cap_weyl: int = rdm.DEFAULT_WEYL_CAP
    cap_enum: int = cn.DEFAULT_MAX_COORDINATE

    @classmethod
    def from_doc(cls, doc: Any) -> "JobSpec":
        if not isinstance(doc, dict):
            raise ParseError("job: expected a JSON object")
        caps = doc.get("caps") or {}
        params = doc.get("params") or {}
        if not isinstance(params, dict) or not isinstance(caps, dict):
            raise ParseError("job: params and caps must be objects")
        job = cls(
            command=str(doc.get("command", "")),
            group=doc.get("group"),
            cone=doc.get("cone"),
            state=doc.get("state"),
            params=params,
        )
        if "weyl" in caps:
            job.cap_weyl = ser.to_int(caps["weyl"], "caps.weyl")
        if "enum" in caps:
            job.cap_enum = ser.to_int(caps["enum"], "caps.enum")
        return job

    # -- accessors raising ParseError on missing pieces

    def rd(self) -> rdm.RootDatum:
        if self.group is None:
            raise ParseError(f"{self.command}: job needs a group")
        return ser.group_from_doc(self.group)

    def sigma(self, rank: Optional[int] = None, key: Optional[str] = None) -> cn.Cone:
        doc = self.cone if key is None else self.params.get(key)
        if doc is None:
            raise ParseError(f"{self.command}: job needs {'a cone' if key is None else 'params.' + key}")
        return ser.cone_from_doc(doc, rank)

    def torus_state(self) -> st.TorusState:
        if self.state is None:
            raise ParseError(f"{self.command}: job needs a state")
        return ser.state_from_doc(self.state)

    def vector(self, key: str) -> tuple[int, ...]:
        if key not in self.params:
            raise ParseError(f"{self.command}: job needs params.{key}")
        return ser.parse_vectors([self.params[key]], key)[0]


def _embedding(job: JobSpec) -> emb.GEmbedding:
    rd = job.rd()
    state = job.torus_state() if job.state is not None else None
    return emb.validate(rd, job.sigma(rd.rank), state, job.cap_weyl)


def embedding_doc(e: emb.GEmbedding) -> dict:
    out = {"group": ser.group_to_doc(e.rd), "cone": ser.cone_to_doc(e.sigma),
           "strongly_convex": e.strongly_convex, "biequivariant": e.biequivariant}
    if e.state is not None:
        out["state"] = ser.state_to_doc(e.state)
    return out


def witness_doc(w: Optional[emb.MorphismWitness]) -> Optional[dict]:
    if w is None:
        return None
    return {"conjugator": ser.weyl_to_doc(w.w), "verified": w.verify(),
            "certificate": [{"generator": ser.nums(g), "pairings": ser.nums(p)} for g, p in w.certificate]}


def cmd_validate(job: JobSpec) -> dict:
    return embedding_doc(_embedding(job))


def cmd_dual(job: JobSpec) -> dict:
    return {"cone": ser.cone_to_doc(cn.dual_cone(job.sigma()))}


def cmd_hilbert(job: JobSpec) -> dict:
    return {"hilbert_basis": ser.hilbert_to_doc(cn.hilbert_basis(job.sigma(), job.cap_enum))}


def cmd_weight_monoid(job: JobSpec) -> dict:
    e = _embedding(job)
    return {"weight_monoid": ser.hilbert_to_doc(emb.weight_monoid(e, job.cap_enum))}


def cmd_rays(job: JobSpec) -> dict:
    c = job.sigma()
    return {"rays": ser.vectors(cn.rays(c)), "lineality": ser.vectors(c.lineality), "pointed": c.is_pointed}


def cmd_mu(job: JobSpec) -> dict:
    return {"mu": ser.num(st.mu(job.torus_state(), job.vector("gamma")))}


def cmd_dual_set(job: JobSpec) -> dict:
    return {"cone": ser.cone_to_doc(st.dual_set(job.torus_state()))}


def cmd_saturate(job: JobSpec) -> dict:
    rd, state = job.rd(), job.torus_state()
    if state.rep is not None:
        state = st.rep_state(rd, state.rep, job.cap_weyl)
    bounds = st.saturation_bounds(rd, state, job.cap_weyl)
    return {"state": ser.state_to_doc(st.saturate_state(rd, state, job.cap_weyl)),
            "bounds": {"lower": ser.vectors(bounds.lower),
                       "upper": None if bounds.upper is None else ser.vectors(bounds.upper),
                       "exact": bounds.exact}}


def cmd_biequiv_check(job: JobSpec) -> dict:
    e = _embedding(job)
    moved = [ser.weyl_to_doc(w) for w in rdm.weyl_group(e.rd, job.cap_weyl) if cn.apply(w, e.sigma) != e.sigma]
    return {"biequivariant": not moved, "moving_elements": moved}


def cmd_resolve(job: JobSpec) -> dict:
    e = _embedding(job)
    res, witness = emb.biequivariant_resolution(e, job.cap_weyl)
    return {"resolution": ser.cone_to_doc(res.sigma), "biequivariant": res.biequivariant,
            "idempotent_input": res.sigma == e.sigma, "witness": witness_doc(witness)}


def cmd_morphism(job: JobSpec) -> dict:
    src = _embedding(job)
    dst = emb.validate(src.rd, job.sigma(src.rd.rank, "target"), None, job.cap_weyl)
    w = emb.morphism_exists(src, dst, job.cap_weyl)
    return {"exists": w is not None, "witness": witness_doc(w)}


def cmd_universal_check(job: JobSpec) -> dict:
    x = _embedding(job)
    y = emb.validate(x.rd, job.sigma(x.rd.rank, "y"), None, job.cap_weyl)
    rep = emb.universal_property_check(y, x, job.cap_weyl)
    return {"resolution": ser.cone_to_doc(rep.resolution), "y_in_resolution": rep.y_in_resolution,
            "resolution_in_x": rep.resolution_in_x, "counterexample": rep.counterexample}


def cmd_divisor_classes(job: JobSpec) -> dict:
    rep = emb.one_skeleton_classes(_embedding(job), job.cap_weyl)
    return {
        "torus_ray_classes": ser.vectors(rep.torus_ray_classes),
        "torus_count": ser.num(rep.torus_count),
        "weyl_orbit_classes": [{"representative": ser.nums(c.representative), "members": ser.vectors(c.members)}
                               for c in rep.weyl_orbit_classes],
        "weyl_orbit_count": ser.num(rep.weyl_orbit_count),
        "genericity_flag": rep.genericity_flag,
        "nongeneric_rays": ser.vectors(rep.nongeneric_rays),
    }


def cmd_slice_complex(job: JobSpec) -> dict:
    cx = emb.toric_slice_complex(_embedding(job), job.cap_weyl)
    return {"cells": [{"parabolic": ser.parabolic_to_doc(c.parabolic), "cone": ser.cone_to_doc(c.cone),
                       "degenerate": c.degenerate} for c in cx.cells]}


def cmd_dominant(job: JobSpec) -> dict:
    g, w = rdm.dominant_representative(job.rd(), job.vector("gamma"))
    return {"dominant": ser.nums(g), "weyl_element": ser.weyl_to_doc(w)}


def cmd_parabolic_type(job: JobSpec) -> dict:
    rd = job.rd()
    p = rdm.parabolic_type(rd, job.vector("gamma"))
    return {"parabolic": ser.parabolic_to_doc(p), "delta_P": ser.cone_to_doc(rdm.delta_P_cone(rd, p))}


def cmd_weyl_order(job: JobSpec) -> dict:
    return {"order": ser.num(rdm.weyl_order(job.rd(), job.cap_weyl))}


def cmd_selftest(job: JobSpec) -> dict:
    scale = str(job.params.get("scale", "small"))
    if scale not in ("small", "full"):
        raise ParseError(f"selftest: unknown scale {scale!r}")
    return run_selftest(scale)


COMMANDS: dict[str, Callable[[JobSpec], dict]] = {
    "validate": cmd_validate,
    "dual": cmd_dual,
    "hilbert": cmd_hilbert,
    "weight-monoid": cmd_weight_monoid,
    "rays": cmd_rays,
    "mu": cmd_mu,
    "dual-set": cmd_dual_set,
    "saturate": cmd_saturate,
    "biequiv-check": cmd_biequiv_check,
    "resolve": cmd_resolve,
    "morphism": cmd_morphism,
    "universal-check": cmd_universal_check,
    "divisor-classes": cmd_divisor_classes,
    "slice-complex": cmd_slice_complex,
    "dominant": cmd_dominant,
    "parabolic-type": cmd_parabolic_type,
    "weyl-order": cmd_weyl_order,
    "selftest": cmd_selftest,
}


def run(job: JobSpec) -> tuple[dict, int]:
    """Execute one job; returns (output document, exit code)."""
    handler = COMMANDS.get(job.command)
    if handler is None:
        return _error(ParseError(f"unknown command {job.command!r}")), EXIT_PARSE
    try:
        doc = handler(job)
    except ResourceLimitError as exc:
        return _error(exc), EXIT_RESOURCE
    except ParseError as exc:
        return _error(exc), EXIT_PARSE
    except GembedError as exc:
        return _error(exc), EXIT_INVALID
    if job.command == "selftest" and not doc["passed"]:
        return {"command": job.command, **doc}, EXIT_INVALID
    return {"command": job.command, **doc}, EXIT_OK


def _error(exc: GembedError) -> dict:
    return {"error": {"kind": exc.kind, "reason": str(exc)}}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gembed", description=__doc__.splitlines()[0])
    p.add_argument("input_file", nargs="?", help="job document (default: standard input)")
    p.add_argument("--input", dest="input_opt", help="job document path, same as the positional argument")
    p.add_argument("--command", choices=sorted(COMMANDS), help="override the job's command")
    p.add_argument("--cap-weyl", type=int, help=f"Weyl group order cap (default {rdm.DEFAULT_WEYL_CAP})")
    p.add_argument("--cap-enum", type=int,
                   help=f"Hilbert enumeration coordinate bound (default {cn.DEFAULT_MAX_COORDINATE})")
    p.add_argument("--scale", choices=["small", "full"], help="selftest scale")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    path = args.input_opt or args.input_file
    try:
        if path is None and args.command == "selftest":
            raw = "{}"
        elif path is None or path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                raw = fh.read()
        doc = json.loads(raw) if raw.strip() else {}
        job = JobSpec.from_doc(doc)
    except (OSError, json.JSONDecodeError, ParseError) as exc:
        err = exc if isinstance(exc, ParseError) else ParseError(str(exc))
        print(f"gembed: {err}", file=sys.stderr)
        sys.stdout.write(ser.dumps(_error(err)))
        return EXIT_PARSE
    if args.command:
        job.command = args.command
    if args.cap_weyl is not None:
        job.cap_weyl = args.cap_weyl
    if args.cap_enum is not None:
        job.cap_enum = args.cap_enum
    if args.scale:
        job.params["scale"] = args.scale
    start = time.perf_counter()
    out, code = run(job)
    log.info("%s finished in %.2fs", job.command, time.perf_counter() - start)
    if code != EXIT_OK and "error" in out:
        print(f"gembed: {out['error']['reason']}", file=sys.stderr)
    sys.stdout.write(ser.dumps(out))
    sys.stdout.flush()
    return code
