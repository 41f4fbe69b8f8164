"""Oracle suites run by ``gembed selftest``.

Each suite compares the exact implementation against a brute-force
reference from :mod:`gembed.oracles` on a seeded random corpus, so reports
are reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from . import cones as cn
from . import lattice as lt
from . import oracles
from .embeddings import biequivariant_resolution, is_biequivariant, validate, weyl_intersection
from .rootdata import build_root_datum, dominant_representative, gl, weyl_group

SCALES = {"small": 30, "full": 400}
SEED = 20240601


@dataclass
class Suite:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, detail: str) -> None:
        self.cases += 1
        if ok:
            return
        if len(self.failures) < 10:
            self.failures.append(detail)
        elif self.failures[-1] != "...":
            self.failures.append("...")

    def to_doc(self) -> dict:
        return {"name": self.name, "cases": str(self.cases), "failures": self.failures,
                "passed": not self.failures}


def random_generators(rng: random.Random, n: int, k: int, bound: int = 5) -> list[tuple[int, ...]]:
    return [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(k)]


def random_pointed(rng: random.Random, n: int, max_gens: int = 4, bound: int = 5) -> list[tuple[int, ...]]:
    while True:
        gens = random_generators(rng, n, rng.randint(1, max_gens), bound)
        if any(any(g) for g in gens) and oracles.is_pointed(gens, n):
            return gens


def random_combination(rng: random.Random, gens, top: int = 2) -> tuple[int, ...]:
    coef = [rng.randint(0, top) for _ in gens]
    return tuple(sum(c * g[j] for c, g in zip(coef, gens)) for j in range(len(gens[0])))


def suite_weyl_tables(rng: random.Random, count: int) -> Suite:
    s = Suite("weyl-tables")
    cases = [("A", 2), ("B", 2), ("G2", 2), ("A", 3)]
    if count > SCALES["small"]:
        cases += [("C", 2), ("B", 3), ("D", 4)]
    for fam, r in cases:
        order = len(weyl_group(build_root_datum(fam, r)))
        s.check(order == oracles.WEYL_ORDERS[(fam, r)], f"{fam}{r}: order {order}")
    return s


def suite_dominant(rng: random.Random, count: int) -> Suite:
    s = Suite("dominant-representatives")
    for fam, r in [("A", 2), ("B", 2), ("G2", 2)]:
        rd = build_root_datum(fam, r)
        mats = [rd.reflection(i).matrix for i in range(rd.semisimple_rank)]
        for gamma in product(range(-3, 4), repeat=r):
            orb = oracles.orbit(mats, gamma)
            dom = [v for v in orb if rd.is_dominant(v)]
            reps = {dominant_representative(rd, v)[0] for v in orb}
            s.check(len(dom) == 1 and reps == set(dom), f"{rd}: orbit of {gamma}")
    return s


def suite_cone_oracles(rng: random.Random, count: int) -> Suite:
    s = Suite("cone-oracles")
    for _ in range(count):
        n = rng.randint(1, 3)
        gens = random_pointed(rng, n)
        c = cn.cone_from_generators(n, gens)
        s.check(c.is_pointed, f"pointedness {gens}")
        s.check(cn.dual_cone(cn.dual_cone(c)) == c, f"involution {gens}")
        hb = cn.hilbert_basis(c).elements
        s.check(list(hb) == oracles.hilbert_basis(gens, n), f"hilbert {gens}")
        if c.is_full_dimensional:
            s.check(list(c.facets) == oracles.facet_normals(gens, n), f"facets {gens}")
        d = cn.dual_cone(c)
        ok = all(cn.contains(d, chi) == all(lt.pair(chi, g) >= 0 for g in gens)
                 for chi in product(range(-3, 4), repeat=n))
        s.check(ok, f"dual membership {gens}")
    return s


def suite_membership(rng: random.Random, count: int) -> Suite:
    s = Suite("membership")
    for _ in range(count):
        n = rng.randint(1, 3)
        gens = random_generators(rng, n, rng.randint(0, 4))
        c = cn.cone_from_generators(n, gens)
        ok = all(cn.contains(c, v) == oracles.caratheodory_contains(gens, v)
                 for v in product(range(-2, 3), repeat=n))
        s.check(ok, f"membership {gens}")
    return s


def suite_resolution(rng: random.Random, count: int) -> Suite:
    s = Suite("resolution-properties")
    groups = [gl(2), gl(3), build_root_datum("B", 2)]
    for i in range(count):
        rd = groups[i % len(groups)]
        sigma = cn.cone_from_generators(rd.rank, random_pointed(rng, rd.rank, bound=3))
        e = validate(rd, sigma)
        res, witness = biequivariant_resolution(e)
        s.check(is_biequivariant(res), f"{rd}: stability {sigma}")
        s.check(res.sigma.is_pointed, f"{rd}: strong convexity {sigma}")
        s.check(witness.verify() and cn.contains_cone(sigma, res.sigma), f"{rd}: inclusion {sigma}")
        rho = cn.cone_from_generators(rd.rank, [random_combination(rng, sigma.generators) for _ in range(2)])
        tau = weyl_intersection(rd, rho)
        s.check(cn.contains_cone(res.sigma, tau), f"{rd}: maximality {sigma} vs {rho}")
    return s


SUITES: list[Callable[[random.Random, int], Suite]] = [
    suite_weyl_tables, suite_dominant, suite_cone_oracles, suite_membership, suite_resolution,
]


def run_selftest(scale: str = "small") -> dict:
    if scale not in SCALES:
        raise ValueError(f"unknown scale {scale!r}")
    count = SCALES[scale]
    suites = []
    for make in SUITES:
        suites.append(make(random.Random(f"{SEED}:{make.__name__}"), count).to_doc())
    return {"scale": scale, "seed": str(SEED), "suites": suites,
            "passed": all(x["passed"] for x in suites)}
