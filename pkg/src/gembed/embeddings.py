"""Affine embeddings of a reductive group through their torus-slice cone.

An embedding is classified by a strongly convex cone of one-parameter
subgroups; on the fixed maximal torus this is a strongly convex rational
polyhedral cone ``sigma`` in the cocharacter lattice.  Conjugating the base
point moves ``sigma`` by the Weyl group, the coordinate algebra restricted to
the torus is the monoid of lattice points of the dual cone, and the
biequivariant resolution is the largest Weyl-stable subcone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import lattice as lt
from .cones import (
    DEFAULT_MAX_COORDINATE,
    Cone,
    HilbertBasis,
    apply,
    contains,
    contains_cone,
    dual_cone,
    intersect,
    intersect_all,
    is_strongly_convex,
    monoid_basis,
)
from .errors import ClassificationError, DimensionError, PreconditionError, ValidationError
from .lattice import CharVec, CocharVec
from .rootdata import (
    DEFAULT_WEYL_CAP,
    ParabolicType,
    RootDatum,
    WeylElement,
    all_parabolic_types,
    delta_P_cone,
    dominant_representative,
    weyl_group,
)
from .states import TorusState, conjugate_state, dual_set

STRONG_CONVEXITY_MESSAGE = "strong convexity violated: contains γ and γ⁻¹"


@dataclass(frozen=True)
class GEmbedding:
    rd: RootDatum
    sigma: Cone
    state: Optional[TorusState] = None
    strongly_convex: bool = True
    biequivariant: bool = False


@dataclass(frozen=True)
class MorphismWitness:
    """Certificate that ``source`` lies in ``w`` applied to ``target``.

    ``certificate`` lists, for each generator of the source cone, its
    pairings against the inequalities of the translated target cone; all are
    nonnegative (and zero on equations) for a valid witness.
    """

    w: WeylElement
    source: Cone
    target: Cone
    certificate: tuple[tuple[CocharVec, tuple[int, ...]], ...] = field(default=(), compare=False)

    def verify(self) -> bool:
        image = apply(self.w, self.target)
        return contains_cone(image, self.source)


def _witness(w: WeylElement, source: Cone, target: Cone) -> MorphismWitness:
    image = apply(w, target)
    cert = tuple((g, tuple(lt.pair(a, g) for a in image.inequalities)) for g in source.generators)
    return MorphismWitness(w, source, target, cert)


def compose_witnesses(first: MorphismWitness, second: MorphismWitness) -> MorphismWitness:
    """From sigma1 ⊆ w1·sigma2 and sigma2 ⊆ w2·sigma3 get sigma1 ⊆ (w1 w2)·sigma3."""
    if first.target != second.source:
        raise PreconditionError("witnesses do not chain")
    return _witness(first.w * second.w, first.source, second.target)


def _check_group(rd: RootDatum, sigma: Cone) -> None:
    if sigma.ambient_rank != rd.rank:
        raise DimensionError(f"cone of rank {sigma.ambient_rank} for a group of rank {rd.rank}")


def _is_weyl_stable(rd: RootDatum, sigma: Cone, cap: int) -> bool:
    return all(apply(w, sigma) == sigma for w in weyl_group(rd, cap))


def validate(rd: RootDatum, sigma: Cone, state: Optional[TorusState] = None,
             cap: int = DEFAULT_WEYL_CAP) -> GEmbedding:
    """Check that ``sigma`` classifies an affine embedding and compute its flags."""
    _check_group(rd, sigma)
    if not is_strongly_convex(sigma):
        raise ClassificationError(STRONG_CONVEXITY_MESSAGE)
    if state is not None:
        if state.rank != rd.rank:
            raise DimensionError("state rank differs from group rank")
        if dual_set(state) != sigma:
            raise ValidationError("the dual set of the state is not the given cone")
    return GEmbedding(rd, sigma, state, True, _is_weyl_stable(rd, sigma, cap))


def weight_monoid(e: GEmbedding, max_coordinate: int = DEFAULT_MAX_COORDINATE) -> HilbertBasis:
    """Generators of the torus weights of the coordinate algebra.

    If ``sigma`` is not full-dimensional the dual cone has lineality and the
    result carries the unit group in ``units``.
    """
    return monoid_basis(dual_cone(e.sigma), max_coordinate)


def membership_A(e: GEmbedding, chi: Sequence[int]) -> bool:
    """Whether a chi-eigenfunction has nonnegative valuation along every gamma in sigma."""
    chi = lt.vec(chi)
    lt.check_rank(chi, e.rd.rank, "character")
    return all(lt.pair(chi, g) >= 0 for g in e.sigma.generators)


def conjugate_embedding(e: GEmbedding, w: WeylElement) -> GEmbedding:
    """The same embedding seen from the base point moved by ``w``."""
    state = None
    if e.state is not None:
        state = conjugate_state(w, e.state)
    sigma = apply(w, e.sigma)
    return GEmbedding(e.rd, sigma, state, e.strongly_convex, e.biequivariant)


def is_biequivariant(e: GEmbedding, cap: int = DEFAULT_WEYL_CAP) -> bool:
    return _is_weyl_stable(e.rd, e.sigma, cap)


def weyl_intersection(rd: RootDatum, sigma: Cone, cap: int = DEFAULT_WEYL_CAP) -> Cone:
    """The intersection of all Weyl translates of ``sigma``."""
    return intersect_all([apply(w, sigma) for w in weyl_group(rd, cap)])


def biequivariant_resolution(e: GEmbedding, cap: int = DEFAULT_WEYL_CAP) -> tuple[GEmbedding, MorphismWitness]:
    """The biequivariant resolution and the inclusion of its cone into ``sigma``."""
    if e.biequivariant and is_biequivariant(e, cap):
        sigma_g = e.sigma
    else:
        sigma_g = weyl_intersection(e.rd, e.sigma, cap)
    if not is_strongly_convex(sigma_g):
        raise AssertionError("Weyl intersection of a strongly convex cone lost strong convexity")
    resolved = GEmbedding(e.rd, sigma_g, None, True, _is_weyl_stable(e.rd, sigma_g, cap))
    if not resolved.biequivariant:
        raise AssertionError("Weyl intersection is not Weyl-stable")
    witness = _witness(e.rd.identity(), sigma_g, e.sigma)
    if not witness.verify():
        raise AssertionError("resolution cone is not contained in sigma")
    return resolved, witness


def morphism_exists(src: GEmbedding, dst: GEmbedding, cap: int = DEFAULT_WEYL_CAP) -> Optional[MorphismWitness]:
    """Shortest Weyl element w (ties by matrix) with src.sigma ⊆ w·dst.sigma, if any.

    Only Weyl conjugators are searched, so a None answer means no conjugator
    exists within the fixed-torus model.
    """
    if src.rd != dst.rd:
        raise PreconditionError("embeddings of different groups")
    for w in sorted(weyl_group(src.rd, cap), key=lambda x: (x.length, x.sort_key())):
        if contains_cone(apply(w, dst.sigma), src.sigma):
            return _witness(w, src.sigma, dst.sigma)
    return None


@dataclass(frozen=True)
class UniversalReport:
    resolution: Cone
    y_in_resolution: bool
    resolution_in_x: bool
    counterexample: bool


def universal_property_check(y: GEmbedding, x: GEmbedding, cap: int = DEFAULT_WEYL_CAP) -> UniversalReport:
    """Check that a map from a biequivariant y to x factors through x's resolution."""
    if y.rd != x.rd:
        raise PreconditionError("embeddings of different groups")
    if not is_biequivariant(y, cap):
        raise PreconditionError("y is not biequivariant")
    if not contains_cone(x.sigma, y.sigma):
        raise PreconditionError("y.sigma is not contained in x.sigma (identity conjugator)")
    res, _ = biequivariant_resolution(x, cap)
    inner = contains_cone(res.sigma, y.sigma)
    outer = contains_cone(x.sigma, res.sigma)
    return UniversalReport(res.sigma, inner, outer, not (inner and outer))


@dataclass(frozen=True)
class RayClass:
    representative: CocharVec
    members: tuple[CocharVec, ...]


@dataclass(frozen=True)
class SkeletonReport:
    torus_ray_classes: tuple[CocharVec, ...]
    weyl_orbit_classes: tuple[RayClass, ...]
    nongeneric_rays: tuple[CocharVec, ...]

    @property
    def torus_count(self) -> int:
        return len(self.torus_ray_classes)

    @property
    def weyl_orbit_count(self) -> int:
        return len(self.weyl_orbit_classes)

    @property
    def genericity_flag(self) -> bool:
        return bool(self.nongeneric_rays)


def one_skeleton_classes(e: GEmbedding, cap: int = DEFAULT_WEYL_CAP) -> SkeletonReport:
    """Ray classes of sigma: per torus, and modulo the Weyl group.

    A ray is flagged non-generic when some root pairs nonzero with it.  The
    orbit-dimension count that turns a toric divisor into a codimension-one
    orbit closure needs the limit point to have a one-dimensional stabilizer,
    and the root subgroups contracted by a non-central ray enlarge it.
    """
    group = weyl_group(e.rd, cap)
    torus_rays = e.sigma.rays
    all_rays = sorted({r for w in group for r in apply(w, e.sigma).rays})
    classes: dict[CocharVec, set] = {}
    for r in all_rays:
        rep, _ = dominant_representative(e.rd, r)
        classes.setdefault(rep, set()).add(r)
    orbit = tuple(RayClass(rep, tuple(sorted(ms))) for rep, ms in sorted(classes.items()))
    flagged = tuple(r for r in torus_rays if any(lt.pair(a, r) != 0 for a in e.rd.positive_roots))
    return SkeletonReport(torus_rays, orbit, flagged)


@dataclass(frozen=True)
class SliceCell:
    parabolic: ParabolicType
    cone: Cone
    degenerate: bool


@dataclass(frozen=True)
class SliceComplex:
    cells: tuple[SliceCell, ...]

    def covering_cells(self, gamma: Sequence[int]) -> tuple[SliceCell, ...]:
        return tuple(c for c in self.cells if contains(c.cone, gamma))


def toric_slice_complex(e: GEmbedding, cap: int = DEFAULT_WEYL_CAP) -> SliceComplex:
    """Cells sigma ∩ Delta_P for every parabolic type P containing the torus.

    Cells of lower dimension than sigma are kept and marked ``degenerate``.
    """
    cells = []
    for p in all_parabolic_types(e.rd, cap):
        cell = intersect(e.sigma, delta_P_cone(e.rd, p))
        cells.append(SliceCell(p, cell, cell.dim < e.sigma.dim))
    return SliceComplex(tuple(cells))


__all__ = [
    "GEmbedding", "MorphismWitness", "SliceCell", "SliceComplex", "SkeletonReport", "RayClass",
    "UniversalReport", "validate", "weight_monoid", "membership_A", "conjugate_embedding",
    "is_biequivariant", "biequivariant_resolution", "morphism_exists", "universal_property_check",
    "one_skeleton_classes", "toric_slice_complex", "compose_witnesses", "weyl_intersection",
    "STRONG_CONVEXITY_MESSAGE",
]
