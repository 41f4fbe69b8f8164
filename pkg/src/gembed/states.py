"""Kempf states through their torus slice.

A state is stored as its value on the fixed maximal torus: a nonempty finite
set of characters.  Values on subtori follow by restriction and values on
other maximal tori by Weyl conjugation, so nothing else is stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import lattice as lt
from .cones import Cone, cone_from_inequalities
from .errors import DimensionError, ValidationError
from .lattice import CharVec, CocharVec
from .rootdata import DEFAULT_WEYL_CAP, RootDatum, WeylElement, levi_stabilizer, weyl_group


@dataclass(frozen=True)
class RepSupport:
    """Weights of a representation V and the weights where x0 has a nonzero component."""

    weights: tuple[CharVec, ...]
    support: tuple[CharVec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(sorted(lt.vec(w) for w in self.weights)))
        object.__setattr__(self, "support", tuple(sorted({lt.vec(w) for w in self.support})))
        if not self.support:
            raise ValidationError("representation support must be nonempty")
        if not set(self.support) <= set(self.weights):
            raise ValidationError("support is not contained in the weights of the representation")
        ranks = {len(w) for w in self.weights}
        if len(ranks) > 1:
            raise DimensionError("weights of different lengths")


@dataclass(frozen=True)
class TorusState:
    chars: tuple[CharVec, ...]
    rep: Optional[RepSupport] = field(default=None)

    def __post_init__(self) -> None:
        chars = tuple(sorted({lt.vec(c) for c in self.chars}))
        if not chars:
            raise ValidationError("a state takes a nonempty set of characters")
        if len({len(c) for c in chars}) > 1:
            raise DimensionError("characters of different lengths")
        object.__setattr__(self, "chars", chars)
        if self.rep is not None and not set(chars) <= set(self.rep.weights):
            raise ValidationError("state characters are not weights of its representation")

    @property
    def rank(self) -> int:
        return len(self.chars[0])

    @property
    def rep_backed(self) -> bool:
        return self.rep is not None


def make_state(chars: Iterable[Sequence[int]]) -> TorusState:
    return TorusState(tuple(lt.vec(c) for c in chars))


def mu(state: TorusState, gamma: Sequence[int]) -> int:
    """The numerical function: least pairing of gamma against the state's characters."""
    gamma = lt.vec(gamma)
    if len(gamma) != state.rank:
        raise DimensionError(f"cocharacter of length {len(gamma)} against a rank {state.rank} state")
    return min(lt.pair(c, gamma) for c in state.chars)


def dual_set(state: TorusState) -> Cone:
    return cone_from_inequalities(state.rank, state.chars)


def dual_set_strict(state: TorusState) -> Callable[[Sequence[int]], bool]:
    """Membership test for {gamma : mu(state, gamma) > 0} (not a closed cone)."""
    def member(gamma: Sequence[int]) -> bool:
        return mu(state, gamma) > 0
    return member


def conjugate_state(w: WeylElement, state: TorusState) -> TorusState:
    move = w.act_on_character
    rep = None
    if state.rep is not None:
        rep = RepSupport(tuple(move(x) for x in state.rep.weights),
                         tuple(move(x) for x in state.rep.support))
    return TorusState(tuple(move(c) for c in state.chars), rep)


def _orbit_union(group: Sequence[WeylElement], chars: Iterable[CharVec]) -> tuple[CharVec, ...]:
    return tuple(sorted({w.act_on_character(c) for w in group for c in chars}))


def saturate_state(rd: RootDatum, state: TorusState, cap: int = DEFAULT_WEYL_CAP) -> TorusState:
    """Weyl saturation of the torus slice, standing in for the union of all conjugates.

    Representation backing is kept: the saturation of the support still lies
    in the (Weyl-stable) weights.
    """
    group = weyl_group(rd, cap)
    chars = _orbit_union(group, state.chars)
    rep = None
    if state.rep is not None:
        rep = RepSupport(state.rep.weights, chars)
    return TorusState(chars, rep)


@dataclass(frozen=True)
class SaturationBounds:
    lower: tuple[CharVec, ...]
    upper: Optional[tuple[CharVec, ...]]

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper


def saturation_bounds(rd: RootDatum, state: TorusState, cap: int = DEFAULT_WEYL_CAP) -> SaturationBounds:
    """Bounds for the torus slice of the saturated state over the whole group.

    The Weyl saturation is always contained in it.  For a rep-backed state it
    is in turn contained in the set of weights of the representation; when
    the two bounds agree the saturation is exact.
    """
    lower = saturate_state(rd, state, cap).chars
    upper = tuple(sorted(set(state.rep.weights))) if state.rep is not None else None
    return SaturationBounds(lower, upper)


def rep_state(rd: RootDatum, rep: RepSupport, cap: int = DEFAULT_WEYL_CAP) -> TorusState:
    """The state of a vector x0 in a representation, read off from its weight support."""
    for wt in rep.weights:
        lt.check_rank(wt, rd.rank, "weight")
    weights = set(rep.weights)
    for w in weyl_group(rd, cap):
        if {w.act_on_character(x) for x in weights} != weights:
            raise ValidationError("representation weights are not stable under the Weyl group")
    return TorusState(rep.support, rep)


@dataclass(frozen=True)
class StateReport:
    boundedness: bool
    boundedness_note: str
    weyl_necessary_admissibility: bool
    admissibility_note: str
    certified_admissible: bool
    samples_checked: int


def check_state(rd: RootDatum, state: TorusState, samples: Sequence[CocharVec] = (),
                cap: int = DEFAULT_WEYL_CAP) -> StateReport:
    """Torus-level checks of boundedness and admissibility.

    Only representation-backed states are certified admissible.  The Levi
    check is evaluated on ``samples`` but holds by construction, since a
    stabilizer element fixes gamma; it is reported as vacuous, not as
    evidence.
    """
    if state.rank != rd.rank:
        raise DimensionError("state and root datum have different ranks")
    checked = 0
    for gamma in samples:
        m = mu(state, gamma)
        for w in levi_stabilizer(rd, gamma, cap):
            if mu(state, w(gamma)) != m:
                raise AssertionError("Levi stabilizer moved gamma")
        checked += 1
    return StateReport(
        boundedness=True,
        boundedness_note="the Weyl orbit of a finite character set is finite",
        weyl_necessary_admissibility=True,
        admissibility_note="vacuous at torus level: every Levi stabilizer element fixes gamma",
        certified_admissible=state.rep_backed,
        samples_checked=checked,
    )
