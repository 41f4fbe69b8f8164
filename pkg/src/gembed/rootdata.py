"""Root data, Weyl groups and parabolic types on a fixed maximal torus.

The reductive group is modelled by a root datum on Z^n.  Conjugation by
arbitrary group elements is replaced everywhere by the Weyl group acting on
the cocharacter lattice (and contragrediently on characters): every maximal
torus is conjugate to the fixed one, so cone data attached to the group is
recorded on its cocharacter lattice with Weyl translates standing in for
conjugates.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

from . import lattice as lt
from .cones import Cone, cone_from_inequalities
from .errors import ConfigurationError, DegenerateInputError, ResourceLimitError, ValidationError
from .lattice import CharVec, CocharVec, Matrix, Vector

DEFAULT_WEYL_CAP = 10**6
_MAX_ROOTS = 10**4


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element acting on cocharacters by ``matrix``.

    ``word`` is one reduced expression in the simple reflections (0-based
    indices, leftmost factor first).  Equality and hashing use the matrix
    only; ordering is lexicographic in the matrix entries.
    """

    matrix: Matrix
    word: tuple[int, ...] = field(default=(), compare=False)

    def __call__(self, gamma: Sequence[int]) -> CocharVec:
        return lt.matvec(self.matrix, gamma)

    @cached_property
    def dual_matrix(self) -> Matrix:
        """Action on characters: the inverse transpose."""
        return lt.transpose(lt.integer_inverse(self.matrix))

    def act_on_character(self, chi: Sequence[int]) -> CharVec:
        return lt.matvec(self.dual_matrix, chi)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(lt.matmul(self.matrix, other.matrix), self.word + other.word)

    def inverse(self) -> "WeylElement":
        return WeylElement(lt.integer_inverse(self.matrix), self.word[::-1])

    @property
    def is_identity(self) -> bool:
        return self.matrix == lt.identity(len(self.matrix))

    @property
    def length(self) -> int:
        return len(self.word)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(x for row in self.matrix for x in row)

    def __lt__(self, other: "WeylElement") -> bool:
        return self.sort_key() < other.sort_key()


@dataclass(frozen=True)
class ParabolicType:
    """The root set of a parabolic subgroup containing the torus."""

    root_subset: tuple[CharVec, ...]
    standard_flag: bool = field(default=False, compare=False)

    def __contains__(self, alpha) -> bool:
        return tuple(alpha) in self.root_subset


def _cartan_ok(cartan: Sequence[Sequence[int]]) -> bool:
    r = len(cartan)
    for i in range(r):
        if cartan[i][i] != 2:
            return False
        for j in range(r):
            if i == j:
                continue
            a, b = cartan[i][j], cartan[j][i]
            if a > 0 or (a == 0) != (b == 0) or a * b not in (0, 1, 2, 3):
                return False
    return True


@dataclass(frozen=True)
class RootDatum:
    """A reduced root datum of finite type on Z^rank.

    ``simple_roots`` are characters and ``simple_coroots`` cocharacters; the
    full root system is generated by simple reflections at construction and
    invalid input raises ConfigurationError.
    """

    rank: int
    simple_roots: tuple[CharVec, ...]
    simple_coroots: tuple[CocharVec, ...]
    name: str = field(default="", compare=False)
    descriptor: tuple = field(default=(), compare=False)
    positive_roots: tuple[CharVec, ...] = field(init=False, compare=False, repr=False)
    coroot_of: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ConfigurationError("rank must be positive")
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ConfigurationError("need as many simple coroots as simple roots")
        for v in self.simple_roots + self.simple_coroots:
            lt.check_rank(v, self.rank, "simple (co)root")
        if self.simple_roots and lt.rank(self.simple_roots) != len(self.simple_roots):
            raise ConfigurationError("simple roots are linearly dependent")
        if self.simple_coroots and lt.rank(self.simple_coroots) != len(self.simple_coroots):
            raise ConfigurationError("simple coroots are linearly dependent")
        if not _cartan_ok(self.cartan_matrix):
            raise ConfigurationError(f"not a Cartan matrix of finite type: {self.cartan_matrix}")
        pos, coroot = self._generate_roots()
        object.__setattr__(self, "positive_roots", pos)
        object.__setattr__(self, "coroot_of", coroot)

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def central_rank(self) -> int:
        return self.rank - self.semisimple_rank

    @property
    def cartan_matrix(self) -> Matrix:
        """Entries ``pair(simple_roots[i], simple_coroots[j])``."""
        return tuple(tuple(lt.pair(a, c) for c in self.simple_coroots) for a in self.simple_roots)

    @property
    def roots(self) -> tuple[CharVec, ...]:
        return tuple(sorted(self.positive_roots + tuple(lt.neg(a) for a in self.positive_roots)))

    @property
    def positive_coroots(self) -> tuple[CocharVec, ...]:
        return tuple(self.coroot_of[a] for a in self.positive_roots)

    def coroot(self, alpha: Sequence[int]) -> CocharVec:
        return self.coroot_of[tuple(alpha)]

    def _generate_roots(self) -> tuple[tuple[CharVec, ...], dict]:
        r = self.semisimple_rank
        # (root, coroot, coefficients in the simple roots)
        start = [(self.simple_roots[i], self.simple_coroots[i], lt.unit(i, r)) for i in range(r)]
        seen = {s[0]: s for s in start}
        todo = list(start)
        while todo:
            alpha, cor, coef = todo.pop()
            for j in range(r):
                k = lt.pair(alpha, self.simple_coroots[j])
                m = lt.pair(self.simple_roots[j], cor)
                beta = lt.sub(alpha, lt.scale(k, self.simple_roots[j]))
                if beta in seen:
                    continue
                item = (beta, lt.sub(cor, lt.scale(m, self.simple_coroots[j])),
                        lt.sub(coef, lt.scale(k, lt.unit(j, r))))
                seen[beta] = item
                todo.append(item)
                if len(seen) > _MAX_ROOTS:
                    raise ConfigurationError("root system is not finite")
        coroot = {}
        positive = []
        for alpha, cor, coef in seen.values():
            if all(c >= 0 for c in coef):
                positive.append(alpha)
            elif not all(c <= 0 for c in coef):
                raise ConfigurationError("root with mixed-sign simple coordinates")
            coroot[alpha] = cor
        for alpha in list(coroot):
            if lt.neg(alpha) not in coroot:
                coroot[lt.neg(alpha)] = lt.neg(coroot[alpha])
        return tuple(sorted(positive)), coroot

    def reflection(self, i: int) -> WeylElement:
        a, c = self.simple_roots[i], self.simple_coroots[i]
        n = self.rank
        m = tuple(tuple(int(p == q) - c[p] * a[q] for q in range(n)) for p in range(n))
        return WeylElement(m, (i,))

    def identity(self) -> WeylElement:
        return WeylElement(lt.identity(self.rank), ())

    def element(self, word: Sequence[int]) -> WeylElement:
        w = self.identity()
        for i in word:
            w = w * self.reflection(i)
        return w

    def is_dominant(self, gamma: Sequence[int]) -> bool:
        return all(lt.pair(a, gamma) >= 0 for a in self.simple_roots)

    def __str__(self) -> str:
        return self.name or f"RootDatum(rank={self.rank})"


# -- constructors -------------------------------------------------------------


def _embed(vs: Sequence[Sequence[int]], n: int) -> tuple[Vector, ...]:
    return tuple(tuple(v) + (0,) * (n - len(v)) for v in vs)


def _cartan_basis(cartan: Sequence[Sequence[int]]) -> tuple[list[Vector], list[Vector]]:
    # simply connected realization: coroots are the standard basis
    r = len(cartan)
    return [tuple(cartan[i]) for i in range(r)], [lt.unit(i, r) for i in range(r)]


def build_root_datum(family: str, semisimple_rank: int, central_rank: int = 0) -> RootDatum:
    """Root datum of type ``family`` times a central torus.

    Types A and G2 use the simply connected realization (coroots are the
    standard basis, roots the rows of the Cartan matrix).  Types B, C, D use
    the usual epsilon coordinates of SO(2n+1), Sp(2n) and SO(2n), so their
    Weyl groups act by signed permutations.  Central directions are appended
    as trailing coordinates.
    """
    fam = str(family).upper()
    r = int(semisimple_rank)
    c = int(central_rank)
    if c < 0:
        raise ConfigurationError("central_rank must be nonnegative")
    eps = lambda i: lt.unit(i, r)  # noqa: E731
    if fam == "A":
        if r < 1:
            raise ConfigurationError("type A needs semisimple_rank >= 1")
        cartan = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r)] for i in range(r)]
        roots, coroots = _cartan_basis(cartan)
    elif fam in ("G2", "G"):
        if r != 2:
            raise ConfigurationError("type G2 has semisimple_rank 2")
        fam = "G2"
        roots, coroots = _cartan_basis([[2, -1], [-3, 2]])
    elif fam in ("B", "C", "D"):
        lo = 3 if fam == "D" else 2
        if r < lo:
            raise ConfigurationError(f"type {fam} needs semisimple_rank >= {lo}")
        chain = [lt.sub(eps(i), eps(i + 1)) for i in range(r - 1)]
        if fam == "B":
            roots, coroots = chain + [eps(r - 1)], chain + [lt.scale(2, eps(r - 1))]
        elif fam == "C":
            roots, coroots = chain + [lt.scale(2, eps(r - 1))], chain + [eps(r - 1)]
        else:
            last = lt.add(eps(r - 2), eps(r - 1))
            roots, coroots = chain + [last], chain + [last]
    else:
        raise ConfigurationError(f"unsupported family {family!r}; use A, B, C, D or G2")
    n = r + c
    name = (fam if fam == "G2" else f"{fam}{r}") + (f"xT{c}" if c else "")
    return RootDatum(n, _embed(roots, n), _embed(coroots, n), name, ("family", fam, r, c))


def gl(n: int) -> RootDatum:
    """GL_n in its standard realization: roots and coroots e_i - e_j in Z^n."""
    n = int(n)
    if n < 1:
        raise ConfigurationError("gl(n) needs n >= 1")
    simple = tuple(lt.sub(lt.unit(i, n), lt.unit(i + 1, n)) for i in range(n - 1))
    return RootDatum(n, simple, simple, f"gl({n})", ("gl", n))


def torus(n: int) -> RootDatum:
    """A torus of rank n: no roots, trivial Weyl group."""
    n = int(n)
    if n < 1:
        raise ConfigurationError("torus rank must be positive")
    return RootDatum(n, (), (), f"torus({n})", ("torus", n))


# -- Weyl group ------------------------------------------------------------------

_weyl_cache: dict = {}
_weyl_lock = threading.Lock()


def weyl_group(rd: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> tuple[WeylElement, ...]:
    """All Weyl group elements, each with a reduced word, in canonical order.

    Breadth-first search over right multiplication by simple reflections, so
    the first word reaching an element is reduced.  Raises
    ResourceLimitError once more than ``cap`` elements are found.
    """
    key = (rd.rank, rd.simple_roots, rd.simple_coroots)
    with _weyl_lock:
        hit = _weyl_cache.get(key)
    if hit is not None:
        if len(hit) > cap:
            raise ResourceLimitError(f"Weyl group order {len(hit)} exceeds cap {cap}")
        return hit
    gens = [rd.reflection(i) for i in range(rd.semisimple_rank)]
    e = rd.identity()
    found = {e.matrix: e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                v = w * s
                if v.matrix not in found:
                    found[v.matrix] = v
                    nxt.append(v)
                    if len(found) > cap:
                        raise ResourceLimitError(f"Weyl group order exceeds cap {cap}")
        frontier = nxt
    group = tuple(sorted(found.values()))
    with _weyl_lock:
        group = _weyl_cache.setdefault(key, group)
    return group


def weyl_order(rd: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> int:
    return len(weyl_group(rd, cap))


# -- parabolic types ---------------------------------------------------------------


def _is_standard(rd: RootDatum, roots: Sequence[CharVec]) -> bool:
    s = set(roots)
    return all(a in s for a in rd.simple_roots)


def _make_parabolic(rd: RootDatum, roots) -> ParabolicType:
    subset = tuple(sorted(set(roots)))
    return ParabolicType(subset, _is_standard(rd, subset))


def parabolic_type(rd: RootDatum, gamma: Sequence[int]) -> ParabolicType:
    """Roots pairing nonnegatively with ``gamma``: the type of P(gamma)."""
    gamma = lt.vec(gamma)
    lt.check_rank(gamma, rd.rank, "cocharacter")
    return _make_parabolic(rd, (a for a in rd.roots if lt.pair(a, gamma) >= 0))


def translate_parabolic(rd: RootDatum, w: WeylElement, p: ParabolicType) -> ParabolicType:
    return _make_parabolic(rd, (w.act_on_character(a) for a in p.root_subset))


def standard_parabolic(rd: RootDatum, levi_simple: Sequence[int]) -> ParabolicType:
    """The standard parabolic P_J for J a set of simple-root indices.

    Realized as the type of a cocharacter pairing to zero with the simple
    roots in J and to one with the others.
    """
    j = set(levi_simple)
    r = rd.semisimple_rank
    if r == 0:
        return _make_parabolic(rd, ())
    target = [0 if i in j else 1 for i in range(r)]
    coef = lt.solve(rd.cartan_matrix, target)
    gamma = [sum(c * cor[k] for c, cor in zip(coef, rd.simple_coroots)) for k in range(rd.rank)]
    if not any(gamma):
        return _make_parabolic(rd, rd.roots)
    return parabolic_type(rd, lt.integral(gamma))


def all_parabolic_types(rd: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> tuple[ParabolicType, ...]:
    """Every parabolic type containing the torus: Weyl translates of the standard ones."""
    out = set()
    w_all = weyl_group(rd, cap)
    for size in range(rd.semisimple_rank + 1):
        for j in combinations(range(rd.semisimple_rank), size):
            p = standard_parabolic(rd, j)
            for w in w_all:
                out.add(translate_parabolic(rd, w, p))
    return tuple(sorted(out, key=lambda p: (len(p.root_subset), p.root_subset)))


def delta_P_cone(rd: RootDatum, p: ParabolicType) -> Cone:
    """Cocharacters gamma whose parabolic type contains ``p``."""
    for a in p.root_subset:
        lt.check_rank(a, rd.rank, "root")
    return cone_from_inequalities(rd.rank, p.root_subset)


# -- dominance and the equivalence of one-parameter subgroups ----------------------


def dominant_representative(rd: RootDatum, gamma: Sequence[int]) -> tuple[CocharVec, WeylElement]:
    """The dominant element of the Weyl orbit of ``gamma`` and a w with w(gamma) = it."""
    g = lt.vec(gamma)
    lt.check_rank(g, rd.rank, "cocharacter")
    word: list[int] = []
    while True:
        i = next((i for i, a in enumerate(rd.simple_roots) if lt.pair(a, g) < 0), None)
        if i is None:
            break
        g = rd.reflection(i)(g)
        word.append(i)
    return g, rd.element(word[::-1])


def levi_stabilizer(rd: RootDatum, gamma: Sequence[int], cap: int = DEFAULT_WEYL_CAP) -> tuple[WeylElement, ...]:
    gamma = lt.vec(gamma)
    lt.check_rank(gamma, rd.rank, "cocharacter")
    return tuple(w for w in weyl_group(rd, cap) if w(gamma) == gamma)


def equivalent_in_torus(rd: RootDatum, gamma1: Sequence[int], gamma2: Sequence[int]) -> bool:
    """Equivalence of two one-parameter subgroups of the fixed torus.

    A conjugator in P(gamma1) carrying a multiple of gamma1 to a multiple of
    gamma2 inside the torus can be taken in the Levi part, hence in the Weyl
    group of the Levi, which fixes gamma1; so the relation reduces to the two
    vectors spanning the same ray.
    """
    g1, g2 = lt.vec(gamma1), lt.vec(gamma2)
    lt.check_rank(g1, rd.rank, "cocharacter")
    lt.check_rank(g2, rd.rank, "cocharacter")
    if lt.is_zero(g1) or lt.is_zero(g2):
        raise DegenerateInputError("the trivial one-parameter subgroup is excluded")
    return lt.primitive(g1) == lt.primitive(g2)


def check_weyl_invariants(rd: RootDatum, cap: int = DEFAULT_WEYL_CAP) -> None:
    """Raise ValidationError unless every Weyl element permutes roots and coroots."""
    roots = set(rd.roots)
    coroots = set(rd.coroot_of.values())
    for w in weyl_group(rd, cap):
        if {w.act_on_character(a) for a in roots} != roots:
            raise ValidationError(f"Weyl element {w.word} does not permute the roots")
        if {w(c) for c in coroots} != coroots:
            raise ValidationError(f"Weyl element {w.word} does not permute the coroots")
