"""Exact rational polyhedral cones.

A :class:`Cone` keeps both of its descriptions in canonical form:

* ``lineality`` and ``rays``: a canonical basis of the lineality space and the
  primitive extremal rays of the pointed quotient, represented inside the
  orthogonal complement of the lineality space;
* ``equations`` and ``facets``: the same data for the dual cone, i.e. a basis
  of the orthogonal complement of the span together with the primitive
  irredundant facet normals.

Conversions go through the double description method, run with exact integer
arithmetic.  Because the dual of a cone swaps the two descriptions, two cones
are equal as sets exactly when their canonical forms are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, Sequence

from . import lattice as lt
from .errors import DimensionError, ResourceLimitError, UnsupportedInputError
from .lattice import Vector

DEFAULT_MAX_COORDINATE = 10**3
DEFAULT_MAX_POINTS = 10**6


# -- double description -------------------------------------------------------


def _double_description(inequalities: Iterable[Vector], n: int) -> tuple[list[Vector], list[Vector]]:
    """Generators of {x : a.x >= 0 for all a} as (lineality vectors, extreme rays).

    Inequalities are inserted in lexicographic order so the intermediate
    representation, and hence the output, is deterministic.
    """
    ineqs = sorted({lt.primitive(a) for a in inequalities if not lt.is_zero(a)})
    lin: list[Vector] = [lt.unit(i, n) for i in range(n)]
    rays: list[Vector] = []
    processed: list[Vector] = []
    for a in ineqs:
        k = next((i for i, l in enumerate(lin) if lt.pair(a, l) != 0), None)
        if k is not None:
            l = lin.pop(k)
            s = lt.pair(a, l)
            if s < 0:
                l, s = lt.neg(l), -s
            lin = [lt.primitive(lt.sub(lt.scale(s, m), lt.scale(lt.pair(a, m), l))) for m in lin]
            rays = [lt.primitive(lt.sub(lt.scale(s, r), lt.scale(lt.pair(a, r), l))) for r in rays]
            rays.append(l)
        else:
            vals = [lt.pair(a, r) for r in rays]
            pos = [r for r, v in zip(rays, vals) if v > 0]
            neg = [r for r, v in zip(rays, vals) if v < 0]
            new = [r for r, v in zip(rays, vals) if v >= 0]
            if neg:
                zsets = {r: frozenset(i for i, b in enumerate(processed) if lt.pair(b, r) == 0)
                         for r in rays}
                for p in pos:
                    for q in neg:
                        common = zsets[p] & zsets[q]
                        if any(r != p and r != q and common <= zsets[r] for r in rays):
                            continue
                        ap, aq = lt.pair(a, p), lt.pair(a, q)
                        new.append(lt.primitive(lt.sub(lt.scale(ap, q), lt.scale(aq, p))))
            rays = new
        processed.append(a)
    return lin, rays


def _canonical(lin: Sequence[Vector], rays: Sequence[Vector]) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    basis = lt.canonical_basis(lin)
    out = set()
    for r in rays:
        p = lt.project_out(r, basis)
        if any(p):
            out.add(lt.integral(p))
    return basis, tuple(sorted(out))


def _plus_minus(vs: Iterable[Vector]) -> list[Vector]:
    out = []
    for v in vs:
        out.append(v)
        out.append(lt.neg(v))
    return out


# -- the cone type -------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone in Z^n, in canonical double form.

    Build instances with :func:`cone_from_generators` or
    :func:`cone_from_inequalities`; the constructor does not canonicalize.
    """

    ambient_rank: int
    lineality: tuple[Vector, ...]
    rays: tuple[Vector, ...]
    equations: tuple[Vector, ...]
    facets: tuple[Vector, ...]

    @property
    def generators(self) -> tuple[Vector, ...]:
        return tuple(sorted(_plus_minus(self.lineality))) + self.rays

    @property
    def inequalities(self) -> tuple[Vector, ...]:
        return tuple(sorted(_plus_minus(self.equations))) + self.facets

    @property
    def dim(self) -> int:
        return self.ambient_rank - len(self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __repr__(self) -> str:
        return f"Cone(rank={self.ambient_rank}, generators={list(self.generators)})"


def _checked(rank: int, vectors: Iterable[Sequence]) -> list[Vector]:
    out = []
    for v in vectors:
        v = lt.vec(v)
        lt.check_rank(v, rank)
        out.append(v)
    return out


def cone_from_generators(rank: int, vectors: Iterable[Sequence] = ()) -> Cone:
    """Canonical cone spanned by nonnegative combinations of ``vectors``.

    Zero vectors are dropped and an empty input gives the zero cone.
    """
    vs = [v for v in _checked(rank, vectors) if not lt.is_zero(v)]
    equations, facets = _canonical(*_double_description(vs, rank))
    lineality, rays = _canonical(*_double_description(_plus_minus(equations) + list(facets), rank))
    return Cone(rank, lineality, rays, equations, facets)


def cone_from_inequalities(rank: int, normals: Iterable[Sequence] = ()) -> Cone:
    """Canonical cone {x : a.x >= 0 for every a in ``normals``}."""
    ns = _checked(rank, normals)
    lineality, rays = _canonical(*_double_description(ns, rank))
    equations, facets = _canonical(*_double_description(_plus_minus(lineality) + list(rays), rank))
    return Cone(rank, lineality, rays, equations, facets)


def zero_cone(rank: int) -> Cone:
    return cone_from_generators(rank, ())


def full_space(rank: int) -> Cone:
    return cone_from_inequalities(rank, ())


def dual_cone(sigma: Cone) -> Cone:
    """The dual cone in the dual lattice.  An involution on canonical cones."""
    return Cone(sigma.ambient_rank, sigma.equations, sigma.facets, sigma.lineality, sigma.rays)


def rays(sigma: Cone) -> tuple[Vector, ...]:
    """Primitive extremal rays.

    For a non-pointed cone these are the rays of the quotient by the
    lineality space (represented orthogonally to it); check
    ``sigma.is_pointed`` / ``sigma.lineality`` before reading them as rays of
    the cone itself.
    """
    return sigma.rays


def is_strongly_convex(sigma: Cone) -> bool:
    return sigma.is_pointed


def contains(sigma: Cone, v: Sequence) -> bool:
    v = lt.vec(v)
    lt.check_rank(v, sigma.ambient_rank)
    return (all(lt.pair(e, v) == 0 for e in sigma.equations)
            and all(lt.pair(f, v) >= 0 for f in sigma.facets))


def contains_cone(outer: Cone, inner: Cone) -> bool:
    if outer.ambient_rank != inner.ambient_rank:
        raise DimensionError("cones live in lattices of different rank")
    return all(contains(outer, g) for g in inner.generators)


def intersect(sigma1: Cone, sigma2: Cone) -> Cone:
    if sigma1.ambient_rank != sigma2.ambient_rank:
        raise DimensionError(
            f"cannot intersect cones of rank {sigma1.ambient_rank} and {sigma2.ambient_rank}"
        )
    return cone_from_inequalities(sigma1.ambient_rank, sigma1.inequalities + sigma2.inequalities)


def intersect_all(cones: Sequence[Cone]) -> Cone:
    if not cones:
        raise ValueError("need at least one cone")
    n = cones[0].ambient_rank
    normals = []
    for c in cones:
        if c.ambient_rank != n:
            raise DimensionError("cones live in lattices of different rank")
        normals.extend(c.inequalities)
    return cone_from_inequalities(n, normals)


def apply(w, sigma: Cone) -> Cone:
    """Image of ``sigma`` under a lattice automorphism.

    ``w`` is a :class:`~gembed.rootdata.WeylElement` or a bare integer matrix
    acting on column vectors.
    """
    m = getattr(w, "matrix", w)
    if len(m) != sigma.ambient_rank:
        raise DimensionError(f"{len(m)}x{len(m)} matrix applied to a rank {sigma.ambient_rank} cone")
    return cone_from_generators(sigma.ambient_rank, [lt.matvec(m, g) for g in sigma.generators])


# -- integer lattice helpers -----------------------------------------------------


def _saturation_transform(basis: Sequence[Vector], n: int) -> tuple[lt.Matrix, lt.Matrix, int]:
    """Unimodular U whose first d columns are a lattice basis of Z^n ∩ span(basis).

    Returns (U, U^-1, d).  Column operations bring the integer equations of the
    span to lower-triangular form; the trailing columns of the accumulated
    transform then span the integer kernel.
    """
    eqs = [list(e) for e in lt.nullspace(basis, n)] if basis else [list(lt.unit(i, n)) for i in range(n)]
    k = len(eqs)
    u = [list(r) for r in lt.identity(n)]

    def colop(i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j), det = 1
        for mat in (eqs, u):
            for row in mat:
                x, y = row[i], row[j]
                row[i], row[j] = a * x + b * y, c * x + d * y

    for r in range(k):
        for j in range(r + 1, n):
            x, y = eqs[r][r], eqs[r][j]
            if y == 0:
                continue
            g, s, t = _xgcd(x, y)
            colop(r, j, s, t, -y // g, x // g)
    perm = list(range(k, n)) + list(range(k))
    umat = tuple(tuple(row[p] for p in perm) for row in u)
    return umat, lt.integer_inverse(umat), n - k


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hermite_rows(vectors: Sequence[Vector], n: int) -> tuple[Vector, ...]:
    """Row Hermite normal form of the lattice spanned by ``vectors``.

    Positive pivots, entries above each pivot reduced into [0, pivot).  The
    result is canonical for the lattice.
    """
    m = [list(v) for v in vectors if any(v)]
    r = 0
    pivots = []
    for c in range(n):
        rows = [i for i in range(r, len(m)) if m[i][c] != 0]
        if not rows:
            continue
        while len(rows) > 1:
            p = min(rows, key=lambda i: abs(m[i][c]))
            for i in rows:
                if i != p:
                    q = m[i][c] // m[p][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[p])]
            rows = [i for i in rows if m[i][c] != 0]
        p = rows[0]
        m[r], m[p] = m[p], m[r]
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            m[i] = [x - q * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in m[:r])


def reduce_mod_lattice(v: Vector, hnf: Sequence[Vector]) -> Vector:
    """Canonical representative of v modulo the lattice with Hermite basis ``hnf``."""
    out = list(v)
    for row in hnf:
        c = next(i for i, x in enumerate(row) if x)
        q = out[c] // row[c]
        out = [x - q * y for x, y in zip(out, row)]
    return tuple(out)


# -- Hilbert bases ---------------------------------------------------------------


@dataclass(frozen=True)
class HilbertBasis:
    """Minimal generators of the monoid of lattice points of ``cone``.

    For a pointed cone ``units`` is empty and ``elements`` is the unique
    Hilbert basis.  For a cone with lineality, ``units`` is the Hermite basis
    of the unit group (the lattice points of the lineality space) and
    ``elements`` are canonical representatives, modulo the units, of the
    Hilbert basis of the pointed quotient monoid.
    """

    cone: Cone
    elements: tuple[Vector, ...]
    units: tuple[Vector, ...] = ()

    @property
    def has_units(self) -> bool:
        return bool(self.units)

    def generators(self) -> tuple[Vector, ...]:
        """A monoid generating set: the elements plus both signs of each unit."""
        return tuple(sorted(_plus_minus(self.units))) + self.elements

    def transformed(self, matrix: Sequence[Sequence[int]]) -> "HilbertBasis":
        """Image under a unimodular lattice map, re-canonicalized."""
        n = self.cone.ambient_rank
        units = hermite_rows([lt.matvec(matrix, u) for u in self.units], n)
        elements = tuple(sorted({reduce_mod_lattice(lt.matvec(matrix, e), units) for e in self.elements}))
        return HilbertBasis(apply(matrix, self.cone), elements, units)

    def decomposes(self, v: Vector) -> bool:
        """Whether ``v`` is a nonnegative integer combination of the generators."""
        if not contains(self.cone, v):
            return False
        return _decomposes(v, self.cone, self.generators(), {})


def _decomposes(v: Vector, cone: Cone, gens: Sequence[Vector], memo: dict) -> bool:
    if lt.is_zero(v):
        return True
    if v in memo:
        return memo[v]
    memo[v] = False
    ok = False
    for g in gens:
        rest = lt.sub(v, g)
        if contains(cone, rest) and _decomposes(rest, cone, gens, memo):
            ok = True
            break
    memo[v] = ok
    return ok


def _triangulate(rays_: Sequence[Vector], n: int) -> list[tuple[Vector, ...]]:
    """Pulling triangulation of the pointed cone on ``rays_`` (its extreme rays)."""
    cone = cone_from_generators(n, rays_)
    if len(rays_) == cone.dim:
        return [tuple(rays_)]
    apex = min(rays_)
    out = []
    for f in cone.facets:
        if lt.pair(f, apex) == 0:
            continue
        face = [r for r in rays_ if lt.pair(f, r) == 0]
        out.extend(s + (apex,) for s in _triangulate(face, n))
    return out


def _parallelepiped_points(cols: Sequence[Vector], max_points: int) -> list[Vector]:
    """Lattice points of the half-open parallelepiped on d independent vectors of Z^d."""
    d = len(cols)
    m = [[cols[j][i] for j in range(d)] for i in range(d)]
    minv = lt.inverse(m)
    steps = [tuple(minv[i][j] - floor(minv[i][j]) for i in range(d)) for j in range(d)]
    start = tuple(Fraction(0) for _ in range(d))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for lam in frontier:
            for s in steps:
                mu = tuple((a + b) - floor(a + b) for a, b in zip(lam, s))
                if mu not in seen:
                    seen.add(mu)
                    nxt.append(mu)
                    if len(seen) > max_points:
                        raise ResourceLimitError(
                            f"parallelepiped enumeration exceeds {max_points} points"
                        )
        frontier = nxt
    pts = []
    for lam in seen:
        x = [sum(lam[j] * cols[j][i] for j in range(d)) for i in range(d)]
        pts.append(tuple(int(c) for c in x))
    return pts


def hilbert_basis(sigma: Cone, max_coordinate: int = DEFAULT_MAX_COORDINATE,
                  max_points: int = DEFAULT_MAX_POINTS) -> HilbertBasis:
    """Hilbert basis of the monoid of lattice points of a pointed cone.

    The cone is moved by a unimodular map onto a full-dimensional cone in
    Z^d, triangulated, and the lattice points of every fundamental
    parallelepiped are collected; the irreducible candidates form the basis.
    Raises ResourceLimitError when a parallelepiped's bounding box leaves
    ``[-max_coordinate, max_coordinate]``.
    """
    if not sigma.is_pointed:
        raise UnsupportedInputError("Hilbert basis requires a pointed (strongly convex) cone")
    n = sigma.ambient_rank
    if sigma.is_zero:
        return HilbertBasis(sigma, ())
    u, uinv, d = _saturation_transform(sigma.rays, n)
    local = [lt.matvec(uinv, r)[:d] for r in sigma.rays]
    candidates = set(local)
    for simplex in _triangulate(local, d):
        back = [lt.matvec(u, tuple(s) + (0,) * (n - d)) for s in simplex]
        box = max(sum(abs(v[i]) for v in back) for i in range(n))
        if box > max_coordinate:
            raise ResourceLimitError(
                f"parallelepiped coordinates reach {box}, above the enumeration bound {max_coordinate}"
            )
        candidates.update(p for p in _parallelepiped_points(simplex, max_points) if any(p))
    local_cone = cone_from_generators(d, local)
    weight = [sum(col) for col in zip(*local_cone.facets)]
    ordered = sorted(candidates, key=lambda v: (lt.pair(weight, v), v))
    irreducible: list[Vector] = []
    for x in ordered:
        wx = lt.pair(weight, x)
        if not any(lt.pair(weight, y) < wx and contains(local_cone, lt.sub(x, y)) for y in irreducible):
            irreducible.append(x)
    elements = tuple(sorted(lt.matvec(u, tuple(h) + (0,) * (n - d)) for h in irreducible))
    return HilbertBasis(sigma, elements)


def monoid_basis(sigma: Cone, max_coordinate: int = DEFAULT_MAX_COORDINATE,
                 max_points: int = DEFAULT_MAX_POINTS) -> HilbertBasis:
    """Generators of sigma ∩ Z^n for any cone, splitting off the unit group."""
    if sigma.is_pointed:
        return hilbert_basis(sigma, max_coordinate, max_points)
    n = sigma.ambient_rank
    u, uinv, k = _saturation_transform(sigma.lineality, n)
    quotient = cone_from_generators(n - k, [lt.matvec(uinv, g)[k:] for g in sigma.generators])
    units = hermite_rows([tuple(u[i][j] for i in range(n)) for j in range(k)], n)
    hb = hilbert_basis(quotient, max_coordinate, max_points)
    lifted = {reduce_mod_lattice(lt.matvec(u, (0,) * k + h), units) for h in hb.elements}
    return HilbertBasis(sigma, tuple(sorted(lifted)), units)
