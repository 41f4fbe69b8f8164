"""Brute-force reference computations used by the self-test and the test suite.

Nothing here touches the double description code: inequalities are found by
enumerating hyperplanes through subsets of generators, membership is decided
either by those inequalities or by Carathéodory search, and Hilbert bases by
exhaustive enumeration of a box containing every irreducible element.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd
from typing import Iterable, Sequence

import numpy as np

Vec = tuple[int, ...]


def _prim(v: Sequence[int]) -> Vec:
    g = 0
    for c in v:
        g = gcd(g, c)
    return tuple(c // g for c in v)


def _det(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, p in enumerate(perm):
            term *= m[i][p]
            if term == 0:
                break
        total += term
    return total


def normal_vector(vectors: Sequence[Sequence[int]], n: int) -> Vec | None:
    """Generalized cross product of n-1 vectors in Z^n (None if dependent)."""
    c = []
    for k in range(n):
        minor = [[v[j] for j in range(n) if j != k] for v in vectors]
        c.append((-1) ** k * _det(minor))
    return _prim(c) if any(c) else None


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def inequalities(gens: Sequence[Sequence[int]], n: int) -> list[Vec]:
    """Valid linear inequalities cutting out cone(gens) exactly.

    Every hyperplane spanned by n-1 independent vectors chosen from the
    generators and the standard basis is a candidate; a normal is kept with
    whichever sign is nonnegative on all generators.
    """
    gens = [tuple(g) for g in gens if any(g)]
    pool = gens + [tuple(int(i == j) for j in range(n)) for i in range(n)]
    out = set()
    if n == 1:
        cands = [(1,)]
    else:
        cands = {normal_vector(sub, n) for sub in combinations(pool, n - 1)}
    for c in cands:
        if c is None:
            continue
        vals = [_dot(c, g) for g in gens]
        if all(v >= 0 for v in vals):
            out.add(c)
        if all(v <= 0 for v in vals):
            out.add(tuple(-x for x in c))
    return sorted(out)


def facet_normals(gens: Sequence[Sequence[int]], n: int) -> list[Vec]:
    """Facet normals of a full-dimensional cone: hyperplanes through n-1 independent generators."""
    gens = [tuple(g) for g in gens if any(g)]
    out = set()
    if n == 1:
        signs = {g[0] > 0 for g in gens}
        return [(1,)] if signs == {True} else [(-1,)] if signs == {False} else []
    for sub in combinations(gens, n - 1):
        c = normal_vector(sub, n)
        if c is None:
            continue
        vals = [_dot(c, g) for g in gens]
        if all(v >= 0 for v in vals):
            out.add(c)
        if all(v <= 0 for v in vals):
            out.add(tuple(-x for x in c))
    return sorted(out)


def contains(ineqs: Iterable[Sequence[int]], x: Sequence[int]) -> bool:
    return all(_dot(c, x) >= 0 for c in ineqs)


def caratheodory_contains(gens: Sequence[Sequence[int]], x: Sequence[int]) -> bool:
    """Whether x is a nonnegative rational combination of gens (subset search)."""
    gens = [tuple(g) for g in gens if any(g)]
    if not any(x):
        return True
    n = len(x)
    for k in range(1, min(n, len(gens)) + 1):
        for sub in combinations(gens, k):
            coef = _solve_nonneg(sub, x)
            if coef is not None:
                return True
    return False


def _solve_nonneg(cols: Sequence[Vec], x: Sequence[int]) -> list[Fraction] | None:
    # solve sum c_j cols_j = x exactly; None unless a unique nonnegative solution exists
    k, n = len(cols), len(x)
    m = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(x[i])] for i in range(n)]
    row = 0
    piv = []
    for c in range(k):
        p = next((r for r in range(row, n) if m[r][c] != 0), None)
        if p is None:
            return None
        m[row], m[p] = m[p], m[row]
        m[row] = [v / m[row][c] for v in m[row]]
        for r in range(n):
            if r != row and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        piv.append(c)
        row += 1
    if any(m[r][k] != 0 for r in range(row, n)):
        return None
    sol = [m[r][k] for r in range(k)]
    return sol if all(s >= 0 for s in sol) else None


def is_pointed(gens: Sequence[Sequence[int]], n: int) -> bool:
    """A cone contains a line iff the negative of some generator lies in it."""
    ineqs = inequalities(gens, n)
    return not any(any(g) and contains(ineqs, [-c for c in g]) for g in gens)


def box_points(lo: Sequence[int], hi: Sequence[int]) -> np.ndarray:
    axes = [np.arange(a, b + 1) for a, b in zip(lo, hi)]
    grid = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1)


def hilbert_basis(gens: Sequence[Sequence[int]], n: int) -> list[Vec]:
    """Hilbert basis of a pointed cone by exhaustive enumeration.

    Irreducible elements lie in the fundamental parallelepiped of some
    independent subset of the generators, hence in the box bounding the
    zonotope of all generators.  A box point is irreducible iff no other
    nonzero box point below it in the cone order exists.
    """
    gens = [tuple(g) for g in gens if any(g)]
    if not gens:
        return []
    lo = [sum(min(0, g[i]) for g in gens) for i in range(n)]
    hi = [sum(max(0, g[i]) for g in gens) for i in range(n)]
    ineqs = np.array(inequalities(gens, n), dtype=np.int64).reshape(-1, n)
    pts = box_points(lo, hi)
    vals = pts @ ineqs.T
    keep = (vals >= 0).all(axis=1) & pts.any(axis=1)
    pts, vals = pts[keep], vals[keep]
    out = []
    for i in range(len(pts)):
        below = (vals[i] - vals >= 0).all(axis=1)
        below[i] = False
        if not below.any():
            out.append(tuple(int(c) for c in pts[i]))
    return sorted(out)


def monoid_points(gens: Sequence[Sequence[int]], grading: Sequence[int], max_degree: int) -> set[Vec]:
    """All nonnegative integer combinations of gens of degree at most max_degree.

    ``grading`` must be strictly positive on every generator.
    """
    gens = [tuple(g) for g in gens]
    degrees = [_dot(grading, g) for g in gens]
    if any(d <= 0 for d in degrees):
        raise ValueError("grading must be positive on the generators")
    zero = (0,) * len(grading)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            dx = _dot(grading, x)
            for g, d in zip(gens, degrees):
                if dx + d <= max_degree:
                    y = tuple(a + b for a, b in zip(x, g))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return seen


def lattice_points_in_box(ineqs: Sequence[Sequence[int]], n: int, bound: int) -> list[Vec]:
    return [p for p in product(range(-bound, bound + 1), repeat=n) if contains(ineqs, p)]


# -- Weyl group tables ------------------------------------------------------------

WEYL_ORDERS = {("A", 2): 6, ("B", 2): 8, ("G2", 2): 12, ("A", 3): 24,
               ("C", 2): 8, ("B", 3): 48, ("D", 4): 192, ("A", 1): 2}


def orbit(gens: Sequence[Sequence[Sequence[int]]], v: Sequence[int]) -> set[Vec]:
    """Orbit of v under the group generated by the given integer matrices."""
    start = tuple(v)
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for m in gens:
            y = tuple(sum(a * b for a, b in zip(row, x)) for row in m)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen
