"""Exact integer vectors on the cocharacter lattice and its dual.

Cocharacters (one-parameter subgroups of the maximal torus) and characters
are both plain tuples of Python ints; the two lattices are distinguished only
by how they are used.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DegenerateInputError, DimensionError, ParseError

Vector = tuple[int, ...]
CocharVec = Vector
CharVec = Vector
Matrix = tuple[tuple[int, ...], ...]


def vec(coords: Iterable) -> Vector:
    """Coerce ``coords`` to an integer vector.

    Accepts ints, integral strings (the CLI's numeral format) and integral
    Fractions.  Floats and bools are rejected so that no inexact value can
    enter the exact layer.
    """
    out = []
    for c in coords:
        if isinstance(c, bool):
            raise ParseError(f"boolean is not an integer coordinate: {c!r}")
        if isinstance(c, int):
            out.append(c)
        elif isinstance(c, str):
            try:
                out.append(int(c.strip()))
            except ValueError:
                raise ParseError(f"not an integer numeral: {c!r}") from None
        elif isinstance(c, Fraction) and c.denominator == 1:
            out.append(int(c))
        elif hasattr(c, "__index__"):
            out.append(c.__index__())
        else:
            raise ParseError(f"not an integer coordinate: {c!r}")
    return tuple(out)


def check_rank(v: Sequence, rank: int, what: str = "vector") -> None:
    if len(v) != rank:
        raise DimensionError(f"{what} has length {len(v)}, expected {rank}")


def pair(chi: Sequence[int], gamma: Sequence[int]) -> int:
    """The integral pairing of a character with a cocharacter."""
    if len(chi) != len(gamma):
        raise DimensionError(
            f"cannot pair vectors of lengths {len(chi)} and {len(gamma)}"
        )
    return sum(a * b for a, b in zip(chi, gamma))


def content(v: Sequence[int]) -> int:
    g = 0
    for c in v:
        g = gcd(g, c)
    return g


def primitive(v: Sequence[int]) -> Vector:
    """Primitive generator of the ray through ``v`` (sign preserved)."""
    g = content(v)
    if g == 0:
        raise DegenerateInputError("the zero vector spans no ray")
    return tuple(c // g for c in v)


def is_zero(v: Sequence[int]) -> bool:
    return not any(v)


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * c for c in v)


def neg(v: Sequence[int]) -> Vector:
    return tuple(-c for c in v)


def unit(i: int, n: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(n))


# -- matrices ---------------------------------------------------------------


def identity(n: int) -> Matrix:
    return tuple(unit(i, n) for i in range(n))


def matvec(m: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    if m and len(m[0]) != len(v):
        raise DimensionError(f"matrix with {len(m[0])} columns applied to length {len(v)}")
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*m))


# -- exact rational linear algebra -------------------------------------------


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows)[0])


def integral(row: Sequence[Fraction]) -> Vector:
    """Clear denominators of a rational vector and make it primitive."""
    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in row])


def canonical_basis(rows: Iterable[Sequence[int]]) -> tuple[Vector, ...]:
    """Canonical integer basis of the rational span of ``rows``.

    The reduced echelon rows, each scaled to a primitive integer vector.  Two
    families span the same subspace iff their canonical bases agree.
    """
    red, _ = rref(rows)
    return tuple(integral(r) for r in red)


def nullspace(rows: Sequence[Sequence[int]], n: int) -> tuple[Vector, ...]:
    """Canonical integer basis of {x in Q^n : r . x = 0 for every row r}."""
    red, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return canonical_basis(basis)


def project_out(v: Sequence[int], basis: Sequence[Sequence[int]]) -> list[Fraction]:
    """Orthogonal projection of ``v`` onto the complement of span(basis)."""
    if not basis:
        return [Fraction(c) for c in v]
    k = len(basis)
    gram = [[Fraction(pair(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    rhs = [Fraction(pair(b, v)) for b in basis]
    coef = solve(gram, rhs)
    out = [Fraction(c) for c in v]
    for c, b in zip(coef, basis):
        for i in range(len(out)):
            out[i] -= c * b[i]
    return out


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square nonsingular system a x = b exactly."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise DegenerateInputError("singular linear system")
    return [red[i][n] for i in range(n)]


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise DegenerateInputError("matrix is not invertible")
    return [row[n:] for row in red]


def integer_inverse(m: Sequence[Sequence[int]]) -> Matrix:
    """Inverse of a unimodular integer matrix."""
    inv = inverse(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise DegenerateInputError("matrix is not invertible over the integers")
    return tuple(tuple(int(x) for x in row) for row in inv)
