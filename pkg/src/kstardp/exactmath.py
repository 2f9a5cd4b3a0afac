"""Exact integer and rational helpers shared by every other module.

Everything here is plain ``int`` (arbitrary precision) and
``fractions.Fraction``; no floating point enters the engine anywhere.
Vectors are tuples of ints, matrices are sequences of row tuples.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

Vec2 = tuple[int, int]


def vec_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries.

    Raises ValueError on the zero vector.
    """
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def det2(a: Vec2, b: Vec2) -> int:
    return a[0] * b[1] - a[1] * b[0]


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def hilbert_basis_2d(a: Vec2, b: Vec2) -> list[Vec2]:
    """Hilbert basis of the pointed cone spanned by primitive vectors a, b.

    Returned in angular order from a to b, starting with a and ending with
    b.  Works by repeatedly inserting the unique lattice point at lattice
    distance one from the current boundary ray (continued-fraction
    subdivision); the box-scan oracle for small cones lives in the tests.
    """
    d = det2(a, b)
    if d == 0:
        raise ValueError("degenerate cone")
    if d < 0:
        return list(reversed(hilbert_basis_2d(b, a)))
    out = [a]
    u = a
    while det2(u, b) > 1:
        # next hull point v: det(u, v) = 1 with det(v, b) >= 0 minimal
        g, x, y = ext_gcd(u[0], u[1])
        assert g == 1
        ustar = (-y, x)  # det(u, ustar) = u0*x + u1*y = 1
        num = -det2(ustar, b)
        den = det2(u, b)
        t = -(-num // den)  # ceil(num / den)
        v = (ustar[0] + t * u[0], ustar[1] + t * u[1])
        if det2(v, b) == 0:  # parallel to b: cannot happen for det > 1
            break
        out.append(v)
        u = v
    out.append(b)
    return out


def _snf_diagonal(mat: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form (non-negative, d1 | d2 | ...)."""
    m = [list(row) for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < rows and t < cols:
        # smallest nonzero entry of the trailing block becomes the pivot
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = m[i][j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        m[t], m[pi] = m[pi], m[t]
        for r in range(rows):
            m[r][t], m[r][pj] = m[r][pj], m[r][t]
        p = m[t][t]
        dirty = False
        for i in range(t + 1, rows):
            if m[i][t]:
                q = m[i][t] // p
                for c in range(t, cols):
                    m[i][c] -= q * m[t][c]
                if m[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if m[t][j]:
                q = m[t][j] // p
                for r in range(t, rows):
                    m[r][j] -= q * m[r][t]
                if m[t][j]:
                    dirty = True
        if dirty:
            continue  # residues are smaller than |p|; re-pick the pivot
        fix = False
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % p:
                    for c in range(t, cols):
                        m[t][c] += m[i][c]
                    fix = True
                    break
            if fix:
                break
        if fix:
            continue  # pivot must divide the trailing block
        diag.append(abs(p))
        t += 1
    return diag


def smith_normal_form(mat: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Structure of the cokernel Z^rows / im(M) of an integer matrix M.

    Returns (invariant_factors, free_rank): the nontrivial torsion orders
    d1 | d2 | ... (entries > 1) and free_rank = rows(M) - rank(M).
    """
    rows = len(mat)
    if rows == 0:
        return [], 0
    diag = _snf_diagonal(mat)
    rank = sum(1 for d in diag if d != 0)
    torsion = [d for d in diag if d > 1]
    return torsion, rows - rank


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = lcm(out, v)
    return out
