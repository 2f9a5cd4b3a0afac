"""Numeric profile, intersection theory and the del Pezzo test.

All intersection numbers of invariant curves on X(A,P) are rational
functions of the slope data; the boundary cases carry the sentinel
conventions  ∞·0 = 1  and  -∞·0 = -1, which are implemented as explicit
branches rather than as large surrogate numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from kstardp.defmat import PMatrix, to_rows
from kstardp.exactmath import smith_normal_form

Curve = tuple  # ("arm", i, j) | ("plus",) | ("minus",)


@dataclass(frozen=True)
class NumericProfile:
    l_plus: int
    l_minus: int
    m_plus: Fraction
    m_minus: Fraction
    ell_plus: Fraction
    ell_minus: Fraction
    d_plus: Fraction | None  # m+/ell+, only meaningful when ell+ > 0
    d_minus: Fraction | None


def numeric_profile(p: PMatrix) -> NumericProfile:
    lp = lm = 1
    mp = mm = Fraction(0)
    ep = em = Fraction(1 - p.r)
    for arm in p.arms:
        l1, d1 = arm[0]
        l2, d2 = arm[-1]
        lp *= l1
        lm *= l2
        mp += Fraction(d1, l1)
        mm += Fraction(d2, l2)
        ep += Fraction(1, l1)
        em += Fraction(1, l2)
    dp = mp / ep if ep > 0 else None
    dm = mm / em if em > 0 else None
    return NumericProfile(lp, lm, mp, mm, ep, em, dp, dm)


def _m_boundary_top(p: PMatrix, prof: NumericProfile) -> Fraction:
    """Sentinel 𝔪_{i0}: 0 with a parabolic source, -1/𝔪⁺ with an elliptic one."""
    if p.has_vplus:
        return Fraction(0)
    return -1 / prof.m_plus


def _m_boundary_bot(p: PMatrix, prof: NumericProfile) -> Fraction:
    if p.has_vminus:
        return Fraction(0)
    return 1 / prof.m_minus


def _m_inter(p: PMatrix, i: int, j: int) -> Fraction:
    """Interstitial 𝔪_{ij} = 1/(m_ij - m_ij+1) for 1 <= j <= n_i - 1."""
    return 1 / (p.slope(i, j - 1) - p.slope(i, j))


def _lm_product(p: PMatrix, prof: NumericProfile, i: int, j: int) -> Fraction:
    """The product 𝔩_ij·𝔪_ij with the sentinel conventions ∞·0 = 1, -∞·0 = -1."""
    ni = len(p.arms[i])
    if j == 0:
        if p.has_vplus:
            return Fraction(1)  # ∞ · 0
        return prof.ell_plus / prof.m_plus
    if j == ni:
        if p.has_vminus:
            return Fraction(-1)  # -∞ · 0
        return prof.ell_minus / prof.m_minus
    li = p.arms[i][j - 1][0]
    lj = p.arms[i][j][0]
    return (Fraction(1, li) - Fraction(1, lj)) * _m_inter(p, i, j)


def intersection_number(p: PMatrix, c1: Curve, c2: Curve) -> Fraction:
    """Intersection number of two invariant curves; 0 for non-meeting pairs."""
    prof = numeric_profile(p)
    if c1 > c2:
        c1, c2 = c2, c1
    if c1 == c2:
        return _self_intersection(p, prof, c1)
    a, b = c1, c2
    if a[0] == "arm" and b[0] == "arm":
        _, i, j = a
        _, i2, j2 = b
        if i == i2:
            if abs(j - j2) != 1:
                return Fraction(0)
            jlo = min(j, j2)
            li = p.arms[i][jlo][0]
            lj = p.arms[i][jlo + 1][0]
            return _m_inter(p, i, jlo + 1) / (li * lj)
        # different arms meet only through elliptic fixed points
        ni, nk = len(p.arms[i]), len(p.arms[i2])
        out = Fraction(0)
        if j == 0 and j2 == 0 and not p.has_vplus:
            out += Fraction(1, prof.m_plus) / (p.arms[i][0][0] * p.arms[i2][0][0])
        if j == ni - 1 and j2 == nk - 1 and not p.has_vminus:
            out += Fraction(-1, prof.m_minus) / (p.arms[i][-1][0] * p.arms[i2][-1][0])
        return out
    if a[0] == "arm":
        a, b = b, a
    # now a is an axis curve
    if a == ("plus",):
        if not p.has_vplus:
            raise ValueError("no curve D+ on this surface")
        if b == ("minus",):
            return Fraction(0)
        _, i, j = b
        return Fraction(1, p.arms[i][0][0]) if j == 0 else Fraction(0)
    if not p.has_vminus:
        raise ValueError("no curve D- on this surface")
    _, i, j = b
    return Fraction(1, p.arms[i][-1][0]) if j == len(p.arms[i]) - 1 else Fraction(0)


def _self_intersection(p: PMatrix, prof: NumericProfile, c: Curve) -> Fraction:
    if c == ("plus",):
        if not p.has_vplus:
            raise ValueError("no curve D+ on this surface")
        return -prof.m_plus
    if c == ("minus",):
        if not p.has_vminus:
            raise ValueError("no curve D- on this surface")
        return prof.m_minus
    _, i, j = c
    ni = len(p.arms[i])
    l = p.arms[i][j][0]
    left = _m_boundary_top(p, prof) if j == 0 else _m_inter(p, i, j)
    right = _m_boundary_bot(p, prof) if j == ni - 1 else _m_inter(p, i, j + 1)
    return -(left + right) / (l * l)


def all_curves(p: PMatrix) -> list[Curve]:
    out: list[Curve] = []
    if p.has_vplus:
        out.append(("plus",))
    for i, arm in enumerate(p.arms):
        for j in range(len(arm)):
            out.append(("arm", i, j))
    if p.has_vminus:
        out.append(("minus",))
    return out


def anticanonical_intersections(p: PMatrix) -> dict[Curve, Fraction]:
    """-K_X · D for every invariant curve D."""
    prof = numeric_profile(p)
    out: dict[Curve, Fraction] = {}
    if p.has_vplus:
        out[("plus",)] = prof.ell_plus - prof.m_plus
    for i, arm in enumerate(p.arms):
        for j in range(len(arm)):
            l = arm[j][0]
            val = (_lm_product(p, prof, i, j) - _lm_product(p, prof, i, j + 1)) / l
            out[("arm", i, j)] = val
    if p.has_vminus:
        out[("minus",)] = prof.ell_minus + prof.m_minus
    return out


def is_del_pezzo(p: PMatrix) -> bool:
    """Kleiman's criterion: -K_X ample iff it meets every invariant curve
    positively, which unwinds to the strict chain of 𝔩𝔪-products per arm."""
    prof = numeric_profile(p)
    if p.has_vplus and not prof.ell_plus > prof.m_plus:
        return False
    if p.has_vminus and not prof.ell_minus > -prof.m_minus:
        return False
    for i, arm in enumerate(p.arms):
        prev = _lm_product(p, prof, i, 0)
        for j in range(1, len(arm) + 1):
            cur = _lm_product(p, prof, i, j)
            if not prev > cur:
                return False
            prev = cur
    return True


def k_squared(p: PMatrix) -> Fraction:
    """Anticanonical self intersection, by the source/sink case formula."""
    prof = numeric_profile(p)
    total = Fraction(0)
    for arm in p.arms:
        for j in range(len(arm) - 1):
            l1, d1 = arm[j]
            l2, d2 = arm[j + 1]
            delta = l2 * d1 - l1 * d2
            lam = 2 - Fraction(l2, l1) - Fraction(l1, l2)
            total += Fraction(lam, delta)
    if p.has_vplus:
        total += 2 * prof.ell_plus - prof.m_plus
    else:
        total += prof.ell_plus**2 / prof.m_plus
    if p.has_vminus:
        total += 2 * prof.ell_minus + prof.m_minus
    else:
        total -= prof.ell_minus**2 / prof.m_minus
    return total


@dataclass(frozen=True)
class ClassGroupData:
    invariant_factors: tuple[int, ...]
    picard_number: int


def class_group(p: PMatrix) -> ClassGroupData:
    """Divisor class group Z^{n+m} / im(P^t) via Smith normal form."""
    rows = to_rows(p)
    pt = [[rows[q][c] for q in range(len(rows))] for c in range(len(rows[0]))]
    torsion, free = smith_normal_form(pt)
    expected = p.n + p.m - p.r - 1
    assert free == expected, f"free rank {free} != n+m-r-1 = {expected}"
    return ClassGroupData(tuple(torsion), free)
