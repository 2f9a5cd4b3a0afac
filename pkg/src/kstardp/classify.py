"""The two classification searches for non-toric 1/k-log canonical del Pezzo
K*-surfaces: the combinatorially minimal ones via bounded shape enumeration,
and the full classification as a pruned breadth-first closure under column
insertions, seeded by the minimal surfaces and the toric starting class.

Pruning by the del Pezzo and hollowness tests is sound because both
properties persist under contracting a column, and every surface in the
class contracts stepwise through the class onto a member of the seed set.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from kstardp import kernels
from kstardp.defmat import (
    PMatrix,
    contractible_columns,
    encode,
    is_irredundant,
    normal_form,
    pmatrix,
    proper_extend,
    proper_extend_vpm,
    redundant_extend,
    validate,
)
from kstardp.exactmath import vec_gcd
from kstardp.geometry import is_del_pezzo, numeric_profile
from kstardp.polygons import (
    LdpPolygon,
    classify_hollow,
    classify_polygons,
    lattice_points,
    polygon,
)
from kstardp.singular import is_complex_almost_k_hollow, is_log_terminal

# ------------------------------------------------------------ conversions

def pmatrix_from_polygon(verts) -> PMatrix:
    """r = 1 defining matrix of an LDP-polygon (vertices split by sign of x)."""
    if isinstance(verts, LdpPolygon):
        verts = verts.vertices
    arm0 = [(-x, y) for x, y in verts if x < 0]
    arm1 = [(x, y) for x, y in verts if x > 0]
    vplus = (0, 1) in verts
    vminus = (0, -1) in verts
    if not arm0 or not arm1:
        raise ValueError("polygon must have vertices on both sides of the axis")
    return pmatrix([arm0, arm1], vplus, vminus)


def polygon_from_pmatrix(p: PMatrix) -> LdpPolygon:
    if p.r != 1:
        raise ValueError("only r = 1 matrices correspond to polygons")
    pts = [(-l, d) for l, d in p.arms[0]] + [(l, d) for l, d in p.arms[1]]
    if p.has_vplus:
        pts.append((0, 1))
    if p.has_vminus:
        pts.append((0, -1))
    return polygon(pts)


# ------------------------------------------------------------ c(k) oracle

_CK_CACHE: dict[int, Fraction] = {}


def c_of_k_oracle(k: int, cache_dir: str | None = None) -> Fraction:
    """Exact maximum volume of almost k-hollow lattice triangles.

    Computed from the full hollow-polygon search (vertices need not be
    primitive).  The value instantiates the bounds of the combinatorially
    minimal shape list; results are cached since the k = 3 search is long.
    """
    if k in _CK_CACHE:
        return _CK_CACHE[k]
    path = None
    if cache_dir:
        path = os.path.join(cache_dir, f"c_of_k_{k}.json")
        if os.path.exists(path):
            with open(path) as fh:
                num, den = json.load(fh)
            _CK_CACHE[k] = Fraction(num, den)
            return _CK_CACHE[k]
    best = Fraction(0)
    for cls in classify_hollow(k):
        if cls.n == 3:
            v = cls.volume()
            if v > best:
                best = v
    _CK_CACHE[k] = best
    if path:
        os.makedirs(cache_dir, exist_ok=True)
        with open(path, "w") as fh:
            json.dump([best.numerator, best.denominator], fh)
    return best


def set_c_of_k(k: int, value: Fraction) -> None:
    """Seed the oracle cache (used when a precomputed search is on disk)."""
    _CK_CACHE[k] = value


# ------------------------------------------------------------ filters

def is_lc_del_pezzo(p: PMatrix, k: int) -> bool:
    """validity, log terminality, del Pezzo and 1/k-log canonicity."""
    return (
        validate(p)
        and is_log_terminal(p)
        and is_del_pezzo(p)
        and is_complex_almost_k_hollow(p, k)
    )


def _heights(p: PMatrix) -> tuple[Fraction, Fraction]:
    """(top, -bottom) of the anticanonical complex along the axis."""
    prof = numeric_profile(p)
    top = Fraction(1) if p.has_vplus else prof.m_plus / prof.ell_plus
    bot = Fraction(-1) if p.has_vminus else prof.m_minus / prof.ell_minus
    return top, -bot


def _is_platonic_tuple(tup) -> bool:
    return sum(Fraction(1, q) for q in tup) > len(tup) - 2


# ------------------------------------------------------------ minimal shapes

def _coprime_range(l: int, dlo: int, dhi: int):
    for d in range(dlo, dhi + 1):
        if gcd(l, d) == 1:
            yield d


def _dwindow(l: int, lo: Fraction, hi: Fraction, lo_open: bool, hi_open: bool):
    """Integers d with d/l in the interval (lo, hi] / [lo, hi] / etc."""
    dlo = ceil(lo * l)
    if lo_open and Fraction(dlo, l) == lo:
        dlo += 1
    dhi = floor(hi * l)
    if hi_open and Fraction(dhi, l) == hi:
        dhi -= 1
    return dlo, dhi


def _shape_i(k: int):
    """(1,1,1;1): parabolic source, three single-column arms."""
    b01 = max(2 * k * k, 5)
    b11 = max(4 * k * k, 5)
    for l21 in range(2, 6):
        for l11 in range(2, b11 + 1):
            for l01 in range(2, b01 + 1):
                if not _is_platonic_tuple((l01, l11, l21)):
                    continue
                ell_m = Fraction(1, l01) + Fraction(1, l11) + Fraction(1, l21) - 1
                for d11 in _coprime_range(l11, 1, l11 - 1):
                    for d21 in _coprime_range(l21, 1, l21 - 1):
                        rest = Fraction(d11, l11) + Fraction(d21, l21)
                        # x- elliptic: -k*ell <= m-sum < 0
                        dlo, dhi = _dwindow(l01, -k * ell_m - rest, -rest, False, True)
                        dlo = max(dlo, -k - 2 * l01 + 1)
                        dhi = min(dhi, -1)
                        for d01 in _coprime_range(l01, dlo, dhi):
                            yield pmatrix(
                                [[(l01, d01)], [(l11, d11)], [(l21, d21)]], vplus=True
                            )


def _shape_ii(k: int):
    """(2,1,1;0): two elliptic fixed points, one double arm."""
    ck2 = int(2 * c_of_k_oracle(k)) + 1
    big = max(6, 4 * k * k, ck2)
    small = max(6, 4 * k * k)
    minside = max(2 * k, 5)
    pairs = set()
    for l11 in range(2, small + 1):
        for l21 in range(2, min(l11, small) + 1):
            pairs.add((l11, l21))
    for hi in range(2, big + 1):
        for lo in range(2, minside + 1):
            pairs.add((max(hi, lo), min(hi, lo)))
    for l11, l21 in sorted(pairs):
        for l01 in range(1, 2 * k * k + 1):
            if not _is_platonic_tuple((l01, l11, l21)):
                continue
            for l02 in range(1, 2 * k * k + 1):
                if not _is_platonic_tuple((l02, l11, l21)):
                    continue
                ell_p = Fraction(1, l01) + Fraction(1, l11) + Fraction(1, l21) - 1
                ell_m = Fraction(1, l02) + Fraction(1, l11) + Fraction(1, l21) - 1
                if ell_p <= 0 or ell_m <= 0:
                    continue  # log terminality
                for d11 in _coprime_range(l11, 1, l11 - 1):
                    m11 = Fraction(d11, l11)
                    for d21 in _coprime_range(l21, 1, l21):
                        rest = m11 + Fraction(d21, l21)
                        lo1, hi1 = _dwindow(l01, -rest, k * ell_p - rest, True, False)
                        lo1 = max(lo1, -2 * l01 + 1)
                        hi1 = min(hi1, k - 1)
                        for d01 in _coprime_range(l01, lo1, hi1):
                            lo2, hi2 = _dwindow(l02, -k * ell_m - rest, -rest, False, True)
                            lo2 = max(lo2, -2 * l02 - k + 1)
                            hi2 = min(hi2, -1)
                            for d02 in _coprime_range(l02, lo2, hi2):
                                if Fraction(d01, l01) <= Fraction(d02, l02):
                                    continue
                                yield pmatrix(
                                    [[(l01, d01), (l02, d02)], [(l11, d11)], [(l21, d21)]]
                                )


def _shape_iii(k: int):
    """(2,1,1,1;0) with l_01 = l_02 = 1 and a fixed (2,1) arm."""
    b11 = max(2 * k * k, 5)
    for l11 in range(2, b11 + 1):
        for l21 in (2, 3):
            if not _is_platonic_tuple((1, l11, l21, 2)):
                continue
            for d11 in _coprime_range(l11, 1, l11 - 1):
                for d21 in _coprime_range(l21, 1, l21 - 1):
                    for d01 in range(-2, k // 2 + 1):
                        for d02 in range(-(k // 2) - 3, 0):
                            if d01 <= d02:
                                continue
                            yield pmatrix(
                                [
                                    [(1, d01), (1, d02)],
                                    [(l11, d11)],
                                    [(l21, d21)],
                                    [(2, 1)],
                                ]
                            )


def _shape_iv(k: int):
    """(2,2,1;0): two double arms."""
    b01 = k**3 + 3 * k * k
    b = 6 * k * k
    for l21 in range(2, b + 1):
        for d21 in _coprime_range(l21, 1, l21 - 1):
            m21 = Fraction(d21, l21)
            for l01 in range(1, b01 + 1):
                for l11 in range(1, b + 1):
                    if not _is_platonic_tuple((l01, l11, l21)):
                        continue
                    ell_p = Fraction(1, l01) + Fraction(1, l11) + Fraction(1, l21) - 1
                    if ell_p <= 0:
                        continue
                    for l02 in range(1, b + 1):
                        for l12 in range(1, b + 1):
                            if not _is_platonic_tuple((l02, l12, l21)):
                                continue
                            ell_m = (
                                Fraction(1, l02) + Fraction(1, l12) + Fraction(1, l21) - 1
                            )
                            if ell_m <= 0:
                                continue
                            yield from _shape_iv_inner(
                                k, l01, l02, l11, l12, l21, d21, m21, ell_p, ell_m
                            )


def _shape_iv_inner(k, l01, l02, l11, l12, l21, d21, m21, ell_p, ell_m):
    for d11 in _coprime_range(l11, 0, l11 - 1):
        m11 = Fraction(d11, l11)
        lo1, hi1 = _dwindow(l01, -m11 - m21, k * ell_p - m11 - m21, True, False)
        for d01 in _coprime_range(l01, lo1, hi1):
            m01 = Fraction(d01, l01)
            mp = m01 + m11 + m21
            # v11 and v01 must not be contractible: slope gaps >= m+
            # d12 window: m11 - k*ell_m <= m12 <= m11 - m+ (and m12 < m11)
            lo3, hi3 = _dwindow(l12, m11 - k * ell_m, m11 - mp, False, False)
            for d12 in _coprime_range(l12, lo3, hi3):
                m12 = Fraction(d12, l12)
                if m12 >= m11:
                    continue
                lo2, hi2 = _dwindow(
                    l02, -k * ell_m - m12 - m21, -m12 - m21, False, True
                )
                # v01 gap: m01 - m02 >= m+  =>  m02 <= m01 - m+
                w2lo, w2hi = _dwindow(l02, m01 - k * ell_m, m01 - mp, False, False)
                lo2 = max(lo2, w2lo)
                hi2 = min(hi2, w2hi)
                for d02 in _coprime_range(l02, lo2, hi2):
                    if Fraction(d02, l02) >= m01:
                        continue
                    yield pmatrix(
                        [
                            [(l01, d01), (l02, d02)],
                            [(l11, d11), (l12, d12)],
                            [(l21, d21)],
                        ]
                    )


def _shape_v(k: int):
    """(2,2,1,1;0) with l_01 = 1."""
    b = max(2 * k * k, 5)
    for l21 in range(2, b + 1):
        for l31 in range(2, l21 + 1):
            for l11 in range(1, 2 * k * k + 1):
                if not _is_platonic_tuple((1, l11, l21, l31)):
                    continue
                ell_p = (
                    Fraction(1, 1)
                    + Fraction(1, l11)
                    + Fraction(1, l21)
                    + Fraction(1, l31)
                    - 2
                )
                if ell_p <= 0:
                    continue
                for l02 in range(1, 6):
                    for l12 in range(1, b + 1):
                        if not _is_platonic_tuple((l02, l12, l21, l31)):
                            continue
                        ell_m = (
                            Fraction(1, l02)
                            + Fraction(1, l12)
                            + Fraction(1, l21)
                            + Fraction(1, l31)
                            - 2
                        )
                        if ell_m <= 0:
                            continue
                        yield from _shape_v_inner(
                            k, l02, l11, l12, l21, l31, ell_p, ell_m
                        )


def _shape_v_inner(k, l02, l11, l12, l21, l31, ell_p, ell_m):
    for d21 in _coprime_range(l21, 1, l21 - 1):
        m21 = Fraction(d21, l21)
        for d31 in _coprime_range(l31, 1, l31 - 1):
            m31 = Fraction(d31, l31)
            for d11 in _coprime_range(l11, 0, l11 - 1):
                m11 = Fraction(d11, l11)
                rest = m11 + m21 + m31
                lo1, hi1 = _dwindow(1, -rest, k * ell_p - rest, True, False)
                lo1 = max(lo1, -2)
                hi1 = min(hi1, k)
                for d01 in range(lo1, hi1 + 1):
                    mp = d01 + rest
                    lo3, hi3 = _dwindow(l12, m11 - k * ell_m, m11 - mp, False, False)
                    for d12 in _coprime_range(l12, lo3, hi3):
                        m12 = Fraction(d12, l12)
                        if m12 >= m11:
                            continue
                        lo2, hi2 = _dwindow(
                            l02, -k * ell_m - m12 - m21 - m31, -m12 - m21 - m31, False, True
                        )
                        w2lo, w2hi = _dwindow(l02, d01 - k * ell_m, d01 - mp, False, False)
                        lo2 = max(lo2, w2lo)
                        hi2 = min(hi2, w2hi)
                        lo2 = max(lo2, -k - 3)
                        hi2 = min(hi2, k - 2)
                        for d02 in _coprime_range(l02, lo2, hi2):
                            if Fraction(d02, l02) >= d01:
                                continue
                            yield pmatrix(
                                [
                                    [(1, d01), (l02, d02)],
                                    [(l11, d11), (l12, d12)],
                                    [(l21, d21)],
                                    [(l31, d31)],
                                ]
                            )


def classify_comb_minimal(k: int, progress=None) -> list[PMatrix]:
    """Normal forms of the non-toric combinatorially minimal surfaces."""
    seen: dict[tuple, PMatrix] = {}
    shapes = [_shape_i, _shape_ii, _shape_iii, _shape_iv, _shape_v]
    for idx, gen in enumerate(shapes):
        count = 0
        for p in gen(k):
            count += 1
            if not validate(p) or not is_irredundant(p):
                continue
            if contractible_columns(p):
                continue
            if not is_log_terminal(p):
                continue
            if not is_del_pezzo(p):
                continue
            if not is_complex_almost_k_hollow(p, k):
                continue
            nf = normal_form(p)
            seen.setdefault(encode(nf), nf)
        if progress:
            progress(idx + 1, count, len(seen))
    return sorted(seen.values(), key=encode)


# ------------------------------------------------------------ starting sets

def _unimod_to_axis(v, sign: int):
    """Unimodular matrix M with M v = (0, sign) and det M = sign."""
    a, b = v
    # x*a + y*b = 1
    g, x, y = _ext_gcd(a, b)
    assert g == 1
    if sign > 0:
        return ((b, -a), (x, y))
    return ((b, -a), (-x, -y))


def _ext_gcd(a, b):
    old_r, r = a, b
    old_x, xx = 1, 0
    old_y, yy = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, xx = xx, old_x - q * xx
        old_y, yy = yy, old_y - q * yy
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _apply(mat, verts):
    (a, b), (c, d) = mat
    return [(a * x + b * y, c * x + d * y) for x, y in verts]


def starting_polygon_set(k: int, polys=None) -> list[LdpPolygon]:
    """The axis-aligned polygons of the toric starting class.

    For every almost k-hollow LDP-polygon with at most five vertices and
    every primitive lattice point v of it, images under unimodular maps
    sending v to (0, ±1) of either the polygon itself or the polygon with
    the vertex v dropped, whenever the result is an LDP-polygon with at
    most four vertices.
    """
    if polys is None:
        polys = classify_polygons(k)
    out: dict[tuple, LdpPolygon] = {}
    for poly in polys:
        q = poly.n
        if q > 5:
            continue
        vset = set(poly.vertices)
        for v in lattice_points(poly.vertices):
            if v == (0, 0) or vec_gcd(v) != 1:
                continue
            neg = (-v[0], -v[1])
            base = None
            if 4 <= q <= 5 and v in vset and neg not in vset:
                rest = [w for w in poly.vertices if w != v]
                hull = kernels.convex_hull(rest)
                if len(hull) >= 3 and kernels.strict_interior(hull, (0, 0)):
                    base = hull
            elif 3 <= q <= 4 and v not in vset and neg not in vset:
                base = list(poly.vertices)
            if base is None:
                continue
            for sign in (1, -1):
                img = _apply(_unimod_to_axis(v, sign), base)
                pl = polygon(img)
                out.setdefault(tuple(sorted(pl.vertices)), pl)
    return sorted(out.values(), key=lambda p: (p.n, tuple(sorted(p.vertices))))


# ------------------------------------------------------------ bounds

@dataclass(frozen=True)
class BoundsProfile:
    k: int
    alpha: Fraction
    ell: int
    arm_count_ee: int
    arm_count_parab: int

    @property
    def n_i_max(self) -> int:
        return 2 * self.ell + 1


def bounds_profile(k: int, seeds, toric_seeds) -> BoundsProfile:
    """alpha = exact minimum of min(top, -bottom) over the starting class."""
    alpha = Fraction(1)
    for p in seeds:
        t, b = _heights(p)
        alpha = min(alpha, t, b)
    for pl in toric_seeds:
        t, b = _heights(pmatrix_from_polygon(pl))
        alpha = min(alpha, t, b)
    ell = floor(Fraction(2 * k * k) / alpha)
    return BoundsProfile(k, alpha, int(ell), 4 * k, 2 * k + 2)


# ------------------------------------------------------------ extension BFS

def _insert_candidates(p: PMatrix, i: int, k: int, bounds: BoundsProfile):
    """Candidate columns (l, d) for a proper extension of arm i.

    Bounded by the Minkowski radius of the current complex, the exact
    slope windows implied by hollowness (0 < d+ <= k on an elliptic side)
    or by the del Pezzo inequality (parabolic side), and the
    hollow-triangle prefilter at the current axis heights.  Every
    survivor still passes through the full validity pipeline.
    """
    if len(p.arms[i]) >= bounds.n_i_max:
        return
    prof = numeric_profile(p)
    top, negbot = _heights(p)
    a_cur = min(top, negbot)
    lmax = min(bounds.ell, floor(Fraction(2 * k * k) / a_cur))
    arm = p.arms[i]
    l_top, m_top = arm[0][0], Fraction(arm[0][1], arm[0][0])
    l_bot, m_bot = arm[-1][0], Fraction(arm[-1][1], arm[-1][0])
    slopes = {Fraction(d, l) for l, d in arm}
    an, ad = a_cur.numerator, a_cur.denominator
    for l in range(1, lmax + 1):
        # window for a new top column (slope above m_top): the sum of top
        # slopes is capped by k·ell+ (elliptic sink of the complex) or by
        # ell+ itself (del Pezzo with a parabolic source)
        ell_new = prof.ell_plus - Fraction(1, l_top) + Fraction(1, l)
        if p.has_vplus:
            top_hi = ell_new - (prof.m_plus - m_top)
        elif ell_new > 0:
            top_hi = k * ell_new - (prof.m_plus - m_top)
        else:
            top_hi = m_top  # new top would destroy log terminality
        ell_new = prof.ell_minus - Fraction(1, l_bot) + Fraction(1, l)
        if p.has_vminus:
            bot_lo = -ell_new - (prof.m_minus - m_bot)
        elif ell_new > 0:
            bot_lo = -k * ell_new - (prof.m_minus - m_bot)
        else:
            bot_lo = m_bot
        lo = min(bot_lo, m_bot)
        hi = max(top_hi, m_top)
        dlo = ceil(lo * l)
        dhi = floor(hi * l)
        for d in range(dlo, dhi + 1):
            if gcd(l, d) != 1:
                continue
            s = Fraction(d, l)
            if s in slopes:
                continue
            if s > m_top and s > top_hi:
                continue
            if s < m_bot and s < bot_lo:
                continue
            if not kernels.triangle_hollow(an, ad, l, d, k):
                continue
            yield (l, d)


def _expand_node(p: PMatrix, k: int, bounds: BoundsProfile) -> list[PMatrix]:
    """All valid one-step extensions of a valid surface, as normal forms."""
    out = []
    typ_parab = p.has_vplus or p.has_vminus
    arm_cap = bounds.arm_count_parab if typ_parab else bounds.arm_count_ee
    # proper extensions inside existing arms
    for i in range(p.r + 1):
        for col in _insert_candidates(p, i, k, bounds):
            q = proper_extend(p, i, col)
            if is_lc_del_pezzo(q, k):
                out.append(normal_form(q))
    # axis insertions
    for sign, have in (("+", p.has_vplus), ("-", p.has_vminus)):
        if not have:
            q = proper_extend_vpm(p, sign)
            if p.r + 1 <= bounds.arm_count_parab and is_lc_del_pezzo(q, k):
                out.append(normal_form(q))
    # new arm: redundant extension plus one insertion into it
    if p.r + 2 <= arm_cap:
        base = redundant_extend(p)
        for col in _insert_candidates(base, base.r, k, bounds):
            q = proper_extend(base, base.r, col)
            if is_irredundant(q) and is_lc_del_pezzo(q, k):
                out.append(normal_form(q))
    return out


def _starting_r2(k: int, toric_seeds, bounds: BoundsProfile) -> list[PMatrix]:
    """Irredundant r = 2 surfaces: aligned polygon + one new two-column arm."""
    out = []
    for pl in toric_seeds:
        base = pmatrix_from_polygon(pl)
        ext = redundant_extend(base)
        for col in _insert_candidates(ext, ext.r, k, bounds):
            q = proper_extend(ext, ext.r, col)
            if q.r + 1 > (bounds.arm_count_parab if (q.has_vplus or q.has_vminus) else bounds.arm_count_ee):
                continue
            if is_irredundant(q) and is_lc_del_pezzo(q, k):
                out.append(normal_form(q))
    return out


def classify_all(
    k: int,
    progress=None,
    checkpoint_dir: str | None = None,
    processes: int = 0,
) -> list[PMatrix]:
    """All non-toric 1/k-log canonical del Pezzo K*-surfaces, as normal forms."""
    polys = classify_polygons(k)
    toric_seeds = starting_polygon_set(k, polys)
    minimal = classify_comb_minimal(k)
    # alpha needs S1; S0 generation needs a profile: bootstrap with the
    # minimal surfaces and toric seeds first (S0 members only shrink alpha
    # through their bases, which are already included).
    bounds = bounds_profile(k, minimal, toric_seeds)
    s0 = _starting_r2(k, toric_seeds, bounds)
    seen: dict[tuple, PMatrix] = {}
    frontier: list[PMatrix] = []
    for p in s0 + [normal_form(m) for m in minimal]:
        key = encode(p)
        if key not in seen:
            seen[key] = p
            frontier.append(p)
    bounds = bounds_profile(k, frontier, toric_seeds)
    level = 0
    if checkpoint_dir:
        os.makedirs(checkpoint_dir, exist_ok=True)
        frontier, seen, level = _resume(checkpoint_dir, frontier, seen, level)
    pool = None
    if processes and processes > 1:
        import multiprocessing as mp

        pool = mp.Pool(processes, initializer=_pool_init, initargs=(k, bounds))
    try:
        while frontier:
            level += 1
            if pool is not None:
                chunks = pool.map(_pool_expand, frontier, chunksize=16)
            else:
                chunks = (_expand_node(p, k, bounds) for p in frontier)
            nxt: list[PMatrix] = []
            for found in chunks:
                for q in found:
                    key = encode(q)
                    if key not in seen:
                        seen[key] = q
                        nxt.append(q)
            if progress:
                progress(level, len(nxt), len(seen))
            frontier = nxt
            if checkpoint_dir:
                _checkpoint(checkpoint_dir, level, frontier, seen)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return sorted(seen.values(), key=encode)


_POOL_STATE: dict = {}


def _pool_init(k, bounds):
    _POOL_STATE["k"] = k
    _POOL_STATE["bounds"] = bounds


def _pool_expand(p: PMatrix):
    return _expand_node(p, _POOL_STATE["k"], _POOL_STATE["bounds"])


def _matrix_to_json(p: PMatrix) -> list:
    return [[list(map(list, a)) for a in p.arms], p.has_vplus, p.has_vminus]


def _matrix_from_json(data) -> PMatrix:
    arms, vp, vm = data
    return PMatrix(tuple(tuple(tuple(c) for c in a) for a in arms), vp, vm)


def _checkpoint(path: str, level: int, frontier, seen) -> None:
    state = {
        "level": level,
        "frontier": [_matrix_to_json(p) for p in frontier],
        "seen": [_matrix_to_json(p) for p in seen.values()],
    }
    tmp = os.path.join(path, "state.json.tmp")
    with open(tmp, "w") as fh:
        json.dump(state, fh)
    os.replace(tmp, os.path.join(path, "state.json"))


def _resume(path: str, frontier, seen, level):
    fn = os.path.join(path, "state.json")
    if not os.path.exists(fn):
        return frontier, seen, level
    with open(fn) as fh:
        state = json.load(fh)
    seen = {}
    for data in state["seen"]:
        p = _matrix_from_json(data)
        seen[encode(p)] = p
    frontier = [_matrix_from_json(d) for d in state["frontier"]]
    return frontier, seen, state["level"]
