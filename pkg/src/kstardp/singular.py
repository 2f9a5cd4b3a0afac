"""Fixed points, Gorenstein indices, resolutions and the anticanonical complex.

All per-arm work happens in the two-dimensional (l, d) chart of the arm:
the tropical picture of X(A,P) is a union of half-planes glued along the
vertical axis, so every cone, Hilbert basis and discrepancy computation
is genuinely planar.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from kstardp import kernels
from kstardp.defmat import PMatrix, pmatrix
from kstardp.exactmath import det2, hilbert_basis_2d, lcm_all
from kstardp.geometry import NumericProfile, numeric_profile

FixedPoint = tuple  # ("hyp", i, j) | ("parab+", i) | ("parab-", i) | ("ell+",) | ("ell-",)


def fixed_points(p: PMatrix) -> list[FixedPoint]:
    out: list[FixedPoint] = []
    if p.has_vplus:
        out.extend(("parab+", i) for i in range(p.r + 1))
    else:
        out.append(("ell+",))
    for i, arm in enumerate(p.arms):
        out.extend(("hyp", i, j) for j in range(len(arm) - 1))
    if p.has_vminus:
        out.extend(("parab-", i) for i in range(p.r + 1))
    else:
        out.append(("ell-",))
    return out


# --------------------------------------------------------- Gorenstein data

@dataclass(frozen=True)
class GorensteinData:
    iota_hyperbolic: dict
    iota_parab_plus: dict
    iota_parab_minus: dict
    iota_plus: int | None  # elliptic x+
    iota_minus: int | None
    u_plus: tuple[Fraction, ...] | None
    u_minus: tuple[Fraction, ...] | None
    iota_global: int

    def local_indices(self) -> list[int]:
        out = list(self.iota_hyperbolic.values())
        out += list(self.iota_parab_plus.values())
        out += list(self.iota_parab_minus.values())
        if self.iota_plus is not None:
            out.append(self.iota_plus)
        if self.iota_minus is not None:
            out.append(self.iota_minus)
        return out


def _elliptic_u(p: PMatrix, prof: NumericProfile, top: bool):
    """Linear form u± with <u,v_i1> = 1 (i >= 1), <u,v_01> = 1-(r-1)l_01."""
    r = p.r
    lstar = prof.l_plus if top else prof.l_minus
    ells = prof.ell_plus if top else prof.ell_minus
    ms = prof.m_plus if top else prof.m_minus
    if ms == 0:
        raise ValueError("no elliptic fixed point on this side")
    cols = [arm[0] if top else arm[-1] for arm in p.arms]
    us = []
    for i in range(1, r + 1):
        li, di = cols[i]
        val = (r - 1) * di * lstar // li
        for jj in range(r + 1):
            if jj == i:
                continue
            lj, dj = cols[jj]
            val += (dj - di) * lstar // (lj * li)
        us.append(val)
    denom = lstar * ms
    u = tuple(Fraction(x, 1) / denom for x in us) + (Fraction(lstar) * ells / denom,)
    # characterizing evaluations (sanity of the formula)
    l0, d0 = cols[0]
    ev0 = sum(u[q] * (-l0) for q in range(r)) + u[r] * d0
    assert ev0 == 1 - (r - 1) * l0, "u does not satisfy its defining evaluation"
    for i in range(1, r + 1):
        li, di = cols[i]
        assert u[i - 1] * li + u[r] * di == 1
    iota_den = [x.denominator for x in u]
    iota = lcm_all(iota_den)
    return u, iota


def local_gorenstein_indices(p: PMatrix) -> GorensteinData:
    prof = numeric_profile(p)
    hyp = {}
    for i, arm in enumerate(p.arms):
        for j in range(len(arm) - 1):
            l1, d1 = arm[j]
            l2, d2 = arm[j + 1]
            delta = l2 * d1 - l1 * d2
            g = gcd(l1 - l2, d1 - d2)
            hyp[(i, j)] = delta // g if g else delta
    pplus = {}
    pminus = {}
    iplus = iminus = None
    uplus = uminus = None
    if p.has_vplus:
        for i, arm in enumerate(p.arms):
            l, d = arm[0]
            pplus[i] = l // gcd(d - 1, l)
    else:
        uplus, iplus = _elliptic_u(p, prof, top=True)
    if p.has_vminus:
        for i, arm in enumerate(p.arms):
            l, d = arm[-1]
            pminus[i] = l // gcd(d + 1, l)
    else:
        uminus, iminus = _elliptic_u(p, prof, top=False)
    data = GorensteinData(hyp, pplus, pminus, iplus, iminus, uplus, uminus, 1)
    return replace(data, iota_global=lcm_all(data.local_indices()))


def gorenstein_index(p: PMatrix) -> int:
    return local_gorenstein_indices(p).iota_global


# --------------------------------------------------------- log terminality

def is_platonic(tup) -> bool:
    """Positive integers q_0..q_r with sum of reciprocals > r - 1."""
    return sum(Fraction(1, q) for q in tup) > len(tup) - 2


def elliptic_tuples(p: PMatrix) -> dict[str, tuple[int, ...]]:
    out = {}
    if not p.has_vplus:
        out["+"] = tuple(arm[0][0] for arm in p.arms)
    if not p.has_vminus:
        out["-"] = tuple(arm[-1][0] for arm in p.arms)
    return out


def is_log_terminal(p: PMatrix) -> bool:
    return all(is_platonic(t) for t in elliptic_tuples(p).values())


# --------------------------------------------------------- resolutions

def canonical_resolution(p: PMatrix) -> PMatrix:
    """Adjoin the axis columns, then subdivide every arm cone along its
    Hilbert basis.  The result is smooth."""
    arms = []
    for arm in p.arms:
        chain = [(0, 1)] + list(arm) + [(0, -1)]
        new: list[tuple[int, int]] = []
        for a, b in zip(chain, chain[1:]):
            seg = hilbert_basis_2d(a, b)
            new.extend(seg[1:] if new else seg)
        arms.append(tuple(c for c in new if c[0] > 0))
    res = PMatrix(tuple(arms), True, True)
    assert _is_smooth(res), "canonical resolution failed to be smooth"
    return res


def _is_smooth(p: PMatrix) -> bool:
    for arm in p.arms:
        chain = [(0, 1)] + list(arm) + [(0, -1)]
        for a, b in zip(chain, chain[1:]):
            if det2(a, b) != -1:
                return False
    return True


def _exceptional_refs(p: PMatrix, resolved: PMatrix) -> list:
    refs = []
    orig = [set(arm) for arm in p.arms]
    for i, arm in enumerate(resolved.arms):
        for j, col in enumerate(arm):
            if col not in orig[i]:
                refs.append(("arm", i, j))
    if not p.has_vplus:
        refs.append(("plus",))
    if not p.has_vminus:
        refs.append(("minus",))
    return refs


def minimal_resolution(p: PMatrix) -> PMatrix:
    """Contract exceptional (-1)-curves of the canonical resolution."""
    from kstardp.geometry import intersection_number

    res = canonical_resolution(p)
    while True:
        refs = _exceptional_refs(p, res)
        hit = None
        for ref in refs:
            if intersection_number(res, ref, ref) == -1:
                hit = ref
                break
        if hit is None:
            return res
        if hit == ("plus",):
            res = replace(res, has_vplus=False)
        elif hit == ("minus",):
            res = replace(res, has_vminus=False)
        else:
            _, i, j = hit
            arms = list(res.arms)
            arms[i] = arms[i][:j] + arms[i][j + 1 :]
            res = replace(res, arms=tuple(arms))


def resolution_graph(p: PMatrix, fp: FixedPoint) -> list[int]:
    """Self intersection numbers of the exceptional curves over a fixed point.

    Hyperbolic and parabolic fixed points give the chain over their chart
    cone in resolution order.  An elliptic fixed point gives a star; it is
    flattened as [central curve] + per-arm chains running outward from the
    center.
    """
    from kstardp.geometry import intersection_number

    res = canonical_resolution(p)
    kind = fp[0]

    def chain_between(i: int, lo_col, hi_col) -> list[int]:
        arm = res.arms[i]
        cols = [c for c in arm if _between(lo_col, c, hi_col)]
        out = []
        for c in cols:
            j = arm.index(c)
            out.append(intersection_number(res, ("arm", i, j), ("arm", i, j)))
        return out

    if kind == "hyp":
        _, i, j = fp
        return [int(x) for x in chain_between(i, p.arms[i][j], p.arms[i][j + 1])]
    if kind == "parab+":
        _, i = fp
        return [int(x) for x in chain_between(i, (0, 1), p.arms[i][0])]
    if kind == "parab-":
        _, i = fp
        return [int(x) for x in chain_between(i, p.arms[i][-1], (0, -1))]
    if kind == "ell+":
        out = [int(intersection_number(res, ("plus",), ("plus",)))]
        for i in range(p.r + 1):
            out.extend(int(x) for x in chain_between(i, (0, 1), p.arms[i][0]))
        return out
    if kind == "ell-":
        out = [int(intersection_number(res, ("minus",), ("minus",)))]
        for i in range(p.r + 1):
            out.extend(int(x) for x in chain_between(i, p.arms[i][-1], (0, -1)))
        return out
    raise ValueError(f"unknown fixed point {fp!r}")


def _between(lo, c, hi) -> bool:
    return det2(lo, c) < 0 and det2(c, hi) < 0


# --------------------------------------------------------- antican complex

@dataclass(frozen=True)
class AnticanComplex:
    top: Fraction  # height of the upper axis vertex (d+ or 1)
    bottom: Fraction
    chains: tuple[tuple[tuple[int, int], ...], ...]  # per arm, the columns


def antican_complex(p: PMatrix) -> AnticanComplex:
    prof = numeric_profile(p)
    if p.has_vplus:
        top = Fraction(1)
    else:
        if prof.ell_plus <= 0:
            raise ValueError("x+ is not log terminal: no anticanonical complex")
        top = prof.d_plus
    if p.has_vminus:
        bottom = Fraction(-1)
    else:
        if prof.ell_minus <= 0:
            raise ValueError("x- is not log terminal: no anticanonical complex")
        bottom = prof.d_minus
    assert top > 0 > bottom
    return AnticanComplex(top, bottom, tuple(p.arms))


def is_complex_almost_k_hollow(p: PMatrix, k: int) -> bool:
    """Almost k-hollowness of the anticanonical complex of a log del Pezzo.

    Tested per arm in the (l, d)-plane; the shared axis contributes the
    points (0, bk) strictly between bottom and top.
    """
    ac = antican_complex(p)
    tn, td = ac.top.numerator, ac.top.denominator
    bn, bd = ac.bottom.numerator, ac.bottom.denominator
    # axis: a nonzero multiple of k strictly between bottom and top
    b = k
    if b * td < tn:
        return False
    b = -k
    if b * bd > bn:
        return False
    for chain in ac.chains:
        if not kernels.arm_hollow(list(chain), tn, td, bn, bd, k):
            return False
    return True


def eps_max(p: PMatrix) -> Fraction:
    """min ‖v‖/‖ṽ‖ over exceptional rays of the canonical resolution, capped at 1.

    ṽ is the crossing of the ray with the boundary of the anticanonical
    complex; X is 1/k-log canonical iff the result is >= 1/k.
    """
    ac = antican_complex(p)
    res = canonical_resolution(p)
    best = Fraction(1)
    if not p.has_vplus:
        best = min(best, 1 / ac.top)
    if not p.has_vminus:
        best = min(best, -1 / ac.bottom)
    for i, chain in enumerate(ac.chains):
        boundary = [(Fraction(0), ac.top)] + [(Fraction(x), Fraction(y)) for x, y in chain] + [
            (Fraction(0), ac.bottom)
        ]
        orig = set(chain)
        for col in res.arms[i]:
            if col in orig:
                continue
            ratio = _crossing_ratio(boundary, col)
            if ratio < best:
                best = ratio
    return best


def _crossing_ratio(boundary, v) -> Fraction:
    """ratio ‖v‖/‖ṽ‖ for the boundary crossing ṽ of the ray through v."""
    vx, vy = Fraction(v[0]), Fraction(v[1])
    for (ax, ay), (bx, by) in zip(boundary, boundary[1:]):
        # does the ray through v cross the segment [a, b]?
        ca = ax * vy - ay * vx
        cb = bx * vy - by * vx
        if ca <= 0 <= cb and (ca < 0 or cb > 0):
            num = vx * (by - ay) - vy * (bx - ax)
            den = ax * by - ay * bx
            return num / den
    raise ValueError(f"ray through {v} misses the complex boundary")


# --------------------------------------------------------- chart types

def canonical_multiplicity(p: PMatrix) -> int:
    """ζ = ι·𝔩±/𝔪± for the affine chart of a log terminal elliptic point."""
    if any(len(a) != 1 for a in p.arms) or p.has_vplus or p.has_vminus:
        raise ValueError("canonical multiplicity needs an affine elliptic chart")
    prof = numeric_profile(p)
    gd = local_gorenstein_indices(p)
    if prof.m_plus > 0:
        zeta = gd.iota_plus * prof.ell_plus / prof.m_plus
    else:
        zeta = gd.iota_minus * prof.ell_minus / prof.m_minus
    assert zeta.denominator == 1
    return int(zeta)


def elliptic_type(p: PMatrix) -> str:
    """Label of a log terminal elliptic chart: A/K-series for toric charts,
    the D/E shapes otherwise; raises on charts that match no shape."""
    if any(len(a) != 1 for a in p.arms) or p.has_vplus or p.has_vminus:
        raise ValueError("elliptic type needs an affine chart")
    if not is_log_terminal_chart(p):
        raise ValueError("chart is not log terminal")
    from kstardp.defmat import _erase_redundant_arms

    q = _erase_redundant_arms(p)
    if q.r == 1:
        return _toric_chart_type(q)
    gd = local_gorenstein_indices(p)
    prof = numeric_profile(p)
    iota = gd.iota_plus if prof.m_plus > 0 else gd.iota_minus
    zeta = canonical_multiplicity(p)
    ls = sorted((arm[0][0] for arm in q.arms), reverse=True)
    if ls[1:] == [2, 2]:
        return f"D(zeta={zeta},iota={iota})"
    if ls == [3, 3, 2]:
        return f"E6(zeta={zeta},iota={iota})"
    if ls == [4, 3, 2]:
        return f"E7(iota={iota})"
    if ls == [5, 3, 2]:
        return f"E8(iota={iota})"
    raise ValueError(f"chart with exponents {ls} matches no known shape")


def is_log_terminal_chart(p: PMatrix) -> bool:
    tup = tuple(arm[0][0] for arm in p.arms)
    return is_platonic(tup)


def _toric_chart_type(q: PMatrix) -> str:
    # q has two single-column arms: the cone over (-l0, d0), (l1, d1)
    (l0, d0), = q.arms[0]
    (l1, d1), = q.arms[1]
    v1, v2 = (-l0, d0), (l1, d1)
    det = abs(det2(v1, v2))
    g = gcd(v1[1] - v2[1], v2[0] - v1[0])
    iota = det // g if g else det
    if iota == 1:
        return f"A{det - 1}"
    if iota == 2:
        return f"K{(det // 4)}"
    return f"C(det={det},iota={iota})"


def affine_toric_by_index(iota: int, b_max: int) -> list[tuple[Vec2, Vec2]]:
    """Generators of the affine toric charts of Gorenstein index iota >= 2."""
    if iota < 2:
        raise ValueError("the Gorenstein charts form the A-series; use iota >= 2")
    out = []
    for b in range(2, b_max + 1):
        for kappa in range(1, iota):
            if (b - 1) % kappa:
                continue
            d = iota * (b - 1) // kappa
            if gcd(b, d) != 1 or gcd(kappa, iota) != 1:
                continue
            out.append(((1, 0), (b, d)))
    return out


Vec2 = tuple[int, int]


# --------------------------------------------------------- singular points

def singular_point_count(p: PMatrix) -> int:
    """Number of singular fixed points."""
    prof = numeric_profile(p)
    count = 0
    for i, arm in enumerate(p.arms):
        for j in range(len(arm) - 1):
            l1, d1 = arm[j]
            l2, d2 = arm[j + 1]
            if l2 * d1 - l1 * d2 != 1:
                count += 1
        if p.has_vplus and arm[0][0] > 1:
            count += 1
        if p.has_vminus and arm[-1][0] > 1:
            count += 1
    if not p.has_vplus:
        if not _elliptic_smooth(p, prof, top=True):
            count += 1
    if not p.has_vminus:
        if not _elliptic_smooth(p, prof, top=False):
            count += 1
    return count


def _elliptic_smooth(p: PMatrix, prof: NumericProfile, top: bool) -> bool:
    ls = [arm[0][0] if top else arm[-1][0] for arm in p.arms]
    quasismooth = sum(1 for l in ls if l == 1) >= p.r
    if top:
        factorial = prof.l_plus * prof.m_plus == 1
    else:
        factorial = prof.l_minus * prof.m_minus == -1
    return quasismooth and factorial
