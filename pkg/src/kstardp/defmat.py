"""Defining matrices of rational projective K*-surfaces.

A surface is encoded by its arms -- per critical fiber a tuple of integer
pairs (l, d) with gcd(l, d) = 1, stored in strictly decreasing slope
order d/l -- together with flags for the axis columns (0,...,0,±1).
The full (r+1) x (n+m) block matrix is materialized only for display and
for the divisor class group.

The admissible operations of the isomorphy problem act on this data, and
`normal_form` computes the distinguished representative of each
equivalence class: irredundant, oriented, slope-ordered, arms sorted
lexicographically by their fractional slope tuples and adapted to the
source.  Residual ambiguity (both orientations admissible) is resolved by
the lexicographically minimal encoding.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import floor, ceil, gcd

Col = tuple[int, int]
Arm = tuple[Col, ...]
ColRef = tuple  # ("arm", i, j) | ("plus",) | ("minus",)


@dataclass(frozen=True)
class PMatrix:
    arms: tuple[Arm, ...]
    has_vplus: bool = False
    has_vminus: bool = False

    @property
    def r(self) -> int:
        return len(self.arms) - 1

    @property
    def nlist(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.arms)

    @property
    def n(self) -> int:
        return sum(len(a) for a in self.arms)

    @property
    def m(self) -> int:
        return int(self.has_vplus) + int(self.has_vminus)

    def slope(self, i: int, j: int) -> Fraction:
        l, d = self.arms[i][j]
        return Fraction(d, l)

    def __str__(self) -> str:
        return format_matrix(self)


def pmatrix(arms, vplus: bool = False, vminus: bool = False) -> PMatrix:
    """Build a PMatrix, sorting each arm by decreasing slope."""
    norm = []
    for arm in arms:
        cols = [(int(l), int(d)) for l, d in arm]
        cols.sort(key=lambda c: Fraction(c[1], c[0]), reverse=True)
        norm.append(tuple(cols))
    return PMatrix(tuple(norm), bool(vplus), bool(vminus))


def source_sink_type(p: PMatrix) -> str:
    """One of 'ee', 'ep', 'pe', 'pp' (source first, p = parabolic curve)."""
    return ("p" if p.has_vplus else "e") + ("p" if p.has_vminus else "e")


def mplus(p: PMatrix) -> Fraction:
    return sum(Fraction(a[0][1], a[0][0]) for a in p.arms)


def mminus(p: PMatrix) -> Fraction:
    return sum(Fraction(a[-1][1], a[-1][0]) for a in p.arms)


def invalid_reason(p: PMatrix) -> str | None:
    """First violated defining-matrix invariant, or None when valid."""
    if p.r < 1:
        return "needs at least two arms"
    for i, arm in enumerate(p.arms):
        if not arm:
            return f"arm {i} is empty"
        prev = None
        for l, d in arm:
            if l < 1:
                return f"column ({l},{d}) in arm {i} has l < 1"
            if gcd(l, d) != 1:
                return f"column ({l},{d}) in arm {i} is not primitive"
            s = Fraction(d, l)
            if prev is not None and s >= prev:
                return f"arm {i} is not strictly slope-decreasing"
            prev = s
    if p.r + 1 >= p.n + p.m:
        return "needs r+1 < n+m"
    if not p.has_vplus and mplus(p) <= 0:
        return "no source: neither v+ nor positive top slope sum"
    if not p.has_vminus and mminus(p) >= 0:
        return "no sink: neither v- nor negative bottom slope sum"
    return None


def validate(p: PMatrix) -> bool:
    return invalid_reason(p) is None


# ----------------------------------------------------------- irredundance

def is_irredundant(p: PMatrix) -> bool:
    return all(arm[0][0] * len(arm) > 1 for arm in p.arms)


def erase_erasable(p: PMatrix) -> PMatrix:
    """Drop every arm i > 0 consisting of the single column (1, 0)."""
    arms = [p.arms[0]] + [a for a in p.arms[1:] if a != ((1, 0),)]
    return replace(p, arms=tuple(arms))


def _erase_redundant_arms(p: PMatrix) -> PMatrix:
    """Equivalent matrix without single-column l=1 arms (keeps r >= 1).

    Arms {(1, d)} are redundant for any d: a slope shift turns them into
    the erasable {(1, 0)}; the shift is absorbed by the other arms.
    """
    while p.r >= 2:
        idx = next(
            (i for i, a in enumerate(p.arms) if len(a) == 1 and a[0][0] == 1),
            None,
        )
        if idx is None:
            break
        if idx == 0:
            p = swap_arms(p, 0, 1)
            idx = next(i for i, a in enumerate(p.arms) if len(a) == 1 and a[0][0] == 1)
        d = p.arms[idx][0][1]
        if d:
            p = add_row_multiple(p, idx, -d)
        p = replace(p, arms=p.arms[:idx] + p.arms[idx + 1 :])
    return p


# ----------------------------------------------------------- admissible ops

def flip_last_row(p: PMatrix) -> PMatrix:
    """Multiply the last matrix row by -1: swaps source and sink data."""
    arms = tuple(tuple((l, -d) for l, d in reversed(arm)) for arm in p.arms)
    return PMatrix(arms, p.has_vminus, p.has_vplus)


def swap_vpm(p: PMatrix) -> PMatrix:
    # the axis columns have canonical positions here, so this is a no-op
    return p


def swap_in_arm(p: PMatrix, i: int, j1: int, j2: int) -> PMatrix:
    # columns are stored slope-ordered, so renumbering is a no-op
    return p


def swap_arms(p: PMatrix, i: int, j: int) -> PMatrix:
    arms = list(p.arms)
    arms[i], arms[j] = arms[j], arms[i]
    return replace(p, arms=tuple(arms))


def add_row_multiple(p: PMatrix, i: int, c: int) -> PMatrix:
    """Add c times upper row i (1 <= i <= r) to the last row.

    Shifts the slopes of arm i by +c and of arm 0 by -c.
    """
    if not 1 <= i <= p.r:
        raise ValueError("row index out of range")
    arms = list(p.arms)
    arms[i] = tuple((l, d + c * l) for l, d in arms[i])
    arms[0] = tuple((l, d - c * l) for l, d in arms[0])
    return replace(p, arms=tuple(arms))


def apply_admissible(p: PMatrix, op: tuple) -> PMatrix:
    """Dispatch an admissible operation given as a tagged tuple."""
    kind = op[0]
    if kind == "flip_last_row":
        return flip_last_row(p)
    if kind == "swap_vpm":
        return swap_vpm(p)
    if kind == "swap_in_arm":
        return swap_in_arm(p, *op[1:])
    if kind == "swap_arms":
        return swap_arms(p, *op[1:])
    if kind == "add_row_multiple":
        return add_row_multiple(p, *op[1:])
    raise ValueError(f"unknown operation {op!r}")


# ----------------------------------------------------------- orientation

def _beta_plus_arm(arm: Arm) -> tuple[Fraction, ...]:
    b = max(floor(Fraction(d, l)) for l, d in arm)
    return tuple(Fraction(d, l) - b for l, d in arm)


def _beta_minus_arm(arm: Arm) -> tuple[Fraction, ...]:
    b = min(ceil(Fraction(d, l)) for l, d in arm)
    return tuple(b - Fraction(d, l) for l, d in reversed(arm))


def bplus(p: PMatrix) -> int:
    return sum(max(floor(Fraction(d, l)) for l, d in arm) for arm in p.arms)


def bminus(p: PMatrix) -> int:
    return -sum(min(ceil(Fraction(d, l)) for l, d in arm) for arm in p.arms)


def beta_plus(p: PMatrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(sorted((_beta_plus_arm(a) for a in p.arms), reverse=True))


def beta_minus(p: PMatrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(sorted((_beta_minus_arm(a) for a in p.arms), reverse=True))


def is_oriented(p: PMatrix) -> bool:
    typ = source_sink_type(p)
    if typ == "pe":
        return True
    if typ == "ep":
        return False
    bp, bm = bplus(p), bminus(p)
    if bp != bm:
        return bp > bm
    return beta_plus(p) >= beta_minus(p)


def _is_o4(p: PMatrix) -> bool:
    if source_sink_type(p) not in ("ee", "pp"):
        return False
    return bplus(p) == bminus(p) and beta_plus(p) == beta_minus(p)


# ----------------------------------------------------------- normal form

def _slope_to_col(s: Fraction) -> Col:
    return (s.denominator, s.numerator)


def _finish_normal_form(p: PMatrix) -> PMatrix:
    """Arms sorted by fractional slope tuple, matrix adapted to the source."""
    bp = bplus(p)
    betas = sorted((_beta_plus_arm(a) for a in p.arms), reverse=True)
    arms = []
    for pos, beta in enumerate(betas):
        if pos == 0:
            slopes = [x + bp for x in beta]
        else:
            slopes = list(beta)
        arms.append(tuple(_slope_to_col(s) for s in slopes))
    return PMatrix(tuple(arms), p.has_vplus, p.has_vminus)


def normal_form(p: PMatrix) -> PMatrix:
    """The unique distinguished representative of the equivalence class."""
    p = _erase_redundant_arms(p)
    if not is_oriented(p):
        p = flip_last_row(p)
    cands = [_finish_normal_form(p)]
    if _is_o4(p):
        cands.append(_finish_normal_form(flip_last_row(p)))
    return min(cands, key=encode)


def encode(p: PMatrix) -> tuple:
    """Canonical flat integer encoding, usable as a deduplication key."""
    flat = [p.r, int(p.has_vplus), int(p.has_vminus)]
    flat.extend(p.nlist)
    for arm in p.arms:
        for l, d in arm:
            flat.append(l)
            flat.append(d)
    return tuple(flat)


# ----------------------------------------------------------- contractions

def contractible_columns(p: PMatrix) -> list[ColRef]:
    """Columns lying in the cone of the remaining ones.

    These are exactly the curves of negative self intersection.  The sink
    condition for v- is 𝔪⁻ < 0, mirroring the v+ case (the printed case
    list carries a sign typo there).
    """
    out: list[ColRef] = []
    mp = mplus(p)
    mm = mminus(p)
    for i, arm in enumerate(p.arms):
        ni = len(arm)
        for j in range(ni):
            if 0 < j < ni - 1:
                out.append(("arm", i, j))
                continue
            if ni < 2:
                continue
            if j == 0:
                if p.has_vplus or mp - p.slope(i, 0) + p.slope(i, 1) > 0:
                    out.append(("arm", i, j))
            if j == ni - 1 and ni >= 2:
                if p.has_vminus or mm - p.slope(i, ni - 1) + p.slope(i, ni - 2) < 0:
                    out.append(("arm", i, j))
    if p.has_vplus and mp > 0:
        out.append(("plus",))
    if p.has_vminus and mm < 0:
        out.append(("minus",))
    return out


def contract(p: PMatrix, ref: ColRef) -> PMatrix:
    if ref not in contractible_columns(p):
        raise ValueError(f"column {ref} is not contractible")
    if ref == ("plus",):
        return replace(p, has_vplus=False)
    if ref == ("minus",):
        return replace(p, has_vminus=False)
    _, i, j = ref
    arms = list(p.arms)
    arms[i] = arms[i][:j] + arms[i][j + 1 :]
    return replace(p, arms=tuple(arms))


def proper_extend(p: PMatrix, i: int, col: Col) -> PMatrix:
    """Insert a new column into arm i (slope position found automatically)."""
    l, d = col
    if l < 1 or gcd(l, d) != 1:
        raise ValueError(f"column ({l},{d}) is not a valid arm column")
    s = Fraction(d, l)
    if any(Fraction(dd, ll) == s for ll, dd in p.arms[i]):
        raise ValueError(f"arm {i} already has a column of slope {s}")
    arms = list(p.arms)
    cols = sorted(arms[i] + (col,), key=lambda c: Fraction(c[1], c[0]), reverse=True)
    arms[i] = tuple(cols)
    return replace(p, arms=tuple(arms))


def proper_extend_vpm(p: PMatrix, sign: str) -> PMatrix:
    if sign == "+":
        if p.has_vplus:
            raise ValueError("v+ already present")
        return replace(p, has_vplus=True)
    if sign == "-":
        if p.has_vminus:
            raise ValueError("v- already present")
        return replace(p, has_vminus=True)
    raise ValueError("sign must be '+' or '-'")


def redundant_extend(p: PMatrix) -> PMatrix:
    return replace(p, arms=p.arms + (((1, 0),),))


# ----------------------------------------------------------- serialization

def to_rows(p: PMatrix) -> list[list[int]]:
    """Materialize the full (r+1) x (n+m) block matrix."""
    r = p.r
    rows = [[] for _ in range(r + 1)]
    for l, d in p.arms[0]:
        for q in range(r):
            rows[q].append(-l)
        rows[r].append(d)
    for i in range(1, r + 1):
        for l, d in p.arms[i]:
            for q in range(r):
                rows[q].append(l if q == i - 1 else 0)
            rows[r].append(d)
    if p.has_vplus:
        for q in range(r):
            rows[q].append(0)
        rows[r].append(1)
    if p.has_vminus:
        for q in range(r):
            rows[q].append(0)
        rows[r].append(-1)
    return rows


def from_rows(rows) -> PMatrix:
    """Parse a printed block matrix back into arm data."""
    rows = [list(r) for r in rows]
    r = len(rows) - 1
    ncols = len(rows[0])
    arms: list[list[Col]] = [[] for _ in range(r + 1)]
    vplus = vminus = False
    for c in range(ncols):
        col = [rows[q][c] for q in range(r + 1)]
        upper, d = col[:r], col[r]
        if all(x == 0 for x in upper):
            if d == 1:
                vplus = True
            elif d == -1:
                vminus = True
            else:
                raise ValueError(f"column {col} is neither arm data nor an axis column")
        elif all(x < 0 for x in upper) and len(set(upper)) == 1:
            arms[0].append((-upper[0], d))
        else:
            nz = [q for q, x in enumerate(upper) if x]
            if len(nz) != 1 or upper[nz[0]] < 0:
                raise ValueError(f"column {col} does not fit the block shape")
            arms[nz[0] + 1].append((upper[nz[0]], d))
    return pmatrix(arms, vplus, vminus)


def format_matrix(p: PMatrix) -> str:
    rows = to_rows(p)
    widths = [max(len(str(rows[q][c])) for q in range(len(rows))) for c in range(len(rows[0]))]
    lines = []
    for row in rows:
        lines.append(" ".join(str(x).rjust(w) for x, w in zip(row, widths)))
    return "\n".join(lines)
