"""Almost k-hollow lattice polygons and the toric side of the classification.

A toric log del Pezzo surface corresponds to an LDP-polygon: a lattice
polygon with primitive vertices and the origin in its interior.  The
surface is 1/k-log canonical exactly when the polygon is almost k-hollow,
i.e. the only k-fold lattice point in its interior is the origin.  This
module classifies those polygons up to unimodular equivalence by a
breadth-first search from the minimal ones and reads off the surface
invariants directly from a polygon.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from kstardp import kernels
from kstardp.exactmath import Vec2, det2, hilbert_basis_2d, lcm_all, vec_gcd


@dataclass(frozen=True)
class LdpPolygon:
    """Lattice polygon with primitive vertices, origin interior, ccw order."""

    vertices: tuple[Vec2, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        for v in vs:
            if vec_gcd(v) != 1:
                raise ValueError(f"vertex {v} is not primitive")
        for i in range(len(vs)):
            a, b, c = vs[i - 2], vs[i - 1], vs[i]
            turn = det2((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1]))
            if turn <= 0:
                raise ValueError("vertices must be strictly convex in ccw order")
        if not kernels.strict_interior(list(vs), (0, 0)):
            raise ValueError("origin must be interior")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def volume(self) -> Fraction:
        tot = 0
        vs = self.vertices
        for i in range(len(vs)):
            tot += det2(vs[i], vs[(i + 1) % len(vs)])
        return Fraction(tot, 2)


def _ccw_order(verts: list[Vec2]) -> list[Vec2]:
    """Vertex chain of the hull in ccw order (input may be any lattice set)."""
    hull = kernels.convex_hull(list(verts))
    if len(hull) < 3:
        raise ValueError("degenerate polygon")
    return hull


def polygon(verts) -> LdpPolygon:
    """LdpPolygon from an arbitrary iterable of lattice points."""
    return LdpPolygon(tuple(_ccw_order([tuple(v) for v in verts])))


def is_almost_k_hollow(verts, k: int) -> bool:
    """A° ∩ kZ² = {0}: origin interior and no other interior k-fold point."""
    if isinstance(verts, LdpPolygon):
        verts = verts.vertices
    return kernels.is_almost_k_hollow_pts(list(verts), k)


def expand(a: LdpPolygon, v: Vec2) -> LdpPolygon:
    """conv(A ∪ {v}) for a lattice point v outside A."""
    vs = list(a.vertices)
    if kernels.strict_interior(vs, v) or _on_hull(vs, v):
        raise ValueError(f"{v} already lies in the polygon")
    return LdpPolygon(tuple(_ccw_order(vs + [v])))


def collapse(a: LdpPolygon, v: Vec2) -> list[Vec2]:
    """Vertex chain of conv(Z² ∩ A \\ {v}); may fail to be an LDP-polygon."""
    pts = [p for p in lattice_points(a.vertices) if p != v]
    return _ccw_order(pts)


def _on_hull(verts: list[Vec2], p: Vec2) -> bool:
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if det2((b[0] - a[0], b[1] - a[1]), (p[0] - a[0], p[1] - a[1])) == 0:
            if min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]):
                return True
    return False


def lattice_points(verts) -> list[Vec2]:
    """All lattice points of a convex polygon (boundary included)."""
    verts = [tuple(v) for v in verts]
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if kernels.strict_interior(verts, p) or _on_hull(verts, p):
                out.append(p)
    return out


def minimal_polygons(k: int) -> list[LdpPolygon]:
    """The 2k+1 minimal almost k-hollow polygons: the square and Δ_1..Δ_2k."""
    if k < 1:
        raise ValueError("k must be positive")
    box = LdpPolygon(((1, 0), (0, 1), (-1, 0), (0, -1)))
    out = [box]
    for alpha in range(1, 2 * k + 1):
        out.append(polygon([(1, 0), (0, 1), (-alpha, -1)]))
    return out


def canonical_form(a: LdpPolygon) -> LdpPolygon:
    """Distinguished representative of the unimodular equivalence class.

    Lexicographically minimal Hermite-normal-form image of the vertex
    matrix over all cyclic rotations and both orientations; constant on
    GL(2,Z)-orbits and idempotent.
    """
    key = kernels.canonical_key(list(a.vertices))
    chain = [(key[i], key[i + 1]) for i in range(0, len(key), 2)]
    return LdpPolygon(tuple(_ccw_order(chain)))


def canonical_key(verts) -> tuple[int, ...]:
    if isinstance(verts, LdpPolygon):
        verts = verts.vertices
    return kernels.canonical_key(list(verts))


def shadow_excludes(verts, w: Vec2, v: Vec2) -> bool:
    """True when v lies in the shadow S(w, A) = w + cone(w-u : u ∈ A)°.

    Expanding A at such a v makes w an interior point, so the extension
    cannot stay almost k-hollow.  Pruning only; the direct hollowness test
    remains the source of truth.
    """
    if isinstance(verts, LdpPolygon):
        verts = verts.vertices
    return kernels.shadow_contains(list(verts), w, v)


@dataclass(frozen=True)
class HollowClass:
    """One unimodular class found by the search."""

    key: tuple[int, ...]
    rep: tuple[Vec2, ...]  # small-norm representative used for expansion
    ldp: bool

    @property
    def n(self) -> int:
        return len(self.rep)

    def volume(self) -> Fraction:
        tot = 0
        vs = self.rep
        for i in range(len(vs)):
            tot += det2(vs[i], vs[(i + 1) % len(vs)])
        return Fraction(tot, 2)


def classify_hollow(k: int, progress=None) -> list[HollowClass]:
    """All almost k-hollow lattice polygons up to unimodular equivalence.

    Breadth-first closure of the minimal polygons under single-vertex
    extension.  Vertices of intermediate polygons may be non-primitive;
    the LDP classes are flagged.  Deduplication is by canonical key, and
    each class is expanded once from a norm-reduced representative, which
    keeps the candidate discs given by the Minkowski bound small.
    """
    seeds = []
    for p in minimal_polygons(k):
        seeds.append(list(p.vertices))
    seen: dict[tuple[int, ...], HollowClass] = {}
    frontier: list[list[Vec2]] = []
    for s in seeds:
        key = kernels.canonical_key(s)
        if key not in seen:
            rep = kernels.reduce_rep(s)
            seen[key] = HollowClass(key, tuple(rep), _is_ldp(rep))
            frontier.append(rep)
    level = 0
    while frontier:
        level += 1
        nxt: list[list[Vec2]] = []
        for verts in frontier:
            for new in kernels.expand_hollow(verts, k):
                key = kernels.canonical_key(new)
                if key in seen:
                    continue
                rep = kernels.reduce_rep(new)
                seen[key] = HollowClass(key, tuple(rep), _is_ldp(rep))
                nxt.append(rep)
        if progress:
            progress(level, len(nxt), len(seen))
        frontier = nxt
    return sorted(seen.values(), key=lambda c: (len(c.rep), c.key))


def _is_ldp(verts) -> bool:
    return all(vec_gcd(v) == 1 for v in verts)


def classify_polygons(k: int, progress=None) -> list[LdpPolygon]:
    """Almost k-hollow LDP-polygons up to unimodular equivalence.

    Returns the canonical-form representatives sorted by vertex count and
    canonical key.
    """
    out = []
    for cls in classify_hollow(k, progress=progress):
        if cls.ldp:
            out.append(canonical_form(polygon(cls.rep)))
    out.sort(key=lambda p: (p.n, canonical_key(p)))
    return out


def max_triangle_volume(k: int) -> Fraction:
    """Exact maximum volume c(k) of almost k-hollow lattice triangles."""
    best = Fraction(0)
    for cls in classify_hollow(k):
        if cls.n == 3:
            v = cls.volume()
            if v > best:
                best = v
    return best


@dataclass(frozen=True)
class ToricInvariants:
    k2: Fraction
    gorenstein_index: int
    picard: int
    eps_max: Fraction
    singular_points: int


def toric_invariants(a: LdpPolygon) -> ToricInvariants:
    """Surface invariants of the toric del Pezzo surface of the polygon."""
    vs = list(a.vertices)
    n = len(vs)

    # anticanonical self intersection; the cyclic formula needs every
    # vertex off the vertical axis, so shear first if necessary
    sheared = vs
    c = 0
    while any(x + c * y == 0 for x, y in sheared):
        c += 1
    sheared = [(x + c * y, y) for x, y in vs]
    k2 = Fraction(0)
    for i in range(n):
        li = sheared[i][0]
        lj = sheared[(i + 1) % n][0]
        d = det2(sheared[i], sheared[(i + 1) % n])
        k2 += Fraction(2, 1) / d - Fraction(li, lj) / d - Fraction(lj, li) / d

    gor = []
    eps = Fraction(1)
    singular = 0
    for i in range(n):
        v1, v2 = vs[i], vs[(i + 1) % n]
        d = det2(v1, v2)
        if abs(d) != 1:
            singular += 1
        g = gcd(v1[1] - v2[1], v2[0] - v1[0])
        gor.append(abs(d) // g if g else abs(d))
        for h in hilbert_basis_2d(v1, v2)[1:-1]:
            # ratio |h| / |boundary crossing of the ray through h|
            ratio = Fraction(det2(h, (v2[0] - v1[0], v2[1] - v1[1])), d)
            if ratio < eps:
                eps = ratio
    return ToricInvariants(
        k2=k2,
        gorenstein_index=lcm_all(gor),
        picard=n - 2,
        eps_max=eps,
        singular_points=singular,
    )


def polygon_record(a: LdpPolygon, k: int) -> dict:
    inv = toric_invariants(a)
    return {
        "k": k,
        "vertices": [list(v) for v in canonical_form(a).vertices],
        "k2": f"{inv.k2.numerator}/{inv.k2.denominator}" if inv.k2.denominator != 1 else str(inv.k2.numerator),
        "gorenstein_index": inv.gorenstein_index,
        "picard": inv.picard,
        "eps_max": f"{inv.eps_max.numerator}/{inv.eps_max.denominator}"
        if inv.eps_max.denominator != 1
        else str(inv.eps_max.numerator),
    }


def write_polygons(k: int, path, progress=None) -> int:
    """CLI backend: classify and dump one JSON record per polygon."""
    polys = classify_polygons(k, progress=progress)
    with open(path, "w") as fh:
        for p in polys:
            fh.write(json.dumps(polygon_record(p, k)) + "\n")
    return len(polys)
