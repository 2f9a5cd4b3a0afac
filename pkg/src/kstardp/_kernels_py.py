"""Pure-Python implementations of the enumeration kernels.

These are the reference implementations of the hot loops; the compiled
twin in ``_kernels_c.pyx`` mirrors them function by function and is
preferred at import time (see ``kernels.py``).  All polygon coordinates
handled here are small (bounded by the search radius of the polygon
classification), so the compiled twin can safely use C integers.
"""

from __future__ import annotations

from math import gcd

IMPLEMENTATION = "python"

Vec2 = tuple[int, int]


def convex_hull(points: list[Vec2]) -> list[Vec2]:
    """Counterclockwise convex hull (strict vertices only), monotone chain."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def build(seq):
        out: list[Vec2] = []
        for p in seq:
            while len(out) >= 2:
                ox, oy = out[-2]
                ax, ay = out[-1]
                if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = build(pts)
    upper = build(reversed(pts))
    return lower[:-1] + upper[:-1]


def strict_interior(verts: list[Vec2], p: Vec2) -> bool:
    """Point strictly inside a convex ccw polygon (boundary excluded)."""
    px, py = p
    n = len(verts)
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        if (bx - ax) * (py - ay) - (by - ay) * (px - ax) <= 0:
            return False
    return True


def is_almost_k_hollow_pts(verts: list[Vec2], k: int) -> bool:
    """True iff the only point of kZ^2 strictly inside the polygon is 0.

    Polygons without the origin in their interior are never almost
    k-hollow under the set-equality reading of the definition.
    """
    if not strict_interior(verts, (0, 0)):
        return False
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    x0 = -((-min(xs)) // k) * k
    y0 = -((-min(ys)) // k) * k
    x = x0
    while x <= max(xs):
        y = y0
        while y <= max(ys):
            if (x or y) and strict_interior(verts, (x, y)):
                return False
            y += k
        x += k
    return True


def _shadow_frame(verts: list[Vec2], w: Vec2):
    """Extreme directions of cone(w - u : u in A) for a convex polygon A.

    Returns (g1, g2) such that the open shadow cone at w is
    {v : cross(g1, v - w) > 0 and cross(g2, v - w) < 0}, or None when the
    directions span a halfplane or more (w inside A: shadow undefined).
    """
    dirs = [(w[0] - vx, w[1] - vy) for vx, vy in verts]
    g1 = g2 = None
    for d in dirs:
        if d == (0, 0):
            continue
        if g1 is None:
            g1 = g2 = d
            continue
        if g1[0] * d[1] - g1[1] * d[0] < 0:
            g1 = d
        if g2[0] * d[1] - g2[1] * d[0] > 0:
            g2 = d
    if g1 is None:
        return None
    if g1[0] * g2[1] - g1[1] * g2[0] < 0:
        return None  # spans more than a halfplane
    return g1, g2


def shadow_contains(verts: list[Vec2], w: Vec2, v: Vec2) -> bool:
    """Membership of v in the open shadow S(w, A) = w + cone(w-u : u in A)°."""
    frame = _shadow_frame(verts, w)
    if frame is None:
        return False
    g1, g2 = frame
    rx, ry = v[0] - w[0], v[1] - w[1]
    return (g1[0] * ry - g1[1] * rx) > 0 and (g2[0] * ry - g2[1] * rx) < 0


def _cand_radius_sq(verts: list[Vec2], k: int) -> int:
    """Minkowski bound: |v|^2 cap for vertices extending this polygon.

    Any v with conv(A ∪ v) almost k-hollow satisfies |v| <= 2k^2 / r for
    every inscribed radius r of A around the origin; we use the largest
    one, r = min over edges of dist(0, edge).
    """
    best_num = 0
    best_den = 1
    n = len(verts)
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        det = a[0] * b[1] - a[1] * b[0]
        dx, dy = b[0] - a[0], b[1] - a[1]
        num = 4 * k**4 * (dx * dx + dy * dy)  # (2k^2)^2 * |b-a|^2
        den = det * det
        # max over edges of num/den
        if num * best_den > best_num * den:
            best_num, best_den = num, den
    return -(-best_num // best_den)  # ceil


def expand_hollow(verts: list[Vec2], k: int) -> list[list[Vec2]]:
    """All single-vertex hollow extensions of an almost k-hollow polygon.

    Returns the vertex chains (ccw) of every conv(A ∪ {v}) that is again
    almost k-hollow, for lattice points v not in A.  Candidates are cut
    down by the Minkowski radius bound and the shadow cones of the k-fold
    lattice points around A; every survivor is confirmed by a direct
    hollowness test of the added region.
    """
    r2 = _cand_radius_sq(verts, k)
    rad = 1
    while rad * rad < r2:
        rad += 1
    vmax = max(max(abs(x), abs(y)) for x, y in verts)
    wrad = max(rad, vmax) + k

    # shadow frames of all k-points around the polygon
    shadows = []
    w_y_top = wrad // k * k
    wy = -w_y_top
    while wy <= w_y_top:
        wx = -w_y_top
        while wx <= w_y_top:
            if (wx or wy) and wx * wx + wy * wy <= wrad * wrad:
                w = (wx, wy)
                if not strict_interior(verts, w):
                    frame = _shadow_frame(verts, w)
                    if frame is not None:
                        shadows.append((w, frame[0], frame[1]))
            wx += k
        wy += k

    out: list[list[Vec2]] = []
    vset = set(verts)
    for vx in range(-rad, rad + 1):
        for vy in range(-rad, rad + 1):
            if vx * vx + vy * vy > r2:
                continue
            v = (vx, vy)
            if v in vset or strict_interior(verts, v):
                continue
            if _on_boundary(verts, v):
                continue
            hit = False
            for w, g1, g2 in shadows:
                rx, ry = vx - w[0], vy - w[1]
                if (g1[0] * ry - g1[1] * rx) > 0 and (g2[0] * ry - g2[1] * rx) < 0:
                    hit = True
                    break
            if hit:
                continue
            new = convex_hull(list(verts) + [v])
            if _added_region_hollow(verts, new, v, k):
                out.append(new)
    return out


def _on_boundary(verts: list[Vec2], p: Vec2) -> bool:
    n = len(verts)
    px, py = p
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        if (bx - ax) * (py - ay) - (by - ay) * (px - ax) == 0:
            if min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by):
                return True
    return False


def _added_region_hollow(old: list[Vec2], new: list[Vec2], v: Vec2, k: int) -> bool:
    """Direct check: no nonzero k-point interior to `new` outside `old`.

    Scans the k-grid inside the bounding box of v and the edges of `old`
    that v sees; this covers conv(new) \\ conv(old).
    """
    xs = [v[0]]
    ys = [v[1]]
    n = len(old)
    for i in range(n):
        a = old[i]
        b = old[(i + 1) % n]
        if (b[0] - a[0]) * (v[1] - a[1]) - (b[1] - a[1]) * (v[0] - a[0]) <= 0:
            xs.extend((a[0], b[0]))
            ys.extend((a[1], b[1]))
    x0 = -((-min(xs)) // k) * k
    y0 = -((-min(ys)) // k) * k
    x = x0
    while x <= max(xs):
        y = y0
        while y <= max(ys):
            if (x or y) and strict_interior(new, (x, y)) and not strict_interior(old, (x, y)):
                return False
            y += k
        x += k
    return True


def reduce_rep(verts: list[Vec2]) -> list[Vec2]:
    """Shear the polygon to a small-norm unimodular representative.

    Greedy descent on the sum of squared vertex norms over the four
    elementary shears; keeps the ccw order.
    """
    cur = list(verts)

    def weight(vs):
        return sum(x * x + y * y for x, y in vs)

    w = weight(cur)
    improved = True
    while improved:
        improved = False
        for a, b, c, d in ((1, 1, 0, 1), (1, -1, 0, 1), (1, 0, 1, 1), (1, 0, -1, 1)):
            cand = [(a * x + b * y, c * x + d * y) for x, y in cur]
            cw = weight(cand)
            if cw < w:
                cur, w = cand, cw
                improved = True
    return cur


def _hnf_key(cols: list[Vec2]) -> tuple[int, ...]:
    """Row-style Hermite normal form of a rank-2 integer 2xN matrix.

    Canonical for the left GL(2,Z) action on the ordered column tuple.
    """
    x1, y1 = cols[0]
    g = gcd(x1, y1)
    # find a, b with a*x1 + b*y1 = g  (extended euclid)
    a, b = 1, 0
    if y1 != 0:
        r0, r1 = x1, y1
        a0, a1 = 1, 0
        b0, b1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            a0, a1 = a1, a0 - q * a1
            b0, b1 = b1, b0 - q * b1
        a, b = a0, b0
        if r0 < 0:
            a, b = -a, -b
    elif x1 < 0:
        a = -1
    u, v = -(y1 // g), x1 // g
    out = [(a * x + b * y, u * x + v * y) for x, y in cols]
    j = None
    for idx, (_, y) in enumerate(out):
        if y:
            j = idx
            break
    if j is None:
        raise ValueError("columns do not span the plane")
    if out[j][1] < 0:
        out = [(x, -y) for x, y in out]
    q = out[j][0] // out[j][1]
    out = [(x - q * y, y) for x, y in out]
    flat: list[int] = []
    for x, y in out:
        flat.append(x)
        flat.append(y)
    return tuple(flat)


def canonical_key(verts: list[Vec2]) -> tuple[int, ...]:
    """Lex-minimal HNF image over all cyclic rotations and both orientations."""
    n = len(verts)
    best = None
    for seq in (verts, verts[::-1]):
        for s in range(n):
            rot = seq[s:] + seq[:s]
            key = _hnf_key(rot)
            if best is None or key < best:
                best = key
    return best


def arm_hollow(
    chain: list[Vec2],
    top_num: int,
    top_den: int,
    bot_num: int,
    bot_den: int,
    k: int,
) -> bool:
    """Interior k-point test for one arm polygon of an anticanonical complex.

    The polygon is the chain (0, top), chain..., (0, bottom) closed along
    the vertical axis; only points with first coordinate >= k matter (the
    axis is shared between arms and is tested separately).  top and bottom
    are rationals top_num/top_den > 0 > bot_num/bot_den.
    """
    lmax = max(c[0] for c in chain)
    dmin = min(min(c[1] for c in chain), bot_num // bot_den)
    dmax = max(max(c[1] for c in chain), -((-top_num) // top_den))
    edges = []  # (kind, data); kind 0: integer edge, 1: top edge, 2: bottom edge
    edges.append((1, chain[0]))
    for i in range(len(chain) - 1):
        edges.append((0, (chain[i], chain[i + 1])))
    edges.append((2, chain[-1]))
    a = k
    while a < lmax:
        b = (dmin // k) * k
        while b <= dmax:
            inside = True
            for kind, data in edges:
                if kind == 0:
                    (ax, ay), (bx, by) = data
                    cr = (bx - ax) * (b - ay) - (by - ay) * (a - ax)
                elif kind == 1:
                    cx, cy = data  # edge (0, top) -> (cx, cy)
                    cr = cx * (b * top_den - top_num) - (cy * top_den - top_num) * a
                else:
                    cx, cy = data  # edge (cx, cy) -> (0, bottom)
                    cr = -cx * (b * bot_den - bot_num) + (cy * bot_den - bot_num) * a
                if cr >= 0:
                    inside = False
                    break
            if inside:
                return False
            b += k
        a += k
    return True


def triangle_hollow(a_num: int, a_den: int, l: int, d: int, k: int) -> bool:
    """Hollowness prefilter for conv((0, a), (l, d), (0, -a)), a = a_num/a_den."""
    return arm_hollow([(l, d)], a_num, a_den, -a_num, a_den, k)
