# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled twin of _kernels_py: C integer loops for the enumeration kernels.

Coordinates in the polygon kernels are bounded by the Minkowski search
radius (about 130 for k=3), so 64-bit arithmetic is safe there.  The arm
kernels check their inputs against overflow margins and raise
OverflowError, upon which the caller falls back to the pure kernels.
"""

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "c"

ctypedef long long i64

cdef i64 I64_GUARD = (<i64>1) << 62


# ---------------------------------------------------------------- hull

def convex_hull(points):
    """Counterclockwise convex hull (strict vertices only), monotone chain."""
    pts = sorted(set(points))
    cdef Py_ssize_t npts = len(pts)
    if npts <= 2:
        return list(pts)
    cdef i64 *px = <i64 *> malloc(npts * sizeof(i64))
    cdef i64 *py = <i64 *> malloc(npts * sizeof(i64))
    cdef i64 *hx = <i64 *> malloc(2 * npts * sizeof(i64))
    cdef i64 *hy = <i64 *> malloc(2 * npts * sizeof(i64))
    cdef Py_ssize_t i, m
    try:
        for i in range(npts):
            px[i] = pts[i][0]
            py[i] = pts[i][1]
        m = 0
        for i in range(npts):
            while m >= 2 and (hx[m - 1] - hx[m - 2]) * (py[i] - hy[m - 2]) - (hy[m - 1] - hy[m - 2]) * (px[i] - hx[m - 2]) <= 0:
                m -= 1
            hx[m] = px[i]
            hy[m] = py[i]
            m += 1
        lower = [(hx[i], hy[i]) for i in range(m - 1)]
        m = 0
        for i in range(npts - 1, -1, -1):
            while m >= 2 and (hx[m - 1] - hx[m - 2]) * (py[i] - hy[m - 2]) - (hy[m - 1] - hy[m - 2]) * (px[i] - hx[m - 2]) <= 0:
                m -= 1
            hx[m] = px[i]
            hy[m] = py[i]
            m += 1
        upper = [(hx[i], hy[i]) for i in range(m - 1)]
        return lower + upper
    finally:
        free(px)
        free(py)
        free(hx)
        free(hy)


cdef int _load(verts, i64 *vx, i64 *vy) except -1:
    cdef Py_ssize_t i
    for i in range(len(verts)):
        vx[i] = verts[i][0]
        vy[i] = verts[i][1]
    return 0


cdef bint _strict_interior(i64 *vx, i64 *vy, Py_ssize_t n, i64 px, i64 py) noexcept:
    cdef Py_ssize_t i, j
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        if (vx[j] - vx[i]) * (py - vy[i]) - (vy[j] - vy[i]) * (px - vx[i]) <= 0:
            return 0
    return 1


cdef bint _on_boundary(i64 *vx, i64 *vy, Py_ssize_t n, i64 px, i64 py) noexcept:
    cdef Py_ssize_t i, j
    cdef i64 lo, hi
    for i in range(n):
        j = i + 1
        if j == n:
            j = 0
        if (vx[j] - vx[i]) * (py - vy[i]) - (vy[j] - vy[i]) * (px - vx[i]) == 0:
            lo = vx[i] if vx[i] < vx[j] else vx[j]
            hi = vx[i] if vx[i] > vx[j] else vx[j]
            if lo <= px <= hi:
                lo = vy[i] if vy[i] < vy[j] else vy[j]
                hi = vy[i] if vy[i] > vy[j] else vy[j]
                if lo <= py <= hi:
                    return 1
    return 0


def strict_interior(verts, p):
    cdef Py_ssize_t n = len(verts)
    cdef i64 *vx = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *vy = <i64 *> malloc(n * sizeof(i64))
    try:
        _load(verts, vx, vy)
        return bint_to_bool(_strict_interior(vx, vy, n, p[0], p[1]))
    finally:
        free(vx)
        free(vy)


cdef inline object bint_to_bool(bint b):
    return True if b else False


def is_almost_k_hollow_pts(verts, int k):
    cdef Py_ssize_t n = len(verts)
    cdef i64 *vx = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *vy = <i64 *> malloc(n * sizeof(i64))
    cdef i64 xmin, xmax, ymin, ymax, x, y
    cdef Py_ssize_t i
    try:
        _load(verts, vx, vy)
        if not _strict_interior(vx, vy, n, 0, 0):
            return False
        xmin = xmax = vx[0]
        ymin = ymax = vy[0]
        for i in range(1, n):
            if vx[i] < xmin: xmin = vx[i]
            if vx[i] > xmax: xmax = vx[i]
            if vy[i] < ymin: ymin = vy[i]
            if vy[i] > ymax: ymax = vy[i]
        x = -((-xmin) // k) * k
        while x <= xmax:
            y = -((-ymin) // k) * k
            while y <= ymax:
                if (x != 0 or y != 0) and _strict_interior(vx, vy, n, x, y):
                    return False
                y += k
            x += k
        return True
    finally:
        free(vx)
        free(vy)


# ---------------------------------------------------------------- shadows

cdef int _shadow_frame(i64 *vx, i64 *vy, Py_ssize_t n, i64 wx, i64 wy,
                       i64 *g1x, i64 *g1y, i64 *g2x, i64 *g2y) noexcept:
    """Extreme directions of cone(w - u); returns 0 when undefined."""
    cdef i64 dx, dy
    cdef bint have = 0
    cdef Py_ssize_t i
    for i in range(n):
        dx = wx - vx[i]
        dy = wy - vy[i]
        if dx == 0 and dy == 0:
            continue
        if not have:
            g1x[0] = g2x[0] = dx
            g1y[0] = g2y[0] = dy
            have = 1
            continue
        if g1x[0] * dy - g1y[0] * dx < 0:
            g1x[0] = dx
            g1y[0] = dy
        if g2x[0] * dy - g2y[0] * dx > 0:
            g2x[0] = dx
            g2y[0] = dy
    if not have:
        return 0
    if g1x[0] * g2y[0] - g1y[0] * g2x[0] < 0:
        return 0
    return 1


def shadow_contains(verts, w, v):
    cdef Py_ssize_t n = len(verts)
    cdef i64 *vx = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *vy = <i64 *> malloc(n * sizeof(i64))
    cdef i64 g1x = 0, g1y = 0, g2x = 0, g2y = 0, rx, ry
    try:
        _load(verts, vx, vy)
        if not _shadow_frame(vx, vy, n, w[0], w[1], &g1x, &g1y, &g2x, &g2y):
            return False
        rx = v[0] - w[0]
        ry = v[1] - w[1]
        return bint_to_bool(g1x * ry - g1y * rx > 0 and g2x * ry - g2y * rx < 0)
    finally:
        free(vx)
        free(vy)


# ---------------------------------------------------------------- expansion

def expand_hollow(verts, int k):
    """All single-vertex hollow extensions; see the pure twin for contract."""
    cdef Py_ssize_t n = len(verts)
    cdef i64 *vx = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *vy = <i64 *> malloc(n * sizeof(i64))
    cdef i64 best_num, best_den, num, den, det, dx, dy
    cdef i64 r2, rad, vmax, wrad, kk = k
    cdef Py_ssize_t i, j, nshad, si
    cdef i64 wx, wy, cx, cy, rx, ry
    cdef i64 g1x = 0, g1y = 0, g2x = 0, g2y = 0
    cdef i64 *sh  # per shadow: wx, wy, g1x, g1y, g2x, g2y
    cdef bint hit
    out = []
    try:
        _load(verts, vx, vy)
        # Minkowski candidate radius: |v|^2 <= 4k^4 * max |e|^2 / det(e)^2
        best_num = 0
        best_den = 1
        for i in range(n):
            j = i + 1
            if j == n:
                j = 0
            det = vx[i] * vy[j] - vy[i] * vx[j]
            dx = vx[j] - vx[i]
            dy = vy[j] - vy[i]
            num = 4 * kk * kk * kk * kk * (dx * dx + dy * dy)
            den = det * det
            if num * best_den > best_num * den:
                best_num = num
                best_den = den
        r2 = -((-best_num) // best_den)
        rad = 1
        while rad * rad < r2:
            rad += 1
        vmax = 0
        for i in range(n):
            if vx[i] > vmax: vmax = vx[i]
            if -vx[i] > vmax: vmax = -vx[i]
            if vy[i] > vmax: vmax = vy[i]
            if -vy[i] > vmax: vmax = -vy[i]
        wrad = rad if rad > vmax else vmax
        wrad += k

        nshad = 0
        cap = (2 * (wrad // k) + 1)
        sh = <i64 *> malloc(cap * cap * 6 * sizeof(i64))
        wy = -(wrad // k) * k
        while wy <= wrad:
            wx = -(wrad // k) * k
            while wx <= wrad:
                if (wx != 0 or wy != 0) and wx * wx + wy * wy <= wrad * wrad:
                    if not _strict_interior(vx, vy, n, wx, wy):
                        if _shadow_frame(vx, vy, n, wx, wy, &g1x, &g1y, &g2x, &g2y):
                            sh[6 * nshad] = wx
                            sh[6 * nshad + 1] = wy
                            sh[6 * nshad + 2] = g1x
                            sh[6 * nshad + 3] = g1y
                            sh[6 * nshad + 4] = g2x
                            sh[6 * nshad + 5] = g2y
                            nshad += 1
                wx += k
            wy += k

        try:
            for cx in range(-rad, rad + 1):
                for cy in range(-rad, rad + 1):
                    if cx * cx + cy * cy > r2:
                        continue
                    if _strict_interior(vx, vy, n, cx, cy):
                        continue
                    if _on_boundary(vx, vy, n, cx, cy):
                        continue
                    hit = 0
                    for si in range(nshad):
                        rx = cx - sh[6 * si]
                        ry = cy - sh[6 * si + 1]
                        if (sh[6 * si + 2] * ry - sh[6 * si + 3] * rx > 0
                                and sh[6 * si + 4] * ry - sh[6 * si + 5] * rx < 0):
                            hit = 1
                            break
                    if hit:
                        continue
                    new = convex_hull(list(verts) + [(cx, cy)])
                    if _added_region_hollow(vx, vy, n, new, cx, cy, k):
                        out.append(new)
        finally:
            free(sh)
        return out
    finally:
        free(vx)
        free(vy)


cdef bint _added_region_hollow(i64 *ox, i64 *oy, Py_ssize_t n, new, i64 px, i64 py, int k) except -1:
    cdef Py_ssize_t m = len(new), i, j
    cdef i64 *nx = <i64 *> malloc(m * sizeof(i64))
    cdef i64 *ny = <i64 *> malloc(m * sizeof(i64))
    cdef i64 xmin = px, xmax = px, ymin = py, ymax = py
    cdef i64 x, y
    try:
        for i in range(m):
            nx[i] = new[i][0]
            ny[i] = new[i][1]
        for i in range(n):
            j = i + 1
            if j == n:
                j = 0
            if (ox[j] - ox[i]) * (py - oy[i]) - (oy[j] - oy[i]) * (px - ox[i]) <= 0:
                if ox[i] < xmin: xmin = ox[i]
                if ox[i] > xmax: xmax = ox[i]
                if ox[j] < xmin: xmin = ox[j]
                if ox[j] > xmax: xmax = ox[j]
                if oy[i] < ymin: ymin = oy[i]
                if oy[i] > ymax: ymax = oy[i]
                if oy[j] < ymin: ymin = oy[j]
                if oy[j] > ymax: ymax = oy[j]
        x = -((-xmin) // k) * k
        while x <= xmax:
            y = -((-ymin) // k) * k
            while y <= ymax:
                if (x != 0 or y != 0) and _strict_interior(nx, ny, m, x, y):
                    if not _strict_interior(ox, oy, n, x, y):
                        return 0
                y += k
            x += k
        return 1
    finally:
        free(nx)
        free(ny)


# ---------------------------------------------------------------- reduction

def reduce_rep(verts):
    cdef Py_ssize_t n = len(verts), i
    cdef i64 *vx = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *vy = <i64 *> malloc(n * sizeof(i64))
    cdef i64 w, cw, t
    cdef bint improved
    cdef int op
    try:
        _load(verts, vx, vy)
        w = 0
        for i in range(n):
            w += vx[i] * vx[i] + vy[i] * vy[i]
        improved = 1
        while improved:
            improved = 0
            for op in range(4):
                cw = 0
                for i in range(n):
                    if op == 0:
                        t = vx[i] + vy[i]
                        cw += t * t + vy[i] * vy[i]
                    elif op == 1:
                        t = vx[i] - vy[i]
                        cw += t * t + vy[i] * vy[i]
                    elif op == 2:
                        t = vy[i] + vx[i]
                        cw += vx[i] * vx[i] + t * t
                    else:
                        t = vy[i] - vx[i]
                        cw += vx[i] * vx[i] + t * t
                if cw < w:
                    for i in range(n):
                        if op == 0:
                            vx[i] = vx[i] + vy[i]
                        elif op == 1:
                            vx[i] = vx[i] - vy[i]
                        elif op == 2:
                            vy[i] = vy[i] + vx[i]
                        else:
                            vy[i] = vy[i] - vx[i]
                    w = cw
                    improved = 1
        return [(vx[i], vy[i]) for i in range(n)]
    finally:
        free(vx)
        free(vy)


# ---------------------------------------------------------------- canonical key

cdef void _hnf_into(i64 *cx, i64 *cy, Py_ssize_t n, i64 *outbuf) noexcept:
    """Row HNF of the 2xN matrix with columns (cx, cy); flattened into outbuf."""
    cdef i64 x1 = cx[0], y1 = cy[0]
    cdef i64 r0, r1, a0, a1, b0, b1, q, g, a, b, u, v
    cdef Py_ssize_t i, j
    cdef i64 xj, yj
    # extended euclid on the first column
    r0 = x1; r1 = y1
    a0 = 1; a1 = 0
    b0 = 0; b1 = 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    if r0 < 0:
        r0 = -r0; a0 = -a0; b0 = -b0
    g = r0; a = a0; b = b0
    u = -(y1 // g)
    v = x1 // g
    for i in range(n):
        outbuf[2 * i] = a * cx[i] + b * cy[i]
        outbuf[2 * i + 1] = u * cx[i] + v * cy[i]
    j = -1
    for i in range(n):
        if outbuf[2 * i + 1] != 0:
            j = i
            break
    # columns span the plane for every polygon, so j >= 1 here
    if outbuf[2 * j + 1] < 0:
        for i in range(n):
            outbuf[2 * i + 1] = -outbuf[2 * i + 1]
    yj = outbuf[2 * j + 1]
    xj = outbuf[2 * j]
    q = xj // yj
    for i in range(n):
        outbuf[2 * i] -= q * outbuf[2 * i + 1]


def canonical_key(verts):
    cdef Py_ssize_t n = len(verts), s, i, idx
    cdef i64 *vx = <i64 *> malloc(2 * n * sizeof(i64))
    cdef i64 *vy = <i64 *> malloc(2 * n * sizeof(i64))
    cdef i64 *cx = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *cy = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *buf = <i64 *> malloc(2 * n * sizeof(i64))
    cdef i64 *best = <i64 *> malloc(2 * n * sizeof(i64))
    cdef bint have = 0, smaller
    cdef int orient
    try:
        for i in range(n):
            vx[i] = verts[i][0]
            vy[i] = verts[i][1]
            vx[n + i] = verts[n - 1 - i][0]
            vy[n + i] = verts[n - 1 - i][1]
        for orient in range(2):
            for s in range(n):
                for i in range(n):
                    idx = s + i
                    if idx >= n:
                        idx -= n
                    cx[i] = vx[orient * n + idx]
                    cy[i] = vy[orient * n + idx]
                _hnf_into(cx, cy, n, buf)
                if not have:
                    for i in range(2 * n):
                        best[i] = buf[i]
                    have = 1
                else:
                    smaller = 0
                    for i in range(2 * n):
                        if buf[i] != best[i]:
                            smaller = buf[i] < best[i]
                            break
                    if smaller:
                        for i in range(2 * n):
                            best[i] = buf[i]
        return tuple([best[i] for i in range(2 * n)])
    finally:
        free(vx)
        free(vy)
        free(cx)
        free(cy)
        free(buf)
        free(best)


# ---------------------------------------------------------------- arm kernels

def arm_hollow(chain, top_num, top_den, bot_num, bot_den, int k):
    """Interior k-point test for one arm polygon; see the pure twin.

    Raises OverflowError when the inputs are too large for 64-bit
    arithmetic; the dispatcher then falls back to the pure kernel.
    """
    cdef Py_ssize_t n = len(chain), i
    cdef i64 tn = top_num, td = top_den, bn = bot_num, bd = bot_den
    cdef i64 lmax = 0, dmin, dmax, mag, m2
    cdef i64 *cx = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *cy = <i64 *> malloc(n * sizeof(i64))
    cdef i64 a, b, cr
    cdef bint inside
    try:
        for i in range(n):
            cx[i] = chain[i][0]
            cy[i] = chain[i][1]
        dmin = bn // bd
        dmax = -((-tn) // td)
        for i in range(n):
            if cx[i] > lmax: lmax = cx[i]
            if cy[i] < dmin: dmin = cy[i]
            if cy[i] > dmax: dmax = cy[i]
        # overflow guard for products like cx*(b*td - tn)
        mag = lmax
        if -dmin > mag: mag = -dmin
        if dmax > mag: mag = dmax
        if td > mag: mag = td
        if bd > mag: mag = bd
        if tn > mag: mag = tn
        if -tn > mag: mag = -tn
        if bn > mag: mag = bn
        if -bn > mag: mag = -bn
        mag += 2
        m2 = mag * mag
        if m2 > I64_GUARD // (4 * mag):
            raise OverflowError("arm values too large for the compiled kernel")
        a = k
        while a < lmax:
            b = (dmin // k) * k
            while b <= dmax:
                inside = 1
                # top edge (0, tn/td) -> chain[0]
                cr = cx[0] * (b * td - tn) - (cy[0] * td - tn) * a
                if cr >= 0:
                    inside = 0
                if inside:
                    for i in range(n - 1):
                        cr = (cx[i + 1] - cx[i]) * (b - cy[i]) - (cy[i + 1] - cy[i]) * (a - cx[i])
                        if cr >= 0:
                            inside = 0
                            break
                if inside:
                    # bottom edge chain[-1] -> (0, bn/bd)
                    cr = -cx[n - 1] * (b * bd - bn) + (cy[n - 1] * bd - bn) * a
                    if cr >= 0:
                        inside = 0
                if inside:
                    return False
                b += k
            a += k
        return True
    finally:
        free(cx)
        free(cy)


def triangle_hollow(a_num, a_den, l, d, int k):
    return arm_hollow([(l, d)], a_num, a_den, -a_num, a_den, k)
