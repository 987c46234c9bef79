"""Exact rational plane geometry shared by the drawing and checking modules.

Coordinates are ints or Fractions and mix freely; nothing here ever
rounds.  Predicates return exact signs, intersections are computed in
rational arithmetic, and direction/slope canonicalisation reduces to
coprime integer pairs so vectors can be dict keys.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from math import gcd, lcm

Scalar = int | Fraction
Vec = tuple[Scalar, Scalar]

DISJOINT = "disjoint"
CROSS = "cross"
TOUCH = "touch"
SHARED_ENDPOINT = "shared_endpoint"
OVERLAP = "overlap"


def point(x, y) -> tuple[Fraction, Fraction]:
    return (Fraction(x), Fraction(y))


def vadd(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1])


def vsub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1])


def vneg(a: Vec) -> Vec:
    return (-a[0], -a[1])


def vmul(a: Vec, k: Scalar) -> Vec:
    return (a[0] * k, a[1] * k)


def cross(a: Vec, b: Vec) -> Scalar:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Vec, b: Vec) -> Scalar:
    return a[0] * b[0] + a[1] * b[1]


def rot90ccw(a: Vec) -> Vec:
    return (-a[1], a[0])


def rot90cw(a: Vec) -> Vec:
    return (a[1], -a[0])


def sign(x: Scalar) -> int:
    return (x > 0) - (x < 0)


def orient(a: Vec, b: Vec, c: Vec) -> int:
    """Sign of the turn a -> b -> c: 1 left, -1 right, 0 collinear."""
    return sign(cross(vsub(b, a), vsub(c, a)))


def canon_dir(d: Vec) -> tuple[int, int]:
    """The coprime integer pair with the same direction as the nonzero vector d."""
    x, y = Fraction(d[0]), Fraction(d[1])
    if x == 0 and y == 0:
        raise ValueError("zero vector has no direction")
    m = lcm(x.denominator, y.denominator)
    ix, iy = int(x * m), int(y * m)
    g = gcd(ix, iy)
    return (ix // g, iy // g)


def canon_slope(d: Vec) -> tuple[int, int]:
    """Canonical representative of the slope of d: the coprime pair in the
    closed upper half plane, with horizontal mapped to (1, 0)."""
    x, y = canon_dir(d)
    if y < 0 or (y == 0 and x < 0):
        x, y = -x, -y
    return (x, y)


def _half(v: Vec) -> int:
    # 0 for polar angle in [0, pi), 1 for [pi, 2*pi)
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def angle_cmp(u: Vec, v: Vec) -> int:
    """Compare polar angles in [0, 2*pi) exactly."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    return -sign(cross(u, v))


angle_key = cmp_to_key(angle_cmp)


class DirectionSystem:
    """The 2s directions spanned by s slopes, listed in clockwise order.

    dirs[0] is the slope representative with the largest polar angle
    below 180 degrees; dirs[i] for i < s walk clockwise (decreasing
    angle) through the upper representatives and dirs[i + s] is the
    negation of dirs[i].  For the axis pair this gives N, E, S, W.
    """

    def __init__(self, slopes):
        reps = sorted({canon_slope(d) for d in slopes}, key=angle_key, reverse=True)
        if not reps:
            raise ValueError("need at least one slope")
        self.slopes: tuple[tuple[int, int], ...] = tuple(reps)
        self.dirs: tuple[tuple[int, int], ...] = tuple(reps) + tuple(
            (-x, -y) for (x, y) in reps
        )
        self.s = len(reps)
        self._index = {d: i for i, d in enumerate(self.dirs)}

    def __len__(self) -> int:
        return 2 * self.s

    def __contains__(self, d) -> bool:
        return canon_dir(d) in self._index

    def index(self, d) -> int:
        return self._index[canon_dir(d)]

    def dir(self, i: int) -> tuple[int, int]:
        return self.dirs[i % len(self.dirs)]

    def succ(self, d, k: int = 1) -> tuple[int, int]:
        """k-th next direction clockwise."""
        return self.dir(self.index(d) + k)

    def pred(self, d, k: int = 1) -> tuple[int, int]:
        """k-th next direction counterclockwise."""
        return self.dir(self.index(d) - k)

    def neg(self, d) -> tuple[int, int]:
        return self.dir(self.index(d) + self.s)

    def cw_steps(self, a, b) -> int:
        """Clockwise steps from direction a to direction b, in [0, 2s)."""
        return (self.index(b) - self.index(a)) % len(self.dirs)


def line_intersection(p: Vec, dp: Vec, q: Vec, dq: Vec):
    """Meet of the lines p + t*dp and q + u*dq.

    Returns (point, t, u), or None when the directions are parallel.
    """
    den = cross(dp, dq)
    if den == 0:
        return None
    w = vsub(q, p)
    t = Fraction(cross(w, dq)) / Fraction(den)
    u = Fraction(cross(w, dp)) / Fraction(den)
    return (vadd(p, vmul(dp, t)), t, u)


def ray_intersection(p: Vec, dp: Vec, q: Vec, dq: Vec, strict: bool = True):
    """Meet point of two rays, or None (parallel rays included)."""
    hit = line_intersection(p, dp, q, dq)
    if hit is None:
        return None
    pt, t, u = hit
    if strict:
        return pt if (t > 0 and u > 0) else None
    return pt if (t >= 0 and u >= 0) else None


def _between(a: Vec, b: Vec, p: Vec) -> bool:
    # assumes p on line ab; closed bounding-box containment
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def on_segment(a: Vec, b: Vec, p: Vec) -> bool:
    """Is p on the closed segment ab?"""
    return orient(a, b, p) == 0 and _between(a, b, p)


def segment_relation(a: Vec, b: Vec, c: Vec, d: Vec):
    """Classify how the closed segments ab and cd meet.

    Returns (kind, pt) with kind one of DISJOINT, CROSS, TOUCH,
    SHARED_ENDPOINT, OVERLAP.  pt is the single common point when there
    is exactly one, else None.  TOUCH means one point that is interior
    to at least one of the segments.
    """
    if a == b or c == d:
        raise ValueError("degenerate segment")
    if (
        max(a[0], b[0]) < min(c[0], d[0])
        or max(c[0], d[0]) < min(a[0], b[0])
        or max(a[1], b[1]) < min(c[1], d[1])
        or max(c[1], d[1]) < min(a[1], b[1])
    ):
        return (DISJOINT, None)
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 == 0 and o2 == 0:
        axis = vsub(b, a)
        ts = [(dot(p, axis), p) for p in (a, b)]
        us = [(dot(p, axis), p) for p in (c, d)]
        lo = max(min(ts)[0], min(us)[0])
        hi = min(max(ts)[0], max(us)[0])
        if lo > hi:
            return (DISJOINT, None)
        if lo == hi:
            pt = next(p for (t, p) in ts + us if t == lo)
            return (SHARED_ENDPOINT, pt)
        return (OVERLAP, None)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    pts = []
    if o1 == 0 and _between(a, b, c):
        pts.append(c)
    if o2 == 0 and _between(a, b, d):
        pts.append(d)
    if o3 == 0 and _between(c, d, a):
        pts.append(a)
    if o4 == 0 and _between(c, d, b):
        pts.append(b)
    if pts:
        p = pts[0]
        if (p == a or p == b) and (p == c or p == d):
            return (SHARED_ENDPOINT, p)
        return (TOUCH, p)
    if o1 * o2 < 0 and o3 * o4 < 0:
        pt, _, _ = line_intersection(a, vsub(b, a), c, vsub(d, c))
        return (CROSS, pt)
    return (DISJOINT, None)


def cone_coords(u: Vec, w: Vec, v: Vec) -> tuple[Fraction, Fraction]:
    """Coordinates (s, t) with v = s*u + t*w; u and w must be independent."""
    den = cross(u, w)
    if den == 0:
        raise ValueError("cone spanned by parallel vectors")
    s = Fraction(cross(v, w)) / Fraction(den)
    t = Fraction(cross(u, v)) / Fraction(den)
    return (s, t)


def in_open_cone(u: Vec, w: Vec, v: Vec) -> bool:
    """Is v a strictly positive combination of u and w?"""
    s, t = cone_coords(u, w, v)
    return s > 0 and t > 0


def polygon_area2(poly) -> Scalar:
    """Twice the signed area; positive when poly is counterclockwise."""
    total = 0
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        total += a[0] * b[1] - a[1] * b[0]
    return total


def point_in_polygon(p: Vec, poly) -> str:
    """Even-odd test of p against the closed polygonal curve poly.

    The closing edge poly[-1] -> poly[0] is implied.  Returns "in",
    "out", or "on".  The curve may repeat points; a doubled edge toggles
    the parity twice and so cancels, which is what a degenerate
    (bridge-like) excursion of the curve should do.
    """
    x, y = p
    inside = False
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if a == b:
            continue
        if orient(a, b, p) == 0 and _between(a, b, p):
            return "on"
        if (a[1] > y) != (b[1] > y):
            t = Fraction(y - a[1]) / Fraction(b[1] - a[1])
            xi = a[0] + t * (b[0] - a[0])
            if xi > x:
                inside = not inside
    return "in" if inside else "out"


def point_in_convex(p: Vec, poly, strict: bool = False) -> bool:
    """Containment in a convex polygon given in counterclockwise order."""
    lo = 1 if strict else 0
    n = len(poly)
    return all(orient(poly[i], poly[(i + 1) % n], p) >= lo for i in range(n))


def integer_scale(points):
    """Map points to a common integer grid: returns (scaled, multiplier)."""
    m = 1
    for (x, y) in points:
        m = lcm(m, Fraction(x).denominator, Fraction(y).denominator)
    return [(int(x * m), int(y * m)) for (x, y) in points], m


def parse_slope(text: str) -> tuple[int, int]:
    """Parse a slope given either as "dx:dy" or as a rational dy/dx value
    ("2", "-1/3", ...), with "inf" for vertical."""
    text = text.strip()
    if ":" in text:
        sx, sy = text.split(":")
        return canon_slope((Fraction(sx), Fraction(sy)))
    if text in ("inf", "-inf", "Inf"):
        return (0, 1)
    v = Fraction(text)
    return canon_slope((v.denominator, v.numerator))
