"""One-bend outerplanar drawing on a prescribed slope set.

The drawing engine peels the augmented graph into pockets (see
``bubbles``) and lays each pocket out inside an exclusive open region:
an expanded quadrilateral under a drawn edge, or a box around a drawn
vertex, always intersected with the parent's region.  Directions are
not chosen per edge; one pin at a full-degree vertex fixes all its edge
directions through the rotation, so the engine only decides the fan
arrival directions and the scalar free choices (bend radii, positions
along rays).  Every scalar choice is the simplest rational in an
exactly computed open interval, which keeps coordinates small and the
output deterministic.

Every drawn segment is committed to a per-component store after an
exact pairwise check against everything drawn so far, so a finished
component is crossing-free by construction.  A violation rolls the
pocket back and retries it at half scale; the retry bound is generous
and a failure past it is a hard error rather than a wrong picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F

from .bubbles import arc, augment, edge_root_path, fan_root_path, rotate_after, split
from .drawing import Drawing
from .geometry import (
    DISJOINT,
    SHARED_ENDPOINT,
    DirectionSystem,
    canon_slope,
    cone_coords,
    cross,
    dot,
    line_intersection,
    on_segment,
    ray_intersection,
    segment_relation,
    vadd,
    vmul,
    vneg,
    vsub,
)
from .graph import Graph, relabeled
from .outerplanar import Embedding, outerplanar_embedding


class DrawError(ValueError):
    """Input rejected or the engine exhausted its retry budget."""


class _Retry(Exception):
    # internal: redo the current pocket at a smaller scale
    pass


# ---------------------------------------------------------------- rationals


def simplest_between(lo, hi) -> F:
    """The simplest rational strictly inside the open interval (lo, hi)."""
    lo, hi = F(lo), F(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    if lo < 0 < hi:
        return F(0)
    if lo >= 0:
        fl = lo.numerator // lo.denominator
        if fl + 1 < hi:
            return F(fl + 1)
        # interval fits inside [fl, fl+1); recurse on the reciprocal
        ylo = 1 / (hi - fl)
        if lo == fl:
            y: F = F(ylo.numerator // ylo.denominator + 1)
        else:
            y = simplest_between(ylo, 1 / (lo - fl))
        return fl + 1 / y
    return -simplest_between(-hi, -lo)


def pick_in_interval(lo, hi) -> F:
    """Canonical rational in an open interval; None bounds are infinite."""
    if lo is None and hi is None:
        return F(0)
    if lo is None:
        n = hi.numerator // hi.denominator
        return F(n) if n < hi else F(n - 1)
    if hi is None:
        return F(lo.numerator // lo.denominator + 1)
    return simplest_between(lo, hi)


# ------------------------------------------------------- linear constraints
#
# A form (p, q, r) is the strict half-plane p*x + q*y > r.  Regions and
# all placement constraints are lists of forms, so choosing a point on a
# ray is a rational interval problem.


def form_value(form, pt) -> F:
    p, q, r = form
    return p * pt[0] + q * pt[1] - r


def side_form(anchor, d, sgn):
    """Points strictly on one side of the line through anchor along d.

    sgn=+1 keeps sign(cross(d, P - anchor)) > 0."""
    p = -d[1] * sgn
    q = d[0] * sgn
    return (p, q, p * anchor[0] + q * anchor[1])


def relax(form, margin):
    # move the boundary outward; margin is in L1-normalised units
    p, q, r = form
    return (p, q, r - margin * (abs(p) + abs(q)))


def box_forms(center, rho):
    cx, cy = center
    return [
        (F(1), F(0), cx - rho),
        (F(-1), F(0), -(cx + rho)),
        (F(0), F(1), cy - rho),
        (F(0), F(-1), -(cy + rho)),
    ]


def cone_forms(apex, d1, d2, toward=1):
    """P with (P - apex) in the open cone spanned by d1, d2 (toward=1),
    or (apex - P) in it (toward=-1).  The cone must be genuinely 2D."""
    s = cross(d1, d2)
    if s == 0:
        raise ValueError("degenerate cone")
    sgn = 1 if s > 0 else -1
    return [
        side_form(apex, d1, sgn * toward),
        side_form(apex, d2, -sgn * toward),
    ]


def solve_on_ray(origin, w, forms):
    """Open t-interval with origin + t*w satisfying every form, t > 0.

    Returns (lo, hi) with hi possibly None, or None when empty."""
    lo: F | None = F(0)
    hi: F | None = None
    for p, q, r in forms:
        c1 = p * w[0] + q * w[1]
        c0 = p * origin[0] + q * origin[1] - r
        if c1 == 0:
            if c0 <= 0:
                return None
            continue
        t = -F(c0) / c1
        if c1 > 0:
            if t > lo:
                lo = t
        else:
            if hi is None or t < hi:
                hi = t
    if hi is not None and lo >= hi:
        return None
    return (lo, hi)


def forms_slack(pt, forms):
    """L1-normalised distance from pt to the nearest form boundary."""
    best = None
    for form in forms:
        p, q, _ = form
        val = form_value(form, pt) / F(abs(p) + abs(q))
        if best is None or val < best:
            best = val
    return best


def linf(v) -> F:
    return max(abs(v[0]), abs(v[1]))


def line_clearance(pt, anchor, d) -> F:
    """Rational lower bound on the distance from pt to the line (anchor, d)."""
    return abs(cross(d, vsub(pt, anchor))) / F(abs(d[0]) + abs(d[1]))


# ----------------------------------------------------------- direction pins


class DirectionAssignment:
    """The per-vertex table of edge directions.

    At a full-degree vertex one pinned direction fixes every other slot:
    consecutive rotation entries get consecutive clockwise directions.
    Re-pinning must agree; disagreement is an engine bug, not bad input.
    """

    def __init__(self, D: DirectionSystem, rot: dict):
        self.D = D
        self.rot = rot
        self.table: dict = {}

    def known(self, v) -> bool:
        return v in self.table

    def get(self, v, w):
        return self.table[v][w]

    def pin(self, v, w, d) -> bool:
        """Returns True when the vertex was newly filled."""
        tv = self.table.get(v)
        if tv is not None:
            assert tv[w] == d, "inconsistent direction pin"
            return False
        rv = self.rot[v]
        if len(rv) == len(self.D):
            i = rv.index(w)
            t = {}
            cur = d
            for j in range(len(rv)):
                t[rv[(i + j) % len(rv)]] = cur
                cur = self.D.succ(cur)
            self.table[v] = t
        else:
            assert len(rv) == 1 and rv[0] == w
            self.table[v] = {w: d}
        return True


# ----------------------------------------------------------------- geometry


@dataclass
class TargetQuadrilateral:
    """Region uxvy reserved under a drawn edge uv for its pocket.

    x is the bend of the edge, y the intersection of the rays leaving u
    in d_u and v in d_v; d_v, d_u are consecutive clockwise."""

    u: tuple
    x: tuple
    v: tuple
    y: tuple
    d_u: tuple
    d_v: tuple

    def corners(self):
        return (self.u, self.x, self.v, self.y)


def quad_region_forms(quad: TargetQuadrilateral, margin) -> list:
    corners = list(quad.corners())
    forms = []
    for i in range(4):
        a = corners[i]
        b = corners[(i + 1) % 4]
        other = corners[(i + 2) % 4]
        d = vsub(b, a)
        sgn = 1 if cross(d, vsub(other, a)) > 0 else -1
        forms.append(relax(side_form(a, d, sgn), margin))
    return forms


def edge_bend(xpt, ypt, a_vec, c_vec):
    """Bend of the one-bend edge leaving x in a and y in c, or None when
    the edge is straight.  Raises _Retry when the legs cannot reach."""
    delta = vsub(ypt, xpt)
    negc = vneg(c_vec)
    if cross(a_vec, negc) == 0:
        # parallel legs fit only a straight edge along a
        if cross(a_vec, delta) == 0 and dot(a_vec, delta) > 0 and dot(negc, delta) > 0:
            return None
        raise _Retry
    if cross(a_vec, delta) == 0:
        raise _Retry
    p, q = cone_coords(a_vec, negc, delta)
    if p <= 0 or q <= 0:
        raise _Retry
    return vadd(xpt, vmul(a_vec, p))


# -------------------------------------------------------------- the engine


class _Txn:
    """Undo log for one pocket attempt (children merge into the parent)."""

    def __init__(self, eng):
        self.eng = eng
        self.pts: list = []
        self.bends: list = []
        self.pins: list = []
        self.conts: list = []
        self.quadkeys: list = []
        self.quads_len = len(eng.quadrecs)
        self.seg_base = len(eng.segments)

    def rollback(self):
        e = self.eng
        for v in self.pts:
            del e.pts[v]
        for k in self.bends:
            del e.bends[k]
        for v in self.pins:
            del e.assign.table[v]
        for v, n in self.conts:
            del e.cont_lines[v][-n:]
        for k in self.quadkeys:
            del e.quad_of[k]
        del e.quadrecs[self.quads_len :]
        del e.segments[self.seg_base :]

    def merge_into(self, parent):
        parent.pts.extend(self.pts)
        parent.bends.extend(self.bends)
        parent.pins.extend(self.pins)
        parent.conts.extend(self.conts)
        parent.quadkeys.extend(self.quadkeys)


class _Engine:
    def __init__(self, aug, D: DirectionSystem, check: bool = True):
        self.g: Graph = aug.graph
        self.rot: dict = aug.rot
        self.aug = aug
        self.D = D
        self.s = len(D) // 2
        self.assign = DirectionAssignment(D, aug.rot)
        self.pts: dict = {}
        self.bends: dict = {}
        self.quadrecs: list = []  # (edge, TargetQuadrilateral)
        self.quad_of: dict = {}  # frozenset edge -> TargetQuadrilateral
        self.cont_lines: dict = {}  # vertex -> [(anchor, dir)] ending there
        self.segments: list = []  # committed segments, current component
        self.check = check
        self.budget = 20000

    # ---------------------------------------------------------- primitives

    def _spend(self):
        self.budget -= 1
        if self.budget <= 0:
            raise DrawError("drawing engine exhausted its retry budget")

    def _set_pt(self, v, pt, txn):
        assert v not in self.pts
        self.pts[v] = pt
        txn.pts.append(v)

    def _set_bend(self, x, y, bend, txn):
        key = frozenset((x, y))
        assert key not in self.bends
        self.bends[key] = bend
        txn.bends.append(key)

    def _pin(self, v, w, d, txn):
        if self.assign.pin(v, w, d):
            txn.pins.append(v)

    def _add_cont(self, v, anchor, d, txn):
        self.cont_lines.setdefault(v, []).append((anchor, d))
        txn.conts.append((v, 1))

    def _record_quad(self, x, y, quad, txn):
        key = frozenset((x, y))
        assert key not in self.quad_of
        self.quadrecs.append(((x, y), quad))
        self.quad_of[key] = quad
        txn.quadkeys.append(key)

    def _pick_on_ray(self, origin, w, forms, cap=None):
        iv = solve_on_ray(origin, w, forms)
        if iv is None:
            raise _Retry
        lo, hi = iv
        if cap is not None and (hi is None or cap < hi):
            hi = cap
            if lo >= hi:
                raise _Retry
        return vadd(origin, vmul(w, pick_in_interval(lo, hi)))

    def polyline(self, x, y):
        b = self.bends.get(frozenset((x, y)))
        if b is None:
            return [self.pts[x], self.pts[y]]
        return [self.pts[x], b, self.pts[y]]

    def _local_cap(self, v, base):
        """Safe bundle extent at v: clear of neighbouring placed points,
        incident bends, and continuation lines ending next door."""
        vals = [base]
        pt = self.pts[v]
        for w in self.g.neighbors(v):
            if w not in self.pts:
                continue
            vals.append(linf(vsub(self.pts[w], pt)))
            b = self.bends.get(frozenset((v, w)))
            if b is not None:
                vals.append(linf(vsub(b, pt)))
            for anchor, d in self.cont_lines.get(w, ()):
                c = line_clearance(pt, anchor, d)
                if c > 0:
                    vals.append(c)
        return min(vals) / 4

    @staticmethod
    def _ray_param(origin, w, pt):
        # pt is on the line origin + t*w; return t
        if w[0] != 0:
            return F(pt[0] - origin[0]) / w[0]
        return F(pt[1] - origin[1]) / w[1]

    def _fan_caps(self, entries, skip):
        """Per fan vertex, how far its continuation may run before it
        meets another spoke or continuation of the same bundle.

        entries: (vertex key or None, root point, ray origin, ray dir);
        skip: index pairs whose rays deliberately meet (shared corner)."""
        caps = {}
        for j, (key, _, oj, cj) in enumerate(entries):
            if key is None:
                continue
            cap = None
            for i, (_, ri, oi, ci) in enumerate(entries):
                if i == j or (i, j) in skip or (j, i) in skip:
                    continue
                if oi != ri:
                    # the other spoke, root to bend
                    sd = vsub(oi, ri)
                    if cross(cj, sd) == 0:
                        if cross(sd, vsub(oj, ri)) == 0:
                            raise _Retry  # collinear with a spoke
                    else:
                        hit = line_intersection(oj, cj, ri, sd)
                        pt, t, _ = hit
                        if t > 0 and on_segment(ri, oi, pt):
                            if cap is None or t < cap:
                                cap = t
                if cross(cj, ci) == 0:
                    if cross(ci, vsub(oj, oi)) == 0 and oj != oi:
                        raise _Retry  # collinear continuations
                    continue
                _, t, u = line_intersection(oj, cj, oi, ci)
                if t > 0 and u > 0 and (cap is None or t < cap):
                    cap = t
            if cap is not None:
                caps[key] = cap
        return caps

    # ------------------------------------------------------------- pockets

    def _with_retries(self, fn, *args):
        scale = F(1)
        for _ in range(40):
            txn = _Txn(self)
            try:
                fn(*args, txn, scale)
                return txn
            except _Retry:
                txn.rollback()
                self._spend()
                scale /= 2
        raise DrawError("pocket layout failed at every scale")

    def _children(self, path, lam, region, parent_txn, kids):
        ppts = [self.pts[p] for p in path]
        for idx, child in enumerate(kids):
            if child.kind == "e":
                x, y = child.roots
                quad = self.quad_of.get(frozenset((x, y)))
                assert quad is not None, "pocket edge drawn without a region"
                txn = self._with_retries(
                    self._edge_pocket, x, y, child.comp, quad, region
                )
            else:
                (w,) = child.roots
                wpt = self.pts[w]
                base = lam / (2 + idx)
                for p in ppts:
                    if p != wpt:
                        base = min(base, linf(vsub(p, wpt)) / 4)
                txn = self._with_retries(
                    self._fan_pocket, w, child.comp, base, region
                )
            txn.merge_into(parent_txn)

    # Fan arrival plans: per fan vertex the pin value q_i (the direction
    # from the vertex back to the pocket root, so the fan edge ends
    # travelling along its negation).

    def _fan_plans(self, dirs, hosted):
        """Arrival tuples for a two-slope fan side, in a fixed order.

        hosted[i] says the last path edge between fan vertices i and
        i+1 carries an edge pocket, which pins the next arrival one
        step counterclockwise; otherwise only the fold is banned."""
        D = self.D
        options = [(D.neg(d), D.pred(d), D.succ(d)) for d in dirs]
        plans: list = []

        def extend(idx, cur):
            if len(plans) >= 81:
                return
            if idx == len(dirs):
                plans.append(tuple(cur))
                return
            for q in options[idx]:
                if idx > 0 and not self._chain_ok(cur[-1], q, hosted[idx - 1]):
                    continue
                cur.append(q)
                extend(idx + 1, cur)
                cur.pop()

        extend(0, [])
        return plans

    def _chain_ok(self, q_prev, q_next, hosted):
        D = self.D
        if hosted:
            return q_next == D.pred(q_prev)
        return q_next != D.pred(q_prev, 2)  # the fold never draws

    def _hosted_flags(self, path, roots, kids):
        """Per consecutive pair of fan vertices: does the last path edge
        between them host an edge pocket?"""
        hosted = {frozenset(c.roots) for c in kids if c.kind == "e"}
        pos = {w: i for i, w in enumerate(path)}
        flags = []
        for a, b in zip(roots, roots[1:]):
            j = pos[b]
            flags.append(frozenset((path[j - 1], b)) in hosted)
        return flags

    # ------------------------------------------------------------ fan case

    def _fan_pocket(self, x, comp, lam, parent_forms, txn, scale):
        D = self.D
        cset = set(comp)
        nbrs = arc(self.rot[x], cset)
        k = len(nbrs)
        xpt = self.pts[x]
        dirs = [self.assign.get(x, w) for w in nbrs]
        lam = min(lam, self._local_cap(x, lam))
        slack = forms_slack(xpt, parent_forms)
        if slack is not None:
            if slack <= 0:
                raise _Retry
            lam = min(lam, slack / 2)
        # the allotted box keeps its size across retries; only the content
        # shrinks, so reserved quadrilaterals eventually fit inside it
        lam0 = lam
        lam = lam * scale

        if k == 1:
            d = dirs[0]
            territory = box_forms(xpt, lam0) + parent_forms
            region = box_forms(xpt, lam) + territory
            upt = self._pick_on_ray(xpt, d, region)
            self._set_pt(nbrs[0], upt, txn)
            self._set_bend(x, nbrs[0], None, txn)
            self._pin(nbrs[0], x, D.neg(d), txn)
            self._commit_layer([[xpt, upt]])
            if len(cset) > 1:
                path = fan_root_path(self.rot, x, nbrs, cset)
                kids = split(self.g, self.rot, path, comp)
                self._children(
                    path, linf(vsub(upt, xpt)) / 2, territory, txn, kids
                )
            return

        path = fan_root_path(self.rot, x, nbrs, cset)
        kids = split(self.g, self.rot, path, comp)

        if k == 2:
            # the two spokes swap continuations
            plans = [(D.neg(dirs[1]), D.neg(dirs[0]))]
        elif self.s >= 3:
            cands = [d for d in dirs if D.neg(d) not in set(dirs)]
            if not cands:
                raise DrawError("direction choice infeasible")
            d = cands[0]
            plans = [tuple(D.neg(d) for _ in nbrs)]
        else:
            flags = self._hosted_flags(path, nbrs, kids)
            plans = self._fan_plans(dirs, flags)
            if not plans:
                raise DrawError("no consistent arrival plan for a pocket")

        territory = box_forms(xpt, lam0) + parent_forms
        if cross(dirs[0], dirs[-1]) < 0:
            # the sweep is under a half turn: clamp it exactly
            territory.append(relax(side_form(xpt, dirs[0], -1), lam / 16))
            territory.append(relax(side_form(xpt, dirs[-1], 1), lam / 16))
        region = box_forms(xpt, lam) + territory

        err = None
        for plan in plans:
            sub = _Txn(self)
            try:
                self._fan_layout(
                    x, nbrs, dirs, plan, path, kids, region, territory,
                    lam, sub,
                )
                sub.merge_into(txn)
                return
            except _Retry as exc:
                sub.rollback()
                self._spend()
                err = exc
        raise err if err is not None else _Retry

    def _fan_layout(self, x, nbrs, dirs, plan, path, kids, region, territory,
                    lam, txn):
        D = self.D
        xpt = self.pts[x]
        for w, q in zip(nbrs, plan):
            self._pin(w, x, q, txn)
        conts = [D.neg(q) for q in plan]
        if all(c == conts[0] for c in conts):
            bends = self._ladder_bends(xpt, dirs, conts[0], lam)
        else:
            bends = self._staggered_bends(xpt, dirs, conts, lam)
        anchors = {}
        entries = []
        for i, w in enumerate(nbrs):
            origin = bends[i] or xpt
            anchors[w] = (origin, conts[i], dirs[i])
            entries.append((w, xpt, origin, conts[i]))
        caps = self._fan_caps(entries, set())
        quadmode = ("fan", dirs, conts, set(nbrs))
        self._walk(
            x, None, path, anchors, region, territory, kids, quadmode,
            lam, txn, caps,
        )

    def _ladder_bends(self, xpt, dirs, cont, lam):
        D = self.D
        n2 = len(D)
        steps = []
        for d in dirs:
            t = D.cw_steps(cont, d)
            steps.append(t if t <= n2 // 2 - 1 else t - n2)
        factors = []
        for d, t in zip(dirs, steps):
            if t == 0:
                continue
            tv = -cross(cont, d)
            if tv == 0 or (tv > 0) != (t > 0):
                # a spoke parallel to the shared continuation cannot be
                # offset onto its own rung
                raise _Retry
            factors.append(F(abs(t)) * linf(d) / abs(tv))
        mu = lam / (8 * max(factors)) if factors else lam / 8
        bends = []
        for d, t in zip(dirs, steps):
            if t == 0:
                bends.append(None)  # straight spoke, continuation from x
            else:
                r = (t * mu) / -cross(cont, d)
                bends.append(vadd(xpt, vmul(d, r)))
        return bends

    def _staggered_bends(self, xpt, dirs, conts, lam):
        bends = []
        for i, (d, c) in enumerate(zip(dirs, conts)):
            if c == d:
                bends.append(None)
            else:
                r = lam * (i + 1) / (2 * (len(dirs) + 1)) / linf(d)
                bends.append(vadd(xpt, vmul(d, r)))
        return bends

    # ----------------------------------------------------------- edge case

    def _edge_pocket(self, u, v, comp, quad, parent_forms, txn, scale):
        D = self.D
        dv, du = quad.d_v, quad.d_u
        cset = set(comp)
        rot_u = [w for w in self.rot[u] if w in cset or w == v]
        nbrs_u = rotate_after(rot_u, v)
        rot_v = [w for w in self.rot[v] if w in cset or w == u]
        nbrs_v = rotate_after(rot_v, u)
        assert nbrs_u and nbrs_v, "an edge pocket touches both roots"

        dirs_u = [self.assign.get(u, w) for w in nbrs_u]
        dirs_v = [self.assign.get(v, w) for w in nbrs_v]
        if D.neg(du) in dirs_u or D.neg(dv) in dirs_v:
            # a fan aimed back along the leading pair cannot stay inside
            # the reserved space; the parent must re-place this edge
            raise _Retry

        path = edge_root_path(self.rot, u, v, nbrs_u, nbrs_v, cset)
        kids = split(self.g, self.rot, path, comp)
        coincide = nbrs_u[-1] == nbrs_v[0]

        corners = list(quad.corners())
        lam = min(
            linf(vsub(corners[(i + 1) % 4], corners[i])) for i in range(4)
        ) / 8
        lam = min(lam, self._local_cap(u, lam), self._local_cap(v, lam))
        for rpt in (self.pts[u], self.pts[v]):
            slack = forms_slack(rpt, parent_forms)
            if slack is not None:
                if slack <= 0:
                    raise _Retry
                lam = min(lam, slack / 2)
        lam = lam * scale
        # the quadrilateral itself is the pocket's whole territory
        region = quad_region_forms(quad, lam) + parent_forms

        plans_u, plans_v, mid_hosted = self._edge_plans(
            nbrs_u, nbrs_v, dirs_u, dirs_v, path, kids, coincide, du, dv
        )

        err = None
        for qu in plans_u:
            for pv in plans_v:
                if coincide:
                    if qu[-1] != D.succ(pv[0]):
                        continue
                elif mid_hosted is not None and not self._chain_ok(
                    qu[-1], pv[0], mid_hosted
                ):
                    continue
                sub = _Txn(self)
                try:
                    self._edge_layout(
                        u, v, nbrs_u, nbrs_v, dirs_u, dirs_v, qu, pv,
                        path, kids, region, lam, du, dv, coincide, sub,
                    )
                    sub.merge_into(txn)
                    return
                except _Retry as exc:
                    sub.rollback()
                    self._spend()
                    err = exc
        raise err if err is not None else _Retry

    def _edge_plans(self, nbrs_u, nbrs_v, dirs_u, dirs_v, path, kids,
                    coincide, du, dv):
        D = self.D
        uni_u = tuple(D.neg(du) for _ in nbrs_u)
        uni_v = tuple(D.neg(dv) for _ in nbrs_v)
        if self.s >= 3:
            if not coincide:
                return [uni_u], [uni_v], None
            # the shared corner takes one pin from each row, and the pins
            # must sit on rotation-consecutive slots of its table; sweep
            # the consistent pairs, staying uniform where possible
            plans_u, plans_v = [], []
            for pc in D.dirs:
                qc = D.succ(pc)
                if qc == dirs_u[-1] or pc == dirs_v[0]:
                    continue  # an arrival reversing its spoke never bends
                plans_u.append(uni_u[:-1] + (qc,))
                plans_v.append((pc,) + uni_v[1:])
            plans_u.sort(key=lambda p: p != uni_u)
            plans_v.sort(key=lambda p: p != uni_v)
            return plans_u, plans_v, None
        # two slopes: arrivals must leave hosted path edges one clockwise
        # step apart, so plan both sides against the hosting pattern
        roots = list(nbrs_u) + list(nbrs_v[1:] if coincide else nbrs_v)
        flags = self._hosted_flags(path, roots, kids)
        ku = len(nbrs_u)
        flags_u = flags[: ku - 1]
        mid_hosted = False if coincide else flags[ku - 1]
        flags_v = flags[ku - 1 if coincide else ku :]
        plans_u = self._fan_plans(dirs_u, flags_u)
        plans_v = self._fan_plans(dirs_v, flags_v)
        if not plans_u or not plans_v:
            raise DrawError("no consistent arrival plan for a pocket")
        plans_u.sort(key=lambda p: p != uni_u)
        plans_v.sort(key=lambda p: p != uni_v)
        return plans_u, plans_v, mid_hosted

    def _edge_layout(self, u, v, nbrs_u, nbrs_v, dirs_u, dirs_v, qu, pv,
                     path, kids, region, lam, du, dv, coincide, txn):
        D = self.D
        upt, vpt = self.pts[u], self.pts[v]
        for w, q in zip(nbrs_u, qu):
            self._pin(w, u, q, txn)
        for w, p in zip(nbrs_v, pv):
            self._pin(w, v, p, txn)
        conts_u = [D.neg(q) for q in qu]
        conts_v = [D.neg(p) for p in pv]
        if all(c == conts_u[0] for c in conts_u):
            bends_u = self._ladder_bends(upt, dirs_u, conts_u[0], lam)
        else:
            bends_u = self._staggered_bends(upt, dirs_u, conts_u, lam)
        if all(c == conts_v[0] for c in conts_v):
            bends_v = self._ladder_bends(vpt, dirs_v, conts_v[0], lam)
        else:
            bends_v = self._staggered_bends(vpt, dirs_v, conts_v, lam)

        anchors = {}
        entries = []
        skip = set()
        for i, w in enumerate(nbrs_u):
            origin = bends_u[i] or upt
            anchors[w] = (origin, conts_u[i], dirs_u[i], u)
            key = None if coincide and w == nbrs_u[-1] else w
            entries.append((key, upt, origin, conts_u[i]))
        for j, w in enumerate(nbrs_v):
            origin = bends_v[j] or vpt
            if coincide and w == nbrs_u[-1]:
                # the corner vertex is forced by both continuations
                a1 = anchors[w]
                o1 = a1[0]
                pt = ray_intersection(o1, a1[1], origin, conts_v[j])
                if pt is None:
                    raise _Retry
                anchors[w] = ("forced", pt, (o1, a1[1]), (origin, conts_v[j]))
                skip.add((len(nbrs_u) - 1, len(entries)))
                entries.append((None, vpt, origin, conts_v[j]))
            else:
                anchors[w] = (origin, conts_v[j], dirs_v[j], v)
                entries.append((w, vpt, origin, conts_v[j]))
        caps = self._fan_caps(entries, skip)

        quadmode = ("edge", du, dv)
        self._walk(
            u, v, path, anchors, region, region, kids, quadmode, lam, txn,
            caps,
        )

    # ------------------------------------------------------------ the walk

    def _walk(self, root_u, root_v, path, anchors, region, territory, kids,
              quadmode, lam, txn, caps=None):
        """Draw the fan edges and the root path, then recurse.

        anchors: fan vertex -> (ray origin, ray dir, spoke dir[, root]) or
        ("forced", point, ray1, ray2) at a shared corner."""
        D = self.D
        layer = []
        ekids = {
            frozenset(c.roots): set(c.comp) for c in kids if c.kind == "e"
        }

        def fan_edge(w, pt):
            info = anchors[w]
            if info[0] == "forced":
                _, _, (o1, c1), (o2, c2) = info
                pairs = ((root_u, o1, c1), (root_v, o2, c2))
            else:
                root = info[3] if len(info) > 3 else root_u
                pairs = ((root, info[0], info[1]),)
            for root, origin, cont in pairs:
                rpt = self.pts[root]
                bend = None if origin == rpt else origin
                self._set_bend(root, w, bend, txn)
                self._add_cont(w, origin, cont, txn)
                layer.append([rpt, origin, pt] if bend else [rpt, pt])

        prev = None
        for i, w in enumerate(path):
            is_root = w in anchors
            if prev is None:
                looka = self._lookahead_forms(i, path, anchors, quadmode, None)
                info = anchors[w]
                if info[0] == "forced":
                    pt = info[1]
                    if not all(form_value(f, pt) > 0 for f in region + looka):
                        raise _Retry
                else:
                    origin, cont = info[0], info[1]
                    cap = caps.get(w) if caps else None
                    pt = self._pick_on_ray(origin, cont, region + looka, cap)
                self._set_pt(w, pt, txn)
                fan_edge(w, pt)
            else:
                avec = self.assign.get(prev, w)
                ppt = self.pts[prev]
                if self.assign.known(w):
                    cvec = self.assign.get(w, prev)
                else:
                    cvec = self._fresh_arrival(avec, quadmode, w, path)
                straight = cvec == D.neg(avec)
                cset = ekids.get(frozenset((prev, w)))
                apex_fs = []
                if cset is not None and not straight:
                    pair = self._quad_pair(prev, w, avec, cvec, cset)
                    if pair is None:
                        raise _Retry
                    apex_fs = self._apex_forms(ppt, pair)
                looka = self._lookahead_forms(i, path, anchors, quadmode, cvec)
                if is_root:
                    info = anchors[w]
                    if info[0] == "forced":
                        pt = info[1]
                        if not all(
                            form_value(f, pt) > 0 for f in region + looka
                        ):
                            raise _Retry
                    elif straight:
                        pt = ray_intersection(ppt, avec, info[0], info[1])
                        if pt is None:
                            raise _Retry
                        if not all(
                            form_value(f, pt) > 0 for f in region + looka
                        ):
                            raise _Retry
                        cap = caps.get(w) if caps else None
                        if cap is not None and self._ray_param(
                            info[0], info[1], pt
                        ) >= cap:
                            raise _Retry
                    else:
                        try:
                            step = cone_forms(ppt, avec, vneg(cvec))
                        except ValueError:
                            raise _Retry from None
                        cap = caps.get(w) if caps else None
                        pt = self._pick_on_ray(
                            info[0], info[1],
                            region + step + apex_fs + looka, cap,
                        )
                else:
                    forms = region + looka
                    if straight:
                        ray = avec
                    else:
                        try:
                            step = cone_forms(ppt, avec, vneg(cvec))
                        except ValueError:
                            raise _Retry from None
                        forms = forms + step + apex_fs
                        ray = self._step_dir(avec, vneg(cvec), apex_fs)
                    pt = self._pick_on_ray(ppt, ray, forms)
                self._set_pt(w, pt, txn)
                self._pin(w, prev, cvec, txn)
                if is_root:
                    fan_edge(w, pt)
                bend = edge_bend(ppt, pt, avec, cvec)
                self._set_bend(prev, w, bend, txn)
                layer.append([ppt, bend, pt] if bend else [ppt, pt])
                self._edge_quad(prev, w, ekids, territory, txn)
            prev = w

        self._commit_layer(layer)
        self._children(path, lam / 2, territory, txn, kids)

    def _fresh_arrival(self, a, quadmode, w, path):
        """Arrival direction pinned onto a new intermediate vertex."""
        D = self.D
        if quadmode[0] == "edge":
            if self.s == 2:
                return D.succ(a)
            return D.neg(quadmode[1])  # land along the u apex ray
        dirs, conts = quadmode[1], quadmode[2]
        if self.s == 2:
            return D.succ(a)
        if len(dirs) == 2:
            return D.neg(conts[0])
        d = conts[0]
        # the stretch past the second-to-last spoke lands one step short
        if self._in_tail(w, path, quadmode):
            return D.neg(D.succ(d))
        return D.neg(d)

    def _in_tail(self, w, path, quadmode):
        roots = [x for x in path if x in quadmode[3]]
        if len(roots) < 2:
            return False
        return path.index(w) >= path.index(roots[-2])

    def _quad_pair(self, x, y, a, c, cset):
        """Apex ray directions of the quadrilateral reserved under the
        path edge (x, y) for the component cset, or None when no usable
        pair exists.

        The rays hug the slots the hosted component occupies at each
        endpoint: one step beyond the arc on either side.  Any wider
        and the region would swallow a neighbouring child's slots; the
        hosted rows then ride rungs parallel to their own apex ray, so
        they stay inside it.  An arc of a half turn or more admits no
        convex region, and parallel rays never close one."""
        D = self.D
        kx = sum(1 for w in self.rot[x] if w in cset)
        ky = sum(1 for w in self.rot[y] if w in cset)
        if kx >= self.s or ky >= self.s:
            return None
        d_x = D.pred(a, kx + 1)
        d_y = D.succ(c, ky + 1)
        if cross(d_x, d_y) == 0:
            return None
        return (d_x, d_y)

    @staticmethod
    def _cone_span_forms(anchor, gens):
        """Forms for P with P - anchor in the conic hull of gens, or None
        when the hull is a line, a single ray, or more than a half turn."""
        uniq = []
        for g in gens:
            for h in uniq:
                cr = cross(h, g)
                if cr == 0:
                    if h[0] * g[0] + h[1] * g[1] < 0:
                        return None
                    break
            else:
                uniq.append(g)
        if len(uniq) < 2:
            return None
        lo = next(
            (g for g in uniq if all(cross(g, h) >= 0 for h in uniq)), None
        )
        hi = next(
            (g for g in uniq if all(cross(h, g) >= 0 for h in uniq)), None
        )
        if lo is None or hi is None:
            return None
        return [side_form(anchor, lo, 1), side_form(anchor, hi, -1)]

    def _dir_toward(self, w, prev, target, pin):
        """Direction w would send toward target once pinned at prev."""
        rot = self.rot[w]
        off = (rot.index(target) - rot.index(prev)) % len(rot)
        return self.D.succ(pin, off)

    def _lookahead_forms(self, i, path, anchors, quadmode, arrive_i):
        """Confine the pick for path[i] to where the rest of the stretch
        can still land on the next anchored vertex.

        Directions of future path edges are fixed by the tables and the
        arrival rules before any point is chosen, so reachability of the
        next anchor ray is a cone over the stretch's leg directions."""
        m = next(
            (j for j in range(i + 1, len(path)) if path[j] in anchors), None
        )
        if m is None:
            return []
        gens = []
        c_prev = arrive_i
        for j in range(i, m):
            x, y = path[j], path[j + 1]
            if self.assign.known(x):
                a = self.assign.get(x, y)
            else:
                a = self._dir_toward(x, path[j - 1], y, c_prev)
            if self.assign.known(y):
                c = self.assign.get(y, x)
            else:
                c = self._fresh_arrival(a, quadmode, y, path)
            gens.append(vneg(a))
            gens.append(c)
            c_prev = c
        info = anchors[path[m]]
        if info[0] == "forced":
            anchor = info[1]
        else:
            anchor = info[0]
            gens.append(info[1])
        return self._cone_span_forms(anchor, gens) or []

    @staticmethod
    def _apex_forms(ppt, pair):
        """Half planes over the far end of a path edge out of ppt that
        make the reserved rays from both ends actually meet."""
        d_x, d_y = pair
        sgn = 1 if cross(d_x, d_y) > 0 else -1
        return [side_form(ppt, d_y, -sgn), side_form(ppt, d_x, -sgn)]

    @staticmethod
    def _step_dir(avec, ncvec, anchored):
        """Direction strictly inside the step cone whose ray satisfies
        every form anchored at the pick origin."""
        base = vadd(avec, ncvec)
        if not anchored:
            return base
        lo, hi = F(0), None
        for p, q, _ in anchored:
            # along m*avec + ncvec the form value grows as m*A + B
            A = p * avec[0] + q * avec[1]
            B = p * ncvec[0] + q * ncvec[1]
            if A == 0:
                if B <= 0:
                    raise _Retry
            elif A > 0:
                m = -B / A
                if m > lo:
                    lo = m
            else:
                m = -B / A
                if hi is None or m < hi:
                    hi = m
        if hi is not None and lo >= hi:
            raise _Retry
        m = pick_in_interval(lo, hi)
        return vadd(vmul(avec, m), ncvec)

    def _edge_quad(self, x, y, ekids, territory, txn):
        """Record the reserved quadrilateral under a drawn path edge
        that hosts a component.

        The reserved space must fit inside the pocket's own territory,
        otherwise whatever hangs under the edge would be squeezed out of
        its region later."""
        key = frozenset((x, y))
        cset = ekids.get(key)
        if cset is None:
            return
        bendpt = self.bends.get(key)
        if bendpt is None:
            raise _Retry  # a straight edge reserves no region
        a = self.assign.get(x, y)
        c = self.assign.get(y, x)
        pair = self._quad_pair(x, y, a, c, cset)
        if pair is None:
            raise _Retry
        d_x, d_y = pair
        apex = ray_intersection(self.pts[x], d_x, self.pts[y], d_y)
        if apex is None:
            raise _Retry
        inside = all(
            form_value(f, pt) > 0
            for pt in (bendpt, apex)
            for f in territory
        )
        if not inside:
            raise _Retry
        quad = TargetQuadrilateral(
            self.pts[x], bendpt, self.pts[y], apex, d_x, d_y
        )
        self._record_quad(x, y, quad, txn)

    def _commit_layer(self, polys):
        """Exact check of the new segments against each other and the
        whole component so far, then add them to the store."""
        if not self.check:
            return
        segs = []
        for poly in polys:
            pts = [p for p in poly if p is not None]
            for a, b in zip(pts, pts[1:]):
                if a == b:
                    raise _Retry
                segs.append((a, b))
        for i, (a, b) in enumerate(segs):
            for c, d in segs[i + 1 :]:
                kind, _ = segment_relation(a, b, c, d)
                if kind not in (DISJOINT, SHARED_ENDPOINT):
                    raise _Retry
            for c, d in self.segments:
                kind, _ = segment_relation(a, b, c, d)
                if kind not in (DISJOINT, SHARED_ENDPOINT):
                    raise _Retry
        self.segments.extend(segs)

    # ---------------------------------------------------------- components

    def draw_component(self, comp, start):
        g = self.g
        D = self.D
        del self.segments[:]  # components only meet after the final shift
        txn = _Txn(self)
        (a,) = g.neighbors(start)
        d0 = D.dir(0)
        self._set_pt(start, (F(0), F(0)), txn)
        self._set_pt(a, (F(d0[0]), F(d0[1])), txn)
        self._set_bend(start, a, None, txn)
        self._pin(start, a, d0, txn)
        self._pin(a, start, D.neg(d0), txn)
        self._commit_layer([[self.pts[start], self.pts[a]]])
        if g.degree(a) == 1:
            return
        members = [w for w in comp if w != start]
        kids = split(g, self.rot, [a], members)
        self._children([a], F(1, 2), [], txn, kids)


# ------------------------------------------------------------- public API


def augment_degrees(g: Graph, emb: Embedding, s: int):
    """Pad every vertex to degree 1 or 2s with phantom leaves.

    Returns (graph, embedding) with the phantoms appended; their ids are
    the integers past the original ones.  Rejects max degree above 2s."""
    if g.max_degree() > 2 * s:
        raise DrawError("insufficient slopes")
    aug = augment(g, emb, s)
    # every augmented component has a leaf, whose edge borders the outer
    # face on both sides, so it serves as the outer-walk start
    starts = []
    for leaf in aug.starts:
        starts.append((leaf, aug.graph.neighbors(leaf)[0]))
    return aug.graph, Embedding(aug.rot, aug.components, starts)


def draw_e_bubble(engine: _Engine, u, v, comp, quad: TargetQuadrilateral):
    """Lay out the pocket hanging under the drawn edge uv inside quad."""
    return engine._with_retries(engine._edge_pocket, u, v, comp, quad, [])


def draw_v_bubble(engine: _Engine, x, comp, lam):
    """Lay out the pocket hanging at the drawn vertex x."""
    return engine._with_retries(engine._fan_pocket, x, comp, lam, [])


def _paths_only(g: Graph) -> bool:
    if g.max_degree() > 2:
        return False
    for comp in g.connected_components():
        if g.subgraph(comp).m >= len(comp):
            return False  # a cycle
    return True


def _draw_path_union(g: Graph, slopes) -> Drawing:
    d = DirectionSystem(slopes).dirs[0]
    pts = {}
    bends = {}
    offset = F(0)
    for comp in g.connected_components():
        sub = g.subgraph(comp)
        ends = [v for v in comp if sub.degree(v) <= 1]
        cur = ends[0]
        prev = None
        i = 0
        while cur is not None:
            pts[cur] = (offset + i * d[0], F(i * d[1]))
            nxt = None
            for w in sub.neighbors(cur):
                if w != prev:
                    nxt = w
            if nxt is not None:
                bends[frozenset((cur, nxt))] = None
            prev, cur = cur, nxt
            i += 1
        offset += i * max(abs(d[0]), 1) + 1
    return Drawing(g, pts, bends, slopes, mode="outerplanar")


def draw_outerplanar(g: Graph, slopes, *, embedding=None,
                     single_slope_paths: bool = False, check: bool = True) -> Drawing:
    """One-bend drawing of an outerplanar graph with every segment on a
    prescribed slope.

    Needs at least max(ceil(max_degree/2), 2) distinct slopes; with the
    flag set, exactly one slope is accepted when the graph is a disjoint
    union of paths (drawn with straight edges on that slope)."""
    slopes = list(slopes)
    distinct = len({canon_slope(t) for t in slopes})
    if distinct == 1 and single_slope_paths and _paths_only(g):
        return _draw_path_union(g, slopes)
    need = max(-(-g.max_degree() // 2), 2)
    if distinct < need:
        raise DrawError("insufficient slopes")

    h, to_new, to_old = relabeled(g)
    if embedding is not None:
        emb = Embedding(
            {to_new[v]: [to_new[w] for w in embedding.rotations[v]]
             for v in g.vertices()},
            [[to_new[v] for v in comp] for comp in embedding.components],
            [None if st is None else (to_new[st[0]], to_new[st[1]])
             for st in embedding.starts],
        )
    else:
        emb = outerplanar_embedding(h)
        if emb is None:
            raise DrawError("not outerplanar")

    D = DirectionSystem(slopes)
    eng = _Engine(augment(h, emb, len(D) // 2), D, check=check)
    aug = eng.aug
    boxes = []
    for comp, start in zip(aug.components, aug.starts):
        qstart = len(eng.quadrecs)
        eng.draw_component(comp, start)
        ext = [eng.pts[v] for v in comp]
        for x, y in aug.graph.subgraph(comp).edges():
            b = eng.bends.get(frozenset((x, y)))
            if b is not None:
                ext.append(b)
        for _, quad in eng.quadrecs[qstart:]:
            ext.extend(quad.corners())
        boxes.append((comp, min(p[0] for p in ext), max(p[0] for p in ext)))

    # place the components side by side with unit gaps
    shift = {}
    cursor = F(0)
    for comp, lo, hi in boxes:
        dx = cursor - lo
        for v in comp:
            shift[v] = dx
        cursor = hi + dx + 1

    def moved(v, p):
        return (p[0] + shift[v], p[1])

    phantom = set(aug.phantoms)
    pts = {}
    bends = {}
    for v, p in eng.pts.items():
        if v not in phantom:
            pts[to_old[v]] = moved(v, p)
    for key, b in eng.bends.items():
        x, y = tuple(key)
        if x in phantom or y in phantom:
            continue
        bends[frozenset((to_old[x], to_old[y]))] = (
            None if b is None else moved(x, b)
        )
    quads = []
    for (x, y), quad in eng.quadrecs:
        if x in phantom or y in phantom:
            continue
        corners = tuple(moved(x, c) for c in quad.corners())
        quads.append(((to_old[x], to_old[y]), corners))
    return Drawing(g, pts, bends, slopes, quads=quads, mode="outerplanar")
