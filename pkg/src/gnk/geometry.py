"""Exact compiler from piecewise-linear point dynamics to invariant words.

A trajectory moves one point per segment along a straight line with rational
endpoints; all wall predicates (three points collinear, four concyclic, four
coplanar) specialise to univariate polynomials of degree <= 2 in the segment
parameter with exact rational coefficients.  Event times are isolated into
rational brackets (never evaluated numerically: only the event ORDER and
exact side decisions matter), letters are emitted per event in time order,
and the concatenation freely reduces to the invariant word.

No floating point is used anywhere.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction

from .gamma import Gamma4Group, dihedral_canonical
from .gnk import GnkGroup
from .words import Word


class DegenerateTrajectory(Exception):
    """Genericity violation: identically-zero predicate, inseparable events,
    tangency, or a configuration degeneracy."""


# ---------------------------------------------------------------------------
# exact predicates


def orient2d(a, b, c) -> Fraction:
    """Twice the signed area of (a, b, c); > 0 for counterclockwise."""
    return ((b[0] - a[0]) * (c[1] - a[1])
            - (b[1] - a[1]) * (c[0] - a[0]))


def incircle(a, b, c, d) -> Fraction:
    """Positive iff d lies inside the circle through a, b, c taken ccw.

    The raw 4x4 lift determinant; callers must normalise by orient2d(a,b,c)
    when the triangle orientation is unknown.
    """
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (alift * (bdx * cdy - cdx * bdy)
            - blift * (adx * cdy - cdx * ady)
            + clift * (adx * bdy - bdx * ady))


def point_in_circumcircle(a, b, c, x):
    """Sign: +1 strictly inside the circle through a,b,c, -1 outside, 0 on."""
    o = orient2d(a, b, c)
    if o == 0:
        raise DegenerateTrajectory("collinear circle points")
    v = incircle(a, b, c, x)
    s = (v > 0) - (v < 0)
    return s if o > 0 else -s


def orient3d(a, b, c, d) -> Fraction:
    m = [[b[i] - a[i] for i in range(3)],
         [c[i] - a[i] for i in range(3)],
         [d[i] - a[i] for i in range(3)]]
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


# ---------------------------------------------------------------------------
# univariate quadratics with exact coefficients


class PredicatePoly:
    """p(t) = c2 t^2 + c1 t + c0 over exact rationals."""

    __slots__ = ("c2", "c1", "c0")

    def __init__(self, c2, c1, c0):
        self.c2 = Fraction(c2)
        self.c1 = Fraction(c1)
        self.c0 = Fraction(c0)

    @classmethod
    def interpolate(cls, f):
        """Fit the (at most quadratic) function f from values at 0, 1/2, 1.

        A fourth evaluation guards against callers passing higher-degree
        predicates: line and circle walls with one linear mover are degree
        <= 2, anything else is a programming error."""
        f0 = f(Fraction(0))
        fh = f(Fraction(1, 2))
        f1 = f(Fraction(1))
        c2 = 2 * f0 - 4 * fh + 2 * f1
        c1 = -3 * f0 + 4 * fh - f1
        poly = cls(c2, c1, f0)
        third = Fraction(1, 3)
        if poly(third) != f(third):
            raise DegenerateTrajectory("predicate degree exceeds 2")
        return poly

    def __call__(self, t):
        return (self.c2 * t + self.c1) * t + self.c0

    def sign(self, t) -> int:
        v = self(t)
        return (v > 0) - (v < 0)

    def is_zero(self) -> bool:
        return self.c2 == 0 and self.c1 == 0 and self.c0 == 0

    def roots_in_unit_interval(self):
        """Isolating brackets (lo, hi) with sign changes, for roots in (0,1).

        Raises DegenerateTrajectory on identically-zero polynomials, roots at
        segment endpoints, and tangencies (double roots).
        """
        if self.is_zero():
            raise DegenerateTrajectory("predicate vanishes identically")
        zero, one = Fraction(0), Fraction(1)
        if self(zero) == 0 or self(one) == 0:
            raise DegenerateTrajectory("event at a segment endpoint")
        if self.c2 == 0:
            if self.c1 == 0:
                return []
            r = -self.c0 / self.c1
            if not (zero < r < one):
                return []
            return [self._bracket_rational_root(r, zero, one)]
        disc = self.c1 * self.c1 - 4 * self.c2 * self.c0
        if disc < 0:
            return []
        if disc == 0:
            v = -self.c1 / (2 * self.c2)
            if zero < v < one:
                raise DegenerateTrajectory("tangential (double-root) event")
            return []
        vertex = -self.c1 / (2 * self.c2)
        out = []
        for lo, hi in ((zero, min(max(vertex, zero), one)),
                       (min(max(vertex, zero), one), one)):
            if lo >= hi:
                continue
            slo, shi = self.sign(lo), self.sign(hi)
            if slo == 0 or shi == 0:
                root = lo if slo == 0 else hi
                if root in (zero, one):
                    raise DegenerateTrajectory("event at a segment endpoint")
                out.append(self._bracket_rational_root(root, zero, one))
            elif slo != shi:
                out.append((lo, hi))
        return out

    def _bracket_rational_root(self, r, lo_lim, hi_lim):
        delta = Fraction(1, 4) * min(r - lo_lim, hi_lim - r)
        while True:
            lo, hi = r - delta, r + delta
            if self.sign(lo) != 0 and self.sign(hi) != 0 \
                    and self.sign(lo) != self.sign(hi):
                return (lo, hi)
            delta /= 2

    def bisect(self, lo, hi):
        """Halve a sign-change bracket, keeping the root."""
        mid = (lo + hi) / 2
        smid = self.sign(mid)
        if smid == 0:
            return self._bracket_rational_root(mid, lo, hi)
        if smid == self.sign(lo):
            return (mid, hi)
        return (lo, mid)

    def shares_root(self, other: "PredicatePoly", lo, hi) -> bool:
        """Does ``other`` vanish at a root of self inside (lo, hi)?"""
        a, b = self, other
        if a.c2 == 0 and a.c1 == 0:
            return False
        if a.c2 == 0:                        # self linear: test its root
            r = -a.c0 / a.c1
            return lo < r < hi and b(r) == 0
        if b.c2 == 0 and b.c1 == 0:
            return False
        if b.c2 == 0:
            r = -b.c0 / b.c1
            return lo < r < hi and a(r) == 0
        # both quadratic: eliminate t^2; any common root satisfies the
        # linear combination L = a.c2 * b - b.c2 * a
        l1 = a.c2 * b.c1 - b.c2 * a.c1
        l0 = a.c2 * b.c0 - b.c2 * a.c0
        if l1 == 0 and l0 == 0:
            return True                      # proportional quadratics
        if l1 == 0:
            return False
        r = -l0 / l1
        return lo < r < hi and self(r) == 0 and other(r) == 0


def sign_at_root(main: PredicatePoly, bracket, aux: PredicatePoly):
    """Exact sign of aux at main's isolated root; 0 when they share it."""
    lo, hi = bracket
    if aux.is_zero():
        return 0
    if main.shares_root(aux, lo, hi):
        return 0
    while True:
        slo, shi = aux.sign(lo), aux.sign(hi)
        if slo != 0 and slo == shi:
            # aux could still dip through zero inside; rule out via its roots
            if not _aux_root_inside(aux, lo, hi):
                return slo
        lo, hi = main.bisect(lo, hi)


def _aux_root_inside(aux, lo, hi) -> bool:
    if aux.c2 == 0:
        if aux.c1 == 0:
            return False
        r = -aux.c0 / aux.c1
        return lo < r < hi
    disc = aux.c1 * aux.c1 - 4 * aux.c2 * aux.c0
    if disc < 0:
        return False
    if aux.sign(lo) != aux.sign(hi):
        return True
    vertex = -aux.c1 / (2 * aux.c2)
    if not (lo < vertex < hi):
        return False
    return aux.sign(vertex) != aux.sign(lo) or aux(vertex) == 0


# ---------------------------------------------------------------------------
# trajectories


def _to_fraction_point(p):
    return tuple(Fraction(x) for x in p)


class Trajectory:
    """Piecewise-linear motion script: one moving point per segment."""

    def __init__(self, points, moves, dim=2):
        self.dim = dim
        self.initial = [_to_fraction_point(p) for p in points]
        self.n = len(self.initial)
        self.moves = [(int(p), _to_fraction_point(to)) for p, to in moves]
        for p, _ in self.moves:
            if not 1 <= p <= self.n:
                raise ValueError("mover index out of range")

    def configurations(self):
        """Config before each segment, plus the final one."""
        conf = list(self.initial)
        out = [list(conf)]
        for p, to in self.moves:
            conf[p - 1] = to
            out.append(list(conf))
        return out

    def reversed(self) -> "Trajectory":
        confs = self.configurations()
        moves = []
        for idx in range(len(self.moves) - 1, -1, -1):
            p, _ = self.moves[idx]
            moves.append((p, confs[idx][p - 1]))
        return Trajectory(confs[-1], moves, self.dim)

    def is_closed(self) -> bool:
        return self.configurations()[-1] == self.initial

    def to_json(self) -> str:
        def enc_pt(pt):
            return [[x.numerator, x.denominator] for x in pt]
        return json.dumps({
            "n": self.n,
            "dim": self.dim,
            "points": [enc_pt(p) for p in self.initial],
            "moves": [{"p": p, "to": enc_pt(to)} for p, to in self.moves],
        })

    @classmethod
    def from_json(cls, text: str) -> "Trajectory":
        data = json.loads(text)
        def dec_pt(pt):
            return tuple(Fraction(num, den) for num, den in pt)
        points = [dec_pt(p) for p in data["points"]]
        moves = [(m["p"], dec_pt(m["to"])) for m in data["moves"]]
        return cls(points, moves, data.get("dim", 2))


class Event:
    """One isolated wall crossing."""

    __slots__ = ("segment", "bracket", "kind", "participants", "poly",
                 "quad", "side")

    def __init__(self, segment, bracket, kind, participants, poly,
                 quad=None, side=None):
        self.segment = segment
        self.bracket = bracket
        self.kind = kind
        self.participants = participants
        self.poly = poly
        self.quad = quad          # cyclic order for circle/plane events
        self.side = side          # pointing side for 3D events

    def __repr__(self):
        return "Event(seg=%d, %s, %s, t in (%s, %s))" % (
            self.segment, self.kind, self.participants,
            self.bracket[0], self.bracket[1])


def _moving_coords(a, b):
    return lambda t: tuple(a[i] + t * (b[i] - a[i]) for i in range(len(a)))


def _separate_events(events):
    """Refine brackets until pairwise disjoint within one segment."""
    for e1, e2 in itertools.combinations(events, 2):
        guard = 0
        while not (e1.bracket[1] <= e2.bracket[0]
                   or e2.bracket[1] <= e1.bracket[0]):
            if e1.poly.shares_root(e2.poly, *_overlap(e1.bracket, e2.bracket)):
                raise DegenerateTrajectory(
                    "simultaneous events %r and %r in segment %d"
                    % (e1.participants, e2.participants, e1.segment))
            e1.bracket = e1.poly.bisect(*e1.bracket)
            e2.bracket = e2.poly.bisect(*e2.bracket)
            guard += 1
            if guard > 4000:
                raise DegenerateTrajectory("cannot separate event brackets")
    events.sort(key=lambda e: e.bracket[0])
    return events


def _overlap(b1, b2):
    return (max(b1[0], b2[0]), min(b1[1], b2[1]))


def _static_genericity_2d(conf, mover, circles=False):
    statics = [q for q in range(len(conf)) if q != mover]
    for a, b, c in itertools.combinations(statics, 3):
        if orient2d(conf[a], conf[b], conf[c]) == 0:
            raise DegenerateTrajectory("three static points collinear")
    if circles:
        for a, b, c, d in itertools.combinations(statics, 4):
            if incircle(conf[a], conf[b], conf[c], conf[d]) == 0:
                raise DegenerateTrajectory("four static points concyclic")


def detect_events(tr: Trajectory, kind: str):
    """All isolated wall crossings of the requested kind, in time order.

    Kinds: 'collinear3', 'concyclic4', 'delaunay_flip' (concyclic with an
    empty circle), 'coplanar_special' (3D: convex coplanar quadruple with
    all other points strictly on one side).
    """
    out = []
    conf = list(tr.initial)
    for seg, (p, to) in enumerate(tr.moves):
        mover = p - 1
        a, b = conf[mover], to
        pos = _moving_coords(a, b)
        events = []
        statics = [q for q in range(tr.n) if q != mover]
        if kind == "collinear3":
            _static_genericity_2d(conf, mover)
            for s1, s2 in itertools.combinations(statics, 2):
                poly = PredicatePoly.interpolate(
                    lambda t, s1=s1, s2=s2: orient2d(conf[s1], conf[s2], pos(t)))
                for br in poly.roots_in_unit_interval():
                    events.append(Event(seg, br, kind,
                                        tuple(sorted((s1 + 1, s2 + 1, p))), poly))
        elif kind in ("concyclic4", "delaunay_flip"):
            _static_genericity_2d(conf, mover, circles=True)
            for s1, s2, s3 in itertools.combinations(statics, 3):
                poly = PredicatePoly.interpolate(
                    lambda t, s1=s1, s2=s2, s3=s3:
                        incircle(conf[s1], conf[s2], conf[s3], pos(t)))
                for br in poly.roots_in_unit_interval():
                    trip = (s1, s2, s3)
                    if kind == "delaunay_flip" and not _circle_empty(
                            conf, trip, mover):
                        continue
                    ev = Event(seg, br, kind,
                               tuple(sorted((s1 + 1, s2 + 1, s3 + 1, p))), poly)
                    ev.quad = _cyclic_order_at_event(conf, trip, mover, a, b,
                                                     poly, ev)
                    events.append(ev)
            # hull changes (collinearity crossings) alter the Delaunay
            # triangulation without a cocircularity; keep the event
            # brackets clear of them so that between bracket endpoints the
            # only combinatorial change is the event's own flip
            for s1, s2 in itertools.combinations(statics, 2):
                poly = PredicatePoly.interpolate(
                    lambda t, s1=s1, s2=s2:
                        orient2d(conf[s1], conf[s2], pos(t)))
                for br in poly.roots_in_unit_interval():
                    events.append(Event(seg, br, "_separator",
                                        (s1 + 1, s2 + 1, p), poly))
        elif kind == "coplanar_special":
            for s1, s2, s3 in itertools.combinations(statics, 3):
                base = (conf[s1], conf[s2], conf[s3])
                poly = PredicatePoly.interpolate(
                    lambda t, base=base: orient3d(base[0], base[1], base[2], pos(t)))
                for br in poly.roots_in_unit_interval():
                    ev = _special_moment_event(tr, conf, (s1, s2, s3), mover,
                                               a, b, poly, br, seg)
                    if ev is not None:
                        events.append(ev)
        else:
            raise ValueError("unknown event kind %r" % kind)
        separated = _separate_events(events)
        out.extend(e for e in separated if e.kind != "_separator")
        conf[mover] = to
    return out


def _circle_empty(conf, triple, mover) -> bool:
    """No static point strictly inside the circumcircle of the triple."""
    s1, s2, s3 = triple
    for x in range(len(conf)):
        if x in triple or x == mover:
            continue
        if point_in_circumcircle(conf[s1], conf[s2], conf[s3], conf[x]) > 0:
            return False
    return True


def inside_count(conf, triple) -> int:
    """Number of configuration points strictly inside circle(triple)."""
    s1, s2, s3 = triple
    cnt = 0
    for x in range(len(conf)):
        if x in triple:
            continue
        if point_in_circumcircle(conf[s1], conf[s2], conf[s3], conf[x]) > 0:
            cnt += 1
    return cnt


def _cyclic_order_at_event(conf, triple, mover, a, b, poly, ev):
    """Cyclic order of the four cocircular points at the isolated event.

    Diagonal detection: a pair is a diagonal iff the other two points lie on
    opposite sides of its line; side signs involving the mover are decided
    exactly at the event root.
    """
    pos = _moving_coords(a, b)
    pts = list(triple) + [mover]

    def side_sign(x, y, z):
        if mover not in (x, y, z):
            v = orient2d(conf[x], conf[y], conf[z])
            return (v > 0) - (v < 0)
        def f(t):
            def gp(q):
                return pos(t) if q == mover else conf[q]
            return orient2d(gp(x), gp(y), gp(z))
        aux = PredicatePoly.interpolate(f)
        s = sign_at_root(poly, ev.bracket, aux)
        ev.bracket = tuple(ev.bracket)
        return s

    diag = None
    for x, y in itertools.combinations(pts, 2):
        z, w = [q for q in pts if q not in (x, y)]
        if side_sign(x, y, z) * side_sign(x, y, w) < 0:
            diag = ((x, y), (z, w))
            break
    if diag is None:
        raise DegenerateTrajectory("event points not in convex position")
    (x, y), (z, w) = diag
    quad = (x + 1, z + 1, y + 1, w + 1)
    return dihedral_canonical(quad)


def _special_moment_event(tr, conf, triple, mover, a, b, poly, br, seg):
    """Check 3D special-singular-moment conditions; return an Event or None."""
    s1, s2, s3 = triple
    others = [x for x in range(tr.n) if x not in triple and x != mover]
    sides = []
    for x in others:
        v = orient3d(conf[s1], conf[s2], conf[s3], conf[x])
        if v == 0:
            raise DegenerateTrajectory("static point on event plane")
        sides.append((v > 0) - (v < 0))
    if sides and len(set(sides)) != 1:
        return None
    side = sides[0] if sides else 1
    pos = _moving_coords(a, b)
    pts = list(triple) + [mover]
    ev = Event(seg, br, "coplanar_special",
               tuple(sorted(q + 1 for q in pts)), poly, side=side)

    def inplane_sign(x, y, z):
        # sign of det[y-x, z-x, n] with n the plane normal of the statics
        def f(t):
            def gp(q):
                return pos(t) if q == mover else conf[q]
            px, py, pz = gp(x), gp(y), gp(z)
            n = _cross(_sub(conf[s2], conf[s1]), _sub(conf[s3], conf[s1]))
            return _det3(_sub(py, px), _sub(pz, px), n)
        aux = PredicatePoly.interpolate(f)
        return sign_at_root(poly, ev.bracket, aux)

    diag = None
    for x, y in itertools.combinations(pts, 2):
        z, w = [q for q in pts if q not in (x, y)]
        if inplane_sign(x, y, z) * inplane_sign(x, y, w) < 0:
            diag = ((x, y), (z, w))
            break
    if diag is None:
        return None                # not a convex quadrilateral
    (x, y), (z, w) = diag
    ev.quad = dihedral_canonical((x + 1, z + 1, y + 1, w + 1))
    return ev


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _det3(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


# ---------------------------------------------------------------------------
# compilation to words


def compile_word(tr: Trajectory, target: str, groups=None):
    """Compile a trajectory into a word (or graded tuple) of the target group.

    Targets: 'gn3' (collinearity letters a_ijk), 'gn4' (concyclicity letters
    a_ijkl), 'gamma4' (empty-circle flip letters d_(cyclic)), 'gamma4_graded'
    (all concyclicity events, split by inside count mod n-4),
    'gamma4_space' (3D special singular moments).
    """
    n = tr.n
    if target == "gn3":
        group = groups or GnkGroup(n, 3)
        events = detect_events(tr, "collinear3")
        return group.word_from_subsets([e.participants for e in events]), events
    if target == "gn4":
        group = groups or GnkGroup(n, 4)
        events = detect_events(tr, "concyclic4")
        return group.word_from_subsets([e.participants for e in events]), events
    if target in ("gamma4", "gamma4_space"):
        group = groups or Gamma4Group(n)
        kind = "delaunay_flip" if target == "gamma4" else "coplanar_special"
        events = detect_events(tr, kind)
        return group.word_from_quads([e.quad for e in events]), events
    if target == "gamma4_graded":
        if n <= 5:
            raise ValueError("graded target needs n > 5")
        r = n - 4
        ncomp = r // 2 + 1
        gs = groups or [Gamma4Group(n) for _ in range(ncomp)]
        events = detect_events(tr, "concyclic4")
        comps = [[] for _ in range(ncomp)]
        conf_list = tr.configurations()
        for e in events:
            conf = conf_list[e.segment]
            mover = tr.moves[e.segment][0] - 1
            trip = tuple(q - 1 for q in e.participants if q - 1 != mover)
            z = inside_count(conf, trip) - (1 if _mover_started_inside(
                conf, trip, mover) else 0)
            alpha = min(z % r, (-z) % r)
            quad = e.quad if e.quad else tuple(sorted(e.participants))
            comps[alpha].append(quad)
        return tuple(gs[t].word_from_quads(c) for t, c in enumerate(comps)), events
    raise ValueError("unknown compile target %r" % target)


def _mover_started_inside(conf, triple, mover) -> bool:
    s1, s2, s3 = triple
    return point_in_circumcircle(conf[s1], conf[s2], conf[s3], conf[mover]) > 0


# ---------------------------------------------------------------------------
# Delaunay triangulations (2D, exact)


class DegenerateConfiguration(Exception):
    pass


def delaunay(points):
    """Delaunay triangulation via the lifted-paraboloid lower hull.

    A triple spans a Delaunay triangle iff the plane through its lifts on
    z = x^2 + y^2 supports the lifted point set from below.  Exact over
    rationals; raises DegenerateConfiguration on cocircular quadruples or
    fully collinear input.
    """
    pts = [_to_fraction_point(p) for p in points]
    n = len(pts)
    if n < 3:
        raise DegenerateConfiguration("need at least 3 points")
    lift = [(x, y, x * x + y * y) for x, y in pts]
    tris = set()
    for a, b, c in itertools.combinations(range(n), 3):
        if orient2d(pts[a], pts[b], pts[c]) == 0:
            continue
        below = above = 0
        for x in range(n):
            if x in (a, b, c):
                continue
            v = orient3d(lift[a], lift[b], lift[c], lift[x])
            if v == 0:
                raise DegenerateConfiguration("four cocircular points")
            o = orient2d(pts[a], pts[b], pts[c])
            s = v if o > 0 else -v
            if s < 0:
                below += 1
            else:
                above += 1
        if below == 0:
            tris.add((a + 1, b + 1, c + 1))
    if not tris:
        raise DegenerateConfiguration("no triangles: all points collinear?")
    return tris


def delaunay_flip_difference(t1, t2):
    """The symmetric difference of two triangulations, as triangle sets."""
    return t1 ^ t2


# ---------------------------------------------------------------------------
# canonical generator trajectories


def circle_points(n, radius=Fraction(1), nudge=True):
    """n exact rational points in ccw order near the n-th roots of unity.

    Tangent half-angle parametrisation keeps coordinates rational; small
    per-point angle and radius nudges break every exact collinearity and
    cocircularity among the points."""
    pts = []
    for k in range(n):
        t = _tan_half_approx(k, n)
        r = radius
        if nudge:
            t += Fraction(1, 997 + 89 * k)
            r = radius * (1 + Fraction(k + 1, 100000 + 13 * k))
        den = 1 + t * t
        pts.append((r * (1 - t * t) / den, r * 2 * t / den))
    return pts


def _tan_half_approx(k, n):
    """Rational approximation of tan(pi*k/n) with moderate denominator."""
    import math
    val = math.tan(math.pi * k / n)
    if abs(val) > 1e8:
        return Fraction(10 ** 6)
    return Fraction(val).limit_denominator(1000)


def _scale_point(p, s):
    return tuple(x * s for x in p)


def _between_angle_point(p1, p2, radius_scale):
    """Point near the midpoint direction of p1, p2 at a scaled radius."""
    mid = tuple((a + b) / 2 for a, b in zip(p1, p2))
    return _scale_point(mid, radius_scale)


def canonical_generator_trajectory(n, i, j, style):
    """Closed single-mover trajectory realising the pure braid b_ij.

    Styles: 'circle_gn3' and 'circle_gamma4' start from points on a circle
    (the mover walks inside the disc past i+1 .. j-1, loops around j, and
    retraces); 'parabola_gn4' uses points on a parabola with hops over the
    passed points.
    """
    if not 1 <= i < j <= n:
        raise ValueError("need 1 <= i < j <= n")
    if style in ("circle_gn3", "circle_gamma4"):
        pts = circle_points(n)
        inner = Fraction(85, 100)
        path = [_scale_point(pts[i - 1], inner)]
        for m in range(i, j - 1):
            path.append(_between_angle_point(pts[m - 1], pts[m], inner))
            path.append(_scale_point(pts[m], inner))
        path.append(_between_angle_point(pts[j - 2] if j - 1 >= 1 else pts[-1],
                                         pts[j - 1], inner))
        # loop around P_j: enter close, circle it on four corners
        center = pts[j - 1]
        eps = Fraction(1, 40)
        corners = [
            (center[0] - eps, center[1] - eps),
            (center[0] + eps, center[1] - eps),
            (center[0] + eps, center[1] + eps),
            (center[0] - eps, center[1] + eps),
        ]
        loop = corners + [corners[0]]
        forward = path + loop
        back = path[::-1]
        waypoints = forward + back + [pts[i - 1]]
        moves = [(i, w) for w in waypoints]
        return Trajectory(pts, moves)
    if style == "parabola_gn4":
        ts = [Fraction(k) for k in range(1, n + 1)]
        pts = [(t, t * t) for t in ts]
        hop = Fraction(1, 5)
        path = []
        for m in range(i + 1, j + 1):
            t = ts[m - 1]
            path.append((t - Fraction(1, 7), t * t + hop))
            path.append((t + Fraction(1, 7), t * t + hop))
        end = (ts[j - 1] + Fraction(1, 3), (ts[j - 1] + Fraction(1, 3)) ** 2
               + Fraction(1, 11))
        forward = path + [end]
        back = path[::-1]
        waypoints = forward + back + [pts[i - 1]]
        moves = [(i, w) for w in waypoints]
        return Trajectory(pts, moves)
    raise ValueError("unknown style %r" % style)
