"""Realization and tautification of curves in the plane minus the pegs.

Two directions of travel:

* realize: canonical component -> exact rational polyline ("a taut curve at
  scale epsilon").  Peg visits become small polygonal detours on the wrap
  side; detour scales are strictly nested across components so that shared
  pegs resolve deterministically (larger scale = outside).

* tautify: closed rational polyline -> canonical component.  A rubber-band
  shortening removes free vertices (snapping bends onto the obstructing
  pegs with the correct wrap side) and releases anchors that bend away
  from their peg, until the local geodesic conditions hold everywhere.
  The pegboard metric is nonpositively curved, so the local conditions
  certify the global taut representative.

Free homotopy classes are read off a polyline by its crossing sequence with
four circle families: two cut circles at x = v0, y = h0 and the two
peg-axis circles at x = 0, y = 0.  The quarter-cell refinement makes the
reading faithful for every transverse curve; crossing letters follow a
fixed development table and collapse to the expected classes after cyclic
reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import words
from .curves import (
    LineComponent,
    PegComponent,
    PegStep,
    canonical_steps,
    expand_grazes,
    total_displacement,
)
from .errors import DegenerateInput, UnrepresentableWrap
from .geom import (
    IVec,
    Point,
    add,
    cross,
    dot,
    ivec_gcd,
    lattice_on_open_segment,
    orient,
    pegs_in_triangle,
    primitive,
    pt,
    sub,
)


@dataclass
class RawCurve:
    """Closed polyline; the last point closes to points[0] + period."""

    points: List[Point]
    period: IVec = (0, 0)

    def point_at(self, j: int) -> Point:
        n = len(self.points)
        q, r = divmod(j, n)
        p = self.points[r]
        return (p[0] + q * self.period[0], p[1] + q * self.period[1])

    def segments(self):
        for i in range(len(self.points)):
            yield self.point_at(i), self.point_at(i + 1)

    def translated(self, v: Point) -> "RawCurve":
        return RawCurve([add(p, v) for p in self.points], self.period)


# ---------------------------------------------------------------------------
# class-word reading
# ---------------------------------------------------------------------------

_GRIDS = [
    (Fraction(1, 2), Fraction(1, 2)),
    (Fraction(1, 3), Fraction(1, 3)),
    (Fraction(2, 5), Fraction(2, 7)),
    (Fraction(3, 7), Fraction(2, 5)),
    (Fraction(4, 9), Fraction(4, 11)),
    (Fraction(5, 11), Fraction(5, 13)),
    (Fraction(7, 16), Fraction(9, 16)),
]

_SHIFTS = [
    (Fraction(1, 97), Fraction(1, 89)),
    (Fraction(2, 193), Fraction(3, 181)),
    (Fraction(5, 389), Fraction(7, 383)),
]


class _GridDegenerate(Exception):
    pass


def _frac_part(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _family_crossings(curve: RawCurve, coord: int, residue: Fraction):
    """Transversal crossings of the lines {coord = residue + k, k integer}.

    Returns (seg_index, t, point, direction) sorted along the curve,
    direction +1 when the coordinate increases.  Crossings at polyline
    vertices are counted once via the surrounding signs; tangential
    touches are discarded.  A segment running along a family line raises
    _GridDegenerate.
    """
    n = len(curve.points)
    per = Fraction(curve.period[coord])

    def val(j: int) -> Fraction:
        q, r = divmod(j, n)
        return curve.points[r][coord] + q * per

    out = []
    for i in range(n):
        a, b = curve.point_at(i), curve.point_at(i + 1)
        fa, fb = a[coord], b[coord]
        if fa == fb:
            if (fa - residue).denominator == 1:
                raise _GridDegenerate("segment along a family line")
            continue
        lo, hi = (fa, fb) if fa < fb else (fb, fa)
        k0 = math.floor(lo - residue) + 1
        k1 = math.ceil(hi - residue) - 1
        for k in range(k0, k1 + 1):
            level = residue + k
            if level == fa or level == fb:
                continue  # endpoint crossings handled by the vertex rule
            t = Fraction(level - fa, fb - fa)
            p = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            out.append((i, t, p, 1 if fb > fa else -1))
        if (fa - residue).denominator == 1:
            # vertex i sits exactly on a line: crossing iff the curve passes
            j = i
            while val(j) == fa:
                j -= 1
                if j < i - n:
                    raise _GridDegenerate("curve confined to a family line")
            prev = val(j)
            j2 = i
            while val(j2) == fa:
                j2 += 1
                if j2 > i + n:
                    raise _GridDegenerate("curve confined to a family line")
            nxt = val(j2)
            if (prev - fa < 0) != (nxt - fa < 0):
                out.append((i, Fraction(0), a, 1 if nxt > fa else -1))
    out.sort(key=lambda e: (e[0], e[1]))
    return out


def read_class_word(curve: RawCurve, grid: Tuple[Fraction, Fraction]) -> words.Word:
    """Reduced cyclic word of the curve's free homotopy class."""
    v0, h0 = grid
    X, XI, Y, YI = words.X, words.XI, words.Y, words.YI
    events: List[Tuple[int, Fraction, List[int]]] = []

    for (i, t, p, d) in _family_crossings(curve, 0, v0):  # cut circle x = v0
        y = _frac_part(p[1])
        if y == 0 or y == h0:
            raise _GridDegenerate("cut crossing at a complex vertex")
        if y < h0:
            letters = [X] if d > 0 else [XI]
        else:
            letters = [YI, X, Y] if d > 0 else [YI, XI, Y]
        events.append((i, t, letters))

    for (i, t, p, d) in _family_crossings(curve, 1, h0):  # cut circle y = h0
        x = _frac_part(p[0])
        if x == 0 or x == v0:
            raise _GridDegenerate("cut crossing at a complex vertex")
        events.append((i, t, [Y] if d > 0 else [YI]))

    for (i, t, p, d) in _family_crossings(curve, 0, Fraction(0)):  # axis x = 0
        y = _frac_part(p[1])
        if y == 0:
            raise DegenerateInput(f"curve passes through a peg near {p}")
        if y == h0:
            raise _GridDegenerate("axis crossing at a complex vertex")
        # both vertical axis segments read trivially

    for (i, t, p, d) in _family_crossings(curve, 1, Fraction(0)):  # axis y = 0
        x = _frac_part(p[0])
        if x == 0:
            raise DegenerateInput(f"curve passes through a peg near {p}")
        if x == v0:
            raise _GridDegenerate("axis crossing at a complex vertex")
        if x > v0:
            letters = [YI, XI, Y, X] if d > 0 else [XI, YI, X, Y]
            events.append((i, t, letters))

    events.sort(key=lambda e: (e[0], e[1]))
    seq: List[int] = []
    for _, _, letters in events:
        seq.extend(letters)
    return words.reduce_word(seq)


def _min_peg_clearance2(curve: RawCurve) -> Fraction:
    """Squared distance from the polyline to the nearest peg (exact)."""
    best: Optional[Fraction] = None
    for a, b in curve.segments():
        lo_x = math.floor(min(a[0], b[0])) - 1
        hi_x = math.ceil(max(a[0], b[0])) + 1
        lo_y = math.floor(min(a[1], b[1])) - 1
        hi_y = math.ceil(max(a[1], b[1])) + 1
        ab = sub(b, a)
        den = dot(ab, ab)
        for gx in range(lo_x, hi_x + 1):
            for gy in range(lo_y, hi_y + 1):
                g = pt(gx, gy)
                if den == 0:
                    d2 = dot(sub(g, a), sub(g, a))
                else:
                    t = Fraction(dot(sub(g, a), ab), den)
                    t = min(Fraction(1), max(Fraction(0), t))
                    proj = add(a, (t * ab[0], t * ab[1]))
                    diff = sub(g, proj)
                    d2 = dot(diff, diff)
                best = d2 if best is None else min(best, d2)
    return best if best is not None else Fraction(1)


def class_word(curve: RawCurve) -> words.Word:
    """Free homotopy class, retrying shifted grids and tiny translations."""
    last: Exception = _GridDegenerate("no grids tried")
    for grid in _GRIDS:
        try:
            return read_class_word(curve, grid)
        except _GridDegenerate as exc:
            last = exc
    clearance2 = _min_peg_clearance2(curve)
    for sx, sy in _SHIFTS:
        if 2 * (sx * sx + sy * sy) >= clearance2:
            continue
        moved = curve.translated((sx, sy))
        for grid in _GRIDS:
            try:
                return read_class_word(moved, grid)
            except _GridDegenerate as exc:
                last = exc
    raise DegenerateInput(f"no generic reading position found: {last}")


# ---------------------------------------------------------------------------
# realization of canonical components
# ---------------------------------------------------------------------------


def _perp(v: IVec) -> IVec:
    return (-v[1], v[0])


def _linf(v) -> Fraction:
    return max(abs(Fraction(v[0])), abs(Fraction(v[1])))


def _offset_dir(direction: IVec, side: str) -> IVec:
    """Strand offset at a peg: the strand passes opposite the peg's side."""
    p = _perp(direction)
    return (-p[0], -p[1]) if side == "L" else p


def _rot(v: IVec, ccw: bool) -> IVec:
    return (-v[1], v[0]) if ccw else (v[1], -v[0])


def realize_peg_copy(
    steps: Sequence[PegStep], radius: Fraction, origin: IVec = (0, 0)
) -> RawCurve:
    """Exact polyline for one copy of a taut peg word at the given scale."""
    exp = expand_grazes(steps)
    n = len(exp)
    pegs = []
    p = origin
    for d, _ in exp:
        p = (p[0] + d[0], p[1] + d[1])
        pegs.append(p)
    period = total_displacement(exp)
    pts: List[Point] = []
    for i in range(n):
        T = pt(*pegs[i])
        u = exp[i][0]
        v = exp[(i + 1) % n][0]
        w = exp[i][1]
        n_in = _offset_dir(u, w)
        n_out = _offset_dir(v, w)
        lam_u = radius / (2 * _linf(u))
        mu_in = radius / (4 * _linf(n_in))
        lam_v = radius / (2 * _linf(v))
        mu_out = radius / (4 * _linf(n_out))
        entry = (
            T[0] - u[0] * lam_u + n_in[0] * mu_in,
            T[1] - u[1] * lam_u + n_in[1] * mu_in,
        )
        exitp = (
            T[0] + v[0] * lam_v + n_out[0] * mu_out,
            T[1] + v[1] * lam_v + n_out[1] * mu_out,
        )
        pts.append(entry)
        if n_in != n_out:
            mid = (n_in[0] + n_out[0], n_in[1] + n_out[1])
            if mid == (0, 0):  # u-turn: round the nose
                nose = _rot(n_in, ccw=(w == "L"))
                pts.append(
                    (
                        T[0] + Fraction(nose[0]) * radius / (2 * _linf(nose)),
                        T[1] + Fraction(nose[1]) * radius / (2 * _linf(nose)),
                    )
                )
            else:
                pts.append(
                    (
                        T[0] + Fraction(mid[0]) * radius / (2 * _linf(mid)),
                        T[1] + Fraction(mid[1]) * radius / (2 * _linf(mid)),
                    )
                )
        pts.append(exitp)
    return RawCurve(pts, period)


def realize_line_copy(slope: IVec, offset: Fraction) -> RawCurve:
    """One period of the line {slope_x * y - slope_y * x = offset}."""
    p, q = slope
    if p != 0:
        base = (Fraction(0), Fraction(offset, p))
    else:
        base = (Fraction(-offset, q), Fraction(0))
    return RawCurve([base], (p, q))


def component_radii(n_components: int) -> List[Fraction]:
    """Strictly nested detour scales: component j sits inside component i<j."""
    base = Fraction(1, 8)
    return [base / (4**j) for j in range(max(1, n_components))]


def realize_component(comp, radius: Fraction) -> List[RawCurve]:
    """All parallel copies of a component as exact polylines."""
    out: List[RawCurve] = []
    if isinstance(comp, LineComponent):
        spacing = radius / (4 * comp.multiplicity)
        for k in range(comp.multiplicity):
            off = comp.offset + k * spacing
            while (off - math.floor(off)) == 0:
                spacing *= Fraction(31, 32)
                off = comp.offset + k * spacing
            out.append(realize_line_copy(comp.slope, off))
        return out
    if isinstance(comp, PegComponent):
        for k in range(comp.multiplicity):
            r = radius * Fraction(3, 4) ** k
            out.append(realize_peg_copy(comp.steps, r))
        return out
    raise TypeError(f"not a component: {comp!r}")


# ---------------------------------------------------------------------------
# tautification
# ---------------------------------------------------------------------------


@dataclass
class _Node:
    point: Point
    peg: Optional[IVec]  # None = free vertex
    side: Optional[str]  # wrap side for peg anchors


def _chain_through(a: Point, b: Point, v: Point, pegs: List[IVec]) -> List[IVec]:
    """Pegs anchoring the taut path from a to b swept against a-v-b.

    The chain is the convex hull path of the obstructing pegs on the v side
    of [a, b]; collinear pegs stay in the chain as grazing anchors.
    """
    sigma = orient(a, b, v)
    ab = sub(b, a)

    def lift(pnt: Point) -> Tuple[Fraction, Fraction]:
        t = dot(sub(pnt, a), ab)
        s = orient(a, b, pnt)
        if sigma < 0:
            s = -s
        return (t, s)

    items = sorted(((lift(pt(*g)), g) for g in pegs), key=lambda e: (e[0][0], -e[0][1]))
    hull: List[Tuple[Tuple[Fraction, Fraction], Optional[IVec]]] = [(lift(a), None)]
    for li, g in items:
        while len(hull) >= 2:
            (t1, s1), _ = hull[-2]
            (t2, s2), _ = hull[-1]
            turn = (t2 - t1) * (li[1] - s1) - (s2 - s1) * (li[0] - t1)
            if turn > 0:
                hull.pop()
            else:
                break
        hull.append((li, g))
    end = lift(b)
    while len(hull) >= 2:
        (t1, s1), _ = hull[-2]
        (t2, s2), _ = hull[-1]
        turn = (t2 - t1) * (end[1] - s1) - (s2 - s1) * (end[0] - t1)
        if turn > 0:
            hull.pop()
        else:
            break
    return [g for _, g in hull[1:] if g is not None]


def _side_of_sweep(a: Point, b: Point, v: Point) -> str:
    """Wrap side for pegs snagged when a-v-b straightens to a-b."""
    return "R" if orient(a, b, v) > 0 else "L"


def _check_input(raw: RawCurve) -> None:
    for p in raw.points:
        if p[0].denominator == 1 and p[1].denominator == 1:
            raise DegenerateInput(f"vertex on peg {p}")
    for a, b in raw.segments():
        if a != b and lattice_on_open_segment(a, b):
            raise DegenerateInput(f"segment {a}-{b} passes through a peg")


def _line_offset_from_raw(raw: RawCurve, slope: IVec) -> Fraction:
    """Canonical transverse position: midpoint of the input's offset range."""
    p, q = slope
    vals = [p * y - q * x for (x, y) in raw.points]
    mid = (min(vals) + max(vals)) / 2
    off = _frac_part(mid)
    if off == 0:
        off = Fraction(1, 2)
    return off


class NullHomotopic:
    """Marker result: the input is null-homotopic in the filled torus."""

    def __repr__(self):
        return "NullHomotopic"

    def __eq__(self, other):
        return isinstance(other, NullHomotopic)

    def __hash__(self):
        return hash("NullHomotopic")


_MAX_PASSES = 100_000


def tautify(raw: RawCurve):
    """Taut canonical representative of a closed polyline's homotopy class.

    Returns a LineComponent, a PegComponent, or NullHomotopic.  Raises
    DegenerateInput when the polyline meets a peg, and UnrepresentableWrap
    when the class forces a wrap beyond pi (a resolvable self-intersection
    at a peg).
    """
    _check_input(raw)
    if raw.period == (0, 0):
        return NullHomotopic()

    nodes: List[_Node] = [_Node(p, None, None) for p in raw.points]
    period = pt(*raw.period)

    def neighbor_points(i: int) -> Tuple[Point, Point]:
        n = len(nodes)
        a = nodes[(i - 1) % n].point
        b = nodes[(i + 1) % n].point
        if i == 0:
            a = sub(a, period)
        if i == n - 1:
            b = add(b, period)
        return a, b

    def as_line() -> LineComponent:
        g = ivec_gcd(raw.period)
        slope = primitive(raw.period)
        return LineComponent(slope, _line_offset_from_raw(raw, slope), g)

    # Phase A: eliminate free vertices
    guard = 0
    while True:
        guard += 1
        if guard > _MAX_PASSES:
            raise RuntimeError("tautify failed to terminate (phase A)")
        idx = next((i for i, nd in enumerate(nodes) if nd.peg is None), None)
        if idx is None:
            break
        if len(nodes) == 1:
            nodes = []
            break
        a, b = neighbor_points(idx)
        v = nodes[idx].point
        obstructing = [g for g in pegs_in_triangle(a, b, v) if pt(*g) != a and pt(*g) != b]
        if not obstructing:
            del nodes[idx]
            continue
        side = _side_of_sweep(a, b, v)
        chain = _chain_through(a, b, v, obstructing)
        nodes[idx : idx + 1] = [_Node(pt(*g), g, side) for g in chain]

    if not nodes:
        return as_line()

    # Phase B: local geodesic repair at anchors
    guard = 0
    while True:
        guard += 1
        if guard > _MAX_PASSES:
            raise RuntimeError("tautify failed to terminate (phase B)")
        changed = False
        n = len(nodes)
        for i in range(n):
            a, b = neighbor_points(i)
            T = nodes[i].point
            u = sub(T, a)
            v = sub(b, T)
            if u == (Fraction(0), Fraction(0)) or v == (Fraction(0), Fraction(0)):
                raise UnrepresentableWrap(
                    "consecutive visits at one peg (wrap beyond pi)", nodes[i].peg
                )
            c = cross(u, v)
            s = nodes[i].side
            if c == 0:
                continue  # graze or u-turn: locally geodesic either way
            if (c > 0 and s == "L") or (c < 0 and s == "R"):
                continue  # bends toward its peg
            released = nodes[i]
            del nodes[i]
            if not nodes:
                break
            obstructing = [
                g
                for g in pegs_in_triangle(a, b, released.point)
                if pt(*g) != a and pt(*g) != b and g != released.peg
            ]
            if obstructing:
                side = _side_of_sweep(a, b, released.point)
                chain = _chain_through(a, b, released.point, obstructing)
                at = min(i, len(nodes))
                nodes[at:at] = [_Node(pt(*g), g, side) for g in chain]
            changed = True
            break
        if not changed:
            break

    if not nodes:
        return as_line()

    steps: List[PegStep] = []
    n = len(nodes)
    for i in range(n):
        prev_pt = nodes[(i - 1) % n].point
        cur = nodes[i].point
        d = sub(cur, prev_pt)
        if i == 0:
            d = add(d, period)
        steps.append(((int(d[0]), int(d[1])), nodes[i].side))

    canon, power = canonical_steps(steps)
    if len(canon) == 1:
        return as_line()  # one-sided graze ring: a line hugging the peg row
    return PegComponent(tuple(canon), power)


def f2_word(comp) -> words.Word:
    """Canonical free-group name of one copy of the component's class."""
    if isinstance(comp, LineComponent):
        raw = realize_line_copy(comp.slope, comp.offset)
    else:
        raw = realize_peg_copy(comp.steps, Fraction(1, 8))
    return class_word(raw)
