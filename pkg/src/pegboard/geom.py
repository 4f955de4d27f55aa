"""Exact rational plane geometry for the pegboard model.

Everything here is exact: points are pairs of ``fractions.Fraction``, pegs
are integer lattice points, and all predicates are sign computations.  No
floating point enters the core; floats appear only at the SVG boundary.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence, Tuple

Point = Tuple[Fraction, Fraction]
IVec = Tuple[int, int]


def frac(a, b=1) -> Fraction:
    return Fraction(a, b)


def pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def scale(p: Point, s) -> Point:
    s = Fraction(s)
    return (p[0] * s, p[1] * s)


def cross(u, v):
    """2D cross product u x v; sign gives the turn direction u -> v."""
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def ivec_gcd(v: IVec) -> int:
    return gcd(abs(v[0]), abs(v[1]))


def primitive(v: IVec) -> IVec:
    g = ivec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (v[0] // g, v[1] // g)


def orient(a: Point, b: Point, c: Point):
    """Sign of the signed area of triangle abc (>0 counterclockwise)."""
    return cross(sub(b, a), sub(c, a))


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on the closed segment [a, b] (assumes collinear not required)."""
    if orient(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> Optional[Point]:
    """Proper (transversal, interior) crossing point of [a,b] and [c,d].

    Returns the crossing point, or None when the segments do not cross
    properly.  Touching at an endpoint or collinear overlap is *not* a
    proper crossing; callers arrange realizations so those cases carry no
    intersection (parallel strands at distinct offsets) or are handled by
    peg-local rules.
    """
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        t = Fraction(d1, d1 - d2)
        return add(a, scale(sub(b, a), t))
    return None


def segment_touches(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when the closed segments share any point (incl. degenerate)."""
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    for p, (u, v) in ((a, (c, d)), (b, (c, d)), (c, (a, b)), (d, (a, b))):
        if on_segment(p, u, v):
            return True
    return False


def pegs_in_triangle(a: Point, b: Point, c: Point) -> list[IVec]:
    """Lattice points strictly inside triangle abc or strictly inside the
    edge [a, b] (the edge being straightened against); excludes the other
    two edges' interiors and all vertices.

    Used by the rubber-band step: when a bend a-v-b is straightened to a-b,
    pegs strictly inside the swept triangle, or on the new chord itself,
    obstruct the straightening.
    """
    s = orient(a, b, c)
    if s == 0:
        # Degenerate sweep: only pegs interior to [a, b] matter.
        return [p for p in _lattice_on_segment(a, b)]
    import math

    lo_x = min(a[0], b[0], c[0])
    hi_x = max(a[0], b[0], c[0])
    lo_y = min(a[1], b[1], c[1])
    hi_y = max(a[1], b[1], c[1])
    out = []
    x0 = math.ceil(lo_x)
    x1 = math.floor(hi_x)
    y0 = math.ceil(lo_y)
    y1 = math.floor(hi_y)
    for px in range(x0, x1 + 1):
        for py in range(y0, y1 + 1):
            p = (Fraction(px), Fraction(py))
            if p == a or p == b or p == c:
                continue
            o1 = orient(a, b, p)
            o2 = orient(b, c, p)
            o3 = orient(c, a, p)
            if o1 == 0 and on_segment(p, a, b):
                out.append((px, py))
                continue
            if s > 0:
                if o1 > 0 and o2 > 0 and o3 > 0:
                    out.append((px, py))
            else:
                if o1 < 0 and o2 < 0 and o3 < 0:
                    out.append((px, py))
    return out


def _lattice_on_segment(a: Point, b: Point) -> Iterator[IVec]:
    import math

    lo_x = math.ceil(min(a[0], b[0]))
    hi_x = math.floor(max(a[0], b[0]))
    lo_y = math.ceil(min(a[1], b[1]))
    hi_y = math.floor(max(a[1], b[1]))
    for px in range(lo_x, hi_x + 1):
        for py in range(lo_y, hi_y + 1):
            p = (Fraction(px), Fraction(py))
            if p == a or p == b:
                continue
            if on_segment(p, a, b):
                yield (px, py)


def lattice_on_open_segment(a: Point, b: Point) -> list[IVec]:
    """Lattice points strictly interior to the segment [a, b]."""
    return list(_lattice_on_segment(a, b))


def winding_number(loop: Sequence[Point], p: Point) -> int:
    """Winding number of a closed polygonal loop around p (p off the loop)."""
    w = 0
    n = len(loop)
    for i in range(n):
        a = loop[i]
        b = loop[(i + 1) % n]
        if a[1] <= p[1]:
            if b[1] > p[1] and orient(a, b, p) > 0:
                w += 1
        else:
            if b[1] <= p[1] and orient(a, b, p) < 0:
                w -= 1
    return w


def point_on_loop(loop: Sequence[Point], p: Point) -> bool:
    n = len(loop)
    for i in range(n):
        if on_segment(p, loop[i], loop[(i + 1) % n]):
            return True
    return False


def values_strictly_between(a: Fraction, b: Fraction, residue: Fraction) -> int:
    """Count reals of the form residue + k (k integer) strictly between a, b."""
    lo, hi = (a, b) if a <= b else (b, a)
    if lo == hi:
        return 0
    import math

    # first k with residue + k > lo
    k0 = math.floor(lo - residue) + 1
    # last k with residue + k < hi
    k1 = math.ceil(hi - residue) - 1
    return max(0, k1 - k0 + 1)


def integers_strictly_between(a: Fraction, b: Fraction) -> int:
    return values_strictly_between(a, b, Fraction(0))
