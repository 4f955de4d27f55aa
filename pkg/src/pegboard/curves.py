"""Core curve data: slopes, mapping classes, taut peg words, multicurves.

The marked torus is (R/Z)^2 with the marked point z at the origin; its lifts
("pegs") are the integer lattice points of the plane.  A multicurve has two
kinds of components:

* a line component: a straight line of primitive rational slope, positioned
  by a transverse offset in (0, 1) so it misses every peg, with a
  multiplicity counting parallel copies;

* a peg component: a pulled-tight closed curve described by a cyclic word of
  (lattice displacement, wrap side) steps.  Step i travels by displacement
  d_i to arrive at a peg where the curve bends around on side w_i ('L' means
  the peg sits on the left of the motion).  Tautness means every bend turns
  toward its peg through at most pi.

Words are canonical: orientation is chosen so the total displacement has
dy > 0 (or dy = 0, dx > 0); collinear grazing visits whose side agrees with
both collinear neighbours are pruned (their side is implied by the chord
endpoints); the rotation is the lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

from .errors import NotUnimodular, UnrepresentableWrap
from .geom import IVec, cross, dot, lattice_on_open_segment, primitive, pt

WrapSide = str  # 'L' | 'R'
PegStep = Tuple[IVec, WrapSide]


def flip_side(w: WrapSide) -> WrapSide:
    return "R" if w == "L" else "L"


# ---------------------------------------------------------------------------
# slopes and mapping classes
# ---------------------------------------------------------------------------


def canonical_slope(v: IVec) -> Tuple[IVec, int]:
    """Primitive representative with dy > 0 (or dy = 0, dx > 0).

    Returns (slope, sign) where sign is +1 if v already pointed the
    canonical way and -1 if it was negated.
    """
    p = primitive(v)
    if p[1] > 0 or (p[1] == 0 and p[0] > 0):
        return p, 1
    return (-p[0], -p[1]), -1


def sign_canonical_class(v: IVec) -> IVec:
    """Homology class up to sign: dy > 0, or dy = 0 and dx >= 0."""
    if v == (0, 0):
        return v
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return v
    return (-v[0], -v[1])


@dataclass(frozen=True)
class MCGMatrix:
    """Integer 2x2 matrix with determinant +-1, acting on the torus."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.det) != 1:
            raise NotUnimodular(f"determinant {self.det}")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, v: IVec) -> IVec:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def __matmul__(self, other: "MCGMatrix") -> "MCGMatrix":
        return MCGMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


IDENTITY = MCGMatrix(1, 0, 0, 1)
NEG_IDENTITY = MCGMatrix(-1, 0, 0, -1)


# ---------------------------------------------------------------------------
# peg words
# ---------------------------------------------------------------------------


def _turn_kind(u: IVec, v: IVec) -> str:
    c = cross(u, v)
    if c > 0:
        return "ccw"
    if c < 0:
        return "cw"
    return "graze" if dot(u, v) > 0 else "uturn"


def validate_steps(steps: Sequence[PegStep]) -> None:
    if not steps:
        raise ValueError("empty peg word")
    for (d, w) in steps:
        if d == (0, 0):
            raise UnrepresentableWrap("zero displacement (repeated peg)", None)
        if w not in ("L", "R"):
            raise ValueError(f"bad wrap side {w!r}")
    n = len(steps)
    for i in range(n):
        u = steps[i][0]
        v = steps[(i + 1) % n][0]
        w = steps[i][1]
        kind = _turn_kind(u, v)
        if kind == "ccw" and w != "L":
            raise ValueError(f"step {i}: ccw turn must wrap L")
        if kind == "cw" and w != "R":
            raise ValueError(f"step {i}: cw turn must wrap R")


def reverse_steps(steps: Sequence[PegStep]) -> list[PegStep]:
    """The same unoriented curve traversed backwards.

    Visiting pegs q_0, q_1, ... in reverse negates and reverses the
    displacements and flips every wrap side (the peg stays on the same
    geometric side while the motion reverses).
    """
    n = len(steps)
    out: list[PegStep] = []
    for j in range(n):
        # arrive at q_{n-1-j} coming from q_{n-j}; its wrap is steps[n-1-j].
        d = steps[(n - j) % n][0]
        w = steps[(n - 1 - j) % n][1]
        out.append(((-d[0], -d[1]), w))
    return out


def _rotations(steps: Sequence[PegStep]) -> Iterable[Tuple[PegStep, ...]]:
    n = len(steps)
    t = tuple(steps)
    for i in range(n):
        yield t[i:] + t[:i]


def _prune_grazes(steps: Sequence[PegStep]) -> Tuple[PegStep, ...]:
    """Drop grazing visits whose side matches both collinear neighbours.

    A grazing peg (zero turn) separates two collinear chords; when its side
    agrees with the sides recorded at the adjacent visits the chord through
    it carries the same information, so the visit is implied.  Side
    transitions are always retained.
    """
    steps = list(steps)
    changed = True
    while changed and len(steps) > 1:
        changed = False
        n = len(steps)
        for i in range(n):
            u = steps[i][0]
            v = steps[(i + 1) % n][0]
            if _turn_kind(u, v) != "graze":
                continue
            w = steps[i][1]
            w_prev = steps[(i - 1) % n][1]
            w_next = steps[(i + 1) % n][1]
            if w == w_prev and w == w_next:
                merged = (u[0] + v[0], u[1] + v[1])
                nxt = (i + 1) % n
                steps[nxt] = (merged, steps[nxt][1])
                del steps[i]
                changed = True
                break
    if len(steps) == 1:
        # single grazing visit around the torus: the side is vacuous but the
        # class is a line class; callers convert to a line component.
        pass
    return tuple(steps)


def expand_grazes(steps: Sequence[PegStep]) -> Tuple[PegStep, ...]:
    """Insert implicit grazing visits so no chord passes through a peg.

    Interior lattice points of a chord take the side shared by the chord's
    endpoint visits; canonical words only carry such chords inside
    same-side collinear runs.
    """
    out: list[PegStep] = []
    n = len(steps)
    pos = (0, 0)
    for i in range(n):
        d, w = steps[i]
        target = (pos[0] + d[0], pos[1] + d[1])
        interior = lattice_on_open_segment(pt(*pos), pt(*target))
        if interior:
            w_prev = steps[(i - 1) % n][1]
            if w_prev != w:
                raise UnrepresentableWrap(
                    "chord through pegs with ambiguous side", interior[0]
                )
            interior.sort(key=lambda q: (q[0] - pos[0]) ** 2 + (q[1] - pos[1]) ** 2)
            prev = pos
            for q in interior:
                out.append(((q[0] - prev[0], q[1] - prev[1]), w))
                prev = q
            out.append(((target[0] - prev[0], target[1] - prev[1]), w))
        else:
            out.append((d, w))
        pos = target
    return tuple(out)


def total_displacement(steps: Sequence[PegStep]) -> IVec:
    dx = sum(d[0] for d, _ in steps)
    dy = sum(d[1] for d, _ in steps)
    return (dx, dy)


def canonical_steps(steps: Sequence[PegStep]) -> Tuple[Tuple[PegStep, ...], int]:
    """Canonical form of a taut cyclic step word.

    Returns (canonical primitive word, power).  The power counts how many
    times the word repeats a primitive core; repeats are parallel copies
    and surface as multiplicity.
    """
    steps = _prune_grazes(tuple(steps))
    h = total_displacement(steps)
    if h == (0, 0):
        raise ValueError("peg word with trivial torus class")
    if h[1] < 0 or (h[1] == 0 and h[0] < 0):
        steps = tuple(reverse_steps(steps))
    # primitive core under rotation
    n = len(steps)
    core = steps
    power = 1
    for d in range(1, n):
        if n % d:
            continue
        if steps[:d] * (n // d) == steps:
            core, power = steps[:d], n // d
            break
    best = min(_rotations(core))
    return best, power


# ---------------------------------------------------------------------------
# components and multicurves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineComponent:
    slope: IVec
    offset: Fraction
    multiplicity: int = 1
    spinc: Optional[str] = None

    def __post_init__(self):
        s, sign = canonical_slope(self.slope)
        off = Fraction(self.offset) * sign
        off -= off.__floor__()
        if off == 0:
            raise ValueError("line offset 0 runs through pegs")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        object.__setattr__(self, "slope", s)
        object.__setattr__(self, "offset", off)

    def homology_class(self) -> IVec:
        return (self.slope[0] * self.multiplicity, self.slope[1] * self.multiplicity)

    def class_word_key(self):
        """Free-homotopy key of one copy (lines of equal slope are parallel)."""
        return ("line", self.slope)


@dataclass(frozen=True)
class PegComponent:
    steps: Tuple[PegStep, ...]
    multiplicity: int = 1
    spinc: Optional[str] = None

    def __post_init__(self):
        canon, power = canonical_steps(self.steps)
        validate_steps(expand_grazes(canon))
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        object.__setattr__(self, "steps", canon)
        object.__setattr__(self, "multiplicity", self.multiplicity * power)

    def homology_class(self) -> IVec:
        h = total_displacement(self.steps)
        return (h[0] * self.multiplicity, h[1] * self.multiplicity)

    def primitive_class(self) -> IVec:
        return total_displacement(self.steps)

    def visited_pegs(self, origin: IVec = (0, 0)) -> list[IVec]:
        """Pegs visited by the expanded word, starting at ``origin``."""
        out = []
        p = origin
        for d, _ in expand_grazes(self.steps):
            p = (p[0] + d[0], p[1] + d[1])
            out.append(p)
        return out

    def class_word_key(self):
        return ("pegs", self.steps)


Component = object  # LineComponent | PegComponent


@dataclass(frozen=True)
class Multicurve:
    components: Tuple[object, ...] = ()

    def __post_init__(self):
        seen = set()
        for c in self.components:
            if isinstance(c, LineComponent):
                key = (c.slope, c.offset)
                if key in seen:
                    raise ValueError("two line components share slope and offset")
                seen.add(key)
        object.__setattr__(self, "components", tuple(self.components))

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def labels(self) -> Tuple[Optional[str], ...]:
        return tuple(getattr(c, "spinc", None) for c in self.components)

    def relabel(self, labels: Sequence[Optional[str]]) -> "Multicurve":
        comps = tuple(replace(c, spinc=l) for c, l in zip(self.components, labels))
        return Multicurve(comps)


def multicurve(*components) -> Multicurve:
    return Multicurve(tuple(components))


# ---------------------------------------------------------------------------
# group actions
# ---------------------------------------------------------------------------


def apply_mcg_component(m: MCGMatrix, comp):
    if isinstance(comp, LineComponent):
        new_slope = m.apply(comp.slope)
        new_offset = comp.offset * m.det
        new_offset -= new_offset.__floor__()
        return LineComponent(new_slope, new_offset, comp.multiplicity, comp.spinc)
    if isinstance(comp, PegComponent):
        expanded = expand_grazes(comp.steps)
        steps = []
        for d, w in expanded:
            nd = m.apply(d)
            nw = w if m.det == 1 else flip_side(w)
            steps.append((nd, nw))
        return PegComponent(tuple(steps), comp.multiplicity, comp.spinc)
    raise TypeError(f"not a component: {comp!r}")


def apply_mcg(m: MCGMatrix, mc: Multicurve) -> Multicurve:
    return Multicurve(tuple(apply_mcg_component(m, c) for c in mc))


def involute_component(comp):
    return apply_mcg_component(NEG_IDENTITY, comp)


def involute(mc: Multicurve) -> Multicurve:
    """Elliptic involution p -> -p of the marked torus, fixing z."""
    return apply_mcg(NEG_IDENTITY, mc)


def is_self_conjugate(comp) -> bool:
    """Canonical-form equality with the involuted component."""
    image = involute_component(comp)
    if isinstance(comp, LineComponent):
        return image.slope == comp.slope and image.offset == comp.offset
    return image.steps == comp.steps


def homology_class(comp) -> IVec:
    return comp.homology_class()
