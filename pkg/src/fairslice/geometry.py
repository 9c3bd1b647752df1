"""Exact planar geometry on an axis-aligned rectangle.

Coordinate frame: the rectangle occupies ``[0, y] x [0, x]``. ``u`` runs
along the base (length ``y``), ``v`` runs up the height (length ``x``), and
``v = 0`` is the bottom edge. All predicates and areas use exact rational
arithmetic, so equalities like "these two pieces have the same area" are
theorems, not tolerance checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "GeometryError",
    "InvalidPolygonError",
    "InvalidChordError",
    "Point",
    "pt",
    "Rect",
    "Polygon",
    "Chord",
    "Containment",
    "shoelace_area",
    "point_in_polygon",
    "split_rect_by_chord",
    "segments_intersect",
]


class GeometryError(ValueError):
    """Invalid geometric construction or query."""


class InvalidPolygonError(GeometryError):
    """Vertex list does not describe a simple positive-area polygon."""


class InvalidChordError(GeometryError):
    """Chord endpoints equal, off the boundary, or on one closed edge."""


@dataclass(frozen=True)
class Point:
    u: Fraction
    v: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))

    def __repr__(self) -> str:
        return f"pt({self.u}, {self.v})"


def pt(u, v) -> Point:
    """Shorthand point constructor accepting ints, strings, or Fractions."""
    return Point(Fraction(u), Fraction(v))


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    """Cross product of OA and OB; positive when OAB turns counterclockwise."""
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u)


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    """Assuming p, q, r collinear: is q within the closed box spanned by p, r."""
    return (
        min(p.u, r.u) <= q.u <= max(p.u, r.u)
        and min(p.v, r.v) <= q.v <= max(p.v, r.v)
    )


def segments_intersect(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Do the closed segments p1p2 and p3p4 share at least one point?"""
    d1 = _cross(p3, p4, p1)
    d2 = _cross(p3, p4, p2)
    d3 = _cross(p1, p2, p3)
    d4 = _cross(p1, p2, p4)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and _on_segment(p3, p1, p4):
        return True
    if d2 == 0 and _on_segment(p3, p2, p4):
        return True
    if d3 == 0 and _on_segment(p1, p3, p2):
        return True
    if d4 == 0 and _on_segment(p1, p4, p2):
        return True
    return False


@dataclass(frozen=True)
class Rect:
    """Rectangle ``[0, y] x [0, x]``: base length ``y``, height ``x``."""

    y: Fraction
    x: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "y", Fraction(self.y))
        object.__setattr__(self, "x", Fraction(self.x))
        if self.y <= 0 or self.x <= 0:
            raise GeometryError(f"rectangle sides must be positive, got y={self.y}, x={self.x}")

    @property
    def area(self) -> Fraction:
        return self.x * self.y

    @property
    def center(self) -> Point:
        return Point(self.y / 2, self.x / 2)

    def corners(self) -> tuple[Point, Point, Point, Point]:
        """Corners counterclockwise from the origin."""
        zero = Fraction(0)
        return (
            Point(zero, zero),
            Point(self.y, zero),
            Point(self.y, self.x),
            Point(zero, self.x),
        )

    def contains(self, p: Point) -> bool:
        return 0 <= p.u <= self.y and 0 <= p.v <= self.x

    def boundary_edges(self, p: Point) -> frozenset[str]:
        """Closed edges containing p: subset of bottom/right/top/left (corners give two)."""
        if not self.contains(p):
            return frozenset()
        edges = set()
        if p.v == 0:
            edges.add("bottom")
        if p.v == self.x:
            edges.add("top")
        if p.u == 0:
            edges.add("left")
        if p.u == self.y:
            edges.add("right")
        return frozenset(edges)


class Polygon:
    """Simple polygon with vertices stored counterclockwise.

    Construction canonicalizes the input: clockwise vertex lists are
    reversed, the list is rotated so the lexicographically smallest vertex
    comes first, and the result is rejected unless it is simple with
    strictly positive area. Equality is vertex-tuple equality, so two
    constructions of the same polygon compare equal regardless of the
    starting vertex or winding direction they were given in.
    """

    __slots__ = ("_vertices",)

    def __init__(self, vertices: Iterable[Point]):
        verts = list(vertices)
        if len(verts) < 3:
            raise InvalidPolygonError(f"polygon needs at least 3 vertices, got {len(verts)}")
        for i, p in enumerate(verts):
            if p == verts[(i + 1) % len(verts)]:
                raise InvalidPolygonError(f"consecutive duplicate vertex at index {i}: {p}")
        doubled = _signed_area_doubled(verts)
        if doubled == 0:
            raise InvalidPolygonError("polygon has zero area")
        if doubled < 0:
            verts.reverse()
        if not _is_simple(verts):
            raise InvalidPolygonError(f"polygon is not simple: {verts}")
        start = min(range(len(verts)), key=lambda i: (verts[i].u, verts[i].v))
        object.__setattr__(self, "_vertices", tuple(verts[start:] + verts[:start]))

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polygon):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"Polygon({list(self._vertices)!r})"

    def __setattr__(self, name, value):
        raise AttributeError("Polygon is immutable")

    def edges(self) -> Iterator[tuple[Point, Point]]:
        verts = self._vertices
        for i, p in enumerate(verts):
            yield p, verts[(i + 1) % len(verts)]


def _signed_area_doubled(verts: Sequence[Point]) -> Fraction:
    total = Fraction(0)
    n = len(verts)
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        total += a.u * b.v - b.u * a.v
    return total


def _strictly_between(p: Point, q: Point, r: Point) -> bool:
    """Assuming collinear p, q, r: q strictly inside segment pr."""
    return _on_segment(p, q, r) and q != p and q != r


def _is_simple(verts: Sequence[Point]) -> bool:
    n = len(verts)
    # Straight-angle vertices are fine; a vertex that backtracks onto the
    # incoming edge is not.
    for i in range(n):
        prev, mid, nxt = verts[i - 1], verts[i], verts[(i + 1) % n]
        if _cross(prev, mid, nxt) == 0 and not _strictly_between(prev, mid, nxt):
            return False
    for i in range(n):
        a1, a2 = verts[i], verts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            b1, b2 = verts[j], verts[(j + 1) % n]
            if segments_intersect(a1, a2, b1, b2):
                return False
    return True


def shoelace_area(poly: Polygon) -> Fraction:
    """Exact enclosed area of a polygon; positive because vertices are CCW."""
    return _signed_area_doubled(poly.vertices) / 2


class Containment(Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def _int_lattice(points: Sequence[Point]) -> tuple[list[tuple[int, int]], int]:
    """Scale points by the common denominator, mapping them onto an integer lattice.

    Scaling by a positive integer preserves every orientation and
    containment verdict, and integer arithmetic is considerably faster
    than Fraction arithmetic in the inner loops.
    """
    scale = 1
    for p in points:
        scale = lcm(scale, p.u.denominator, p.v.denominator)
    scaled = [
        (int(p.u.numerator * (scale // p.u.denominator)),
         int(p.v.numerator * (scale // p.v.denominator)))
        for p in points
    ]
    return scaled, scale


def _winding_int(iverts: Sequence[tuple[int, int]], px: int, py: int) -> int:
    """Exact winding-number classification on integer coordinates.

    Returns -1 on the boundary, 0 outside, +1 inside (simple CCW polygon).
    """
    wn = 0
    x1, y1 = iverts[-1]
    for x2, y2 in iverts:
        cr = (x2 - x1) * (py - y1) - (px - x1) * (y2 - y1)
        if cr == 0 and min(x1, x2) <= px <= max(x1, x2) and min(y1, y2) <= py <= max(y1, y2):
            return -1
        if y1 <= py:
            if y2 > py and cr > 0:
                wn += 1
        elif y2 <= py and cr < 0:
            wn -= 1
        x1, y1 = x2, y2
    return 1 if wn else 0


def point_in_polygon(p: Point, poly: Polygon) -> Containment:
    """Exact containment verdict via the winding number."""
    iverts_all, _ = _int_lattice(list(poly.vertices) + [p])
    iverts, ipoint = iverts_all[:-1], iverts_all[-1]
    verdict = _winding_int(iverts, ipoint[0], ipoint[1])
    if verdict < 0:
        return Containment.BOUNDARY
    return Containment.INSIDE if verdict else Containment.OUTSIDE


@dataclass(frozen=True)
class Chord:
    """Straight cut between two boundary points of a rectangle.

    Validity against a specific rectangle (both endpoints on the boundary,
    not on one closed edge) is checked by :func:`validate_chord`, which
    every operation taking a chord calls first.
    """

    p: Point
    q: Point

    def __post_init__(self) -> None:
        if self.p == self.q:
            raise InvalidChordError(f"chord endpoints coincide: {self.p}")


def validate_chord(rect: Rect, chord: Chord) -> None:
    for name, end in (("p", chord.p), ("q", chord.q)):
        if not rect.boundary_edges(end):
            raise InvalidChordError(f"chord endpoint {name}={end} is not on the boundary of {rect}")
    shared = rect.boundary_edges(chord.p) & rect.boundary_edges(chord.q)
    if shared:
        raise InvalidChordError(
            f"chord endpoints lie on the same closed edge ({sorted(shared)[0]}): "
            f"the cut would not cross the interior"
        )


def _perimeter_pos(rect: Rect, p: Point) -> Fraction:
    """Position along the boundary, counterclockwise from the origin.

    Each boundary point gets a unique position: corners are assigned to the
    edge they start (bottom owns (0,0), right owns (y,0), and so on).
    """
    if p.v == 0 and p.u < rect.y:
        return p.u
    if p.u == rect.y and p.v < rect.x:
        return rect.y + p.v
    if p.v == rect.x and p.u > 0:
        return rect.y + rect.x + (rect.y - p.u)
    return 2 * rect.y + rect.x + (rect.x - p.v)


def _boundary_arc(rect: Rect, start: Point, end: Point) -> list[Point]:
    """Boundary walk from start to end counterclockwise, corners included."""
    perim = 2 * (rect.x + rect.y)
    s = _perimeter_pos(rect, start)
    e = _perimeter_pos(rect, end)
    span = (e - s) % perim
    between = []
    for corner in rect.corners():
        c = (_perimeter_pos(rect, corner) - s) % perim
        if 0 < c < span:
            between.append((c, corner))
    between.sort(key=lambda item: item[0])
    return [start] + [corner for _, corner in between] + [end]


def _slice_interval(poly: Polygon, v0: Fraction) -> Optional[tuple[Fraction, Fraction]]:
    """u-extent of a convex polygon's intersection with the line v = v0."""
    us: list[Fraction] = []
    for a, b in poly.edges():
        if a.v == v0:
            us.append(a.u)
        if (a.v < v0 < b.v) or (b.v < v0 < a.v):
            us.append(a.u + (b.u - a.u) * (v0 - a.v) / (b.v - a.v))
    if not us:
        return None
    return min(us), max(us)


def split_rect_by_chord(rect: Rect, chord: Chord) -> tuple[Polygon, Polygon]:
    """Cut the rectangle along a chord into two polygons.

    The returned pieces partition the rectangle exactly (areas sum to
    ``x * y``). The first piece is the one with the origin corner as a
    vertex; when the chord itself ends at the origin, the piece whose
    points at mid-height ``v = x/2`` have smaller ``u`` comes first.
    """
    validate_chord(rect, chord)
    piece_a = Polygon(_boundary_arc(rect, chord.q, chord.p))
    piece_b = Polygon(_boundary_arc(rect, chord.p, chord.q))

    origin = Point(Fraction(0), Fraction(0))
    a_has = origin in piece_a.vertices
    b_has = origin in piece_b.vertices
    if a_has != b_has:
        return (piece_a, piece_b) if a_has else (piece_b, piece_a)

    half = rect.x / 2
    infinity = (rect.y + 1, rect.y + 1)
    key_a = _slice_interval(piece_a, half) or infinity
    key_b = _slice_interval(piece_b, half) or infinity
    return (piece_a, piece_b) if key_a <= key_b else (piece_b, piece_a)
