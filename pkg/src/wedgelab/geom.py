"""Exact rational plane geometry.

Points carry arbitrary-precision rational coordinates and every predicate is
decided exactly; no floating point enters any computation. The module also
provides the deterministic rotation that puts a point set in general position
(no point on an axis, pairwise-distinct x coordinates) before the
transformation-line construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateEntryError, OriginPointError, RotationExhaustedError

Scalar = Fraction


def scalar(value) -> Scalar:
    """Coerce an int, a Fraction, or a 'p/q' string to an exact Scalar.

    Floats are rejected outright: admitting one would silently break the
    exact-equality grouping every counter relies on.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError(f"floats are not exact: {value!r}")
    return Fraction(value)


def format_scalar(value: Scalar) -> str:
    """Render a Scalar as 'p' or 'p/q' in lowest terms."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Point2:
    x: Scalar
    y: Scalar

    def __post_init__(self):
        object.__setattr__(self, "x", scalar(self.x))
        object.__setattr__(self, "y", scalar(self.y))

    def is_origin(self) -> bool:
        return self.x == 0 and self.y == 0

    def __repr__(self) -> str:
        return f"({format_scalar(self.x)}, {format_scalar(self.y)})"


def wedge(u: Point2, v: Point2) -> Scalar:
    """Oriented vector product u.x*v.y - u.y*v.x (twice the signed area of
    the origin triangle on u and v)."""
    return u.x * v.y - u.y * v.x


def dot(u: Point2, v: Point2) -> Scalar:
    return u.x * v.x + u.y * v.y


def perp(v: Point2) -> Point2:
    """Counterclockwise quarter turn; satisfies dot(u, v) == wedge(u, perp(v))."""
    return Point2(-v.y, v.x)


class PointSet:
    """A duplicate-free plane point set in canonical (lexicographic) order.

    Duplicates are rejected rather than merged: multiplicity would change
    every count downstream. The origin is rejected as a member because it is
    the fixed apex of every triangle being counted.
    """

    __slots__ = ("points", "provenance")

    def __init__(self, points: Iterable, provenance: str | None = None):
        pts = []
        for p in points:
            if not isinstance(p, Point2):
                p = Point2(*p)
            pts.append(p)
        seen = set()
        for p in pts:
            if p.is_origin():
                raise OriginPointError("the origin cannot be a member of a point set")
            if p in seen:
                raise DuplicateEntryError(f"duplicate point {p}")
            seen.add(p)
        self.points: tuple[Point2, ...] = tuple(sorted(pts, key=lambda q: (q.x, q.y)))
        self.provenance = provenance

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point2]:
        return iter(self.points)

    def __getitem__(self, i: int) -> Point2:
        return self.points[i]

    def __contains__(self, p: Point2) -> bool:
        return p in self.points

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet({list(self.points)!r})"


def perp_set(ps: PointSet) -> PointSet:
    """The set of quarter-turned points, preserving provenance tag."""
    tag = f"perp({ps.provenance})" if ps.provenance else None
    return PointSet([perp(p) for p in ps], provenance=tag)


def _direction_key(dx: Scalar, dy: Scalar) -> tuple[int, int]:
    """Primitive integer direction vector, sign-normalized, for slope grouping."""
    ix = dx.numerator * dy.denominator
    iy = dy.numerator * dx.denominator
    g = math.gcd(ix, iy)
    if g:
        ix //= g
        iy //= g
    if ix < 0 or (ix == 0 and iy < 0):
        ix, iy = -ix, -iy
    return (ix, iy)


def max_collinear(ps: PointSet) -> int:
    """Largest number of points of the set on one straight line (any line,
    not necessarily through the origin). Exact pairwise slope grouping."""
    n = len(ps)
    if n <= 2:
        return n
    best = 2
    pts = ps.points
    for i in range(n):
        groups: dict[tuple[int, int], int] = {}
        for j in range(n):
            if j == i:
                continue
            key = _direction_key(pts[j].x - pts[i].x, pts[j].y - pts[i].y)
            groups[key] = groups.get(key, 0) + 1
        best = max(best, 1 + max(groups.values()))
    return best


@dataclass(frozen=True)
class RotationRecord:
    """The rotation actually applied: cos = c, sin = s, both rational."""

    c: Scalar
    s: Scalar
    triple_index: int


def pythagorean_rotations(count: int) -> list[tuple[Scalar, Scalar]]:
    """First `count` rational (cos, sin) pairs from primitive Pythagorean
    triples, ordered by hypotenuse then smaller leg:
    (3/5, 4/5), (5/13, 12/13), (8/17, 15/17), ...
    """
    bound = 128
    while True:
        triples = []
        m = 2
        while m * m + 1 <= bound:
            for k in range(1, m):
                if (m - k) % 2 == 1 and math.gcd(m, k) == 1:
                    h = m * m + k * k
                    if h <= bound:
                        small, large = sorted((m * m - k * k, 2 * m * k))
                        triples.append((h, small, large))
            m += 1
        if len(triples) >= count:
            triples.sort()
            return [(Fraction(p, h), Fraction(q, h)) for h, p, q in triples[:count]]
        bound *= 2


def rotate_point(p: Point2, c: Scalar, s: Scalar) -> Point2:
    return Point2(c * p.x - s * p.y, s * p.x + c * p.y)


def rotate_set(ps: PointSet, record: RotationRecord) -> PointSet:
    return PointSet(
        [rotate_point(p, record.c, record.s) for p in ps], provenance=ps.provenance
    )


def is_generic(points: Sequence[Point2]) -> bool:
    """True when no coordinate vanishes and x coordinates are pairwise distinct."""
    if any(p.x == 0 or p.y == 0 for p in points):
        return False
    return len({p.x for p in points}) == len(points)


def normalize_rotation(
    ps: PointSet, max_triples: int = 64
) -> tuple[PointSet, RotationRecord]:
    """Rotate the set by the first enumerated rational rotation that leaves
    every coordinate nonzero and all x coordinates distinct.

    The enumeration is fixed, so runs are reproducible; rotations preserve
    all wedge and dot values. Raises RotationExhaustedError after
    `max_triples` failures, which signals a pathological input rather than
    looping forever.
    """
    for idx, (c, s) in enumerate(pythagorean_rotations(max_triples)):
        rotated = [rotate_point(p, c, s) for p in ps]
        if is_generic(rotated):
            return (
                PointSet(rotated, provenance=ps.provenance),
                RotationRecord(c, s, idx),
            )
    raise RotationExhaustedError(
        f"no generic rotation among the first {max_triples} Pythagorean triples"
    )
