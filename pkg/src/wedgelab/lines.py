"""Lines of area-preserving linear maps, one per ordered non-collinear pair.

For a pair (vi, vj) the maps T with T(vi) = vj form a line inside the quadric
x1*x4 - x2*x3 = 1 when matrix entries are read as 4D coordinates. The line is
obtained by exact symbolic conjugation: in the (vi, vj) basis the maps are
[[0, -1], [1, t]], and the standard-basis representative is the conjugate by
the basis-change matrix. Dropping the fourth coordinate projects each line to
3D; the drop is invertible wherever x1 != 0 because x4 = (1 + x2*x3)/x1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import CollinearPairError, X1SectionError, X4DirectionError
from .geom import Point2, PointSet, Scalar, wedge

Vec4 = tuple[Scalar, Scalar, Scalar, Scalar]
Vec3 = tuple[Scalar, Scalar, Scalar]

# samples certifying polynomial identities in the line parameter: the
# determinant is degree <= 2, the image of the source is degree <= 1
DET_SAMPLES = (Fraction(-1), Fraction(0), Fraction(1))
MAP_SAMPLES = (Fraction(0), Fraction(1))


@dataclass(frozen=True)
class TransformLine:
    """A parameterized line base + t*dir of 2x2 matrices, flattened row-major
    to (x1, x2, x3, x4), every point of which maps `source` to `target`."""

    source: Point2
    target: Point2
    base: Vec4
    dir: Vec4

    def point_at(self, t: Scalar) -> Vec4:
        b, d = self.base, self.dir
        return (b[0] + t * d[0], b[1] + t * d[1], b[2] + t * d[2], b[3] + t * d[3])

    def matrix_at(self, t: Scalar) -> tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]:
        x1, x2, x3, x4 = self.point_at(t)
        return ((x1, x2), (x3, x4))

    def det_at(self, t: Scalar) -> Scalar:
        x1, x2, x3, x4 = self.point_at(t)
        return x1 * x4 - x2 * x3

    def image_at(self, t: Scalar, v: Point2) -> Point2:
        (m11, m12), (m21, m22) = self.matrix_at(t)
        return Point2(m11 * v.x + m12 * v.y, m21 * v.x + m22 * v.y)


@dataclass(frozen=True)
class QuadricMembership:
    """Determinant samples at t in {-1, 0, 1}; all three equal 1 exactly when
    the whole line lies on the unit-determinant quadric."""

    values: tuple[Scalar, Scalar, Scalar]

    @property
    def ok(self) -> bool:
        return all(v == 1 for v in self.values)


def _conjugate(a: Scalar, b: Scalar, c: Scalar, d: Scalar):
    """Entries of C * [[0,-1],[1,t]] * C^-1 with C = [[a, c], [b, d]], each as
    a (constant, t-coefficient) pair."""
    w = a * d - b * c
    # M = C * A(t)
    m = (
        ((c, Fraction(0)), (-a, c)),
        ((d, Fraction(0)), (-b, d)),
    )
    cinv = ((d / w, -c / w), (-b / w, a / w))
    out = []
    for i in range(2):
        row = []
        for j in range(2):
            c0 = m[i][0][0] * cinv[0][j] + m[i][1][0] * cinv[1][j]
            c1 = m[i][0][1] * cinv[0][j] + m[i][1][1] * cinv[1][j]
            row.append((c0, c1))
        out.append(row)
    return out


def transform_line(vi: Point2, vj: Point2) -> TransformLine:
    """The line of all area-preserving maps sending vi to vj.

    Raises CollinearPairError when vi, vj do not form a basis (wedge zero),
    in which case no such line exists.
    """
    if wedge(vi, vj) == 0:
        raise CollinearPairError(f"no transformation line for collinear pair {vi}, {vj}")
    conj = _conjugate(vi.x, vi.y, vj.x, vj.y)
    base = (conj[0][0][0], conj[0][1][0], conj[1][0][0], conj[1][1][0])
    direction = (conj[0][0][1], conj[0][1][1], conj[1][0][1], conj[1][1][1])
    assert any(v != 0 for v in direction)
    return TransformLine(source=vi, target=vj, base=base, dir=direction)


def on_quadric_check(line: TransformLine) -> QuadricMembership:
    """Determinant-equals-one report; a failed check is returned, not raised,
    so negative controls can inspect it."""
    return QuadricMembership(tuple(line.det_at(t) for t in DET_SAMPLES))


def maps_source_to_target(line: TransformLine) -> bool:
    return all(line.image_at(t, line.source) == line.target for t in MAP_SAMPLES)


def _canonicalize(base: Sequence[Scalar], direction: Sequence[Scalar]):
    """Scale dir so its first nonzero entry is 1, then slide base along the
    line so that same entry of base is 0. Equal lines get equal tuples."""
    pivot = next((k for k, v in enumerate(direction) if v != 0), None)
    if pivot is None:
        raise ValueError("zero direction vector")
    scale = direction[pivot]
    d = tuple(v / scale for v in direction)
    shift = base[pivot]
    b = tuple(base[k] - shift * d[k] for k in range(len(base)))
    return b, d


@dataclass(frozen=True)
class Line3:
    """A 3D line in canonical base + t*dir form; equal lines compare equal."""

    base: Vec3
    dir: Vec3
    index: tuple[Point2, Point2] | None = None

    @classmethod
    def from_base_dir(
        cls,
        base: Sequence[Scalar],
        direction: Sequence[Scalar],
        index: tuple[Point2, Point2] | None = None,
    ) -> "Line3":
        b, d = _canonicalize(tuple(map(Fraction, base)), tuple(map(Fraction, direction)))
        return cls(base=b, dir=d, index=index)

    def point_at(self, t: Scalar) -> Vec3:
        b, d = self.base, self.dir
        return (b[0] + t * d[0], b[1] + t * d[1], b[2] + t * d[2])


def canonical_4d(line: TransformLine) -> tuple[Vec4, Vec4]:
    """Canonical (base, dir) of the 4D line, for exact equality tests."""
    return _canonicalize(line.base, line.dir)


def project(line: TransformLine) -> Line3:
    """Drop the fourth coordinate.

    Fails on lines parallel to the dropped axis (their shadow is a point) and
    on lines inside the x1 = 0 section (where x4 cannot be recovered); after
    rotation normalization neither case occurs in a built family.
    """
    d3 = line.dir[:3]
    if all(v == 0 for v in d3):
        raise X4DirectionError(
            f"line for {line.source} -> {line.target} is parallel to the x4 axis"
        )
    if line.base[0] == 0 and line.dir[0] == 0:
        raise X1SectionError(
            f"line for {line.source} -> {line.target} lies in the x1 = 0 section"
        )
    return Line3.from_base_dir(line.base[:3], d3, index=(line.source, line.target))


@dataclass(frozen=True)
class LineFamily:
    """The family of transformation lines of a point set, in a deterministic
    order (lexicographic in the ordered index pairs)."""

    lines: tuple
    source_set: PointSet | None = None
    oriented: bool = False

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self) -> Iterator:
        return iter(self.lines)

    def __getitem__(self, i: int):
        return self.lines[i]

    @property
    def ambient_dim(self) -> int:
        if not self.lines:
            return 0
        return 3 if isinstance(self.lines[0], Line3) else 4


def build_family(ps: PointSet, oriented: bool = False) -> LineFamily:
    """One line per ordered non-collinear pair; collinear pairs index no line
    and are skipped. With `oriented` only positively oriented pairs are kept
    (the convention that halves the family); both orientations are the
    default because correspondence checks need lines for either order.
    """
    lines = []
    for vi in ps:
        for vj in ps:
            if vi == vj or wedge(vi, vj) == 0:
                continue
            if oriented and wedge(vi, vj) < 0:
                continue
            lines.append(transform_line(vi, vj))
    return LineFamily(lines=tuple(lines), source_set=ps, oriented=oriented)


def project_family(family: LineFamily) -> LineFamily:
    return LineFamily(
        lines=tuple(project(line) for line in family.lines),
        source_set=family.source_set,
        oriented=family.oriented,
    )
