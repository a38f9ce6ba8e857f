"""Deterministic dataset generators.

Every spec maps to exactly one point set: the random kind draws from the
package's own fixed 64-bit stream, so a (kind, parameters, seed) triple is
reproducible across machines and sessions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GeneratorError
from .geom import Point2, PointSet, Scalar
from .prng import SplitMix64
from .sumproduct import RealSet

KINDS = ("grid", "circle", "random", "collinear", "file", "product-grid")

RANDOM_ATTEMPT_FACTOR = 200


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int | None = None
    denom: int | None = None
    seed: int | None = None
    path: str | None = None

    def tag(self) -> str:
        parts = []
        if self.n is not None:
            parts.append(f"n={self.n}")
        if self.denom is not None:
            parts.append(f"denom={self.denom}")
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        if self.path is not None:
            parts.append(f"path={self.path}")
        return f"{self.kind}({','.join(parts)})"


def _require_n(spec: GeneratorSpec) -> int:
    if spec.n is None or spec.n < 1:
        raise GeneratorError(f"{spec.kind} needs a positive point count, got {spec.n}")
    return spec.n


def grid_points(n: int) -> list[Point2]:
    return [Point2(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]


def circle_points(k: int) -> list[Point2]:
    """k distinct rational points on the unit circle from the tangent
    half-angle parameterization at t = 1..k."""
    pts = []
    for t in range(1, k + 1):
        den = 1 + t * t
        pts.append(Point2(Fraction(1 - t * t, den), Fraction(2 * t, den)))
    return pts


def random_scalar(rng: SplitMix64, denom: int) -> Scalar:
    return Fraction(rng.randint(-denom, denom), rng.randint(1, denom))


def random_points(n: int, denom: int, seed: int) -> list[Point2]:
    """n distinct non-origin points with coordinates p/q, |p| <= denom,
    1 <= q <= denom. Raises rather than spinning forever when the coordinate
    space is too small to host n distinct points."""
    rng = SplitMix64(seed)
    points: list[Point2] = []
    seen = set()
    attempts = 0
    budget = RANDOM_ATTEMPT_FACTOR * n + 1000
    while len(points) < n:
        attempts += 1
        if attempts > budget:
            raise GeneratorError(
                f"could not draw {n} distinct points with denominator bound {denom}"
            )
        p = Point2(random_scalar(rng, denom), random_scalar(rng, denom))
        if p.is_origin() or p in seen:
            continue
        seen.add(p)
        points.append(p)
    return points


def random_scalars(n: int, denom: int, seed: int) -> RealSet:
    """n distinct rationals from the same stream; for sum-product runs."""
    rng = SplitMix64(seed)
    values = set()
    attempts = 0
    budget = RANDOM_ATTEMPT_FACTOR * n + 1000
    while len(values) < n:
        attempts += 1
        if attempts > budget:
            raise GeneratorError(
                f"could not draw {n} distinct rationals with denominator bound {denom}"
            )
        values.add(random_scalar(rng, denom))
    return RealSet(values)


def product_grid(a: RealSet) -> list[Point2]:
    return [Point2(x, y) for x in a for y in a]


def generate(spec: GeneratorSpec) -> PointSet:
    """Materialize a GeneratorSpec; the returned set carries the spec tag as
    provenance so reports can name their input."""
    if spec.kind == "grid":
        pts = grid_points(_require_n(spec))
    elif spec.kind == "circle":
        pts = circle_points(_require_n(spec))
    elif spec.kind == "collinear":
        pts = [Point2(i, i) for i in range(1, _require_n(spec) + 1)]
    elif spec.kind == "random":
        n = _require_n(spec)
        if spec.seed is None:
            raise GeneratorError("random generation requires a seed")
        denom = spec.denom if spec.denom is not None else 10
        if denom < 1:
            raise GeneratorError(f"denominator bound must be positive, got {denom}")
        pts = random_points(n, denom, spec.seed)
    elif spec.kind == "file":
        from .io import read_point_set

        if spec.path is None:
            raise GeneratorError("file generation requires a path")
        return read_point_set(spec.path)
    elif spec.kind == "product-grid":
        if spec.path is not None:
            from .io import read_real_set

            a = read_real_set(spec.path)
        elif spec.n is not None:
            from .sumproduct import range_set

            a = range_set(_require_n(spec))
        else:
            raise GeneratorError("product-grid requires a real-set path or a count")
        pts = product_grid(a)
    else:
        raise GeneratorError(f"unknown generator kind {spec.kind!r}")
    return PointSet(pts, provenance=spec.tag())
