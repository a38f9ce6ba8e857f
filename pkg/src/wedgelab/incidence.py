"""Exact incidence counting for line families and the three structural
checkers applied to them: concurrency, coplanarity, and membership in a
doubly ruled quadric (regulus).

Everything is exhaustive exact enumeration behind size caps; no partitioning
machinery, no floating point. The correspondence check ties the quadruple
count of the point set to intersecting pairs of its 4D transformation lines,
which is the reduction the rest of the package exists to exercise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .counting import ORACLE_CAP, quadruple_count_naive
from .errors import CapExceededError, CoincidentLinesError
from .geom import PointSet, RotationRecord, Scalar, normalize_rotation, wedge
from .lines import Line3, LineFamily, build_family
from .prng import SplitMix64

INTERSECTION_CAP = 400
REGULUS_ENUMERATION_LIMIT = 60  # families up to this size get all triples
REGULUS_SAMPLE_SEED = 0x5EED1E57

# intersection outcomes for a pair of parameterized lines
POINT = "point"
PARALLEL = "parallel"
SKEW = "skew"
COINCIDENT = "coincident"


def intersect_parametric(base1, dir1, base2, dir2):
    """Exact intersection of two parameterized lines in any dimension.

    Returns (status, point, t1, t2); point and parameters are None unless
    status is POINT. Coincident means equal as point sets.
    """
    dim = len(base1)
    rhs = [base2[k] - base1[k] for k in range(dim)]
    pairs = list(combinations(range(dim), 2))
    parallel = all(dir1[i] * dir2[j] - dir1[j] * dir2[i] == 0 for i, j in pairs)
    if parallel:
        on_line = all(rhs[i] * dir1[j] - rhs[j] * dir1[i] == 0 for i, j in pairs)
        return (COINCIDENT if on_line else PARALLEL), None, None, None
    for i, j in pairs:
        det = -dir1[i] * dir2[j] + dir2[i] * dir1[j]
        if det == 0:
            continue
        t1 = (-rhs[i] * dir2[j] + dir2[i] * rhs[j]) / det
        t2 = (dir1[i] * rhs[j] - rhs[i] * dir1[j]) / det
        if all(dir1[k] * t1 - dir2[k] * t2 == rhs[k] for k in range(dim)):
            point = tuple(base1[k] + t1 * dir1[k] for k in range(dim))
            return POINT, point, t1, t2
        return SKEW, None, None, None
    raise AssertionError("unreachable: non-parallel lines with no pivot")


@dataclass(frozen=True)
class IncidenceRecord:
    """One exact pairwise intersection: family positions, the common point,
    and the parameter value on each line that reaches it."""

    pair: tuple[int, int]
    point: tuple
    params: tuple[Scalar, Scalar]


def _index_pair(line):
    if isinstance(line, Line3):
        return line.index
    return (line.source, line.target)


def _scaled_duplicate(l1, l2) -> bool:
    """True for the one legitimate way two family members share a line: if T
    maps v to w it maps lam*v to lam*w, so index pairs that are scalar
    multiples of each other parameterize the same map family. Sets holding
    both v, lam*v and w, lam*w (larger grids do) produce such twins."""
    i1, i2 = _index_pair(l1), _index_pair(l2)
    if i1 is None or i2 is None:
        return False
    (s1, t1), (s2, t2) = i1, i2
    return (s1, t1) != (s2, t2) and wedge(s1, s2) == 0 and wedge(t1, t2) == 0


def pairwise_intersections(
    family: LineFamily, cap: int = INTERSECTION_CAP
) -> list[IncidenceRecord]:
    """All pairwise intersection points, one record per unordered pair that
    meets in a point.

    Scaled-duplicate twins share the whole line rather than a point and
    contribute no record; any other coincidence is a corrupt family and
    raises."""
    lines = family.lines
    if len(lines) > cap:
        raise CapExceededError("pairwise intersections", len(lines), cap)
    records = []
    for i, j in combinations(range(len(lines)), 2):
        status, point, t1, t2 = intersect_parametric(
            lines[i].base, lines[i].dir, lines[j].base, lines[j].dir
        )
        if status == COINCIDENT:
            if _scaled_duplicate(lines[i], lines[j]):
                continue
            raise CoincidentLinesError(f"family lines {i} and {j} coincide")
        if status == POINT:
            records.append(IncidenceRecord(pair=(i, j), point=point, params=(t1, t2)))
    return records


def max_concurrency(
    family: LineFamily,
    records: list[IncidenceRecord] | None = None,
    cap: int = INTERSECTION_CAP,
) -> int:
    """Largest number of family lines through a single point. A nonempty
    family with no intersections at all still has one line through a point."""
    if not family.lines:
        return 0
    if records is None:
        records = pairwise_intersections(family, cap)
    through: dict[tuple, set[int]] = {}
    for rec in records:
        through.setdefault(rec.point, set()).update(rec.pair)
    if not through:
        return 1
    return max(len(s) for s in through.values())


def _canonical_plane(normal, offset) -> tuple[int, int, int, int]:
    """Integer plane coefficients (a, b, c, d) of a*x1+b*x2+c*x3 = d, cleared
    of denominators, gcd-reduced, first nonzero entry positive."""
    vals = [Fraction(normal[0]), Fraction(normal[1]), Fraction(normal[2]), Fraction(offset)]
    lcm = 1
    for v in vals:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vals]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    if g:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v != 0), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot3(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


@dataclass(frozen=True)
class PlaneRecord:
    """A plane a*x1+b*x2+c*x3 = d with the family positions lying in it."""

    coefficients: tuple[int, int, int, int]
    members: tuple[int, ...]


def _plane_for(l1: Line3, l2: Line3, status: str):
    if status == POINT:
        normal = _cross(l1.dir, l2.dir)
    else:  # parallel: use the connecting segment for the second span vector
        connect = tuple(l2.base[k] - l1.base[k] for k in range(3))
        normal = _cross(l1.dir, connect)
    assert any(v != 0 for v in normal)
    return _canonical_plane(normal, _dot3(normal, l1.base))


def plane_through_pair(l1: Line3, l2: Line3):
    """Canonical plane containing two coplanar (intersecting or parallel)
    lines; None when the pair is skew, raises on coincident lines."""
    status = intersect_parametric(l1.base, l1.dir, l2.base, l2.dir)[0]
    if status == SKEW:
        return None
    if status == COINCIDENT:
        raise CoincidentLinesError("coincident lines span no unique plane")
    return _plane_for(l1, l2, status)


def _line_in_plane(coeffs, line: Line3) -> bool:
    a, b, c, d = coeffs
    for t in (Fraction(0), Fraction(1)):
        x = line.point_at(t)
        if a * x[0] + b * x[1] + c * x[2] != d:
            return False
    return True


def max_coplanar(
    family: LineFamily, cap: int = INTERSECTION_CAP
) -> tuple[int, PlaneRecord | None]:
    """Largest number of family lines lying in one plane, with that plane.

    Planes are generated through coplanar pairs and grouped by canonical
    coefficients; every reported member is re-verified against the plane
    equation. Ties resolve to the lexicographically least coefficients.
    """
    lines = family.lines
    if len(lines) > cap:
        raise CapExceededError("coplanarity grouping", len(lines), cap)
    if not lines:
        return 0, None
    groups: dict[tuple[int, int, int, int], set[int]] = {}
    for i, j in combinations(range(len(lines)), 2):
        status = intersect_parametric(
            lines[i].base, lines[i].dir, lines[j].base, lines[j].dir
        )[0]
        if status == COINCIDENT:
            if _scaled_duplicate(lines[i], lines[j]):
                continue  # twins span no unique plane; other pairs place them
            raise CoincidentLinesError(f"family lines {i} and {j} coincide")
        if status == SKEW:
            continue
        coeffs = _plane_for(lines[i], lines[j], status)
        groups.setdefault(coeffs, set()).update((i, j))
    if not groups:
        return 1, None
    best_coeffs = None
    best_members: set[int] = set()
    for coeffs in sorted(groups):
        members = groups[coeffs]
        if len(members) > len(best_members):
            best_coeffs, best_members = coeffs, members
    for idx in best_members:
        if not _line_in_plane(best_coeffs, lines[idx]):
            raise AssertionError(f"grouped line {idx} fails its plane equation")
    record = PlaneRecord(coefficients=best_coeffs, members=tuple(sorted(best_members)))
    return len(best_members), record


# quadric monomial order: x^2, xy, xz, y^2, yz, z^2, x, y, z, 1
def quadric_row(point) -> list[Fraction]:
    x, y, z = point
    return [x * x, x * y, x * z, y * y, y * z, z * z, x, y, z, Fraction(1)]


def eval_quadric(coeffs, point) -> Scalar:
    return sum(c * m for c, m in zip(coeffs, quadric_row(point)))


def line_on_quadric(coeffs, line: Line3) -> bool:
    """Degree-2 restriction to a line vanishes identically iff it vanishes at
    three parameter values."""
    return all(
        eval_quadric(coeffs, line.point_at(t)) == 0
        for t in (Fraction(-1), Fraction(0), Fraction(1))
    )


def _homogeneous_point(point) -> tuple[int, int, int, int]:
    """Integer (X, Y, Z, W) with point = (X/W, Y/W, Z/W); W > 0."""
    lcm = 1
    for v in point:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    return (
        point[0].numerator * (lcm // point[0].denominator),
        point[1].numerator * (lcm // point[1].denominator),
        point[2].numerator * (lcm // point[2].denominator),
        lcm,
    )


def _homogeneous_row(hp: tuple[int, int, int, int]) -> list[int]:
    """Integer monomial row; a point is on the quadric iff the homogenized
    form vanishes here, since W != 0 scales the value by W squared."""
    x, y, z, w = hp
    return [x * x, x * y, x * z, y * y, y * z, z * z, x * w, y * w, z * w, w * w]


def _line_samples(line: Line3) -> list[tuple[int, int, int, int]]:
    return [
        _homogeneous_point(line.point_at(t))
        for t in (Fraction(-1), Fraction(0), Fraction(1))
    ]


def _quadric_ints_through_samples(samples) -> list[int] | None:
    rows = [_homogeneous_row(hp) for group in samples for hp in group]
    return linalg.integer_kernel_unique(rows, 10)


def _on_quadric_ints(coeff_ints, samples) -> bool:
    return all(
        sum(c * m for c, m in zip(coeff_ints, _homogeneous_row(hp))) == 0
        for hp in samples
    )


def _homogeneous_rank(coeffs) -> int:
    """Rank of the symmetric 4x4 matrix of the homogenized quadric."""
    qxx, qxy, qxz, qyy, qyz, qzz, lx, ly, lz, const = [Fraction(c) for c in coeffs]
    h = Fraction(1, 2)
    m = [
        [qxx, h * qxy, h * qxz, h * lx],
        [h * qxy, qyy, h * qyz, h * ly],
        [h * qxz, h * qyz, qzz, h * lz],
        [h * lx, h * ly, h * lz, const],
    ]
    return linalg.rank(m)


@dataclass(frozen=True)
class QuadricSurface:
    """Ten quadric coefficients in the fixed monomial order, scaled so the
    first nonzero coefficient is 1, plus a coarse classification tag."""

    coefficients: tuple
    tag: str


def classify_quadric(coeffs, skew_lines_contained: int = 0) -> str:
    quadratic_part = coeffs[:6]
    if all(v == 0 for v in quadratic_part) or _homogeneous_rank(coeffs) <= 2:
        return "plane-pair/degenerate"
    if skew_lines_contained >= 3:
        return "ruled-candidate"
    return "other"


def quadric_through_lines(l1: Line3, l2: Line3, l3: Line3):
    """Coefficients of the quadric through three lines, via nine sample points
    (three per line pin a degree-2 surface to the whole line). None if the
    sample system does not pin the surface uniquely."""
    ints = _quadric_ints_through_samples([_line_samples(line) for line in (l1, l2, l3)])
    if ints is None:
        return None
    lead = next(v for v in ints if v != 0)
    return tuple(Fraction(v, lead) for v in ints)


@dataclass(frozen=True)
class RegulusResult:
    """Best quadric found, how many family lines lie on it, and which ones
    (positions), so per-source structure on the surface can be read off."""

    count: int
    surface: QuadricSurface | None
    exhaustive: bool
    triples_examined: int
    members: tuple[int, ...] = ()


def _sampled_triples(n_lines: int, budget: int):
    """Deterministic subsample of index triples when full enumeration is over
    budget; seeded by a fixed constant so reruns agree."""
    rng = SplitMix64(REGULUS_SAMPLE_SEED ^ n_lines)
    seen = set()
    attempts = 0
    while len(seen) < budget and attempts < 20 * budget:
        attempts += 1
        i = rng.randrange(n_lines)
        j = rng.randrange(n_lines)
        k = rng.randrange(n_lines)
        if i < j < k:
            seen.add((i, j, k))
    return sorted(seen)


def regulus_max(
    family: LineFamily, triple_budget: int | None = None
) -> RegulusResult:
    """Largest number of family lines on one non-degenerate, non-planar
    quadric, searched over triples of pairwise-skew lines.

    Any three pairwise-skew lines lie on a unique quadric, and that quadric
    is doubly ruled, so enumerating skew triples finds every candidate
    regulus the family can populate. When the triple budget truncates the
    enumeration the result is only a lower bound and is flagged as such.
    """
    lines = family.lines
    m = len(lines)
    if m < 3:
        return RegulusResult(0, None, True, 0)
    skew_pairs = set()
    for i, j in combinations(range(m), 2):
        status = intersect_parametric(
            lines[i].base, lines[i].dir, lines[j].base, lines[j].dir
        )[0]
        if status == SKEW:
            skew_pairs.add((i, j))
    total = m * (m - 1) * (m - 2) // 6
    if triple_budget is None:
        limit = REGULUS_ENUMERATION_LIMIT
        triple_budget = limit * (limit - 1) * (limit - 2) // 6
    if total <= triple_budget:
        triples = combinations(range(m), 3)
        exhaustive = True
    else:
        triples = _sampled_triples(m, triple_budget)
        exhaustive = False
    samples = [_line_samples(line) for line in lines]
    best_count = 0
    best_coeffs = None
    best_members: tuple[int, ...] = ()
    examined = 0
    for i, j, k in triples:
        examined += 1
        if (i, j) not in skew_pairs or (i, k) not in skew_pairs or (j, k) not in skew_pairs:
            continue
        ints = _quadric_ints_through_samples((samples[i], samples[j], samples[k]))
        if ints is None:
            continue
        lead = next(v for v in ints if v != 0)
        coeffs = tuple(Fraction(v, lead) for v in ints)
        if classify_quadric(coeffs, skew_lines_contained=3) != "ruled-candidate":
            continue
        members = tuple(
            pos for pos, s in enumerate(samples) if _on_quadric_ints(ints, s)
        )
        count = len(members)
        if count > best_count or (count == best_count and best_coeffs is not None and coeffs < best_coeffs):
            best_count = count
            best_coeffs = coeffs
            best_members = members
    surface = None
    if best_coeffs is not None:
        surface = QuadricSurface(coefficients=best_coeffs, tag="ruled-candidate")
    return RegulusResult(best_count, surface, exhaustive, examined, best_members)


@dataclass(frozen=True)
class CorrespondenceReport:
    """Both sides of the quadruple/line-pair correspondence on one set.

    quadruple_count: restricted equal-wedge quadruples of the rotated set.
    line_pair_count: ordered pairs of distinct intersecting 4D lines whose
    sources are positively oriented. The two are equal exactly when the
    reduction behaves as claimed.
    """

    quadruple_count: int
    line_pair_count: int
    rotation: RotationRecord
    witnesses: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.quadruple_count == self.line_pair_count


def correspondence_check(
    ps: PointSet, cap: int = ORACLE_CAP, witness_limit: int = 6
) -> CorrespondenceReport:
    """Count both sides of the correspondence exactly.

    On sets of at most `witness_limit` points the constructive mapping is
    also exercised: each restricted quadruple (v1,v2,v3,v4) is sent to the
    line pair (v1->v3, v2->v4), the pair is verified to intersect, and the
    witness list must biject onto the enumerated intersecting pairs.
    """
    if len(ps) > cap:
        raise CapExceededError("correspondence check", len(ps), cap)
    rotated, record = normalize_rotation(ps)
    quad_count = quadruple_count_naive(rotated, restricted=True, cap=cap)
    family = build_family(rotated, oriented=False)
    lines = family.lines
    geometry = [(ln.base, ln.dir) for ln in lines]
    intersecting: set[tuple[int, int]] = set()
    for i, j in combinations(range(len(lines)), 2):
        status = intersect_parametric(*geometry[i], *geometry[j])[0]
        if status == COINCIDENT:
            if _scaled_duplicate(lines[i], lines[j]):
                continue  # twins have collinear sources: never counted anyway
            raise CoincidentLinesError(f"family lines {i} and {j} coincide")
        if status == POINT:
            intersecting.add((i, j))
    pair_count = 0
    oriented_pairs: set[tuple[int, int]] = set()
    for i, j in intersecting:
        w = wedge(lines[i].source, lines[j].source)
        if w > 0:
            pair_count += 1
            oriented_pairs.add((i, j))
        elif w < 0:
            pair_count += 1
            oriented_pairs.add((j, i))
    witnesses = None
    if len(ps) <= witness_limit:
        position = {(ln.source, ln.target): k for k, ln in enumerate(lines)}
        mapped = []
        pts = rotated.points
        for v1 in pts:
            for v2 in pts:
                w12 = wedge(v1, v2)
                if w12 <= 0:
                    continue
                for v3 in pts:
                    if wedge(v1, v3) == 0:
                        continue
                    for v4 in pts:
                        if wedge(v3, v4) != w12 or wedge(v2, v4) == 0:
                            continue
                        i = position[(v1, v3)]
                        j = position[(v2, v4)]
                        lo, hi = min(i, j), max(i, j)
                        if (lo, hi) not in intersecting:
                            raise AssertionError(
                                f"quadruple {(v1, v2, v3, v4)} maps to a non-intersecting pair"
                            )
                        mapped.append(((v1, v2, v3, v4), (i, j)))
        if {pair for _, pair in mapped} != oriented_pairs or len(mapped) != len(
            oriented_pairs
        ):
            raise AssertionError("quadruple-to-line-pair map is not a bijection")
        witnesses = tuple(mapped)
    return CorrespondenceReport(
        quadruple_count=quad_count,
        line_pair_count=pair_count,
        rotation=record,
        witnesses=witnesses,
    )


@dataclass(frozen=True)
class GktReport:
    """Structural-condition measurements for a 3D family: how concurrent, how
    coplanar, how regulus-heavy, plus intersection totals and the ratios
    against the bounds the construction promises (concurrency within N,
    coplanarity within 2N)."""

    n_points: int
    line_count: int
    intersections_3d: int
    intersections_4d: int | None
    max_concurrency: int
    max_coplanar: int
    coplanar_plane: PlaneRecord | None
    regulus: RegulusResult | None
    concurrency_ratio: Scalar | None
    coplanar_ratio: Scalar | None
    intersections_ratio: float | None
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def gkt_condition_report(
    family3: LineFamily,
    family4: LineFamily | None = None,
    n_points: int | None = None,
    cap: int = INTERSECTION_CAP,
    regulus_line_cap: int = REGULUS_ENUMERATION_LIMIT,
    triple_budget: int | None = None,
) -> GktReport:
    """Bundle the three structural checkers over one projected family.

    Flags a violation whenever concurrency exceeds N or coplanarity exceeds
    2N; the regulus count is reported without a threshold. Regulus search is
    skipped (None) above `regulus_line_cap` lines to keep the cubic
    enumeration at desk scale.
    """
    if n_points is None:
        if family3.source_set is None:
            raise ValueError("n_points is required for a family without a source set")
        n_points = len(family3.source_set)
    if not family3.lines:
        return GktReport(
            n_points=n_points,
            line_count=0,
            intersections_3d=0,
            intersections_4d=0 if family4 is not None else None,
            max_concurrency=0,
            max_coplanar=0,
            coplanar_plane=None,
            regulus=RegulusResult(0, None, True, 0),
            concurrency_ratio=Fraction(0),
            coplanar_ratio=Fraction(0),
            intersections_ratio=None,
            violations=(),
        )
    records3 = pairwise_intersections(family3, cap)
    concurrency = max_concurrency(family3, records=records3)
    coplanar, plane = max_coplanar(family3, cap)
    regulus = None
    if len(family3.lines) <= regulus_line_cap:
        regulus = regulus_max(family3, triple_budget)
    inter4 = None
    if family4 is not None:
        inter4 = len(pairwise_intersections(family4, cap))
    violations = []
    if concurrency > n_points:
        violations.append(
            f"concurrency {concurrency} exceeds point count {n_points}"
        )
    if coplanar > 2 * n_points:
        violations.append(
            f"coplanarity {coplanar} exceeds twice the point count {2 * n_points}"
        )
    denom = n_points**3 * math.log(n_points) if n_points > 1 else 0.0
    return GktReport(
        n_points=n_points,
        line_count=len(family3.lines),
        intersections_3d=len(records3),
        intersections_4d=inter4,
        max_concurrency=concurrency,
        max_coplanar=coplanar,
        coplanar_plane=plane,
        regulus=regulus,
        concurrency_ratio=Fraction(concurrency, n_points),
        coplanar_ratio=Fraction(coplanar, 2 * n_points),
        intersections_ratio=(len(records3) / denom) if denom else None,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class ProjectionComparison:
    """3D versus 4D pairwise intersection counts for the same family.

    Wherever x1 != 0 the dropped coordinate is recoverable, so a pair meeting
    only after projection can only cross on the x1 = 0 wall; such merges are
    witnessed by their 3D point. The comparison is consistent when the 3D
    count dominates and every merge sits on that wall.
    """

    count_4d: int
    count_3d: int
    merges: tuple

    @property
    def ok(self) -> bool:
        return self.count_3d >= self.count_4d and all(
            point[0] == 0 for _, point in self.merges
        )


def compare_projection_counts(
    family4: LineFamily, family3: LineFamily, cap: int = INTERSECTION_CAP
) -> ProjectionComparison:
    records4 = pairwise_intersections(family4, cap)
    records3 = pairwise_intersections(family3, cap)
    met_in_4d = {rec.pair for rec in records4}
    merges = tuple(
        (rec.pair, rec.point) for rec in records3 if rec.pair not in met_in_4d
    )
    return ProjectionComparison(
        count_4d=len(records4), count_3d=len(records3), merges=merges
    )
