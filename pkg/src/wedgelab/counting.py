"""Distinct-value and energy counts over exact wedge and dot products.

All grouping is by canonical lowest-terms rationals, so two values collide
exactly when they are equal. The quadruple counter is the quartic brute-force
oracle the fast energy route is tested against; it is capped by size.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceededError
from .geom import PointSet, Scalar, dot, wedge

ORACLE_CAP = 12


@dataclass(frozen=True)
class WedgeHistogram:
    """Occurrence counts n(s) of each positive wedge value s over ordered
    pairs; a positive wedge is exactly a positively oriented pair."""

    entries: dict
    total: int

    def support(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class EnergyReport:
    energy: int
    distinct_values: int
    total_pairs: int
    quadruples_restricted: int | None = None


def wedge_histogram(ps: PointSet) -> WedgeHistogram:
    entries: dict[Scalar, int] = {}
    pts = ps.points
    for i, u in enumerate(pts):
        for j, v in enumerate(pts):
            if i == j:
                continue
            s = wedge(u, v)
            if s > 0:
                entries[s] = entries.get(s, 0) + 1
    return WedgeHistogram(entries=entries, total=sum(entries.values()))


def energy(ps: PointSet) -> EnergyReport:
    """Quadruple count E = sum of n(s)^2, computed by pair grouping in
    O(N^2 log N) comparisons rather than quadruple enumeration."""
    hist = wedge_histogram(ps)
    return EnergyReport(
        energy=sum(n * n for n in hist.entries.values()),
        distinct_values=hist.support(),
        total_pairs=hist.total,
    )


def distinct_areas(ps: PointSet) -> int:
    """Number of distinct triangle areas |wedge|/2 over unordered pairs,
    zero areas excluded; a set collinear through the origin yields 0."""
    areas = set()
    for u, v in combinations(ps.points, 2):
        w = wedge(u, v)
        if w != 0:
            areas.add(abs(w) / 2)
    return len(areas)


def distinct_areas_bipartite(ps: PointSet, qs: PointSet) -> int:
    areas = set()
    for u in ps:
        for v in qs:
            w = wedge(u, v)
            if w != 0:
                areas.add(abs(w) / 2)
    return len(areas)


def distinct_dot_products(ps: PointSet) -> int:
    """Size of the full dot-product value set, zero and negatives included,
    pairs with repetition."""
    pts = ps.points
    values = set()
    for i, u in enumerate(pts):
        for v in pts[i:]:
            values.add(dot(u, v))
    return len(values)


def quadruple_count_naive(
    ps: PointSet, restricted: bool, cap: int = ORACLE_CAP
) -> int:
    """O(N^4) oracle: ordered quadruples (v1, v2, v3, v4) with
    wedge(v1, v2) == wedge(v3, v4) > 0.

    The restricted variant additionally requires (v1, v3) and (v2, v4)
    non-collinear, i.e. exactly the quadruples indexing a pair of
    well-defined transformation lines.
    """
    n = len(ps)
    if n > cap:
        raise CapExceededError("quadruple oracle", n, cap)
    pts = ps.points
    positive_pairs = [
        (u, v, wedge(u, v)) for u in pts for v in pts if wedge(u, v) > 0
    ]
    count = 0
    for v1, v2, w12 in positive_pairs:
        for v3, v4, w34 in positive_pairs:
            if w12 != w34:
                continue
            if restricted and (wedge(v1, v3) == 0 or wedge(v2, v4) == 0):
                continue
            count += 1
    return count
