import pytest

from wedgelab import GeneratorSpec, Point2, PointSet, generate
from wedgelab.generators import random_points


def named_sets(max_points: int, random_seeds=(), random_n=8, denom=8):
    """The shared desk-scale corpus: grids, circle sets, collinear sets, a
    hand triangle, plus seeded random sets, filtered to at most max_points."""
    sets = [
        ("tri", PointSet([Point2(1, 0), Point2(0, 1), Point2(1, 1)], provenance="tri")),
        ("two", PointSet([Point2(1, 0), Point2(0, 1)], provenance="two")),
    ]
    for n in (2, 3):
        sets.append((f"grid{n}", generate(GeneratorSpec("grid", n=n))))
    for n in (3, 4, 5, 6):
        sets.append((f"circle{n}", generate(GeneratorSpec("circle", n=n))))
    for n in (3, 4, 5, 6):
        sets.append((f"collinear{n}", generate(GeneratorSpec("collinear", n=n))))
    for seed in random_seeds:
        ps = PointSet(
            random_points(random_n, denom, seed), provenance=f"random(seed={seed})"
        )
        sets.append((f"random{seed}", ps))
    return [(name, ps) for name, ps in sets if len(ps) <= max_points]


@pytest.fixture(scope="session")
def small_corpus():
    """Sets of at most 8 points, correspondence-check sized."""
    return named_sets(8, random_seeds=(1, 2, 3), random_n=6)


@pytest.fixture(scope="session")
def medium_corpus():
    """Sets of at most 12 points, line-identity and structural-bound sized."""
    return named_sets(12, random_seeds=(1, 2, 3, 4), random_n=10)
