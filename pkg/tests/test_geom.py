from fractions import Fraction

import pytest

from wedgelab import (
    DuplicateEntryError,
    OriginPointError,
    Point2,
    PointSet,
    RotationExhaustedError,
    dot,
    format_scalar,
    max_collinear,
    normalize_rotation,
    perp,
    pythagorean_rotations,
    scalar,
    wedge,
)
from wedgelab.geom import rotate_point
from wedgelab.prng import SplitMix64

F = Fraction


def P(x, y):
    return Point2(x, y)


def test_scalar_parsing_and_format():
    assert scalar("-3/5") == F(-3, 5)
    assert scalar(7) == 7
    assert scalar(F(2, 4)) == F(1, 2)
    assert format_scalar(F(-3, 5)) == "-3/5"
    assert format_scalar(F(14, 7)) == "2"
    with pytest.raises(TypeError):
        scalar(0.5)


def test_wedge_examples():
    assert wedge(P(1, 0), P(0, 1)) == 1
    assert wedge(P(2, 3), P(4, 6)) == 0
    assert wedge(P(1, 2), P(3, 5)) == -1


def test_dot_examples():
    assert dot(P(1, 0), P(0, 1)) == 0
    assert dot(P(1, 2), P(3, 5)) == 13
    assert dot(P(2, 3), P(2, 3)) == 13


def test_perp_examples():
    assert perp(P(1, 0)) == P(0, 1)
    assert perp(P(3, 5)) == P(-5, 3)
    assert dot(P(1, 2), P(3, 5)) == wedge(P(1, 2), perp(P(3, 5))) == 13


def test_point_set_canonical_order_and_rejections():
    ps = PointSet([P(2, 2), P(1, 2), P(1, 1)])
    assert list(ps) == [P(1, 1), P(1, 2), P(2, 2)]
    with pytest.raises(DuplicateEntryError):
        PointSet([P(1, 1), P(2, 2), P(1, 1)])
    with pytest.raises(OriginPointError):
        PointSet([P(1, 1), P(0, 0)])
    # accepts raw coordinate pairs too
    assert PointSet([(F(1, 2), 3)])[0] == P(F(1, 2), 3)


def test_max_collinear_examples():
    assert max_collinear(PointSet([P(1, 0), P(0, 1)])) == 2
    assert max_collinear(PointSet([P(i, i) for i in range(1, 6)])) == 5
    grid3 = PointSet([P(x, y) for x in (1, 2, 3) for y in (1, 2, 3)])
    assert max_collinear(grid3) == 3
    assert max_collinear(PointSet([P(5, 7)])) == 1


def test_pythagorean_rotation_enumeration():
    rotations = pythagorean_rotations(8)
    assert rotations[:3] == [
        (F(3, 5), F(4, 5)),
        (F(5, 13), F(12, 13)),
        (F(8, 17), F(15, 17)),
    ]
    hyps = [c.denominator for c, _ in rotations]
    assert hyps == sorted(hyps)
    for c, s in rotations:
        assert c * c + s * s == 1
        assert 0 < c < s


def test_normalize_rotation_first_triple_cases():
    ps, record = normalize_rotation(PointSet([P(1, 0)]))
    assert record.c == F(3, 5) and record.s == F(4, 5)
    assert list(ps) == [P(F(3, 5), F(4, 5))]

    ps2, record2 = normalize_rotation(PointSet([P(1, 0), P(0, 1)]))
    assert record2.triple_index == 0
    assert set(ps2) == {P(F(3, 5), F(4, 5)), P(F(-4, 5), F(3, 5))}

    ps3, _ = normalize_rotation(PointSet([P(5, 0), P(0, 5)]))
    coords = [v for p in ps3 for v in (p.x, p.y)]
    assert all(v != 0 for v in coords)
    assert len({p.x for p in ps3}) == len(ps3)


def test_normalize_rotation_exhaustion_is_an_error():
    with pytest.raises(RotationExhaustedError):
        normalize_rotation(PointSet([P(1, 0)]), max_triples=0)


def _random_point(rng, denom=9):
    return P(
        F(rng.randint(-denom, denom), rng.randint(1, denom)),
        F(rng.randint(-denom, denom), rng.randint(1, denom)),
    )


def _random_unimodular(rng):
    # product of shears is unimodular by construction
    m = ((1, 0), (0, 1))
    for _ in range(4):
        k = rng.randint(-5, 5)
        if rng.randint(0, 1):
            shear = ((1, k), (0, 1))
        else:
            shear = ((1, 0), (k, 1))
        m = (
            (
                m[0][0] * shear[0][0] + m[0][1] * shear[1][0],
                m[0][0] * shear[0][1] + m[0][1] * shear[1][1],
            ),
            (
                m[1][0] * shear[0][0] + m[1][1] * shear[1][0],
                m[1][0] * shear[0][1] + m[1][1] * shear[1][1],
            ),
        )
    return m


def test_wedge_dot_properties_random():
    rng = SplitMix64(31337)
    for _ in range(200):
        u = _random_point(rng)
        v = _random_point(rng)
        assert wedge(u, v) == -wedge(v, u)
        assert wedge(u, u) == 0
        assert dot(u, v) == wedge(u, perp(v))


def test_wedge_is_unimodular_invariant():
    rng = SplitMix64(99)
    for _ in range(100):
        u = _random_point(rng)
        v = _random_point(rng)
        m = _random_unimodular(rng)
        assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == 1
        mu = P(m[0][0] * u.x + m[0][1] * u.y, m[1][0] * u.x + m[1][1] * u.y)
        mv = P(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)
        assert wedge(mu, mv) == wedge(u, v)


def test_rotation_preserves_pairwise_structure(medium_corpus):
    for name, ps in medium_corpus:
        rotated, record = normalize_rotation(ps)
        pts = ps.points
        rpts = [rotate_point(p, record.c, record.s) for p in pts]
        for i in range(len(pts)):
            for j in range(len(pts)):
                assert wedge(pts[i], pts[j]) == wedge(rpts[i], rpts[j]), name
                assert dot(pts[i], pts[j]) == dot(rpts[i], rpts[j]), name
        assert max_collinear(rotated) == max_collinear(ps), name
