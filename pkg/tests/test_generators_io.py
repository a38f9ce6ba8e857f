from fractions import Fraction

import pytest

from wedgelab import (
    FormatError,
    GeneratorError,
    GeneratorSpec,
    Point2,
    PointSet,
    RealSet,
    build_family,
    generate,
    normalize_rotation,
    project_family,
)
from wedgelab.generators import random_points, random_scalars
from wedgelab.io import (
    parse_line_family,
    parse_point_set,
    read_point_set,
    read_real_set,
    render_line_family,
    render_point_set,
    write_point_set,
    write_real_set,
)

F = Fraction


def P(x, y):
    return Point2(x, y)


def test_grid_and_collinear_generators():
    g2 = generate(GeneratorSpec("grid", n=2))
    assert list(g2) == [P(1, 1), P(1, 2), P(2, 1), P(2, 2)]
    assert g2.provenance == "grid(n=2)"
    c3 = generate(GeneratorSpec("collinear", n=3))
    assert list(c3) == [P(1, 1), P(2, 2), P(3, 3)]


def test_circle_generator():
    c1 = generate(GeneratorSpec("circle", n=1))
    assert list(c1) == [P(0, 1)]
    c5 = generate(GeneratorSpec("circle", n=5))
    assert len(c5) == 5
    for p in c5:
        assert p.x * p.x + p.y * p.y == 1


def test_product_grid_generator(tmp_path):
    pg = generate(GeneratorSpec("product-grid", n=2))
    assert list(pg) == [P(1, 1), P(1, 2), P(2, 1), P(2, 2)]
    reals = tmp_path / "a.reals"
    write_real_set(RealSet([F(1, 2), 3]), reals)
    pg2 = generate(GeneratorSpec("product-grid", path=str(reals)))
    assert len(pg2) == 4
    assert P(F(1, 2), 3) in pg2


def test_random_generator_determinism_and_bounds():
    spec = GeneratorSpec("random", n=10, denom=7, seed=42)
    a = generate(spec)
    b = generate(spec)
    assert a == b
    assert len(a) == 10
    for p in a:
        for coord in (p.x, p.y):
            assert abs(coord.numerator) <= 7
            assert 1 <= coord.denominator <= 7
    c = generate(GeneratorSpec("random", n=10, denom=7, seed=43))
    assert c != a


def test_random_generator_errors():
    with pytest.raises(GeneratorError):
        generate(GeneratorSpec("random", n=5, denom=5))  # no seed
    with pytest.raises(GeneratorError):
        generate(GeneratorSpec("grid"))  # no n
    with pytest.raises(GeneratorError):
        # 3x3 rational grid minus origin holds only 8 points
        random_points(9, 1, seed=1)


def test_random_scalars_distinct():
    a = random_scalars(6, 9, 7)
    assert len(a) == 6
    assert a == random_scalars(6, 9, 7)


def test_point_set_round_trip(tmp_path):
    ps = generate(GeneratorSpec("random", n=8, denom=9, seed=3))
    path = tmp_path / "pts.txt"
    write_point_set(ps, path)
    back = read_point_set(path)
    assert back == ps
    assert back.provenance == ps.provenance


def test_point_set_format():
    text = """
# a comment line
-3/5 7   # trailing comment
0/4 2/4
"""
    ps = parse_point_set(text)
    assert list(ps) == [P(F(-3, 5), 7), P(0, F(1, 2))]
    with pytest.raises(FormatError):
        parse_point_set("1 2 3\n")
    with pytest.raises(FormatError):
        parse_point_set("1.5 2\n")
    with pytest.raises(FormatError):
        parse_point_set("1/0 2\n")
    with pytest.raises(FormatError):
        parse_point_set("a b\n")


def test_real_set_round_trip(tmp_path):
    path = tmp_path / "a.reals"
    a = RealSet([F(1, 3), -2, 5])
    write_real_set(a, path)
    assert read_real_set(path) == a
    with pytest.raises(FormatError):
        parse_point_set("1 2\n3\n")


def test_line_family_round_trip_4d_and_3d(tmp_path):
    rotated, _ = normalize_rotation(
        PointSet([P(1, 0), P(0, 1), P(1, 1), P(2, 1)])
    )
    family4 = build_family(rotated)
    text4 = render_line_family(family4)
    back4 = parse_line_family(text4)
    assert len(back4) == len(family4)
    for orig, parsed in zip(family4, back4):
        assert (orig.source, orig.target) == (parsed.source, parsed.target)
        assert orig.base == parsed.base and orig.dir == parsed.dir

    family3 = project_family(family4)
    text3 = render_line_family(family3)
    back3 = parse_line_family(text3)
    for orig, parsed in zip(family3, back3):
        assert orig.index == parsed.index
        assert (orig.base, orig.dir) == (parsed.base, parsed.dir)


def test_line_family_rejects_corrupt_records():
    good = render_line_family(
        build_family(normalize_rotation(PointSet([P(1, 0), P(0, 1)]))[0])
    )
    line = good.splitlines()[0]
    fields = line.split("|")
    corrupted = f"{fields[0]}| 9 9 9 9 |{fields[2]}"
    with pytest.raises(FormatError):
        parse_line_family(corrupted)
    with pytest.raises(FormatError):
        parse_line_family("1 0 2 0 | 1 0 0 1 | 0 0 0 1")  # collinear index pair
    with pytest.raises(FormatError):
        parse_line_family("1 0 | 1 0 0 1 | 0 0 0 1")


def test_atomic_write_leaves_no_temp_files(tmp_path):
    path = tmp_path / "out.pts"
    write_point_set(PointSet([P(1, 2)]), path)
    write_point_set(PointSet([P(2, 1)]), path)  # overwrite
    assert read_point_set(path) == PointSet([P(2, 1)])
    leftovers = [p for p in tmp_path.iterdir() if p.name != "out.pts"]
    assert leftovers == []
