"""Text formats and atomic file writing.

Point sets: one point per line, two whitespace-separated rationals, each `p`
or `p/q` with optional sign; `#` starts a comment anywhere in a line; blank
lines are ignored. Real sets: the same with one rational per line. Line
families: one record per line,

    a b c d | x1 x2 x3 x4 | d1 d2 d3 d4

with the source (a, b), the target (c, d), then the base point and direction
(three components each after projection). All writes go through a temp file
and rename so readers never see a partial file.
"""
from __future__ import annotations

import os
import re
import tempfile
from fractions import Fraction
from pathlib import Path

from .errors import FormatError
from .geom import Point2, PointSet, format_scalar
from .lines import Line3, LineFamily, TransformLine
from .sumproduct import RealSet

PROVENANCE_PREFIX = "# wedgelab-generator:"


def atomic_write_text(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=".wedgelab-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def _parse_fraction(token: str, where: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise FormatError(f"{where}: bad rational {token!r}")
    try:
        value = Fraction(token)
    except ZeroDivisionError as exc:
        raise FormatError(f"{where}: zero denominator in {token!r}") from exc
    return value


def _data_lines(text: str):
    """(line_number, payload) for nonblank non-comment content."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        payload = raw.split("#", 1)[0].strip()
        if payload:
            yield lineno, payload


def _read_provenance(text: str) -> str | None:
    for raw in text.splitlines():
        stripped = raw.strip()
        if stripped.startswith(PROVENANCE_PREFIX):
            return stripped[len(PROVENANCE_PREFIX):].strip() or None
    return None


def parse_point_set(text: str, where: str = "<string>") -> PointSet:
    points = []
    for lineno, payload in _data_lines(text):
        tokens = payload.split()
        if len(tokens) != 2:
            raise FormatError(
                f"{where}:{lineno}: expected two rationals, got {len(tokens)} tokens"
            )
        points.append(
            Point2(
                _parse_fraction(tokens[0], f"{where}:{lineno}"),
                _parse_fraction(tokens[1], f"{where}:{lineno}"),
            )
        )
    return PointSet(points, provenance=_read_provenance(text))


def read_point_set(path) -> PointSet:
    return parse_point_set(Path(path).read_text(), where=str(path))


def render_point_set(ps: PointSet) -> str:
    lines = []
    if ps.provenance:
        lines.append(f"{PROVENANCE_PREFIX} {ps.provenance}")
    for p in ps:
        lines.append(f"{format_scalar(p.x)} {format_scalar(p.y)}")
    return "\n".join(lines) + "\n"


def write_point_set(ps: PointSet, path) -> None:
    atomic_write_text(path, render_point_set(ps))


def parse_real_set(text: str, where: str = "<string>") -> RealSet:
    values = []
    for lineno, payload in _data_lines(text):
        tokens = payload.split()
        if len(tokens) != 1:
            raise FormatError(
                f"{where}:{lineno}: expected one rational, got {len(tokens)} tokens"
            )
        values.append(_parse_fraction(tokens[0], f"{where}:{lineno}"))
    return RealSet(values)


def read_real_set(path) -> RealSet:
    return parse_real_set(Path(path).read_text(), where=str(path))


def render_real_set(a: RealSet) -> str:
    return "\n".join(format_scalar(v) for v in a) + "\n"


def write_real_set(a: RealSet, path) -> None:
    atomic_write_text(path, render_real_set(a))


def _line_record(line) -> str:
    if isinstance(line, Line3):
        if line.index is None:
            raise FormatError("cannot export a 3D line without an index pair")
        src, tgt = line.index
    else:
        src, tgt = line.source, line.target
    head = " ".join(
        format_scalar(v) for v in (src.x, src.y, tgt.x, tgt.y)
    )
    base = " ".join(format_scalar(v) for v in line.base)
    direction = " ".join(format_scalar(v) for v in line.dir)
    return f"{head} | {base} | {direction}"


def render_line_family(family: LineFamily) -> str:
    return "\n".join(_line_record(line) for line in family.lines) + "\n"


def write_line_family(family: LineFamily, path) -> None:
    atomic_write_text(path, render_line_family(family))


def parse_line_family(text: str, where: str = "<string>") -> LineFamily:
    """Read an exported family back. 4D records are re-validated against the
    two defining identities (unit determinant, source mapped to target); a
    record that fails either is corrupt, not merely reparameterized."""
    from .lines import maps_source_to_target, on_quadric_check

    lines = []
    for lineno, payload in _data_lines(text):
        parts = [part.strip() for part in payload.split("|")]
        if len(parts) != 3:
            raise FormatError(f"{where}:{lineno}: expected three |-separated fields")
        loc = f"{where}:{lineno}"
        head = [_parse_fraction(tok, loc) for tok in parts[0].split()]
        base = [_parse_fraction(tok, loc) for tok in parts[1].split()]
        direction = [_parse_fraction(tok, loc) for tok in parts[2].split()]
        if len(head) != 4:
            raise FormatError(f"{loc}: index pair needs four rationals")
        if len(base) != len(direction) or len(base) not in (3, 4):
            raise FormatError(f"{loc}: base and direction must both have 3 or 4 entries")
        src = Point2(head[0], head[1])
        tgt = Point2(head[2], head[3])
        if src.x * tgt.y - src.y * tgt.x == 0:
            raise FormatError(f"{loc}: collinear index pair {src}, {tgt}")
        if len(base) == 4:
            line = TransformLine(
                source=src, target=tgt, base=tuple(base), dir=tuple(direction)
            )
            if not on_quadric_check(line).ok or not maps_source_to_target(line):
                raise FormatError(f"{loc}: record violates the line identities")
            lines.append(line)
        else:
            lines.append(Line3.from_base_dir(base, direction, index=(src, tgt)))
    return LineFamily(lines=tuple(lines))


def read_line_family(path) -> LineFamily:
    return parse_line_family(Path(path).read_text(), where=str(path))
