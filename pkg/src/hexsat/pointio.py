"""Reading and writing the shared points file format.

One point per line as two rationals "NUM/DEN NUM/DEN" (the /DEN part is
omitted when the denominator is 1, e.g. "3 -5/2").  Blank lines and lines
starting with '#' are ignored on input; writers may emit '#' comment lines.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .geometry import Point, point


def parse_points(text: str) -> list[Point]:
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(
                f"line {lineno}: expected two rationals, got {len(parts)} fields"
            )
        try:
            points.append(point(Fraction(parts[0]), Fraction(parts[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: bad rational ({exc})") from exc
    return points


def format_points(points: Sequence[Point], comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.extend(f"{p.x} {p.y}" for p in points)
    return "\n".join(lines) + "\n"


def read_points_file(path) -> list[Point]:
    return parse_points(Path(path).read_text(encoding="utf-8"))


def write_points_file(path, points: Sequence[Point], comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_points(points, comments), encoding="utf-8")
