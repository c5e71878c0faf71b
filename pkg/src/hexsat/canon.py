"""Symmetry-breaking canonicalization of general-position point lists.

A configuration is in canonical position when

* x-order: the x-coordinates strictly increase with the index,
* fan order: the first point sees every later pair counterclockwise,
  i.e. sigma(p1, pa, pb) = CCW whenever 1 < a < b,
* lex order: the left consecutive-triple orientation sequence compares
  lexicographically >= the right one (see lex_triples).

Every general-position list can be brought into this form by orientation-
preserving steps plus at most one mirror step, and the transformation is a
sigma-equivalence: it preserves all triple orientations up to relabeling
and one global parity flip.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .geometry import (
    Orientation,
    Point,
    PointList,
    point,
    sigma,
)


@dataclass(frozen=True)
class SigmaEquivalence:
    """An index bijection between two point lists preserving orientations.

    With parity False orientations match exactly; with parity True the
    image orientation is the mirror (CW and CCW swapped, collinear fixed).
    """

    mapping: tuple[int, ...]
    parity: bool


@dataclass(frozen=True)
class CanonicalConfig:
    """Result of canonicalize: points plus how they were obtained.

    permutation[j] is the index in the original input of the point that
    became output index j.  provenance lists the applied transforms in
    order; parity records whether a mirror step flipped all orientations.
    """

    points: tuple[Point, ...]
    parity: bool
    provenance: tuple[tuple, ...]
    permutation: tuple[int, ...]


def verify_sigma_equiv(source: PointList, target: PointList, parity: bool) -> bool:
    """Check the index-aligned sigma-equivalence of two point lists."""
    if len(source) != len(target):
        raise ValueError("verify_sigma_equiv: lists differ in length")
    for i, j, k in combinations(range(len(source)), 3):
        got = sigma(target[i], target[j], target[k])
        if parity:
            got = got.mirrored()
        if sigma(source[i], source[j], source[k]) is not got:
            return False
    return True


def distinct_x_shear(points: PointList) -> tuple[list[Point], Fraction]:
    """Shear (x, y) -> (x + eps*y, y) so that all x-coordinates differ.

    The shear has determinant 1, so it changes no orientation.  eps is 0
    when the x-coordinates are already distinct; otherwise it is chosen
    below every |dx/dy| of the pairs that could collide, which rules out
    every bad value exactly.
    """
    xs = [p.x for p in points]
    if len(set(xs)) == len(xs):
        return list(points), Fraction(0)
    bounds = [
        abs((p.x - q.x) / (p.y - q.y))
        for p, q in combinations(points, 2)
        if p.x != q.x and p.y != q.y
    ]
    eps = min(bounds) / 2 if bounds else Fraction(1)
    sheared = [Point(p.x + eps * p.y, p.y) for p in points]
    shifted_xs = [p.x for p in sheared]
    assert len(set(shifted_xs)) == len(shifted_xs), "shear failed to separate x"
    return sheared, eps


def lex_triples(n: int) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
    """The two consecutive-triple index sequences compared by the lex rule.

    Left runs (i, i+1, i+2) for i from ceil(n/2)-1 down to 2, right runs
    (j, j+1, j+2) for j from floor(n/2)+1 up to n-2; both have length
    max(0, ceil(n/2) - 2).  Indices are 1-based.
    """
    half_up = -(-n // 2)
    left = [(i, i + 1, i + 2) for i in range(half_up - 1, 1, -1)]
    right = [(j, j + 1, j + 2) for j in range(n // 2 + 1, n - 1)]
    assert len(left) == len(right)
    return left, right


def _consecutive_ccw(points: PointList, triple: tuple[int, int, int]) -> bool:
    i, j, k = triple
    return sigma(points[i - 1], points[j - 1], points[k - 1]) is Orientation.CCW


def lex_condition_holds(points: PointList) -> bool:
    """Evaluate the lex rule on an x-sorted general-position list, n >= 4.

    Both sequences are boolean tuples (True > False); equality counts as
    holding.
    """
    n = len(points)
    if n < 4:
        raise ValueError("lex condition needs at least 4 points")
    for a, b in zip(points, points[1:]):
        if a.x >= b.x:
            raise ValueError("lex condition requires strictly increasing x")
    left, right = lex_triples(n)
    lvals = [_consecutive_ccw(points, t) for t in left]
    rvals = [_consecutive_ccw(points, t) for t in right]
    return lvals >= rvals


def _fan_point(images: Sequence[Point]) -> Point:
    """A point left of and above all images, seeing all pairs CCW.

    x0 sits one unit left of the leftmost image; y0 is one unit above the
    maximum that any line through two images reaches at x0.  Strictly above
    all those lines means sigma(fan, u, v) = CCW for every image pair with
    x(u) < x(v), which is exactly the fan-order requirement.
    """
    x0 = min(p.x for p in images) - 1
    best = None
    for u, v in combinations(images, 2):
        value = u.y + (v.y - u.y) * (x0 - u.x) / (v.x - u.x)
        if best is None or value > best:
            best = value
    y0 = (best if best is not None else max(p.y for p in images)) + 1
    return Point(x0, y0)


def _refan(points: PointList, base_perm: Sequence[int]) -> tuple[list[Point], list[int], list[tuple]]:
    """Steps 2-5 of the pipeline: translate, project, reinsert, relabel.

    points must have pairwise distinct x.  Returns the canonical points,
    the permutation into `base_perm` indices, and provenance entries.
    """
    m = min(range(len(points)), key=lambda i: points[i].x)
    origin = points[m]
    shifted = [Point(p.x - origin.x, p.y - origin.y) for p in points]
    assert all(p.x > 0 for i, p in enumerate(shifted) if i != m)
    images = []
    for i, p in enumerate(shifted):
        if i == m:
            continue
        images.append((i, Point(p.y / p.x, 1 / p.x)))
    images.sort(key=lambda ip: ip[1].x)
    sorted_pts = [img for _, img in images]
    fan = _fan_point(sorted_pts) if sorted_pts else point(0, 0)
    out_points = [fan] + sorted_pts
    perm = [base_perm[m]] + [base_perm[i] for i, _ in images]
    provenance = [
        ("translate", (-origin.x, -origin.y)),
        ("projective", "(x, y) -> (y/x, 1/x)"),
        ("reinsert", (fan.x, fan.y)),
        ("relabel", tuple(perm)),
    ]
    return out_points, perm, provenance


def _mirror_canonical(points: Sequence[Point], perm: Sequence[int]) -> tuple[list[Point], list[int], tuple]:
    """Mirror a canonical configuration, flipping the lex comparison.

    Points 2..n are reflected about the y-axis and relabeled in reverse;
    a fresh fan point is inserted for index 1.  On the orientation table
    this reverses and parity-flips everything, which swaps the two lex
    sequences exactly, so if the lex rule failed before it holds after.
    """
    n = len(points)
    reflected = [Point(-p.x, p.y) for p in points[1:]]
    reflected.reverse()
    fan = _fan_point(reflected)
    out_points = [fan] + reflected
    out_perm = [perm[0]] + [perm[n - j] for j in range(1, n)]
    return out_points, out_perm, ("mirror", True)


def _check_canonical(points: Sequence[Point]) -> None:
    for a, b in zip(points, points[1:]):
        assert a.x < b.x, "canonicalize produced unsorted x"
    fan = points[0]
    for a, b in combinations(points[1:], 2):
        assert sigma(fan, a, b) is Orientation.CCW, "fan order violated"


def canonicalize(points: PointList) -> CanonicalConfig:
    """Bring a general-position list of >= 3 points into canonical position.

    Pipeline: shear to distinct x; translate the leftmost point to the
    origin; map every other point by (x, y) -> (y/x, 1/x), which preserves
    orientations among them and turns slope order around the leftmost point
    into x order; reinsert the leftmost point as a far upper-left fan
    point; relabel by increasing x.  If the lex rule fails on the result,
    one mirror step (parity flip) establishes it.
    """
    n = len(points)
    if n < 3:
        raise ValueError("canonicalize needs at least 3 points")
    for i, j, k in combinations(range(n), 3):
        if sigma(points[i], points[j], points[k]) is Orientation.COLLINEAR:
            raise ValueError(
                f"canonicalize: points {i}, {j}, {k} are collinear"
            )

    sheared, eps = distinct_x_shear(points)
    provenance: list[tuple] = [("shear", eps)]
    out_points, perm, steps = _refan(sheared, list(range(n)))
    provenance.extend(steps)

    parity = False
    if n >= 4 and not lex_condition_holds(out_points):
        out_points, perm, mirror_step = _mirror_canonical(out_points, perm)
        parity = True
        provenance.append(mirror_step)
        provenance.append(("relabel", tuple(perm)))
        assert n < 4 or lex_condition_holds(out_points)

    _check_canonical(out_points)
    return CanonicalConfig(
        points=tuple(out_points),
        parity=parity,
        provenance=tuple(provenance),
        permutation=tuple(perm),
    )


def canonical_equiv_holds(original: PointList, config: CanonicalConfig) -> bool:
    """Does the recorded permutation + parity map the input onto the output?"""
    reordered = [original[i] for i in config.permutation]
    return verify_sigma_equiv(reordered, list(config.points), config.parity)
