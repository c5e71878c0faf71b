"""Exact plane-geometry primitives on rational coordinates.

Everything here is decided by signs of integer or rational determinants,
so there is no tolerance parameter anywhere: collinear means exactly
collinear, inside means exactly inside.  Coordinates are
``fractions.Fraction`` values; predicates never round.

The module provides two independent routes to triangle membership
(an orientation-sign test and a barycentric-coordinate solve) so that
one can cross-check the other, plus brute-force oracles for k-holes and
convex k-gons used to validate the CNF encoding at small n.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence


class Orientation(Enum):
    """Turn direction of an ordered point triple."""

    CCW = 1
    CW = -1
    COLLINEAR = 0

    def mirrored(self) -> "Orientation":
        """Swap CW and CCW; collinear stays collinear."""
        if self is Orientation.CCW:
            return Orientation.CW
        if self is Orientation.CW:
            return Orientation.CCW
        return Orientation.COLLINEAR


@dataclass(frozen=True)
class Point:
    """A point of the rational plane."""

    x: Fraction
    y: Fraction

    def __repr__(self) -> str:  # keeps test failures readable
        return f"({self.x}, {self.y})"


def point(x, y) -> Point:
    """Build a Point, coercing ints/strings/Fractions exactly."""
    return Point(Fraction(x), Fraction(y))


PointList = Sequence[Point]


def _sign(value) -> Orientation:
    if value > 0:
        return Orientation.CCW
    if value < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def sigma(p: Point, q: Point, r: Point) -> Orientation:
    """Triple orientation: sign of the homogeneous 3x3 determinant.

    CCW for a counterclockwise turn p->q->r, CW for clockwise,
    COLLINEAR when the three points lie on a common line.
    """
    cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return _sign(cross)


def sigma_det(p: Point, q: Point, r: Point) -> Fraction:
    """The determinant itself (twice the signed triangle area)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def slope(p: Point, q: Point) -> Fraction:
    """Exact slope of the line through p and q; requires distinct x."""
    if p.x == q.x:
        raise ValueError("slope undefined for points with equal x")
    return (q.y - p.y) / (q.x - p.x)


# ---------------------------------------------------------------------------
# Integer fast path.
#
# The heavy oracles below run on plain coordinate tuples: native ints when
# every coordinate is an integer (the common case for test data), otherwise
# Fractions.  Both support the same arithmetic, so the cross product code
# is shared; only the speed differs.
# ---------------------------------------------------------------------------

IntPoint = tuple[int, int]


def _coords(points: PointList) -> list[IntPoint]:
    if all(p.x.denominator == 1 and p.y.denominator == 1 for p in points):
        return [(int(p.x), int(p.y)) for p in points]
    return [(p.x, p.y) for p in points]


def _cross(o: IntPoint, a: IntPoint, b: IntPoint) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def sigma_table(points: PointList) -> dict[tuple[int, int, int], Orientation]:
    """Orientations of all index triples i<j<k, computed on scaled ints."""
    pts = _coords(points)
    table = {}
    for i, j, k in combinations(range(len(pts)), 3):
        table[(i, j, k)] = _sign(_cross(pts[i], pts[j], pts[k]))
    return table


def in_general_position(points: PointList) -> bool:
    """True iff no three distinct points of the list are collinear."""
    pts = _coords(points)
    for i, j, k in combinations(range(len(pts)), 3):
        if pts[i] == pts[j] or pts[i] == pts[k] or pts[j] == pts[k]:
            continue
        if _cross(pts[i], pts[j], pts[k]) == 0:
            return False
    return True


def _require_general_position(points: PointList, what: str) -> None:
    if not in_general_position(points):
        raise ValueError(f"{what}: points are not in general position")


# ---------------------------------------------------------------------------
# Triangle membership, two ways.
# ---------------------------------------------------------------------------


def pt_in_triangle_sigma(a: Point, p: Point, q: Point, r: Point) -> bool:
    """Strict interior membership via orientation signs.

    a lies strictly inside triangle pqr iff the three orientations
    sigma(p,q,a), sigma(p,a,r), sigma(a,q,r) all agree with sigma(p,q,r).
    Requires p, q, r in general position.
    """
    s = sigma(p, q, r)
    if s is Orientation.COLLINEAR:
        raise ValueError("degenerate triangle: p, q, r are collinear")
    return sigma(p, q, a) is s and sigma(p, a, r) is s and sigma(a, q, r) is s


def pt_in_triangle_hull(a: Point, p: Point, q: Point, r: Point) -> bool:
    """Closed membership: a is a convex combination of p, q, r.

    Solves a = l1*p + l2*q + l3*r, l1+l2+l3 = 1 exactly (Cramer's rule on
    rationals) and accepts iff all weights are >= 0.  Degenerate triangles
    (collinear or coincident vertices) fall back to segment membership.
    """
    d = sigma_det(p, q, r)
    if d != 0:
        l1 = sigma_det(a, q, r) / d
        l2 = sigma_det(p, a, r) / d
        l3 = sigma_det(p, q, a) / d
        return l1 >= 0 and l2 >= 0 and l3 >= 0
    return _on_degenerate_hull(a, (p, q, r))


def _on_degenerate_hull(a: Point, vertices: tuple[Point, ...]) -> bool:
    """Membership in the hull of collinear (or coincident) vertices."""
    distinct = []
    for v in vertices:
        if v not in distinct:
            distinct.append(v)
    if len(distinct) == 1:
        return a == distinct[0]
    u, v = distinct[0], distinct[1]
    if sigma(u, v, a) is not Orientation.COLLINEAR:
        return False
    # Parametrize along the dominant axis of the segment direction.
    key = (lambda w: w.x) if u.x != v.x else (lambda w: w.y)
    lo = min(key(w) for w in vertices)
    hi = max(key(w) for w in vertices)
    return lo <= key(a) <= hi


def convex_hull(points: PointList) -> list[Point]:
    """Convex hull vertices in counterclockwise order (monotone chain).

    Collinear points interior to an edge are dropped; fully collinear input
    yields the two extreme points, a single repeated point yields itself.
    """
    coords = _coords(points)
    order = sorted(range(len(points)), key=lambda i: coords[i])
    dedup = [i for k, i in enumerate(order) if k == 0 or coords[i] != coords[order[k - 1]]]
    if len(dedup) <= 1:
        return [points[i] for i in dedup]

    def chain(indices):
        out: list[int] = []
        for i in indices:
            while (
                len(out) >= 2
                and _cross(coords[out[-2]], coords[out[-1]], coords[i]) <= 0
            ):
                out.pop()
            out.append(i)
        return out

    lower = chain(dedup)
    upper = chain(reversed(dedup))
    ring = lower[:-1] + upper[:-1]
    if len(ring) < 2:  # all points collinear: keep the two extremes
        ring = [dedup[0], dedup[-1]]
    return [points[i] for i in ring]


def hull_membership(p: Point, points: PointList) -> bool:
    """Exact closed membership of p in the convex hull of the list.

    Decided by computing the hull once and testing p against every edge
    half-plane; degenerate hulls (segment, single point, empty set) are
    handled directly.  Equivalent to convex-combination feasibility.
    """
    if not points:
        return False
    hull = convex_hull(points)
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        return _on_degenerate_hull(p, (hull[0], hull[1]))
    coords = _coords(list(hull) + [p])
    pc = coords[-1]
    ring = coords[:-1]
    return all(
        _cross(ring[i], ring[(i + 1) % len(ring)], pc) >= 0
        for i in range(len(ring))
    )


# ---------------------------------------------------------------------------
# Emptiness and the k-gon / k-hole oracles.
# ---------------------------------------------------------------------------


def is_empty_triangle_for(a: Point, b: Point, c: Point, points: PointList) -> bool:
    """True iff no point of the list lies strictly inside triangle abc.

    Points equal to a, b or c never count as inside.
    """
    s = sigma(a, b, c)
    if s is Orientation.COLLINEAR:
        raise ValueError("degenerate triangle: a, b, c are collinear")
    for q in points:
        if q == a or q == b or q == c:
            continue
        if sigma(a, b, q) is s and sigma(a, q, c) is s and sigma(q, b, c) is s:
            return False
    return True


def _empty_triangle_table(pts: list[IntPoint]) -> dict[tuple[int, int, int], bool]:
    """For every index triple i<j<k: is triangle ijk empty in the set?"""
    n = len(pts)
    table = {}
    for i, j, k in combinations(range(n), 3):
        s = _sign(_cross(pts[i], pts[j], pts[k]))
        if s is Orientation.COLLINEAR:
            raise ValueError("points are not in general position")
        empty = True
        for m in range(n):
            if m == i or m == j or m == k:
                continue
            q = pts[m]
            if (
                _sign(_cross(pts[i], pts[j], q)) is s
                and _sign(_cross(pts[i], q, pts[k])) is s
                and _sign(_cross(q, pts[j], pts[k])) is s
            ):
                empty = False
                break
        table[(i, j, k)] = empty
    return table


def _first_subset_with(n: int, k: int, good) -> Optional[tuple[int, ...]]:
    """First k-subset of range(n) in lexicographic order passing `good`."""
    for subset in combinations(range(n), k):
        if good(subset):
            return subset
    return None


def has_empty_kgon(k: int, points: PointList) -> Optional[list[Point]]:
    """Find a k-hole: k points whose every induced triangle is empty.

    Returns the lexicographically first witness (by point indices) or None.
    All triangles of the witness being empty is equivalent to the subset
    being in convex position with an empty hull, which is what makes the
    triangle table sufficient.
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    _require_general_position(points, "has_empty_kgon")
    idx = _empty_kgon_indices(k, points)
    return None if idx is None else [points[i] for i in idx]


def _empty_kgon_indices(k: int, points: PointList) -> Optional[tuple[int, ...]]:
    table = _empty_triangle_table(_coords(points))
    return _kgon_indices_from_table(k, len(points), table)


def _kgon_indices_from_table(
    k: int, n: int, empty: dict[tuple[int, int, int], bool]
) -> Optional[tuple[int, ...]]:
    return _first_subset_with(
        n, k, lambda s: all(empty[t] for t in combinations(s, 3))
    )


def has_empty_kgon_table(
    k: int, n: int, table: dict[tuple[int, int, int], Orientation]
) -> bool:
    """k-hole existence decided purely from an orientation table.

    `table` maps every sorted index triple to its orientation; emptiness is
    derived from the table, so this works for configurations whose
    coordinates are expensive (e.g. after a projective transform).
    Assumes the underlying points are x-sorted with pairwise distinct x.
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    empty = {}
    for i, j, m in combinations(range(n), 3):
        s = table[(i, j, m)]
        good = True
        # x-sortedness confines interior candidates to indices between i and m
        for q in range(i + 1, m):
            if q == j:
                continue
            if q < j:
                inside = (
                    table[(i, q, j)] is s.mirrored()
                    and table[(i, q, m)] is s
                    and table[(q, j, m)] is s
                )
            else:
                inside = (
                    table[(i, j, q)] is s
                    and table[(i, q, m)] is s
                    and table[(j, q, m)] is s.mirrored()
                )
            if inside:
                good = False
                break
        empty[(i, j, m)] = good
    return _kgon_indices_from_table(k, n, empty) is not None


def convex_position(points: PointList) -> bool:
    """Every point lies outside the convex hull of the others."""
    for i, p in enumerate(points):
        rest = [q for j, q in enumerate(points) if j != i]
        if hull_membership(p, rest):
            return False
    return True


def has_convex_kgon(k: int, points: PointList) -> Optional[list[Point]]:
    """Find k points in convex position, ignoring emptiness.

    Returns the lexicographically first witness (by point indices) or None.
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    _require_general_position(points, "has_convex_kgon")
    n = len(points)
    pts = _coords(points)
    # closed containment table: contains[(i, (a,b,c))] would be huge as a
    # dict of tuples; store per-triple sets of strictly contained indices.
    inside: dict[tuple[int, int, int], set[int]] = {}
    for a, b, c in combinations(range(n), 3):
        s = _sign(_cross(pts[a], pts[b], pts[c]))
        members = set()
        for m in range(n):
            if m in (a, b, c):
                continue
            q = pts[m]
            if (
                _sign(_cross(pts[a], pts[b], q)) is s
                and _sign(_cross(pts[a], q, pts[c])) is s
                and _sign(_cross(q, pts[b], pts[c])) is s
            ):
                members.add(m)
        inside[(a, b, c)] = members

    def in_convex_position(subset: tuple[int, ...]) -> bool:
        # GP: hull membership of a vertex in the others reduces to strict
        # membership in some triangle of the others.
        for i in subset:
            others = tuple(j for j in subset if j != i)
            for t in combinations(others, 3):
                if i in inside[t]:
                    return False
        return True

    witness = _first_subset_with(n, k, in_convex_position)
    return None if witness is None else [points[i] for i in witness]


def find_empty_triangle(
    a: Point, b: Point, c: Point, points: PointList
) -> tuple[Point, Point, Point]:
    """Shrink triangle abc to an empty one by descending on the middle vertex.

    Returns (a, b', c) with sigma(a,b',c) = sigma(a,b,c), b' equal to b or
    strictly inside abc, and triangle ab'c empty with respect to the list.
    While some point lies strictly inside the current triangle, the middle
    vertex is replaced by the interior point of smallest index; nesting of
    the successive triangles guarantees at most len(points) steps.
    """
    if a not in points or b not in points or c not in points:
        raise ValueError("find_empty_triangle: a, b, c must belong to the list")
    _require_general_position(points, "find_empty_triangle")
    target = sigma(a, b, c)
    mid = b
    for _ in range(len(points) + 1):
        interior = [
            q
            for q in points
            if q != a and q != mid and q != c and pt_in_triangle_sigma(q, a, mid, c)
        ]
        if not interior:
            assert sigma(a, mid, c) is target
            return (a, mid, c)
        mid = min(interior, key=points.index)
    raise AssertionError("descent failed to terminate")  # unreachable


def check_split_hull(
    points: PointList, a: Point, b: Point, samples: PointList
) -> bool:
    """Hull-splitting property of a chord of a convex point set.

    With points in convex position and a, b among them, every sample inside
    hull(points) must lie in the hull of {x : sigma(a,b,x) != CCW} or in the
    hull of {x : sigma(a,b,x) != CW}.  Samples outside the hull are ignored.
    """
    if a not in points or b not in points:
        raise ValueError("check_split_hull: a and b must belong to the set")
    if not convex_position(points):
        raise ValueError("check_split_hull: points are not in convex position")
    side_cw = [x for x in points if sigma(a, b, x) is not Orientation.CCW]
    side_ccw = [x for x in points if sigma(a, b, x) is not Orientation.CW]
    for p in samples:
        if not hull_membership(p, points):
            continue
        if not (hull_membership(p, side_cw) or hull_membership(p, side_ccw)):
            return False
    return True


# ---------------------------------------------------------------------------
# Random configurations for tests and the self-test suite.
# ---------------------------------------------------------------------------


def random_general_position(
    rng: random.Random, n: int, bound: int = 10**6
) -> list[Point]:
    """n distinct integer-coordinate points with no collinear triple.

    Coordinates are uniform in [-bound, bound]; candidate points breaking
    general position are redrawn, so the result is deterministic in rng.
    """
    pts: list[IntPoint] = []
    while len(pts) < n:
        cand = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if cand in pts:
            continue
        if any(
            _cross(p, q, cand) == 0 for p, q in combinations(pts, 2)
        ):
            continue
        pts.append(cand)
    return [point(x, y) for x, y in pts]
