"""Seeded smoke suite behind the `selftest` CLI command.

Each check prints one PASS/FAIL line; the seed is echoed so failures are
reproducible.  This is a quick confidence run, not the full pytest suite.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from . import canon, encoder, witness
from .geometry import (
    Orientation,
    Point,
    has_empty_kgon,
    in_general_position,
    point,
    pt_in_triangle_hull,
    pt_in_triangle_sigma,
    random_general_position,
    sigma,
    slope,
)


def _check_sigma_laws(rng: random.Random, cases: int) -> bool:
    for _ in range(cases):
        p, q, r = random_general_position(rng, 3, 1000)
        s = sigma(p, q, r)
        if sigma(q, p, r) is not s.mirrored():
            return False
        if sigma(q, r, p) is not s or sigma(r, p, q) is not s:
            return False
        dx, dy = rng.randint(-999, 999), rng.randint(-999, 999)
        moved = [Point(v.x + dx, v.y + dy) for v in (p, q, r)]
        if sigma(*moved) is not s:
            return False
        mirrored = [Point(-v.x, v.y) for v in (p, q, r)]
        if sigma(*mirrored) is not s.mirrored():
            return False
    return True


def _check_slopes(rng: random.Random, cases: int) -> bool:
    for _ in range(cases):
        pts = sorted(random_general_position(rng, 3, 1000), key=lambda p: p.x)
        if len({p.x for p in pts}) < 3:
            continue
        p, q, r = pts
        ccw = sigma(p, q, r) is Orientation.CCW
        if ccw != (slope(p, q) < slope(p, r)):
            return False
        if ccw != (slope(p, r) < slope(q, r)):
            return False
    return True


def _check_triangle_equiv(rng: random.Random, cases: int) -> bool:
    for _ in range(cases):
        pts = random_general_position(rng, 4, 1000)
        a, p, q, r = pts
        if pt_in_triangle_sigma(a, p, q, r) != pt_in_triangle_hull(a, p, q, r):
            return False
    return True


def _check_canon(rng: random.Random, cases: int) -> bool:
    for _ in range(cases):
        n = rng.randint(3, 10)
        pts = random_general_position(rng, n, 10**4)
        cfg = canon.canonicalize(pts)
        if not canon.canonical_equiv_holds(pts, cfg):
            return False
        if n >= 4 and not canon.lex_condition_holds(list(cfg.points)):
            return False
        if not in_general_position(list(cfg.points)):
            return False
    return True


def _check_encoder_determinism(rng: random.Random, cases: int) -> bool:
    import tempfile
    from pathlib import Path

    for n in (6, 9):
        with tempfile.TemporaryDirectory() as td:
            paths = []
            for run in (1, 2):
                cnf, vm = encoder.encode_hole6(n)
                p = Path(td) / f"phi{n}_{run}.cnf"
                encoder.write_dimacs(cnf, vm, p, mode="hole6", n=n)
                paths.append(p.read_bytes())
            if paths[0] != paths[1]:
                return False
    return True


def _check_witness(rng: random.Random, cases: int) -> bool:
    found = 0
    attempts = 0
    while found < cases and attempts < 200:
        attempts += 1
        n = rng.randint(6, 9)
        pts = random_general_position(rng, n, 10**4)
        if has_empty_kgon(6, pts) is not None:
            continue
        cfg = canon.canonicalize(pts)
        cnf, vm = encoder.encode_hole6(n)
        tau = witness.build_tau(cfg, vm)
        if not witness.eval_cnf(cnf, tau, vm).satisfied:
            return False
        found += 1
    return found == cases


def run_selftest(seed: int = 0) -> int:
    """Run all suites; print one line per suite; return a process exit code."""
    rng = random.Random(seed)
    print(f"selftest seed={seed}")
    suites = [
        ("sigma laws (2000 cases)", _check_sigma_laws, 2000),
        ("slope-orientation equivalence (2000 cases)", _check_slopes, 2000),
        ("triangle membership equivalence (2000 cases)", _check_triangle_equiv, 2000),
        ("canonicalization invariants (60 sets)", _check_canon, 60),
        ("encoder determinism", _check_encoder_determinism, 1),
        ("witness soundness (8 hole-free sets)", _check_witness, 8),
    ]
    failures = 0
    for name, fn, cases in suites:
        ok = fn(rng, cases)
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += 0 if ok else 1
    return 0 if failures == 0 else 1
