"""Intended models: from a concrete point list to a propositional assignment.

Given a canonical configuration, every structured variable has a truth
value determined by exact geometry (orientation signs, strict triangle
containment, triangle emptiness, arc existence).  Evaluating the encoding
under this assignment is the encoding-soundness test bench: a falsified
clause localizes a disagreement between the clause semantics and the
geometry, so reports carry the recomputed geometric facts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .canon import lex_triples
from .encoder import Cnf, StructuredVar, VarMap
from .geometry import Orientation, Point, PointList, sigma

CCW = Orientation.CCW
CW = Orientation.CW


@dataclass
class Assignment:
    """Total truth assignment over a varmap's structured variables."""

    values: dict[StructuredVar, bool]

    def of(self, var: StructuredVar) -> bool:
        return self.values[var]

    def lit_true(self, lit: int, varmap: VarMap) -> bool:
        value = self.values[varmap.var(abs(lit))]
        return value if lit > 0 else not value

    def as_model(self, varmap: VarMap) -> list[int]:
        """Signed-integer model in variable-id order."""
        out = []
        for vid in range(1, varmap.count + 1):
            out.append(vid if self.values[varmap.var(vid)] else -vid)
        return out


def _validate_canonical(points: PointList) -> None:
    for a, b in zip(points, points[1:]):
        if a.x >= b.x:
            raise ValueError("build_tau: x-order violated, canonicalize first")
    fan = points[0]
    for a, b in combinations(points[1:], 2):
        if sigma(fan, a, b) is not CCW:
            raise ValueError("build_tau: fan order violated, canonicalize first")


def build_tau(config, varmap: VarMap, force_holes: bool = False) -> Assignment:
    """Evaluate every structured variable of the varmap on a configuration.

    `config` is a CanonicalConfig or a plain canonical point list whose
    length matches the varmap's n.  With force_holes every hole variable is
    set true and the arc-with-hole variables are rebuilt accordingly (the
    convex-6-gon variant of the intended model).
    """
    points = list(getattr(config, "points", config))
    _validate_canonical(points)
    n = len(points)
    sig = {}
    for i, j, k in combinations(range(1, n + 1), 3):
        sig[(i, j, k)] = sigma(points[i - 1], points[j - 1], points[k - 1])
        if sig[(i, j, k)] is Orientation.COLLINEAR:
            raise ValueError("build_tau: input not in general position")

    def inside(i: int, a: int, b: int, c: int) -> bool:
        # strict containment of point i in triangle abc, a < i < c, i != b
        s = sig[(a, b, c)]
        if i < b:
            return (
                sig[(a, i, b)] is s.mirrored()
                and sig[(a, i, c)] is s
                and sig[(i, b, c)] is s
            )
        return (
            sig[(a, b, i)] is s
            and sig[(a, i, c)] is s
            and sig[(b, i, c)] is s.mirrored()
        )

    def hole(a: int, b: int, c: int) -> bool:
        # x-order confines interior candidates to indices between a and c
        return not any(
            inside(i, a, b, c) for i in range(a + 1, c) if i != b
        )

    values: dict[StructuredVar, bool] = {}
    holes: dict[tuple[int, int, int], bool] = {}
    caps: dict[tuple[int, int, int], bool] = {}
    for var in varmap.variables():
        kind, idx = var.kind, var.indices
        if kind == "O":
            values[var] = sig[idx] is CCW
        elif kind == "C":
            i, a, b, c = idx
            values[var] = inside(i, a, b, c)
        elif kind == "H":
            result = hole(*idx)
            holes[idx] = result
            values[var] = True if force_holes else result
        elif kind == "U4":
            a, c, d = idx
            values[var] = any(
                sig[(a, b, c)] is CW and sig[(b, c, d)] is CW
                for b in range(a + 1, c)
            )
            caps[idx] = values[var]
        elif kind == "V4":
            a, c, d = idx
            values[var] = any(
                sig[(a, b, c)] is CCW and sig[(b, c, d)] is CCW
                for b in range(a + 1, c)
            )
        elif kind == "U5":
            a, d, e = idx
            values[var] = any(
                caps[(a, c, d)]
                and sig[(c, d, e)] is CW
                and (True if force_holes else holes[(a, c, e)])
                for c in range(a + 2, d)
            )
        elif kind == "AUX":
            continue  # propagated below
        else:
            raise ValueError(f"unknown variable kind {kind!r}")

    left_t, right_t = lex_triples(n)
    prefix_equal = True
    for k in range(1, len(left_t)):
        lval = sig[left_t[k - 1]] is CCW
        rval = sig[right_t[k - 1]] is CCW
        prefix_equal = prefix_equal and (lval == rval)
        var = StructuredVar("AUX", ("LEX", k))
        if var in varmap:
            values[var] = prefix_equal

    missing = [v for v in varmap.variables() if v not in values]
    if missing:
        raise ValueError(f"assignment incomplete, first missing: {missing[0]}")
    return Assignment(values)


@dataclass
class ClauseReport:
    """Why one clause is falsified, with recomputed geometry per literal."""

    index: int
    family: Optional[str]
    params: tuple
    literals: list[int]
    detail: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        head = self.family or "clause"
        lits = " ".join(str(l) for l in self.literals)
        body = "; ".join(self.detail)
        return f"falsified {head}{self.params} at clause {self.index}: [{lits}] {body}"


@dataclass
class EvalResult:
    satisfied: bool
    report: Optional[ClauseReport] = None


def _literal_detail(
    lit: int, varmap: VarMap, tau: Assignment, points: Optional[PointList]
) -> str:
    var = varmap.var(abs(lit))
    truth = tau.lit_true(lit, varmap)
    base = f"{'-' if lit < 0 else ''}{var.kind}{var.indices}={truth}"
    if points is None or var.kind in ("AUX",):
        return base
    if var.kind == "O":
        a, b, c = var.indices
        s = sigma(points[a - 1], points[b - 1], points[c - 1])
        return f"{base} [sigma={s.name}]"
    return base


def _clause_report(
    cnf: Cnf,
    tau: Assignment,
    varmap: VarMap,
    index: int,
    points: Optional[PointList],
) -> ClauseReport:
    family, params = (None, ())
    if cnf.families is not None:
        family, params = cnf.families[index]
    clause = cnf.clauses[index]
    detail = [_literal_detail(l, varmap, tau, points) for l in clause]
    return ClauseReport(index, family, params, list(clause), detail)


def eval_cnf(
    cnf: Cnf,
    tau: Assignment,
    varmap: VarMap,
    points: Optional[PointList] = None,
) -> EvalResult:
    """Check every clause under tau; report the first falsified one."""
    for idx, clause in enumerate(cnf.clauses):
        if not any(tau.lit_true(l, varmap) for l in clause):
            return EvalResult(False, _clause_report(cnf, tau, varmap, idx, points))
    return EvalResult(True)


def falsified_clauses(
    cnf: Cnf,
    tau: Assignment,
    varmap: VarMap,
    points: Optional[PointList] = None,
) -> list[ClauseReport]:
    """All falsified clauses, for report files and family-level tests."""
    reports = []
    for idx, clause in enumerate(cnf.clauses):
        if not any(tau.lit_true(l, varmap) for l in clause):
            reports.append(_clause_report(cnf, tau, varmap, idx, points))
    return reports


def decode_model(model: Sequence[int], varmap: VarMap) -> dict[tuple[int, int, int], int]:
    """Orientation table {(a,b,c) -> +1/-1} from a solver model's O variables.

    The table is purely combinatorial; no claim is made that actual points
    realize it.
    """
    truth: dict[int, bool] = {}
    for lit in model:
        if lit != 0:
            truth[abs(lit)] = lit > 0
    table = {}
    for vid in range(1, varmap.count + 1):
        var = varmap.var(vid)
        if vid not in truth:
            raise ValueError(f"model does not cover variable {vid} ({var})")
        if var.kind == "O":
            table[var.indices] = 1 if truth[vid] else -1
    return table
