"""CNF construction for the 6-hole and convex-6-gon searches.

The main formula over n x-sorted points in canonical position uses five
variable kinds besides the orientation variables:

* O (a,b,c): sigma(pa, pb, pc) is counterclockwise, for 2 <= a < b < c <= n.
  Triples containing point 1 are omitted because the fan order fixes them.
* C (i; a,b,c): point i lies strictly inside triangle abc; x-order limits
  the candidates to a < i < c, i != b.
* H (a,b,c): triangle abc contains no other point of the configuration.
* U4/V4 (a,c,d): some b with a < b < c makes a,b,c,d a clockwise
  (counterclockwise) arc of four points.
* U5 (a,d,e): some c with a+1 < c < d extends a clockwise 4-arc ending at
  d by the edge to e, with triangle (a,c,e) empty.

Sixteen clause families tie these together; the last five forbid point
patterns that force an empty convex hexagon.  Clause and literal order is
deterministic, so identical inputs give byte-identical DIMACS output.

A separate naive encoder cross-validates small k-hole constants with a
self-contained formula over all n indices (no canonicity), full if-and-
only-if definitions and the local orientation-consistency axioms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, NamedTuple, Optional, Sequence

from .canon import lex_triples

TOOL_VERSION = "hexsat 0.1.0"

FAMILY_ORDER = (
    "inside-low",
    "inside-high",
    "hole-def",
    "trans-ccw",
    "trans-cw",
    "lex",
    "cap4-intro",
    "cup4-intro",
    "cap5-intro",
    "cap4-cw",
    "cup4-ccw",
    "no-hex-cap5-pt",
    "no-hex-cap5-ext",
    "no-hex-cap-cup",
    "no-hex-cup-cap",
    "no-hex-cup-fan",
)


class StructuredVar(NamedTuple):
    kind: str
    indices: tuple


@dataclass
class Cnf:
    """A clause list with a parallel record of clause origins.

    families[i] = (family tag, instantiation tuple) for clauses[i]; files
    read back from disk carry no family information (families is None).
    """

    num_vars: int
    clauses: list[list[int]]
    families: Optional[list[tuple[str, tuple]]] = None

    def family_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for tag, _ in self.families or ():
            counts[tag] = counts.get(tag, 0) + 1
        return counts


class VarMap:
    """Bijection between structured variables and DIMACS integers 1..count."""

    def __init__(self, variables: Iterable[StructuredVar]):
        self._vars: list[StructuredVar] = list(variables)
        self._forward: dict[StructuredVar, int] = {
            v: i for i, v in enumerate(self._vars, start=1)
        }
        if len(self._forward) != len(self._vars):
            raise ValueError("duplicate structured variable in allocation")

    @property
    def count(self) -> int:
        return len(self._vars)

    def id(self, kind: str, *indices) -> int:
        return self._forward[StructuredVar(kind, tuple(indices))]

    def var(self, vid: int) -> StructuredVar:
        if not 1 <= vid <= len(self._vars):
            raise KeyError(f"variable id {vid} out of range")
        return self._vars[vid - 1]

    def __contains__(self, var: StructuredVar) -> bool:
        return var in self._forward

    def variables(self) -> Sequence[StructuredVar]:
        return tuple(self._vars)

    def of_kind(self, kind: str) -> list[StructuredVar]:
        return [v for v in self._vars if v.kind == kind]


def _o_triples(n: int, first: int = 2):
    return combinations(range(first, n + 1), 3)


def _c_tuples(n: int, first: int = 2):
    tuples = []
    for a, b, c in _o_triples(n, first):
        for i in range(a + 1, c):
            if i != b:
                tuples.append((i, a, b, c))
    tuples.sort()
    return tuples


def lex_aux_count(n: int) -> int:
    m = len(lex_triples(n)[0])
    return max(0, m - 1)


def allocate_vars(n: int) -> VarMap:
    """Variable allocation for the main formula; kind-major, index-lex."""
    if n < 4:
        raise ValueError("allocate_vars needs n >= 4")
    variables: list[StructuredVar] = []
    variables += [StructuredVar("O", t) for t in _o_triples(n)]
    variables += [StructuredVar("C", t) for t in _c_tuples(n)]
    variables += [StructuredVar("H", t) for t in _o_triples(n)]
    variables += [
        StructuredVar("U4", (a, c, d))
        for a, c, d in _o_triples(n)
        if a + 1 < c
    ]
    variables += [
        StructuredVar("V4", (a, c, d))
        for a, c, d in _o_triples(n)
        if a + 1 < c
    ]
    variables += [
        StructuredVar("U5", (a, d, e))
        for a, d, e in _o_triples(n)
        if a + 2 < d
    ]
    variables += [
        StructuredVar("AUX", ("LEX", k)) for k in range(1, lex_aux_count(n) + 1)
    ]
    return VarMap(variables)


def encode_lex(
    left: Sequence[int], right: Sequence[int], varmap: VarMap
) -> list[list[int]]:
    """Clauses forcing the left variable tuple >=_lex the right one.

    Uses the varmap's AUX LEX prefix-equality chain: position k compares
    only when the first k-1 positions are equal, which costs one comparison
    clause per position and two chain clauses per equality variable.
    """
    if len(left) != len(right):
        raise ValueError("encode_lex: sequences differ in length")
    m = len(left)
    clauses: list[list[int]] = []
    if m == 0:
        return clauses
    aux = [varmap.id("AUX", "LEX", k) for k in range(1, m)]
    clauses.append([left[0], -right[0]])
    for k in range(1, m):
        e_prev = aux[k - 1]
        clauses.append([-e_prev, left[k], -right[k]])
    for j in range(m - 1):
        e_j = aux[j]
        chain = [] if j == 0 else [-aux[j - 1]]
        clauses.append(chain + [-left[j], -right[j], e_j])
        clauses.append(chain + [left[j], right[j], e_j])
    return clauses


def encode_hole6(n: int) -> tuple[Cnf, VarMap]:
    """The full 6-hole formula for n points in canonical position."""
    if n < 5:
        raise ValueError("encode_hole6 needs n >= 5")
    vm = allocate_vars(n)
    clauses: list[list[int]] = []
    families: list[tuple[str, tuple]] = []

    def emit(tag: str, params: tuple, clause: list[int]) -> None:
        clauses.append(clause)
        families.append((tag, params))

    o = lambda a, b, c: vm.id("O", a, b, c)
    h = lambda a, b, c: vm.id("H", a, b, c)
    c_ = lambda i, a, b, c: vm.id("C", i, a, b, c)
    u4 = lambda a, c, d: vm.id("U4", a, c, d)
    v4 = lambda a, c, d: vm.id("V4", a, c, d)
    u5 = lambda a, d, e: vm.id("U5", a, d, e)

    # containment definitions, candidate below / above the middle vertex
    for a, i, b, c in combinations(range(2, n + 1), 4):
        cid = c_(i, a, b, c)
        emit("inside-low", (i, a, b, c), [-cid, -o(a, b, c), o(a, i, c)])
        emit("inside-low", (i, a, b, c), [-cid, o(a, b, c), -o(a, i, c)])
        emit("inside-low", (i, a, b, c), [-cid, -o(a, b, c), -o(a, i, b)])
        emit("inside-low", (i, a, b, c), [-cid, o(a, b, c), o(a, i, b)])
    for a, b, i, c in combinations(range(2, n + 1), 4):
        cid = c_(i, a, b, c)
        emit("inside-high", (i, a, b, c), [-cid, -o(a, b, c), o(a, i, c)])
        emit("inside-high", (i, a, b, c), [-cid, o(a, b, c), -o(a, i, c)])
        emit("inside-high", (i, a, b, c), [-cid, -o(a, b, c), -o(b, i, c)])
        emit("inside-high", (i, a, b, c), [-cid, o(a, b, c), o(b, i, c)])

    # a triangle with no contained candidate is a hole
    for a, b, c in _o_triples(n):
        clause = [c_(i, a, b, c) for i in range(a + 1, c) if i != b]
        clause.append(h(a, b, c))
        emit("hole-def", (a, b, c), clause)

    # orientation transitivity along a shared first point
    for a, b, c, d in combinations(range(2, n + 1), 4):
        emit("trans-ccw", (a, b, c, d), [-o(a, b, c), -o(a, c, d), o(a, b, d)])
    for a, b, c, d in combinations(range(2, n + 1), 4):
        emit("trans-cw", (a, b, c, d), [o(a, b, c), o(a, c, d), -o(a, b, d)])

    # lexicographic symmetry breaking on consecutive-triple orientations
    left_t, right_t = lex_triples(n)
    left_ids = [o(*t) for t in left_t]
    right_ids = [o(*t) for t in right_t]
    for clause in encode_lex(left_ids, right_ids, vm):
        emit("lex", (), clause)

    # arc variable introductions
    for a, b, c, d in combinations(range(2, n + 1), 4):
        emit("cap4-intro", (a, b, c, d), [o(a, b, c), o(b, c, d), u4(a, c, d)])
    for a, b, c, d in combinations(range(2, n + 1), 4):
        emit("cup4-intro", (a, b, c, d), [-o(a, b, c), -o(b, c, d), v4(a, c, d)])
    for a, b, c, d in combinations(range(2, n + 1), 4):
        if a + 1 < b:
            emit(
                "cap5-intro",
                (a, b, c, d),
                [-u4(a, b, c), o(b, c, d), -h(a, b, d), u5(a, c, d)],
            )

    # arc variables constrain the long orientation
    for a, c, d in _o_triples(n):
        if a + 1 < c:
            emit("cap4-cw", (a, c, d), [-u4(a, c, d), -o(a, c, d)])
    for a, c, d in _o_triples(n):
        if a + 1 < c:
            emit("cup4-ccw", (a, c, d), [-v4(a, c, d), o(a, c, d)])

    # forbidden patterns, each of which forces an empty convex hexagon
    for a, d, e in _o_triples(n):
        if a + 2 < d:
            for p in range(a + 1, e):
                emit("no-hex-cap5-pt", (a, d, e, p), [-u5(a, d, e), -o(a, p, e)])
    for a, d, e, f in combinations(range(2, n + 1), 4):
        if a + 2 < d:
            emit("no-hex-cap5-ext", (a, d, e, f), [-u5(a, d, e), o(d, e, f)])
    for a, c, cp, d in combinations(range(2, n + 1), 4):
        if a + 1 < c:
            emit(
                "no-hex-cap-cup",
                (a, c, cp, d),
                [-u4(a, c, d), -v4(a, cp, d), -h(a, c, cp)],
            )
    for a, cp, c, d in combinations(range(2, n + 1), 4):
        if a + 1 < cp:
            emit(
                "no-hex-cup-cap",
                (a, cp, c, d),
                [-u4(a, c, d), -v4(a, cp, d), -h(a, cp, c)],
            )
    for a, c, d, e in combinations(range(2, n + 1), 4):
        if a + 1 < c:
            emit(
                "no-hex-cup-fan",
                (a, c, d, e),
                [-v4(a, c, d), -o(c, d, e), -h(a, c, e)],
            )

    return Cnf(vm.count, clauses, families), vm


def encode_gon6(n: int) -> tuple[Cnf, VarMap]:
    """6-gon variant: the 6-hole formula plus every hole variable asserted.

    Forcing all H variables true trivializes the emptiness side, leaving
    only the convexity structure, so unsatisfiability rules out point sets
    without a convex hexagon.
    """
    cnf, vm = encode_hole6(n)
    for var in vm.of_kind("H"):
        cnf.clauses.append([vm.id("H", *var.indices)])
        cnf.families.append(("assert-hole", var.indices))
    return cnf, vm


# ---------------------------------------------------------------------------
# Naive cross-validation encoding.
# ---------------------------------------------------------------------------


def allocate_naive_vars(n: int) -> VarMap:
    """O/C/H variables over all indices 1..n, no canonicity assumed."""
    if n < 3:
        raise ValueError("allocate_naive_vars needs n >= 3")
    variables: list[StructuredVar] = []
    variables += [StructuredVar("O", t) for t in _o_triples(n, first=1)]
    variables += [StructuredVar("C", t) for t in _c_tuples(n, first=1)]
    variables += [StructuredVar("H", t) for t in _o_triples(n, first=1)]
    return VarMap(variables)


def encode_naive_hole(k: int, n: int) -> tuple[Cnf, VarMap]:
    """Self-contained k-hole formula over n x-sorted points.

    Containment and hole variables are defined by full biconditionals and
    the orientation variables obey the local consistency axioms (within
    every four indices, the four triple orientations in lexicographic
    order change sign at most once).  One clause per k-subset then forbids
    all of its triangles being simultaneously empty, which by the
    triangles-only characterization forbids a k-hole.  Unsatisfiability
    therefore shows that every n-point set in general position contains a
    k-hole.
    """
    if k not in (3, 4, 5, 6):
        raise ValueError("encode_naive_hole supports k in {3, 4, 5, 6}")
    if n < k:
        raise ValueError("encode_naive_hole needs n >= k")
    vm = allocate_naive_vars(n)
    clauses: list[list[int]] = []
    families: list[tuple[str, tuple]] = []

    def emit(tag: str, params: tuple, clause: list[int]) -> None:
        clauses.append(clause)
        families.append((tag, params))

    o = lambda a, b, c: vm.id("O", a, b, c)
    h = lambda a, b, c: vm.id("H", a, b, c)
    c_ = lambda i, a, b, c: vm.id("C", i, a, b, c)

    # c <-> (point i strictly inside triangle abc), i below the middle vertex:
    # the three sign conditions are o(a,i,b) != o(a,b,c), o(a,i,c) == o(a,b,c),
    # o(i,b,c) == o(a,b,c).
    for a, i, b, c in combinations(range(1, n + 1), 4):
        cid = c_(i, a, b, c)
        t = o(a, b, c)
        emit("inside-low-iff", (i, a, b, c), [-cid, -t, -o(a, i, b)])
        emit("inside-low-iff", (i, a, b, c), [-cid, t, o(a, i, b)])
        emit("inside-low-iff", (i, a, b, c), [-cid, -t, o(a, i, c)])
        emit("inside-low-iff", (i, a, b, c), [-cid, t, -o(a, i, c)])
        emit("inside-low-iff", (i, a, b, c), [-cid, -t, o(i, b, c)])
        emit("inside-low-iff", (i, a, b, c), [-cid, t, -o(i, b, c)])
        emit(
            "inside-low-iff",
            (i, a, b, c),
            [cid, -t, o(a, i, b), -o(a, i, c), -o(i, b, c)],
        )
        emit(
            "inside-low-iff",
            (i, a, b, c),
            [cid, t, -o(a, i, b), o(a, i, c), o(i, b, c)],
        )
    # i above the middle vertex: conditions o(a,b,i) == o(a,b,c),
    # o(a,i,c) == o(a,b,c), o(b,i,c) != o(a,b,c).
    for a, b, i, c in combinations(range(1, n + 1), 4):
        cid = c_(i, a, b, c)
        t = o(a, b, c)
        emit("inside-high-iff", (i, a, b, c), [-cid, -t, o(a, b, i)])
        emit("inside-high-iff", (i, a, b, c), [-cid, t, -o(a, b, i)])
        emit("inside-high-iff", (i, a, b, c), [-cid, -t, o(a, i, c)])
        emit("inside-high-iff", (i, a, b, c), [-cid, t, -o(a, i, c)])
        emit("inside-high-iff", (i, a, b, c), [-cid, -t, -o(b, i, c)])
        emit("inside-high-iff", (i, a, b, c), [-cid, t, o(b, i, c)])
        emit(
            "inside-high-iff",
            (i, a, b, c),
            [cid, -t, -o(a, b, i), -o(a, i, c), o(b, i, c)],
        )
        emit(
            "inside-high-iff",
            (i, a, b, c),
            [cid, t, o(a, b, i), o(a, i, c), -o(b, i, c)],
        )

    # h <-> no candidate inside
    for a, b, c in _o_triples(n, first=1):
        cands = [c_(i, a, b, c) for i in range(a + 1, c) if i != b]
        for cid in cands:
            emit("hole-iff", (a, b, c), [-h(a, b, c), -cid])
        emit("hole-iff", (a, b, c), cands + [h(a, b, c)])

    # local orientation consistency: within each 4-tuple, the triple
    # orientations t1..t4 in lex order never follow + - + or - + -.
    for quad in combinations(range(1, n + 1), 4):
        triples = list(combinations(quad, 3))
        for t1, t2, t3 in combinations(triples, 3):
            emit("signotope", quad, [o(*t1), -o(*t2), o(*t3)])
            emit("signotope", quad, [-o(*t1), o(*t2), -o(*t3)])

    # no k-subset may have all its triangles empty
    for subset in combinations(range(1, n + 1), k):
        emit(
            "forbid-hole-subset",
            subset,
            [-h(*t) for t in combinations(subset, 3)],
        )

    return Cnf(vm.count, clauses, families), vm


# ---------------------------------------------------------------------------
# DIMACS and variable-map files.
# ---------------------------------------------------------------------------


def write_dimacs(
    cnf: Cnf,
    varmap: VarMap,
    destination,
    mode: str = "unspecified",
    n: Optional[int] = None,
) -> Path:
    """Write DIMACS CNF plus the <basename>.varmap sidecar.

    The output is deterministic: comments carry only the mode, n and tool
    version.  Returns the CNF path.
    """
    path = Path(destination)
    lines = [
        f"c {TOOL_VERSION}",
        f"c mode: {mode}",
        f"c n: {'-' if n is None else n}",
        f"p cnf {cnf.num_vars} {len(cnf.clauses)}",
    ]
    lines.extend(" ".join(str(l) for l in clause) + " 0" for clause in cnf.clauses)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    write_varmap(varmap, path.with_suffix(".varmap"))
    return path


def write_varmap(varmap: VarMap, destination) -> Path:
    path = Path(destination)
    lines = []
    for vid in range(1, varmap.count + 1):
        var = varmap.var(vid)
        lines.append(" ".join([str(vid), var.kind, *map(str, var.indices)]))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def read_dimacs(path) -> Cnf:
    """Parse a DIMACS CNF file back into a Cnf (family data is not stored)."""
    num_vars = None
    num_clauses = None
    clauses: list[list[int]] = []
    literals: list[int] = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(literals)
                literals = []
            else:
                literals.append(lit)
    if literals:
        raise ValueError("unterminated final clause")
    if num_vars is None:
        raise ValueError("missing DIMACS header")
    if num_clauses != len(clauses):
        raise ValueError(
            f"header declares {num_clauses} clauses, file has {len(clauses)}"
        )
    return Cnf(num_vars, clauses, None)


def read_varmap(path) -> VarMap:
    variables = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        vid, kind, indices = int(fields[0]), fields[1], fields[2:]
        parsed = tuple(int(f) if f.lstrip("-").isdigit() else f for f in indices)
        if vid != len(variables) + 1:
            raise ValueError(f"variable ids not contiguous at {line!r}")
        variables.append(StructuredVar(kind, parsed))
    return VarMap(variables)
