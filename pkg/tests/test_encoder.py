import itertools
from pathlib import Path

import pytest

from hexsat.canon import lex_triples
from hexsat.encoder import (
    Cnf,
    StructuredVar,
    VarMap,
    allocate_naive_vars,
    allocate_vars,
    encode_gon6,
    encode_hole6,
    encode_lex,
    encode_naive_hole,
    read_dimacs,
    read_varmap,
    write_dimacs,
)


# ---------------------------------------------------------------------------
# Independent range-enumeration oracle: plain nested loops over the clause
# family quantifier ranges, sharing no code with the encoder.
# ---------------------------------------------------------------------------


def oracle_family_counts(n: int) -> dict[str, int]:
    counts = dict.fromkeys(
        [
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
        ],
        0,
    )
    r = range(2, n + 1)
    for a in r:
        for i in r:
            for b in r:
                for c in r:
                    if a < i < b < c:
                        counts["inside-low"] += 4
                    if a < b < i < c:
                        counts["inside-high"] += 4
    for a in r:
        for b in r:
            for c in r:
                if a < b < c:
                    counts["hole-def"] += 1
    quads = 0
    cap5 = 0
    for a in r:
        for b in r:
            for c in r:
                for d in r:
                    if a < b < c < d:
                        quads += 1
                        if a + 1 < b:
                            cap5 += 1
    counts["trans-ccw"] = counts["trans-cw"] = quads
    counts["cap4-intro"] = counts["cup4-intro"] = quads
    counts["cap5-intro"] = cap5
    m = max(0, -(-n // 2) - 2)
    counts["lex"] = 0 if m == 0 else 3 * m - 2
    arcs = 0
    for a in r:
        for c in r:
            for d in r:
                if a < c < d and a + 1 < c:
                    arcs += 1
    counts["cap4-cw"] = counts["cup4-ccw"] = arcs
    for a in r:
        for d in r:
            for e in r:
                if a < d < e and a + 2 < d:
                    for p in r:
                        if a < p < e:
                            counts["no-hex-cap5-pt"] += 1
    for a in r:
        for d in r:
            for e in r:
                for f in r:
                    if a < d < e < f and a + 2 < d:
                        counts["no-hex-cap5-ext"] += 1
    for a in r:
        for c in r:
            for cp in r:
                for d in r:
                    if a < c < cp < d and a + 1 < c:
                        counts["no-hex-cap-cup"] += 1
                    if a < cp < c < d and a + 1 < cp:
                        counts["no-hex-cup-cap"] += 1
    for a in r:
        for c in r:
            for d in r:
                for e in r:
                    if a < c < d < e and a + 1 < c:
                        counts["no-hex-cup-fan"] += 1
    return counts


def oracle_var_counts(n: int) -> dict[str, int]:
    r = range(2, n + 1)
    counts = {"O": 0, "C": 0, "H": 0, "U4": 0, "V4": 0, "U5": 0, "AUX": 0}
    for a in r:
        for b in r:
            for c in r:
                if a < b < c:
                    counts["O"] += 1
                    counts["H"] += 1
                    for i in r:
                        if a < i < c and i != b:
                            counts["C"] += 1
                    if a + 1 < b:
                        counts["U4"] += 1
                        counts["V4"] += 1
                    if a + 2 < b:
                        counts["U5"] += 1
    m = max(0, -(-n // 2) - 2)
    counts["AUX"] = max(0, m - 1)
    return counts


class TestAllocation:
    def test_o_count_small(self):
        vm = allocate_vars(4)
        assert len(vm.of_kind("O")) == 1  # the single triple from {2,3,4}

    def test_o_count_n10(self):
        vm = allocate_vars(10)
        assert len(vm.of_kind("O")) == 84  # C(9,3)

    @pytest.mark.parametrize("n", [5, 8, 13, 30])
    def test_counts_match_enumeration(self, n):
        vm = allocate_vars(n)
        expected = oracle_var_counts(n)
        for kind, want in expected.items():
            assert len(vm.of_kind(kind)) == want, kind

    def test_ids_contiguous_and_kind_major(self):
        vm = allocate_vars(9)
        kinds = [vm.var(i).kind for i in range(1, vm.count + 1)]
        order = ["O", "C", "H", "U4", "V4", "U5", "AUX"]
        assert kinds == sorted(kinds, key=order.index)
        for i in range(1, vm.count + 1):
            assert vm.id(vm.var(i).kind, *vm.var(i).indices) == i

    def test_range_invariants_full_scan(self):
        vm = allocate_vars(12)
        n = 12
        for var in vm.variables():
            idx = var.indices
            if var.kind in ("O", "H"):
                a, b, c = idx
                assert 2 <= a < b < c <= n
            elif var.kind == "C":
                i, a, b, c = idx
                assert 2 <= a < b < c <= n and a < i < c and i != b
            elif var.kind in ("U4", "V4"):
                a, c, d = idx
                assert 2 <= a < c < d <= n and a + 1 < c
            elif var.kind == "U5":
                a, d, e = idx
                assert 2 <= a < d < e <= n and a + 2 < d
            else:
                assert var.kind == "AUX" and idx[0] == "LEX"

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            allocate_vars(3)


class TestEncodeLex:
    def _varmap(self, main: int, aux: int) -> VarMap:
        variables = [StructuredVar("O", (2, 3, 3 + i)) for i in range(main)]
        variables += [StructuredVar("AUX", ("LEX", k)) for k in range(1, aux + 1)]
        return VarMap(variables)

    def test_empty(self):
        vm = self._varmap(0, 0)
        assert encode_lex([], [], vm) == []

    def test_single_bit(self):
        vm = self._varmap(2, 0)
        clauses = encode_lex([1], [2], vm)
        assert clauses == [[1, -2]]

    def test_truth_table_length_three(self):
        vm = self._varmap(6, 2)
        left, right = [1, 2, 3], [4, 5, 6]
        clauses = encode_lex(left, right, vm)
        aux_ids = [7, 8]
        for bits in itertools.product([False, True], repeat=6):
            values = dict(zip(left + right, bits))
            lex_holds = bits[:3] >= bits[3:]
            satisfiable = False
            for aux_bits in itertools.product([False, True], repeat=2):
                assign = dict(values)
                assign.update(zip(aux_ids, aux_bits))
                ok = all(
                    any(assign[abs(l)] == (l > 0) for l in cl) for cl in clauses
                )
                if ok:
                    satisfiable = True
                    break
            assert satisfiable == lex_holds, bits

    def test_length_mismatch(self):
        vm = self._varmap(2, 0)
        with pytest.raises(ValueError):
            encode_lex([1], [], vm)


class TestEncodeHole6:
    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            encode_hole6(4)

    @pytest.mark.parametrize("n", [6, 10, 15])
    def test_family_counts_match_oracle(self, n):
        cnf, _ = encode_hole6(n)
        assert cnf.family_counts() == {
            k: v for k, v in oracle_family_counts(n).items() if v
        }

    def test_n5_has_no_cap5_pattern_clauses(self):
        cnf, _ = encode_hole6(5)
        counts = cnf.family_counts()
        assert "no-hex-cap5-pt" not in counts
        assert "no-hex-cap5-ext" not in counts

    def test_families_in_figure_order(self):
        cnf, _ = encode_hole6(8)
        order = [
            "inside-low", "inside-high", "hole-def", "trans-ccw", "trans-cw",
            "lex", "cap4-intro", "cup4-intro", "cap5-intro", "cap4-cw",
            "cup4-ccw", "no-hex-cap5-pt", "no-hex-cap5-ext", "no-hex-cap-cup",
            "no-hex-cup-cap", "no-hex-cup-fan",
        ]
        tags = [tag for tag, _ in cnf.families]
        positions = [order.index(t) for t in tags]
        assert positions == sorted(positions)

    def test_wellformed_clauses(self):
        cnf, vm = encode_hole6(9)
        for clause in cnf.clauses:
            assert clause
            assert all(1 <= abs(l) <= cnf.num_vars for l in clause)
            assert len({abs(l) for l in clause}) == len(clause)

    def test_hole_def_width(self):
        cnf, vm = encode_hole6(9)
        for (tag, params), clause in zip(cnf.families, cnf.clauses):
            if tag == "hole-def":
                a, b, c = params
                assert len(clause) == (c - a - 2) + 1

    @pytest.mark.parametrize("n", list(range(5, 14)))
    def test_monotone_family_growth(self, n):
        small = encode_hole6(n)[0].family_counts()
        big = encode_hole6(n + 1)[0].family_counts()
        for family, count in small.items():
            assert big.get(family, 0) >= count

    @pytest.mark.parametrize("n", [10, 15])
    @pytest.mark.xfail(
        strict=True,
        reason="stated acceptance band [12, 20] is unattainable: the exact "
        "clause counts (verified against the range oracle) give ratios 32.00 "
        "at n=10 and 24.41 at n=15, because the dominant families scale as "
        "C(n-1, 4) whose doubling ratio only drops below 20 near n=25; the "
        "16 +/- 4 band assumed the asymptotic limit (2n)^4/n^4 = 16",
    )
    def test_quartic_growth_ratio_as_stated(self, n):
        small = len(encode_hole6(n)[0].clauses)
        large = len(encode_hole6(2 * n)[0].clauses)
        assert 12 <= large / small <= 20

    @pytest.mark.parametrize("n", [10, 15])
    def test_quartic_growth_exact(self, n):
        """The true doubling ratio, pinned from the independent oracle."""
        small = len(encode_hole6(n)[0].clauses)
        large = len(encode_hole6(2 * n)[0].clauses)
        assert small == sum(oracle_family_counts(n).values())
        assert large == sum(oracle_family_counts(2 * n).values())
        # quartic scaling: count / n^4 stays within fixed constants
        for m in (n, 2 * n):
            count = len(encode_hole6(m)[0].clauses)
            assert 0.15 <= count / m**4 <= 0.8

    def test_deterministic_bytes(self, tmp_path):
        blobs = []
        for run in (1, 2):
            cnf, vm = encode_hole6(11)
            p = tmp_path / f"r{run}.cnf"
            write_dimacs(cnf, vm, p, mode="hole6", n=11)
            blobs.append((p.read_bytes(), p.with_suffix(".varmap").read_bytes()))
        assert blobs[0] == blobs[1]


class TestEncodeGon6:
    def test_prefix_property_and_unit_count(self):
        hole, _ = encode_hole6(8)
        gon, vm = encode_gon6(8)
        assert gon.clauses[: len(hole.clauses)] == hole.clauses
        extra = gon.clauses[len(hole.clauses) :]
        h_vars = vm.of_kind("H")
        assert len(extra) == len(h_vars)
        assert all(len(cl) == 1 and cl[0] > 0 for cl in extra)
        assert [vm.var(cl[0]).indices for cl in extra] == [
            v.indices for v in h_vars
        ]


class TestEncodeNaive:
    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            encode_naive_hole(7, 10)
        with pytest.raises(ValueError):
            encode_naive_hole(5, 4)

    def test_subset_clause_count(self):
        from math import comb

        cnf, _ = encode_naive_hole(4, 7)
        counts = cnf.family_counts()
        assert counts["forbid-hole-subset"] == comb(7, 4)
        assert counts["signotope"] == 8 * comb(7, 4)

    def test_variables_cover_all_indices(self):
        vm = allocate_naive_vars(6)
        o_first = [v.indices[0] for v in vm.of_kind("O")]
        assert min(o_first) == 1

    def test_k3_n3_derives_contradiction(self):
        cnf, vm = encode_naive_hole(3, 3)
        # hole-def forces h(1,2,3); the subset clause forbids it
        assert [vm.id("H", 1, 2, 3)] in cnf.clauses
        assert [-vm.id("H", 1, 2, 3)] in cnf.clauses


class TestDimacsIO:
    def test_empty_clause_list(self, tmp_path):
        vm = VarMap([StructuredVar("O", (2, 3, 4))])
        p = tmp_path / "empty.cnf"
        write_dimacs(Cnf(1, []), vm, p, mode="test")
        body = p.read_text().splitlines()
        assert body[-1] == "p cnf 1 0"

    def test_round_trip(self, tmp_path):
        cnf, vm = encode_hole6(9)
        p = tmp_path / "phi9.cnf"
        write_dimacs(cnf, vm, p, mode="hole6", n=9)
        back = read_dimacs(p)
        assert back.num_vars == cnf.num_vars
        assert back.clauses == cnf.clauses

    def test_varmap_round_trip(self, tmp_path):
        _, vm = encode_hole6(8)
        p = tmp_path / "phi8.varmap"
        from hexsat.encoder import write_varmap

        write_varmap(vm, p)
        back = read_varmap(p)
        assert back.variables() == vm.variables()

    def test_varmap_line_format(self, tmp_path):
        cnf, vm = encode_hole6(6)
        p = tmp_path / "phi6.cnf"
        write_dimacs(cnf, vm, p, mode="hole6", n=6)
        first = p.with_suffix(".varmap").read_text().splitlines()[0]
        assert first == "1 O 2 3 4"

    def test_read_rejects_corrupt_header(self, tmp_path):
        p = tmp_path / "bad.cnf"
        p.write_text("p cnf 3\n1 0\n")
        with pytest.raises(ValueError):
            read_dimacs(p)

    def test_read_rejects_clause_count_mismatch(self, tmp_path):
        p = tmp_path / "bad.cnf"
        p.write_text("p cnf 3 2\n1 0\n")
        with pytest.raises(ValueError):
            read_dimacs(p)
