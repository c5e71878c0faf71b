from pathlib import Path

import pytest

from hexsat.cli import main
from hexsat.canon import lex_condition_holds
from hexsat.geometry import in_general_position, point
from hexsat.pointio import format_points, parse_points, read_points_file

from conftest import NINE_POINTS


def write_pts(path: Path, points):
    path.write_text(format_points(points))


class TestPointsFormat:
    def test_round_trip(self, tmp_path):
        text = format_points(NINE_POINTS, comments=["nine-point demo"])
        assert text.startswith("# nine-point demo\n")
        assert parse_points(text) == NINE_POINTS

    def test_denominator_omitted_when_one(self):
        text = format_points([point(3, "-5/2")])
        assert text == "3 -5/2\n"

    def test_blank_lines_and_comments_skipped(self):
        assert parse_points("\n# c\n1 2\n\n3/4 -5\n") == [point(1, 2), point("3/4", -5)]

    def test_bad_line_reports_lineno(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_points("1 2\n1 2 3\n")
        with pytest.raises(ValueError, match="line 1"):
            parse_points("1/0 2\n")


class TestEncodeCommand:
    def test_writes_cnf_and_varmap(self, tmp_path, capsys):
        out = tmp_path / "phi10.cnf"
        assert main(["encode", "--mode", "hole6", "--n", "10", "--out", str(out)]) == 0
        assert out.exists() and out.with_suffix(".varmap").exists()
        header = out.read_text().splitlines()
        assert header[0].startswith("c hexsat")
        assert "p cnf" in header[3]

    def test_byte_identical_across_runs(self, tmp_path):
        a, b = tmp_path / "a.cnf", tmp_path / "b.cnf"
        main(["encode", "--mode", "gon6", "--n", "8", "--out", str(a)])
        main(["encode", "--mode", "gon6", "--n", "8", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_naive_requires_k(self, tmp_path, capsys):
        out = tmp_path / "x.cnf"
        rc = main(["encode", "--mode", "naive-hole", "--n", "6", "--out", str(out)])
        assert rc == 1
        assert "requires --k" in capsys.readouterr().err

    def test_domain_error_exit_code(self, tmp_path, capsys):
        out = tmp_path / "x.cnf"
        rc = main(["encode", "--mode", "hole6", "--n", "3", "--out", str(out)])
        assert rc == 1
        assert "n >= 5" in capsys.readouterr().err

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["encode", "--mode", "bogus", "--n", "5", "--out", "x"])
        assert exc.value.code == 2


class TestCanonCommand:
    def test_canonicalizes_file(self, tmp_path, capsys):
        src = tmp_path / "in.pts"
        dst = tmp_path / "out.pts"
        write_pts(src, NINE_POINTS)
        assert main(["canon", "--points", str(src), "--out", str(dst)]) == 0
        result = read_points_file(dst)
        assert len(result) == 9
        assert in_general_position(result)
        assert lex_condition_holds(result)
        text = dst.read_text()
        assert "# parity:" in text
        assert "# shear:" in text

    def test_deterministic_output(self, tmp_path):
        src = tmp_path / "in.pts"
        write_pts(src, NINE_POINTS)
        outs = []
        for name in ("a.pts", "b.pts"):
            dst = tmp_path / name
            main(["canon", "--points", str(src), "--out", str(dst)])
            outs.append(dst.read_text().replace(name, "X"))
        # provenance mentions only the input name, so outputs match exactly
        assert outs[0] == outs[1]

    def test_collinear_input_fails_cleanly(self, tmp_path, capsys):
        src = tmp_path / "bad.pts"
        write_pts(src, [point(0, 0), point(1, 1), point(2, 2), point(0, 1)])
        rc = main(["canon", "--points", str(src), "--out", str(tmp_path / "o.pts")])
        assert rc == 1
        assert "collinear" in capsys.readouterr().err


class TestHolesCommand:
    def test_prints_witness_indices(self, tmp_path, capsys):
        src = tmp_path / "in.pts"
        write_pts(src, [point(0, 0), point(4, 1), point(2, 5)])
        assert main(["holes", "--k", "3", "--points", str(src)]) == 0
        assert capsys.readouterr().out.strip() == "1 2 3"

    def test_prints_none(self, tmp_path, capsys):
        square = [point(0, 0), point(10, 1), point(11, 12), point(1, 9), point(5, 5)]
        src = tmp_path / "in.pts"
        write_pts(src, square)
        assert main(["holes", "--k", "5", "--points", str(src)]) == 0
        assert capsys.readouterr().out.strip() == "none"

    def test_plot_written(self, tmp_path, capsys):
        src = tmp_path / "in.pts"
        png = tmp_path / "fig.png"
        write_pts(src, [point(0, 0), point(4, 1), point(2, 5), point(9, 4)])
        assert main(["holes", "--k", "3", "--points", str(src), "--plot", str(png)]) == 0
        assert png.stat().st_size > 0


class TestWitnessCommand:
    def test_satisfied_on_canonical_hole_free(self, tmp_path, capsys):
        src = tmp_path / "in.pts"
        dst = tmp_path / "canon.pts"
        # five convex-position points plus one interior: no 6-hole exists
        pts = [point(x, x * x) for x in range(1, 6)] + [point(3, 12)]
        write_pts(src, pts)
        main(["canon", "--points", str(src), "--out", str(dst)])
        assert main(["witness", "--points", str(dst), "--mode", "hole6"]) == 0
        assert "satisfied" in capsys.readouterr().out

    def test_falsified_on_six_convex_points(self, tmp_path, capsys):
        # six points in convex position form a 6-hole, and the intended
        # model exposes it through a falsified pattern clause
        src = tmp_path / "in.pts"
        dst = tmp_path / "canon.pts"
        write_pts(src, [point(x, x * x) for x in range(1, 7)])
        main(["canon", "--points", str(src), "--out", str(dst)])
        capsys.readouterr()
        rc = main(["witness", "--points", str(dst), "--mode", "hole6"])
        assert rc == 1
        assert "falsified" in capsys.readouterr().out

    def test_non_canonical_rejected(self, tmp_path, capsys):
        src = tmp_path / "in.pts"
        write_pts(src, [point(5, 0), point(1, 3), point(2, 1), point(0, 2), point(4, 4)])
        rc = main(["witness", "--points", str(src), "--mode", "hole6"])
        assert rc == 1

    def test_gon_mode(self, tmp_path, capsys):
        src = tmp_path / "in.pts"
        dst = tmp_path / "canon.pts"
        write_pts(src, [point(x, x * x) for x in range(1, 6)])
        main(["canon", "--points", str(src), "--out", str(dst)])
        assert main(["witness", "--points", str(dst), "--mode", "gon6"]) == 0


class TestRunCommand:
    def test_run_naive(self, tmp_path, capsys, solver_cmd):
        log = tmp_path / "log.txt"
        rc = main([
            "run", "--mode", "naive-hole", "--k", "4", "--n", "5",
            "--solver-cmd", solver_cmd, "--timeout", "120", "--log", str(log),
        ])
        assert rc == 0
        assert capsys.readouterr().out.strip() == "UNSAT"
        assert log.read_text().startswith("naive-hole(4) 5 UNSAT")

    def test_run_with_config_file(self, tmp_path, capsys, solver_cmd):
        cfg = tmp_path / "solver.cfg"
        cfg.write_text(f"solver_command={solver_cmd}\ntimeout=120\n")
        rc = main(["run", "--mode", "hole6", "--n", "6", "--config", str(cfg)])
        assert rc == 0
        assert capsys.readouterr().out.strip() == "SAT"


class TestSelftestCommand:
    def test_selftest_passes(self, capsys):
        assert main(["selftest", "--seed", "7"]) == 0
        out = capsys.readouterr().out
        assert "seed=7" in out
        assert "FAIL" not in out
