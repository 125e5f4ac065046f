"""End-to-end tests of the command line interface."""

import json

import numpy as np
import pytest

from mpinterp.cli import main


def run(args):
    return main([str(a) for a in args])


def read_csv_rows(path):
    lines = path.read_text().strip().splitlines()
    return lines[0].split(","), [ln.split(",") for ln in lines[1:]]


class TestNodesCommand:
    def test_mp_csv(self, tmp_path):
        out = tmp_path / "mp2.csv"
        assert run(["nodes", "--family", "mp", "--n", 2, "--out", out]) == 0
        header, rows = read_csv_rows(out)
        assert header == ["x", "y", "weight"]
        assert len(rows) == 6

    def test_padua_json(self, tmp_path):
        out = tmp_path / "pad4.json"
        assert run(["nodes", "--family", "padua", "--n", 4, "--format", "json", "--out", out]) == 0
        data = json.loads(out.read_text())
        assert data["family"] == "padua"
        assert len(data["points"]) == 15

    def test_odd_degree_exits_2(self, tmp_path):
        assert run(["nodes", "--family", "mp", "--n", 3, "--out", tmp_path / "x.csv"]) == 2

    def test_mesh_with_extras_flag(self, tmp_path):
        out = tmp_path / "mesh.csv"
        assert run(["nodes", "--family", "mesh-a", "--n", 4, "--out", out]) == 0
        header, rows = read_csv_rows(out)
        assert header == ["x", "y", "is_extra"]
        assert sum(int(r[2]) for r in rows) == 2

    def test_lissajous_samples(self, tmp_path):
        out = tmp_path / "curve.csv"
        assert run(["nodes", "--family", "lissajous", "--n", 6,
                    "--samples", 333, "--out", out]) == 0
        header, rows = read_csv_rows(out)
        assert header == ["x", "y"]
        assert len(rows) == 333

    def test_roundtrip_17_digits(self, tmp_path):
        out = tmp_path / "mp4.csv"
        run(["nodes", "--family", "mp", "--n", 4, "--out", out])
        _, rows = read_csv_rows(out)
        from mpinterp import morrow_patterson

        pts = morrow_patterson(4).points
        parsed = np.array([[float(r[0]), float(r[1])] for r in rows])
        assert np.array_equal(parsed, pts)

    def test_io_failure_exits_1(self, tmp_path):
        missing = tmp_path / "no" / "such" / "dir" / "f.csv"
        assert run(["nodes", "--family", "mp", "--n", 2, "--out", missing]) == 1


class TestLebesgueCommand:
    def test_small_direct_run(self, tmp_path):
        out = tmp_path / "leb.csv"
        code = run(["lebesgue", "--n", 2, "--grid", "equi", "--m", 51,
                    "--method", "direct", "--out", out])
        assert code == 0
        header, rows = read_csv_rows(out)
        assert header == ["x", "y", "lambda"]
        assert len(rows) == 51 * 51
        report = json.loads((tmp_path / "leb.csv.report.json").read_text())
        assert 5.76 <= report["constant"] <= 6.25
        assert report["mesh"] == {"kind": "equi", "m": 51}
        assert abs(report["argmax"][0]) == 1.0

    def test_method_cross_check(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        run(["lebesgue", "--n", 8, "--m", 41, "--method", "direct", "--out", a])
        run(["lebesgue", "--n", 8, "--m", 41, "--method", "fast", "--out", b])
        ra = json.loads((tmp_path / "a.csv.report.json").read_text())
        rb = json.loads((tmp_path / "b.csv.report.json").read_text())
        assert abs(ra["constant"] - rb["constant"]) <= 1e-8 * ra["constant"]

    def test_invalid_args_exit_2(self, tmp_path):
        assert run(["lebesgue", "--n", 7, "--out", tmp_path / "x.csv"]) == 2
        assert run(["lebesgue", "--n", 4, "--m", 2, "--out", tmp_path / "x.csv"]) == 2


class TestGrowthCommand:
    def test_row_schema_and_monotonicity(self, tmp_path):
        out = tmp_path / "growth.csv"
        code = run(["growth", "--n-min", 2, "--n-max", 10, "--m", 51,
                    "--no-timing", "--out", out])
        assert code == 0
        header, rows = read_csv_rows(out)
        assert header == ["n", "lambda", "corner", "fit_lower", "fit_upper",
                          "cubic_bound", "mesh_size", "seconds"]
        assert [r[0] for r in rows] == ["2", "4", "6", "8", "10"]
        lam = [float(r[1]) for r in rows]
        assert all(b > a for a, b in zip(lam, lam[1:]))
        for r in rows:
            assert float(r[3]) <= float(r[1]) <= float(r[4])
            assert float(r[1]) <= float(r[5])

    def test_empty_range_exits_2(self, tmp_path):
        assert run(["growth", "--n-min", 4, "--n-max", 2, "--out", tmp_path / "g.csv"]) == 2

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["growth", "--n-min", 2, "--n-max", 4, "--m", 31, "--no-timing"]
        run(args + ["--out", a])
        run(args + ["--out", b])
        assert a.read_bytes() == b.read_bytes()


class TestCubatureCheckCommand:
    def test_passes_gate(self, tmp_path):
        out = tmp_path / "cub.csv"
        assert run(["cubature-check", "--n", 6, "--out", out]) == 0

    def test_explicit_rows(self, tmp_path):
        out = tmp_path / "cub2.csv"
        run(["cubature-check", "--n", 2, "--out", out])
        _, rows = read_csv_rows(out)
        table = {(int(r[0]), int(r[1])): (float(r[2]), float(r[3])) for r in rows}
        assert abs(table[(0, 0)][0] - 1.0) < 1e-12
        assert abs(table[(1, 1)][0]) < 1e-12

    def test_extended_includes_out_of_range(self, tmp_path):
        out = tmp_path / "cub3.csv"
        assert run(["cubature-check", "--n", 2, "--extended", "--out", out]) == 0
        _, rows = read_csv_rows(out)
        assert max(int(r[0]) + int(r[1]) for r in rows) == 2 * 2 + 6


class TestMeshCertifyCommand:
    def test_no_violations(self, tmp_path):
        out = tmp_path / "cert.csv"
        code = run(["mesh-certify", "--n", 6, "--mu", 3, "--variant", "A",
                    "--trials", 20, "--out", out])
        assert code == 0
        _, rows = read_csv_rows(out)
        assert len(rows) == 20
        assert all(float(r[3]) <= 2.0 for r in rows)

    def test_mu_two_exits_2(self, tmp_path):
        assert run(["mesh-certify", "--n", 6, "--mu", 2, "--trials", 5,
                    "--out", tmp_path / "c.csv"]) == 2

    def test_seeded_reruns_identical(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["mesh-certify", "--n", 4, "--mu", 3, "--trials", 5, "--seed", 7]
        run(args + ["--out", a])
        run(args + ["--out", b])
        assert a.read_bytes() == b.read_bytes()
