import json
import math

import pytest

from unruhmin import cli


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPoint:
    def test_basic_report(self, capsys):
        code, out, _ = run(capsys, ["point", "--c", "1,0.9,0.5", "--w", "1",
                                    "--T", "0.5", "--side", "AI"])
        assert code == 0
        report = json.loads(out)
        assert report["regime"] == "i"
        assert report["t_sc"] is None
        assert report["N"] > 0
        assert list(report) == ["c1", "c2", "c3", "w", "T_unruh", "side", "N", "D",
                                "Bmax", "regime", "t_sc", "state_physical", "method",
                                "oracle_delta"]

    def test_zero_state(self, capsys):
        code, out, _ = run(capsys, ["point", "--c", "0,0,0", "--T", "1",
                                    "--side", "AI"])
        assert code == 0
        report = json.loads(out)
        assert report["N"] == 0 and report["D"] == 0 and report["Bmax"] == 0

    def test_oracle_annotates_delta(self, capsys):
        code, out, _ = run(capsys, ["point", "--c", "0.5,-0.5,0.5", "--T", "1",
                                    "--side", "AII", "--oracle"])
        assert code == 0
        report = json.loads(out)
        assert report["oracle_delta"] <= 1e-8
        assert report["method"] == "closed_form+oracle"

    def test_oracle_rejects_unphysical(self, capsys):
        code, _, err = run(capsys, ["point", "--c", "1,1,1", "--T", "1", "--oracle"])
        assert code == 2
        assert "1 - c1 - c2 - c3" in err

    def test_out_of_range_rejected(self, capsys):
        code, _, err = run(capsys, ["point", "--c", "1.2,0,0", "--T", "1"])
        assert code == 2

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, ["point"])
        assert exc.value.code == 1


class TestTsc:
    def test_sudden(self, capsys):
        code, out, _ = run(capsys, ["tsc", "--c", "0.9,0.85,1", "--side", "AI"])
        assert code == 0
        assert "ii_sudden" in out
        assert abs(float(out.split("=")[1]) - 1.045045115949837) < 1e-9

    def test_case_i(self, capsys):
        code, out, _ = run(capsys, ["tsc", "--c", "1,0.9,0.5", "--side", "AI"])
        assert code == 0
        assert "no sudden change" in out

    def test_w_scaling(self, capsys):
        code, out, _ = run(capsys, ["tsc", "--c", "0.9,0.55,1", "--side", "AII",
                                    "--w", "2"])
        assert code == 0
        assert abs(float(out.split("=")[1]) - 2 * 1.197000933946961) < 1e-9


class TestSweep:
    def test_header_and_sorting(self, capsys, tmp_path):
        out_path = tmp_path / "s.csv"
        code, _, _ = run(capsys, ["sweep", "--c", "0.5,-0.5,0.5", "--T",
                                  "0.1:10:5:log", "--sides", "AII,AI",
                                  "--out", str(out_path)])
        assert code == 0
        lines = out_path.read_text().splitlines()
        header_idx = next(i for i, l in enumerate(lines) if not l.startswith("#"))
        assert lines[header_idx] == cli.CSV_HEADER
        rows = [l.split(",") for l in lines[header_idx + 1:]]
        assert len(rows) == 10
        keys = [(r[5], float(r[4])) for r in rows]
        assert keys == sorted(keys)

    def test_byte_determinism_across_workers(self, capsys, tmp_path):
        paths = [tmp_path / f"d{i}.csv" for i in range(3)]
        for path, workers in zip(paths, ("1", "1", "4")):
            code, _, _ = run(capsys, ["sweep", "--preset", "fig6-blue",
                                      "--workers", workers, "--out", str(path)])
            assert code == 0
        blobs = [p.read_bytes() for p in paths]
        assert blobs[0] == blobs[1] == blobs[2]

    def test_fig1_red_monotone_nonincreasing(self, capsys, tmp_path):
        out_path = tmp_path / "f.csv"
        run(capsys, ["sweep", "--preset", "fig1-red", "--out", str(out_path)])
        rows = [l.split(",") for l in out_path.read_text().splitlines()
                if l and not l.startswith("#")][1:]
        ns = [float(r[6]) for r in rows]
        assert all(b <= a + 1e-12 for a, b in zip(ns, ns[1:]))
        assert all(r[9] == "i" for r in rows)

    def test_fig8_red_sum_constant(self, capsys, tmp_path):
        out_path = tmp_path / "f8.csv"
        run(capsys, ["sweep", "--preset", "fig8-red", "--out", str(out_path)])
        rows = [l.split(",") for l in out_path.read_text().splitlines()
                if l and not l.startswith("#")][1:]
        ns = [float(r[6]) for r in rows]
        assert max(ns) - min(ns) <= 1e-12
        assert abs(ns[0] - 0.4525) < 1e-14
        assert all(r[9] == "a" for r in rows)

    def test_oracle_column_bounded(self, capsys, tmp_path):
        out_path = tmp_path / "o.csv"
        code, _, _ = run(capsys, ["sweep", "--c", "0.6,-0.6,0.6", "--T",
                                  "0.5:2:3:log", "--sides", "AI", "--oracle",
                                  "--out", str(out_path)])
        assert code == 0
        rows = [l.split(",") for l in out_path.read_text().splitlines()
                if l and not l.startswith("#")][1:]
        for r in rows:
            assert r[12] != ""
            assert float(r[12]) <= 1e-8
            assert r[11] == "closed_form+oracle"

    def test_stdout_output(self, capsys):
        code, out, _ = run(capsys, ["sweep", "--c", "0,0,0", "--T", "1",
                                    "--sides", "AI", "--out", "-"])
        assert code == 0
        assert cli.CSV_HEADER in out

    def test_config_file_precedence(self, capsys, tmp_path):
        cfg = tmp_path / "cfg"
        cfg.write_text("w = 2.0\nsides = AII\n# comment\n")
        out_path = tmp_path / "c.csv"
        code, _, _ = run(capsys, ["sweep", "--c", "0.5,-0.5,0.5", "--T", "1",
                                  "--config", str(cfg), "--out", str(out_path)])
        assert code == 0
        row = [l for l in out_path.read_text().splitlines()
               if l and not l.startswith("#")][1].split(",")
        assert row[3] == "2" and row[5] == "AII"

    def test_empty_spec_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["sweep", "--out", "-", "--preset", "nope"])
        assert exc.value.code == 1


class TestVerify:
    def test_small_run_passes_and_is_deterministic(self, capsys):
        code1, out1, _ = run(capsys, ["verify", "--seed", "3", "--draws", "5"])
        code2, out2, _ = run(capsys, ["verify", "--seed", "3", "--draws", "5"])
        assert code1 == code2 == 0
        assert out1 == out2
        report = json.loads(out1)
        assert report["passed"]
        assert {s["suite"] for s in report["suites"]} == {
            "channel", "min", "identities", "tsc"
        }

    def test_zero_draws_usage_error(self, capsys):
        code, _, err = run(capsys, ["verify", "--draws", "0"])
        assert code == 1
