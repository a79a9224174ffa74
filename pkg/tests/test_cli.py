import json
import os

import pytest

from distcol import read_col
from distcol.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_cycle_product_file(self, tmp_path, capsys):
        out = tmp_path / "g.col"
        code, stdout, _ = run(
            ["construct", "cycle-product", "--d", "4", "--t", "3", "--out", str(out)], capsys
        )
        assert code == 0
        assert "n=24" in stdout and "regular=4" in stdout
        g = read_col(out)
        assert g.n == 24 and g.regular_degree() == 4
        labels = json.loads((tmp_path / "g.labels.json").read_text())
        assert labels["kind"] == "blocks"
        assert labels["labels"]["0"]["block"] == 0

    def test_pg_summary(self, tmp_path, capsys):
        out = tmp_path / "pg.col"
        code, stdout, _ = run(["construct", "pg", "--q", "2", "--out", str(out)], capsys)
        assert code == 0
        assert "n=14 m=21 regular=3" in stdout
        assert "bipartite=yes" in stdout

    def test_precondition_diagnostic(self, tmp_path, capsys):
        code, _, stderr = run(
            ["construct", "cycle-product", "--d", "3", "--t", "3",
             "--out", str(tmp_path / "x.col")],
            capsys,
        )
        assert code == 2
        assert "d must be even" in stderr

    def test_round_trip_identical_labels(self, tmp_path, capsys):
        out = tmp_path / "ee.col"
        code, _, _ = run(
            ["construct", "even-edge", "--d", "8", "--t", "6", "--out", str(out)], capsys
        )
        assert code == 0
        labels = json.loads((tmp_path / "ee.labels.json").read_text())
        assert len(labels["x"]) == 162 and len(labels["y"]) == 162


class TestVerify:
    def test_p4(self, capsys):
        code, stdout, _ = run(["verify", "P4", "--d", "4", "--t", "3"], capsys)
        assert code == 0
        assert "all checks passed" in stdout

    def test_p10_csv(self, tmp_path, capsys):
        csv_path = tmp_path / "p10.csv"
        code, _, _ = run(
            ["verify", "P10", "--d", "3,5", "--t", "2,3", "--csv", str(csv_path)], capsys
        )
        assert code == 0
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "params,check,value,bound,passed"
        assert all(line.endswith("true") for line in lines[1:])

    def test_randomized_requires_seed(self, capsys):
        code, _, stderr = run(["verify", "P6", "--trials", "5"], capsys)
        assert code == 2
        assert "seed" in stderr

    def test_p6_small(self, capsys):
        code, stdout, _ = run(["verify", "P6", "--trials", "10", "--seed", "7"], capsys)
        assert code == 0

    def test_unknown_proposition(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify", "P99"])


class TestMeasure:
    @pytest.fixture
    def heawood_file(self, tmp_path, capsys):
        out = tmp_path / "heawood.col"
        run(["construct", "pg", "--q", "2", "--out", str(out)], capsys)
        return out

    def test_colour_exact(self, heawood_file, capsys):
        code, stdout, _ = run(
            ["measure", "--graph", str(heawood_file), "--stat", "colour",
             "--t", "2", "--mode", "vertex", "--method", "exact"],
            capsys,
        )
        assert code == 0
        record = json.loads(stdout.splitlines()[-1])
        assert record["values"]["numColours"] == 7
        assert record["version"]
        assert record["graph"]["girth"] == 6

    def test_cycle_stat(self, heawood_file, capsys):
        code, stdout, _ = run(
            ["measure", "--graph", str(heawood_file), "--stat", "cycle", "--l", "4"],
            capsys,
        )
        assert code == 0
        record = json.loads(stdout.splitlines()[-1])
        assert record["values"]["found"] is False

    def test_density_on_construction(self, capsys):
        code, stdout, _ = run(
            ["measure", "--construct", "cycle-3t", "--d", "4", "--t", "3",
             "--stat", "density", "--mode", "vertex"],
            capsys,
        )
        assert code == 0
        record = json.loads(stdout.splitlines()[-1])
        assert record["values"]["impliedF"] == "722/179"

    def test_pathpairs_edge_root(self, capsys):
        code, stdout, _ = run(
            ["measure", "--construct", "complete-bipartite", "--n", "3", "--m", "3",
             "--stat", "pathpairs", "--root", "0,3", "--t", "2"],
            capsys,
        )
        assert code == 0
        record = json.loads(stdout.splitlines()[-1])
        assert record["values"]["pathCount"] == 28

    def test_bunched_stat(self, heawood_file, capsys):
        code, stdout, _ = run(
            ["measure", "--graph", str(heawood_file), "--stat", "bunched",
             "--delta", "21.29"],
            capsys,
        )
        assert code == 0
        record = json.loads(stdout.splitlines()[-1])
        assert record["values"]["bunched"] == 0

    def test_bunched_rejects_non_bipartite(self, tmp_path, capsys):
        tri = tmp_path / "tri.col"
        tri.write_text("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n")
        code, _, stderr = run(
            ["measure", "--graph", str(tri), "--stat", "bunched", "--delta", "1"],
            capsys,
        )
        assert code == 2
        assert "bipartite" in stderr

    def test_odd_girth_stat(self, capsys):
        code, stdout, _ = run(
            ["measure", "--construct", "cycle-3t", "--d", "4", "--t", "3",
             "--stat", "odd-girth"],
            capsys,
        )
        assert code == 0
        record = json.loads(stdout.splitlines()[-1])
        assert record["values"]["oddGirth"] == 9

    def test_pathpairs_all_roots(self, capsys):
        code, stdout, _ = run(
            ["measure", "--construct", "complete-bipartite", "--n", "2", "--m", "2",
             "--stat", "pathpairs", "--root", "all", "--t", "2"],
            capsys,
        )
        assert code == 0
        records = [json.loads(line) for line in stdout.splitlines()]
        assert len(records) == 4  # one per vertex root
        assert {r["values"]["root"] for r in records} == {0, 1, 2, 3}

    def test_colour_record_carries_witness(self, heawood_file, capsys):
        code, stdout, _ = run(
            ["measure", "--graph", str(heawood_file), "--stat", "colour",
             "--t", "2", "--mode", "vertex", "--method", "greedy"],
            capsys,
        )
        assert code == 0
        record = json.loads(stdout.splitlines()[-1])
        witness = record["values"]["colouring"]
        assert witness["mode"] == "vertex" and witness["t"] == 2
        assert len(witness["colours"]) == 14

    def test_cap_violation_is_reported_not_fatal(self, heawood_file, capsys):
        code, stdout, _ = run(
            ["measure", "--graph", str(heawood_file), "--stat", "colour",
             "--t", "2", "--mode", "edge", "--method", "exact", "--exact-cap", "10"],
            capsys,
        )
        record = json.loads(stdout.splitlines()[-1])
        assert record["error"] and "TooLarge" in record["error"]
        assert code == 1

    def test_csv_determinism(self, heawood_file, tmp_path, capsys):
        args = ["measure", "--graph", str(heawood_file), "--stat", "girth"]
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        assert run(args + ["--csv", str(first)], capsys)[0] == 0
        assert run(args + ["--csv", str(second)], capsys)[0] == 0
        assert first.read_bytes() == second.read_bytes()


class TestSweepAndConvert:
    def test_sweep_ratio_column(self, tmp_path, capsys):
        spec = tmp_path / "sweep.json"
        spec.write_text(json.dumps({
            "construct": "cycle-product",
            "stat": "colour",
            "params": {"d": [4, 6], "t": [3]},
            "options": {"mode": "vertex", "method": "greedy", "t": 3},
        }))
        out = tmp_path / "sweep.csv"
        code, _, _ = run(["sweep", "--spec", str(spec), "--out", str(out)], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 3
        header = lines[0].split(",")
        ratio_idx = header.index("ratio")
        for line in lines[1:]:
            assert float(line.split(",")[ratio_idx]) >= 1.0

    def test_sweep_deterministic_bytes(self, tmp_path, capsys):
        spec = tmp_path / "s.json"
        spec.write_text(json.dumps({
            "construct": "pg", "stat": "girth", "params": {"q": [2, 3]},
        }))
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(["sweep", "--spec", str(spec), "--out", str(a)], capsys)[0] == 0
        assert run(["sweep", "--spec", str(spec), "--out", str(b)], capsys)[0] == 0
        assert a.read_bytes() == b.read_bytes()
        assert all(row.endswith("6,,") for row in a.read_text().splitlines()[1:])

    def test_empty_range_header_only(self, tmp_path, capsys):
        spec = tmp_path / "s.json"
        spec.write_text(json.dumps({"construct": "pg", "stat": "girth", "params": {"q": []}}))
        out = tmp_path / "empty.csv"
        code, _, _ = run(["sweep", "--spec", str(spec), "--out", str(out)], capsys)
        assert code == 0
        assert len(out.read_text().splitlines()) == 1

    def test_malformed_spec_rejected(self, tmp_path, capsys):
        spec = tmp_path / "bad.json"
        spec.write_text("{not json")
        out = tmp_path / "never.csv"
        code, _, stderr = run(["sweep", "--spec", str(spec), "--out", str(out)], capsys)
        assert code == 2
        assert "malformed" in stderr
        assert not out.exists()

    def test_convert_json(self, tmp_path, capsys):
        col = tmp_path / "g.col"
        run(["construct", "complete-bipartite", "--n", "2", "--m", "2",
             "--out", str(col)], capsys)
        out = tmp_path / "g.json"
        code, _, _ = run(
            ["convert", "--in", str(col), "--out", str(out), "--format", "json"], capsys
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["n"] == 4 and len(data["edges"]) == 4

    def test_convert_col_normalizes(self, tmp_path, capsys):
        messy = tmp_path / "messy.col"
        messy.write_text("c comment\np edge 3 2\ne 3 1\ne 2 1\n")
        out = tmp_path / "norm.col"
        code, _, _ = run(["convert", "--in", str(messy), "--out", str(out)], capsys)
        assert code == 0
        assert out.read_text() == "p edge 3 2\ne 1 2\ne 1 3\n"


class TestCache:
    def test_cache_dir_round_trip(self, tmp_path, capsys, monkeypatch):
        cache = tmp_path / "cache"
        monkeypatch.setenv("DCL_CACHE_DIR", str(cache))
        code, stdout, _ = run(
            ["measure", "--construct", "pg", "--q", "2", "--stat", "girth"], capsys
        )
        assert code == 0
        cached = cache / "pg-q2.col"
        assert cached.exists()
        # second run consumes the cache and agrees
        code, stdout, _ = run(
            ["measure", "--construct", "pg", "--q", "2", "--stat", "girth"], capsys
        )
        assert code == 0
        record = json.loads(stdout.splitlines()[-1])
        assert record["values"]["girth"] == 6
