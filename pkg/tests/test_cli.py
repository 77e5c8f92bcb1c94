"""Command-line interface: formats, exit codes, cache behavior."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from gwlocal import ENGINE_VERSION, cache_key, parse_fraction
from gwlocal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.delenv("GW_CACHE_DIR", raising=False)
    return str(tmp_path / "cache")


class TestGenus0:
    def test_quintic_lines_text(self, capsys, cache_dir):
        code, out, _err = run(
            capsys,
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1",
            "--cache-dir", cache_dir,
        )
        assert code == 0
        assert "value: 2875" in out
        assert "graph_count: 10" in out
        assert "seeds: 1 2 3" in out

    def test_json_schema_round_trips(self, capsys, cache_dir):
        code, out, _err = run(
            capsys,
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1",
            "--format", "json", "--cache-dir", cache_dir,
        )
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"query", "value", "graph_count", "seeds", "engine_version"}
        assert doc["query"] == {
            "kind": "genus0",
            "ambient_dim": 4,
            "degrees": [5],
            "curve_degree": 1,
            "insertions": [],
        }
        assert isinstance(doc["value"]["num"], str)
        assert isinstance(doc["value"]["den"], str)
        assert Fraction(int(doc["value"]["num"]), int(doc["value"]["den"])) == 2875
        assert doc["seeds"] == [1, 2, 3]
        assert doc["engine_version"] == ENGINE_VERSION

    def test_csv_format(self, capsys, cache_dir):
        code, out, _err = run(
            capsys,
            "genus0", "--ambient-dim", "2", "--curve-degree", "1",
            "--insertions", "2,2", "--format", "csv", "--cache-dir", cache_dir,
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "value,graph_count,seeds,engine_version"
        assert lines[1].startswith("1,")

    def test_line_through_two_points(self, capsys, cache_dir):
        code, out, _err = run(
            capsys,
            "genus0", "--ambient-dim", "2", "--curve-degree", "1",
            "--insertions", "2,2", "--cache-dir", cache_dir,
        )
        assert code == 0
        assert "value: 1" in out

    def test_seed_flag_sets_lineage(self, capsys, cache_dir):
        code, out, _err = run(
            capsys,
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1",
            "--seed", "7", "--format", "json", "--cache-dir", cache_dir,
        )
        assert code == 0
        assert json.loads(out)["seeds"] == [7, 8, 9]

    def test_dimension_mismatch_exits_2(self, capsys, cache_dir):
        code, _out, err = run(
            capsys,
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1",
            "--insertions", "2,2", "--cache-dir", cache_dir,
        )
        assert code == 2
        assert "dimension mismatch" in err

    def test_malformed_insertions_exit_1(self, capsys, cache_dir):
        code, _out, _err = run(
            capsys,
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1",
            "--insertions", "2,x", "--cache-dir", cache_dir,
        )
        assert code == 1

    def test_nonpositive_factor_exit_1(self, capsys, cache_dir):
        code, _out, err = run(
            capsys,
            "genus0", "--ambient-dim", "4", "--degrees", "0", "--curve-degree", "1",
            "--cache-dir", cache_dir,
        )
        assert code == 1
        assert "non-positive" in err

    def test_missing_required_flag_exit_1(self, capsys):
        code, _out, _err = run(capsys, "genus0", "--curve-degree", "1")
        assert code == 1


class TestCache:
    def test_hit_is_bit_identical_and_noted(self, capsys, cache_dir):
        argv = (
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1",
            "--format", "json", "--cache-dir", cache_dir,
        )
        code1, out1, err1 = run(capsys, *argv)
        code2, out2, err2 = run(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2
        assert "cache hit" not in err1
        assert "cache hit" in err2

    def test_quiet_suppresses_note(self, capsys, cache_dir):
        argv = (
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1",
            "--cache-dir", cache_dir, "--quiet",
        )
        run(capsys, *argv)
        _code, _out, err = run(capsys, *argv)
        assert err == ""

    def test_record_and_index_layout(self, capsys, tmp_path, monkeypatch):
        cache = tmp_path / "cache"
        monkeypatch.setenv("GW_CACHE_DIR", str(cache))
        code, _out, _err = run(
            capsys,
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1",
        )
        assert code == 0
        query = {
            "kind": "genus0",
            "ambient_dim": 4,
            "degrees": [5],
            "curve_degree": 1,
            "insertions": [],
        }
        record_path = cache / f"{cache_key(query, ENGINE_VERSION)}.json"
        assert record_path.exists()
        doc = json.loads(record_path.read_text())
        assert doc["value"] == {"num": "2875", "den": "1"}
        assert doc["seeds"] == [1, 2, 3]
        index_lines = (cache / "index.ndjson").read_text().strip().splitlines()
        assert any(json.loads(line)["key"] == record_path.stem for line in index_lines)

    def test_key_depends_on_engine_version(self):
        query = {"kind": "genus0", "ambient_dim": 4}
        assert cache_key(query, "0.1.0") != cache_key(query, "0.2.0")


class TestTable1:
    def test_low_degrees_consistent(self, capsys, cache_dir):
        code, out, _err = run(capsys, "table1", "--max-degree", "3", "--cache-dir", cache_dir)
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3
        assert all("consistent=yes" in line for line in lines)
        assert "genus1_gw=2875/12" in lines[0]

    def test_single_row(self, capsys, cache_dir):
        code, out, _err = run(capsys, "table1", "--max-degree", "1", "--cache-dir", cache_dir)
        assert code == 0
        assert "reduced=0" in out
        assert "genus1_gw=2875/12" in out
        assert "genus1_bps=0" in out

    def test_degree_bounds(self, capsys, cache_dir):
        code, _out, _err = run(capsys, "table1", "--max-degree", "5", "--cache-dir", cache_dir)
        assert code == 1

    def test_reuses_genus0_cache(self, capsys, cache_dir):
        run(capsys, "table1", "--max-degree", "2", "--cache-dir", cache_dir)
        _code, _out, err = run(
            capsys,
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "2",
            "--cache-dir", cache_dir,
        )
        assert "cache hit" in err


class TestBps:
    def test_genus_zero_from_file(self, capsys, cache_dir, tmp_path):
        table = tmp_path / "gw0.txt"
        table.write_text("1 2875\n2 4876875/8\n", encoding="ascii")
        code, out, _err = run(
            capsys,
            "bps", "--genus", "0", "--max-degree", "2", "--input", str(table),
            "--cache-dir", cache_dir,
        )
        assert code == 0
        assert "d=1 value=2875" in out
        assert "d=2 value=609250" in out

    def test_genus_one_from_files(self, capsys, cache_dir, tmp_path):
        gw1 = tmp_path / "gw1.txt"
        gw1.write_text("1 2875/12\n2 407125/8\n3 243388750/9\n", encoding="ascii")
        gw0 = tmp_path / "gw0.txt"
        gw0.write_text("1 2875\n2 4876875/8\n3 8564575000/27\n", encoding="ascii")
        code, out, _err = run(
            capsys,
            "bps", "--genus", "1", "--max-degree", "3", "--input", str(gw1),
            "--gw0-input", str(gw0), "--cache-dir", cache_dir,
        )
        assert code == 0
        assert out.splitlines() == ["d=1 value=0", "d=2 value=0", "d=3 value=609250"]

    def test_zero_table_round_trips(self, capsys, cache_dir, tmp_path):
        table = tmp_path / "gw0.txt"
        table.write_text("1 0\n", encoding="ascii")
        code, out, _err = run(
            capsys,
            "bps", "--genus", "0", "--max-degree", "1", "--input", str(table),
            "--cache-dir", cache_dir,
        )
        assert code == 0
        assert out.strip() == "d=1 value=0"

    def test_genus_zero_from_cache(self, capsys, cache_dir):
        run(
            capsys,
            "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1",
            "--cache-dir", cache_dir,
        )
        code, out, _err = run(
            capsys, "bps", "--genus", "0", "--max-degree", "1", "--cache-dir", cache_dir
        )
        assert code == 0
        assert "d=1 value=2875" in out

    def test_missing_input_exit_1(self, capsys, cache_dir):
        code, _out, err = run(
            capsys, "bps", "--genus", "0", "--max-degree", "2", "--cache-dir", cache_dir
        )
        assert code == 1
        assert "error" in err

    def test_genus_one_requires_input(self, capsys, cache_dir):
        code, _out, _err = run(
            capsys, "bps", "--genus", "1", "--max-degree", "1", "--cache-dir", cache_dir
        )
        assert code == 1

    def test_incomplete_table_exit_1(self, capsys, cache_dir, tmp_path):
        table = tmp_path / "gw0.txt"
        table.write_text("2 609250\n", encoding="ascii")
        code, _out, _err = run(
            capsys,
            "bps", "--genus", "0", "--max-degree", "2", "--input", str(table),
            "--cache-dir", cache_dir,
        )
        assert code == 1


class TestDims:
    def test_calabi_yau_threefold(self, capsys):
        code, out, _err = run(
            capsys, "dims", "--genus", "1", "--c1a", "0", "--half-dim", "3"
        )
        assert code == 0
        assert out.strip() == "0"

    def test_marked_genus_one(self, capsys):
        code, out, _err = run(
            capsys, "dims", "--genus", "1", "--marks", "2", "--c1a", "7", "--half-dim", "3"
        )
        assert code == 0
        assert out.strip() == "18"

    def test_twisted(self, capsys):
        code, out, _err = run(
            capsys,
            "dims", "--genus", "1", "--c1a", "10", "--half-dim", "4", "--bundle-c1a", "10",
        )
        assert code == 0
        assert out.strip() == "0"

    def test_genus_two_exit_1(self, capsys):
        code, _out, err = run(
            capsys, "dims", "--genus", "2", "--c1a", "0", "--half-dim", "3"
        )
        assert code == 1
        assert "genus" in err


class TestWdvv:
    def test_text(self, capsys):
        code, out, _err = run(capsys, "wdvv", "--max-degree", "3")
        assert code == 0
        assert out.splitlines() == ["d=1 count=1", "d=2 count=1", "d=3 count=12"]

    def test_csv(self, capsys):
        code, out, _err = run(capsys, "wdvv", "--max-degree", "1", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["degree,count", "1,1"]

    def test_json_values_parse(self, capsys):
        code, out, _err = run(capsys, "wdvv", "--max-degree", "5", "--format", "json")
        assert code == 0
        rows = json.loads(out)["rows"]
        values = {
            row["degree"]: parse_fraction(row["count"]["num"] + "/" + row["count"]["den"])
            for row in rows
        }
        assert values == {1: 1, 2: 1, 3: 12, 4: 620, 5: 87304}


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [
            sys.executable, "-m", "gwlocal",
            "genus0", "--ambient-dim", "1", "--curve-degree", "1",
            "--insertions", "1,1", "--format", "json",
        ],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "GW_CACHE_DIR": str(tmp_path / "cache")},
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["value"] == {"num": "1", "den": "1"}
