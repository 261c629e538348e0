import json
import subprocess
import sys

import pytest

from gppoly.cli import main, parse_scan_ranges
from gppoly.families import petersen
from gppoly.graph import GraphInputError, write_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json", "--no-timing")
    return code, json.loads(out)


def test_verify_kneser(capsys):
    code, out, _ = run(capsys, "verify", "kneser2:5")
    assert code == 0
    assert "EQUAL" in out
    assert "1 + 10 x + 45 x^2 + 90 x^3 + 80 x^4 + 30 x^5 + 5 x^6" in out


def test_verify_mismatch_exit_code(capsys):
    code, rep = run_json(capsys, "verify", "grid:4,4")
    assert code == 1
    assert rep["status"] == "DIFFER" and rep["first_difference"] == 4


def test_scan_broom(capsys):
    code, rep = run_json(capsys, "scan", "broom", "r=6", "s=1..20")
    assert code == 0
    assert rep["checked"] == 20
    assert [h["params"]["s"] for h in rep["hits"]] == [17, 18, 19, 20]
    first = rep["hits"][0]
    assert first["psi"] == ["1", "24", "276", "275", "355", "261", "103", "17"]
    assert first["witness"] == [3, 4]


def test_scan_text(capsys):
    code, out, _ = run(capsys, "scan", "broom", "s=1..20", "r=6")
    assert "first non-unimodal: broom:17,6" in out


def test_unimodal_k97(capsys):
    code, out, _ = run(capsys, "unimodal", "family:complete_bipartite:9,7")
    assert code == 0
    assert "NOT UNIMODAL" in out


def test_maximal_petersen(capsys):
    code, rep = run_json(capsys, "maximal", "petersen")
    assert code == 0
    assert {k: len(v) for k, v in rep["maximal_sets"].items()} == {"6": 5, "4": 5}
    assert rep["census"]["2"] == {"0": 5, "1": 10, "3": 30}
    assert rep["census"]["5"] == {"0": 242, "1": 10}
    assert rep["psi"] == ["1", "10", "45", "90", "80", "30", "5"]


def test_maximal_text_table(capsys):
    code, out, _ = run(capsys, "maximal", "petersen")
    assert "size 6: 5" in out and "size 4: 5" in out
    assert "{u0, u1, u3, v2, v3, v4}" in out


def test_compute_schema(capsys):
    code, rep = run_json(capsys, "compute", "petersen")
    assert list(rep) == ["graph", "psi", "gp", "unimodal", "witness", "elapsed_ms"]
    assert rep["graph"] == {"n": 10, "m": 15, "source": "petersen"}
    assert rep["gp"] == 6 and rep["unimodal"] is True and rep["witness"] is None


def test_compute_from_file(capsys, tmp_path):
    f = tmp_path / "p.txt"
    f.write_text(write_edge_list(petersen()))
    code, rep = run_json(capsys, "compute", str(f))
    assert rep["psi"] == ["1", "10", "45", "90", "80", "30", "5"]


def test_family_closed_form(capsys):
    code, rep = run_json(capsys, "family", "complete_bipartite:8,4")
    assert rep["psi"] == ["1", "12", "66", "60", "71", "56", "28", "8", "1"]
    assert rep["unimodal"] is False and rep["witness"] == [3, 4]


def test_family_large_coefficients_are_strings(capsys):
    code, rep = run_json(capsys, "family", "complete:80")
    assert rep["psi"][40] == str(107507208733336176461620)


@pytest.mark.parametrize("op, args, psi", [
    ("union", ["path:2", "path:3"], ["1", "5", "10", "9", "3"]),
    ("join", ["empty:8", "empty:4"], ["1", "12", "66", "60", "71", "56", "28", "8", "1"]),
    ("product", ["path:2", "path:2"], ["1", "4", "6"]),
    ("corona", ["path:4"], ["1", "8", "28", "16", "4"]),
])
def test_ops(capsys, op, args, psi):
    code, rep = run_json(capsys, "ops", op, *args)
    assert code == 0 and rep["psi"] == psi


@pytest.mark.parametrize("argv", [
    ["compute", "nope:3"],
    ["family", "petersen"],
    ["scan", "broom", "r=6"],
    ["scan", "broom", "r=6", "q=1..3"],
    ["ops", "join", "path:3"],
    ["frobnicate"],
    ["compute", "path:3", "--max-vertices", "0"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_resource_limits(capsys):
    assert run(capsys, "compute", "tree1:3")[0] == 3
    assert run(capsys, "compute", "path:12", "--max-vertices", "10")[0] == 3
    assert run(capsys, "maximal", "grid:4,4", "--max-sets", "5")[0] == 3
    assert run(capsys, "compute", "tree1:3", "--force")[0] == 0


def test_deterministic_json(capsys):
    outs = {run(capsys, "maximal", "petersen", "--format", "json", "--no-timing")[1]
            for _ in range(3)}
    assert len(outs) == 1


def test_parse_scan_ranges():
    specs = parse_scan_ranges("tstar", ["r=1..3", "a=2"])
    assert [str(s) for s in specs] == ["tstar:1,2", "tstar:2,2", "tstar:3,2"]
    with pytest.raises(GraphInputError):
        parse_scan_ranges("broom", ["r=6..x"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gppoly", "verify", "cycle:8"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "EQUAL" in proc.stdout
