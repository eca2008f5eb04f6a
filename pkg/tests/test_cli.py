import json

import pytest

from vdwcomplex import __version__
from vdwcomplex.cli import main
from vdwcomplex.complex_core import read_facets


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == __version__


def test_gen_writes_facet_file(tmp_path, capsys):
    out = tmp_path / "vdw73.facets"
    code, _, err = run(capsys, "gen", "7", "3", "--out", str(out))
    assert code == 0
    assert "5 facets" in err
    c = read_facets(out)
    assert c.n == 7 and len(c.facets) == 5

    code, _, err = run(capsys, "gen", "5", "2", "--out", str(tmp_path / "x"))
    assert code == 0 and "4 facets" in err


def test_gen_rejects_bad_params(capsys):
    code, _, err = run(capsys, "gen", "3", "5")
    assert code == 3
    assert "0 < k < n" in err


def test_betti_text_golden(capsys):
    code, out, _ = run(capsys, "betti", "--vdw", "5", "2", "--format", "text")
    assert code == 0
    assert out.splitlines()[1] == "total:  1  2  1"
    code, out, _ = run(capsys, "betti", "--vdw", "6", "2")
    assert out.splitlines()[1] == "total:  1  4  5  2"
    code, out, _ = run(capsys, "betti", "--vdw", "4", "3")
    assert out.splitlines()[1] == "total:  1"


def test_betti_json_round_trips_text(capsys):
    from vdwcomplex.resolution import BettiTable, render_text
    code, out, _ = run(capsys, "betti", "--vdw", "6", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["subject"] == "quotient" and doc["field"] == "Q"
    code, text_out, _ = run(capsys, "betti", "--vdw", "6", "2", "--format", "text")
    assert render_text(BettiTable.from_json_dict(doc)) == text_out.rstrip("\n")


def test_betti_ideal_subject_and_csv(capsys):
    code, out, _ = run(capsys, "betti", "--vdw", "5", "2", "--subject", "ideal",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["i,j,value", "0,2,2", "1,4,1"]


def test_betti_sweep_limit_exit_code(capsys):
    code, _, err = run(capsys, "betti", "--vdw", "12", "2", "--sweep-limit", "10")
    assert code == 2
    assert "limit" in err


def test_betti_malformed_facet_file(tmp_path, capsys):
    p = tmp_path / "bad.facets"
    p.write_text("n 3\n1 x\n")
    code, _, err = run(capsys, "betti", "--facets", str(p))
    assert code == 3
    assert ":2" in err


def test_analyze_vdw_5_2(capsys):
    code, out, _ = run(capsys, "analyze", "--vdw", "5", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["gorenstein"] is True
    assert doc["linear_resolution"] is False
    assert doc["quasi_forest"] is False
    assert doc["minimal_non_faces"] == [[1, 4], [2, 5]]
    assert doc["chordal_skeleton"] is False
    assert len(doc["chordal_certificate"]["chordless_cycle"]) >= 4


def test_analyze_vdw_9_5_leaf_order(capsys):
    code, out, _ = run(capsys, "analyze", "--vdw", "9", "5")
    doc = json.loads(out)
    assert doc["linear_resolution"] is True
    assert doc["quasi_forest"] is True
    assert len(doc["leaf_order"]["facets"]) == 4


def test_analyze_triangle_boundary_file(tmp_path, capsys):
    p = tmp_path / "tri.facets"
    p.write_text("n 3\n1 2\n2 3\n1 3\n")
    code, out, _ = run(capsys, "analyze", "--facets", str(p))
    doc = json.loads(out)
    assert doc["gorenstein"] is True
    assert doc["cohen_macaulay"] is True


def test_verify_small_sweep(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--n-max", "6", "--jobs", "1",
                     "--out", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["cells"] == 15
    assert doc["summary"]["failures"] == []
    gor = [(r["n"], r["k"]) for r in doc["reports"]
           if r["computed"]["gorenstein"] and not r["zero_ideal"]]
    assert (5, 2) in gor


def test_verify_cache_idempotent(tmp_path, capsys):
    cache = tmp_path / "cache"
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    code, _, _ = run(capsys, "verify", "--n-max", "5", "--jobs", "1",
                     "--cache", str(cache), "--out", str(out1))
    assert code == 0
    assert (cache / "manifest.json").exists()
    n_files = len(list(cache.iterdir()))
    code, _, _ = run(capsys, "verify", "--n-max", "5", "--jobs", "1",
                     "--cache", str(cache), "--out", str(out2))
    assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert len(list(cache.iterdir())) == n_files


def test_verify_cache_env_var(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "envcache"
    monkeypatch.setenv("VDW_CACHE_DIR", str(cache))
    code, _, _ = run(capsys, "verify", "--n-max", "4", "--jobs", "1",
                     "--out", str(tmp_path / "r.json"))
    assert code == 0
    assert (cache / "manifest.json").exists()


def test_verify_gf2(tmp_path, capsys):
    code, _, _ = run(capsys, "verify", "--n-max", "6", "--field", "GF2",
                     "--jobs", "1", "--out", str(tmp_path / "r.json"))
    assert code == 0
