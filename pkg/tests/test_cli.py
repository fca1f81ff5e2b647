import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from desargues import cli

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_verify_gf3():
    code, out, _ = run("verify", "--field", "gf:3")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("CHECK ") for line in lines)
    assert "CHECK counts PASS passed=" in out and "9 points, 12 lines, 4 pencils" in out


def test_verify_rational_defaults_to_random():
    code, out, _ = run("verify", "--field", "rational", "--n", "20", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["mode"] == {"kind": "random", "seed": 1, "n": 20}
    assert doc["exit_code"] == 0


def test_verify_usage_errors():
    assert run("verify", "--field", "dyadic")[0] == 2
    assert run("verify", "--field", "gf:6")[0] == 2
    assert run("verify", "--field", "rational", "--mode", "exhaustive")[0] == 2
    assert run("verify", "--field", "gf:3", "--n", "0")[0] == 2
    assert run("frobnicate")[0] == 2
    code, _, err = run("verify")
    assert code == 2 and err.startswith("desargues: error:")


@pytest.mark.parametrize("kind, sample", [("d1", "translated.json"), ("d2", "dilated.json"),
                                          ("pappus", "pappus.json")])
def test_check_samples(kind, sample):
    code, out, _ = run("check", "--kind", kind, "--config", str(SAMPLES / sample))
    assert code == 0 and out.strip() == f"CHECK {kind} PASS holds"


def test_check_vacuous_and_malformed(tmp_path):
    raw = json.loads((SAMPLES / "translated.json").read_text())
    raw["points"]["Q'"] = {"x": "9", "y": "1"}
    code, out, _ = run("check", "--kind", "d1", "--config", write(tmp_path, "v.json", raw))
    assert code == 0 and "PASS vacuous: hypothesis fails" in out
    raw["points"]["Q'"] = {"x": "9", "y": "7"}
    assert run("check", "--kind", "d1", "--config", write(tmp_path, "m.json", raw))[0] == 2
    assert run("check", "--kind", "d1", "--config", str(tmp_path / "missing.json"))[0] == 2
    (tmp_path / "bad.json").write_text("{not json")
    assert run("check", "--kind", "d1", "--config", str(tmp_path / "bad.json"))[0] == 2


def test_check_dyadic_undecided(tmp_path):
    raw = json.loads((SAMPLES / "translated.json").read_text())
    raw["field"] = "dyadic"
    raw["points"]["Q'"] = {"x": "hard", "y": "1"}
    raw["points"]["P'"] = {"x": "0", "y": "0"}
    raw["points"]["Q"] = {"x": "0", "y": "1"}
    raw["points"]["R'"] = {"x": "3", "y": "2"}
    code, out, _ = run("check", "--kind", "d1", "--config", write(tmp_path, "d.json", raw), "--budget", "20")
    assert code == 3 and out.strip() == "CHECK d1 UNDECIDED budget=20"


def test_check_field_override(tmp_path):
    code, out, _ = run("check", "--kind", "pappus", "--config", str(SAMPLES / "pappus.json"),
                       "--field", "gf:7", "--format", "json")
    doc = json.loads(out)
    assert doc["field"] == "gf:7" and doc["outcome"] in ("holds", "hypothesis_fails")
    assert code == 0


def test_coordinatize_skew_frame():
    code, out, _ = run("coordinatize", "--field", "rational", "--frame", str(SAMPLES / "skew_frame.json"),
                       "--points", str(SAMPLES / "points.json"))
    assert code == 0
    assert "CHECK point.0 PASS (2, 1)" in out
    assert "CHECK line.0 PASS 1*x + 1/2*y + 1 = 0" in out


def test_coordinatize_canonical_json():
    code, out, _ = run("coordinatize", "--field", "rational", "--points", str(SAMPLES / "points.json"),
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["points"][0]["coords"] == ["3", "5"]
    assert doc["points"][1]["coords"] == ["1/2", "-1"]


def test_coordinatize_invalid_frame(tmp_path):
    frame = write(tmp_path, "f.json", {"O": [0, 0], "t1": [1, 1], "t2": [2, 2]})
    code, _, err = run("coordinatize", "--field", "rational", "--frame", frame,
                       "--points", str(SAMPLES / "points.json"))
    assert code == 2 and "frame" in err.lower()


def test_lines_ops(tmp_path):
    code, out, _ = run("lines", "--field", "rational", "--op", "intersect", "--in", str(SAMPLES / "intersect.json"))
    assert code == 0 and '"x": "-1"' in out and '"y": "0"' in out
    code, _, _ = run("lines", "--field", "rational", "--op", "join", "--in", str(SAMPLES / "join.json"))
    assert code == 0
    same = write(tmp_path, "same.json", {"P": [1, 1], "Q": [1, 1]})
    code, out, _ = run("lines", "--field", "rational", "--op", "join", "--in", same)
    assert code == 1 and "FAIL" in out
    par = write(tmp_path, "par.json", {"l": {"base": [0, 0], "dir": [1, 1]}, "m": {"base": [0, 1], "dir": [2, 2]}})
    assert run("lines", "--field", "rational", "--op", "intersect", "--in", par)[0] == 1
    through = write(tmp_path, "thr.json", {"P": [3, 3], "l": {"base": [0, 0], "dir": [1, 2]}})
    code, out, _ = run("lines", "--field", "gf:5", "--op", "parallel", "--in", through)
    assert code == 0


def test_lines_dyadic_undecided(tmp_path):
    same = write(tmp_path, "hard.json", {"P": [0, 0], "Q": ["hard", 0]})
    code, out, _ = run("lines", "--field", "dyadic", "--op", "join", "--in", same, "--budget", "12")
    assert code == 3 and "budget=12" in out


def test_demo_exit_codes():
    code, out, _ = run("demo", "--example", "brouJ")
    assert code == 3
    assert "UNDECIDED budget=64" in out and "PASS decided witness=1/2048" in out
    assert run("demo", "--example", "brouQ")[0] == 2
    code, out, _ = run("demo", "--example", "all", "--budget", "16", "--format", "json")
    doc = json.loads(out)
    assert code == 3 and len(doc["reports"]) == 9
    assert all(r["false_witnesses"] == 0 for r in doc["reports"])


def test_budget_environment(monkeypatch):
    monkeypatch.setenv(cli.BUDGET_ENV, "20")
    code, out, _ = run("demo", "--example", "brouA")
    assert code == 3 and "budget=20" in out and "budget=64" not in out
    code, out, _ = run("demo", "--example", "brouA", "--budget", "30")
    assert "budget=30" in out
    monkeypatch.setenv(cli.BUDGET_ENV, "lots")
    assert run("demo", "--example", "brouA")[0] == 2
    monkeypatch.setenv(cli.BUDGET_ENV, "-4")
    assert run("demo", "--example", "brouA")[0] == 2
    assert run("demo", "--example", "brouA", "--budget", "-1")[0] == 2


def test_json_output_is_byte_identical():
    argv = ("verify", "--field", "rational", "--mode", "random", "--seed", "4", "--n", "30", "--format", "json")
    assert run(*argv)[1] == run(*argv)[1]
    argv = ("demo", "--example", "all", "--format", "json")
    assert run(*argv)[1] == run(*argv)[1]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "desargues.cli", "demo", "--example", "brouB", "--budget", "16"],
                          capture_output=True, text=True)
    assert proc.returncode == 3 and proc.stdout.startswith("CHECK brouB.")
