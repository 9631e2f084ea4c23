import json
import subprocess
import sys

import pytest

from cevconic.cli import catalog_name, main
from cevconic.kernel import HPoint
from cevconic.triangle import parse_rational

GERG = ["--triangle", "0,0;4,0;0,3", "--bary", "6:2:3"]


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_gergonne_json(capsys):
    code, out, _ = run(capsys, "catalog", *GERG, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"triangle", "point", "catalog", "conic", "reports"}
    assert doc["catalog"]["Z"] == ["1", "2"]
    assert doc["conic"]["class"] == "hyperbola"
    assert doc["conic"]["center"] == ["1", "2"]
    assert doc["conic"]["coeffs"] == ["2", "1", "-2", "-4", "3", "0"]
    assert doc["catalog"]["Pprime"] == ["2", "1"]
    assert doc["triangle"] == [["0", "0"], ["4", "0"], ["0", "3"]]


def test_json_round_trip_has_no_floats(capsys):
    _, out, _ = run(capsys, "catalog", *GERG)
    doc = json.loads(out)
    for name, value in doc["catalog"].items():
        if isinstance(value, dict):
            dx, dy = (int(t) for t in value["infinite"])
            continue
        x, y = (parse_rational(t) for t in value)
        assert HPoint(x, y).xy == (x, y)
        assert all("." not in t and "e" not in t for t in value)


def test_catalog_centroid_exit_2(capsys):
    code, _, err = run(capsys, "catalog", "--triangle", "0,0;4,0;0,3", "--point", "4/3,1")
    assert code == 2 and "centroid" in err


def test_catalog_orthocenter(capsys):
    code, out, _ = run(capsys, "catalog", "--triangle", "0,0;4,0;1,3", "--point", "1,1")
    assert code == 0
    assert json.loads(out)["catalog"]["Qprime"] == ["2", "1"]


def test_catalog_text(capsys):
    code, out, _ = run(capsys, "catalog", *GERG, "--format", "text")
    assert code == 0 and "hyperbola" in out and "center: (1, 2)" in out


def test_catalog_median_has_null_conic(capsys):
    code, out, _ = run(capsys, "catalog", "--triangle", "0,0;4,0;0,3", "--bary", "2:1:1")
    doc = json.loads(out)
    assert code == 0 and doc["conic"] is None and "Z" not in doc["catalog"]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", *GERG)
    assert code == 0
    reports = json.loads(out)["reports"]
    assert [r["id"] for r in reports][:2] == ["thm2.1", "cor2.2"]
    assert {r["status"] for r in reports} <= {"holds", "hypothesis_not_met"}


@pytest.mark.parametrize("args", [
    ["catalog", "--triangle", "0,0;4,0;0,3", "--point", "0.5,1"],
    ["catalog", "--triangle", "0,0;4,0;0,3"],
    ["catalog", "--point", "1,1"],
    ["catalog", "--triangle", "0,0;1,1;2,2", "--point", "1,3"],
    ["catalog", "--triangle", "0,0;4,0;0,3", "--point", "1,1", "--bary", "1:1:1"],
    ["nonsense"],
    ["fuzz", "--count", "1.5"],
    ["fuzz", "--count", "-4"],
])
def test_parse_errors_exit_3(capsys, args):
    code = None
    try:
        code = main(args)
    except SystemExit as exc:
        code = exc.code
    assert code == 3


def test_inadmissible_exit_2(capsys):
    code, _, _ = run(capsys, "verify", "--triangle", "0,0;4,0;0,3", "--point", "2,0")
    assert code == 2
    # bary summing to zero is a point at infinity
    code, _, _ = run(capsys, "verify", "--triangle", "0,0;4,0;0,3", "--bary", "1:1:-2")
    assert code == 2


def test_fuzz_text_and_seed_env(capsys, monkeypatch):
    code, out, _ = run(capsys, "fuzz", "--seed", "4", "--count", "30")
    assert code == 0 and "FAILED: 0" in out
    monkeypatch.setenv("CEVCONIC_SEED", "4")
    _, env_out, _ = run(capsys, "fuzz", "--count", "30")
    assert env_out == out
    monkeypatch.setenv("CEVCONIC_SEED", "oops")
    assert run(capsys, "fuzz", "--count", "3")[0] == 3


def test_fuzz_json(capsys):
    code, out, _ = run(capsys, "fuzz", "--seed", "2", "--count", "25", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["failed"] == 0 and doc["count"] == 25


def test_out_file_and_io_error(capsys, tmp_path):
    target = tmp_path / "cat.json"
    assert main(["catalog", *GERG, "--out", str(target)]) == 0
    assert json.loads(target.read_text())["catalog"]["Z"] == ["1", "2"]
    assert main(["svg", *GERG, "--out", str(tmp_path / "missing" / "x.svg")]) == 4


def test_catalog_names():
    assert catalog_name("Qp") == "Qprime"
    assert catalog_name("A0p") == "A0prime"
    assert catalog_name("P") == "P"
    assert catalog_name("Vinf") == "Vinf"


def test_console_script_svg_stdout():
    out = subprocess.run([sys.executable, "-m", "cevconic.cli", "svg", *GERG, "--out", "-"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.startswith("<svg")
