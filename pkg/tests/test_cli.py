import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfgalois.cli import main
from hopfgalois.report import STATUSES, Report


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_catalog_list():
    code, out = run("catalog", "list")
    assert code == 0
    for name in ("taft", "podles-monopole", "sl2-nff", "group", "self-galois", "sweedler"):
        assert name in out


def test_catalog_export_loads_back(tmp_path):
    code, out = run("catalog", "export", "taft", "--param", "N=3")
    assert code == 0
    path = tmp_path / "t3.json"
    path.write_text(out)
    code, out = run("verify", str(path), "--suite", "hopf")
    assert code == 0


def test_verify_taft_all():
    code, out = run("verify", "taft", "--param", "N=2", "--suite", "all")
    assert code == 0
    assert "fail=0" in out


def test_verify_sl2_antipode():
    code, out = run("verify", "sl2-nff", "--suite", "antipode", "--degree", "6")
    assert code == 0


def test_characters_taft3():
    code, out = run("characters", "taft", "--param", "N=3")
    assert code == 0
    assert out.startswith("3 characters")
    assert "[1] 1 2 0" in out


def test_characters_json():
    code, out = run("characters", "group", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["suite"] == "characters"


@pytest.mark.parametrize("argv", [
    ["verify", "nope"],
    ["verify", "taft", "--suite", "bogus"],
    ["verify", "taft", "--param", "N"],
    ["catalog", "export"],
    ["characters", "podles-monopole"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv):
    code, _ = run(*argv)
    assert code == 2


def test_failures_exit_1(tmp_path):
    code, out = run("catalog", "export", "sl2-nff")
    spec = json.loads(out)
    spec["c_counits"]["alpha"] = "2"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(spec))
    code, out = run("verify", str(path), "--suite", "bialgebroid")
    assert code == 1
    assert "FAIL" in out


def test_json_schema_and_round_trip():
    code, out = run("verify", "taft", "--param", "N=2", "--suite", "crossed", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"entry", "suite", "degree", "checks"}
    assert all(set(c) == {"id", "anchor", "status", "witness"} for c in data["checks"])
    rep = Report.from_json(out)
    assert json.loads(rep.to_json()) == data
    assert rep.to_json() == out.rstrip("\n")


def test_determinism():
    a = run("verify", "podles-monopole", "--suite", "gauge", "--format", "json")
    b = run("verify", "podles-monopole", "--suite", "gauge", "--format", "json")
    assert a == b


def test_report_json():
    code, out = run("report", "--format", "json", "--suite", "hopf")
    data = json.loads(out)
    assert code == 0 and data["entry"] == "catalog"
    assert any(c["id"].startswith("taft[N=3]/") for c in data["checks"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfgalois", "catalog", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "taft" in proc.stdout


ids = st.text(alphabet="abcxyz/-019", min_size=1, max_size=12)


@given(st.lists(st.tuples(ids, st.sampled_from(STATUSES), st.lists(st.text(max_size=8), max_size=2)), max_size=8))
def test_report_json_round_trip(items):
    rep = Report("s", "e", 3)
    for i, status, wit in items:
        rep.add(i, "anchor", status, wit)
    again = Report.from_json(rep.to_json())
    assert again.to_json() == rep.to_json()
