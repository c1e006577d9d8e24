import json
import subprocess
import sys

import pytest

from regobj import verify
from regobj.abcat import make_morphism, make_object
from regobj.cli import main, run_command
from regobj.graded import GradedAlgebra
from regobj.matops import Matrix
from regobj.rings import FiniteRing
from conftest import DATA


def run(*argv):
    code, out, err = run_command([*argv[:1], *[str(DATA / a) if a.endswith(".json") else a for a in argv[1:]],
                                  "--no-timing"])
    verdict = json.loads(out) if out else None
    return code, verdict, err


def test_verdict_shape():
    code, v, err = run("geninv", "f_f2.json")
    assert code == 0 and err == ""
    assert list(v) == ["command", "result", "obstruction", "elapsed_ms"]
    assert v["command"] == "geninv" and v["elapsed_ms"] == 0
    assert v["result"] == {"ring": "Fp:2", "rows": 2, "cols": 2, "entries": [[1, 0], [0, 0]]}


def test_elapsed_ms_is_an_integer():
    code, out, _ = run_command(["snf", str(DATA / "snf_a.json")])
    assert code == 0 and isinstance(json.loads(out)["elapsed_ms"], int)


def test_geninv_idempotent_returns_itself():
    code, v, _ = run("geninv", "idem_q.json")
    f = make_morphism(json.loads((DATA / "idem_q.json").read_text()))
    assert code == 0 and Matrix.from_json(v["result"]) == f.matrix


def test_geninv_failure_is_exit_zero():
    code, v, _ = run("geninv", "times2_z.json")
    assert code == 0 and v["result"] is None and v["obstruction"] == "image-not-summand"


def test_geninv_search_method_and_sets():
    code, v, _ = run("geninv", "f_f2.json", "--method", "search")
    assert code == 0 and v["result"]["entries"] == [[0, 0], [1, 0]]
    code, v, _ = run("geninv", "setmap.json")
    assert code == 0 and v["result"] == [0, 2]


def test_regular_pair_golden():
    code, v, _ = run("regular-pair", "z4.json", "z2.json")
    assert code == 0 and v["result"] is False and v["obstruction"] == "kernel-not-summand"
    witness = make_morphism(v["witness"])
    assert witness.domain == make_object(json.loads((DATA / "z4.json").read_text()))
    code, v, _ = run("regular-pair", "z6_over_z6.json", "z6_over_z6.json")
    assert code == 0 and v["result"] is True and v["obstruction"] is None


def test_regular_pair_sampled_mode_is_labelled():
    code, v, _ = run("regular-pair", "z4.json", "z2.json", "--sample", "5", "--seed", "2")
    assert code == 0 and v["mode"] == "sampled" and v["samples"] == 5


def test_regular_object_golden():
    assert run("regular-object", "z2_over_z.json")[1]["result"] is False
    assert run("regular-object", "z6_over_z6.json")[1]["result"] is True


def test_summand_golden():
    code, v, _ = run("summand", "mono_z2_z4.json")
    assert v["result"] == {"retraction": None, "summand": False}
    code, v, _ = run("summand", "epi_z4_z2.json")
    assert v["result"] == {"section": None, "summand": False}
    code, v, err = run("summand", "times2_z.json")  # ×2 on Z is mono, image 2Z not a summand
    assert code == 0 and v["result"]["summand"] is False


def test_snf_hnf_golden():
    code, v, _ = run("snf", "snf_a.json")
    assert code == 0 and v["result"] == {"invariant_factors": [2, 4]}
    code, v, _ = run("snf", "snf_a.json", "--full")
    D, P, Q = (Matrix.from_json(v["result"][k]) for k in "DPQ")
    A = Matrix.from_json(json.loads((DATA / "snf_a.json").read_text()))
    assert P @ A @ Q == D
    code, v, _ = run("hnf", "snf_a.json")
    H, U = Matrix.from_json(v["result"]["H"]), Matrix.from_json(v["result"]["U"])
    assert U @ A == H


def test_ring_commands():
    code, v, _ = run("endring", "z4.json")
    R = FiniteRing.from_json(v["result"])
    assert R.order == 4
    assert run("vnregular", "z4.json")[1]["result"] is False
    assert run("semiprime", "z6_over_z6.json")[1]["result"] is True
    assert run("radical", "z4.json")[1]["result"] == [0, 2]
    # ring JSON round trip through a file
    assert FiniteRing.from_json(json.loads(json.dumps(v["result"]))).to_json() == v["result"]


def test_ring_commands_accept_ring_json(tmp_path):
    code, v, _ = run("endring", "z4.json")
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(v["result"]))
    code, out, _ = run_command(["radical", str(path)])
    assert code == 0 and json.loads(out)["result"] == [0, 2]


def test_graded_commands():
    assert run("grreg", "f2c2.json")[1]["result"] is True
    assert run("suspension-regular", "f2c2.json")[1]["result"] is True
    assert run("suspension-regular", "f2c2.json", "--sigma", "1")[1]["result"] is True
    code, v, _ = run("smash", "f2c2.json", "--summary")
    assert v["result"] == {"order": 16, "vn_regular": True, "semiprime": True}
    code, v, _ = run("smash", "f2c2.json")
    assert FiniteRing.from_json(v["result"]).order == 16
    A = json.loads((DATA / "f2c2.json").read_text())
    assert GradedAlgebra.from_json(A).to_json() == A


def test_cosemisimple_command():
    assert run("cosemisimple", "dual_numbers.json")[1]["result"] is False
    assert run("cosemisimple", "f2xf2.json")[1]["result"] is True


def test_explain_traces():
    code, v, _ = run("explain", "f_f2.json")
    assert code == 0 and v["obstruction"] is None
    t = v["result"]
    for key in ("image", "retraction", "section", "g", "h"):
        assert key in t
    assert t["h"]["matrix"]["entries"] == [[1, 0], [0, 0]]
    code, v, _ = run("explain", "zero_f2.json")
    assert v["result"]["image"]["object"]["dim"] == 0
    assert v["result"]["h"]["matrix"]["entries"] == [[0, 0], [0, 0]]
    code, v, _ = run("explain", "times2_z.json")
    assert v["obstruction"] == "image-not-summand" and "section" not in v["result"]


@pytest.mark.parametrize("argv", [
    ("regular-object", "bad.json"),
    ("snf", "garbage.json"),
    ("snf", "does-not-exist.json"),
    ("geninv", "z4.json"),          # an object, not a morphism
    ("frobnicate", "z4.json"),
])
def test_malformed_input_exit_2(argv):
    code, v, err = run(*argv)
    assert code == 2 and v is None and err.strip()


@pytest.mark.parametrize("argv", [
    ("endring", "huge.json"),
    ("regular-pair", "z4.json", "z4.json", "--budget", "2"),
])
def test_budget_exhaustion_exit_3(argv):
    code, v, err = run(*argv)
    assert code == 3 and v is None and "budget" in err


def test_verify_writes_report(tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run_command(["verify", "coalgebra", "--report", str(report), "--no-timing"])
    assert code == 0
    data = json.loads(report.read_text())
    assert data["failures"] == 0 and data["suites"][0]["cases"] == 24
    assert json.loads(out)["result"] == data


def test_verify_failure_exit_1(monkeypatch):
    def broken(case, budget):
        return 1, [{"kind": "injected", "repro": {"M": case["M"]}}]

    monkeypatch.setitem(verify._CHECKS, "central", broken)
    code, out, _ = run_command(["verify", "central-lemma"])
    v = json.loads(out)
    assert code == 1
    fail = v["result"]["suites"][0]["failures"][0]
    assert fail["kind"] == "injected" and "case" in fail and "repro" in fail


def test_console_script_and_module_entry():
    out = subprocess.run([sys.executable, "-m", "regobj", "snf", str(DATA / "snf_a.json"), "--no-timing"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["result"] == {"invariant_factors": [2, 4]}
    out = subprocess.run([sys.executable, "-m", "regobj", "snf", str(DATA / "garbage.json")],
                         capture_output=True, text=True)
    assert out.returncode == 2 and out.stdout == ""


def test_same_input_same_bytes():
    a = run_command(["regular-pair", str(DATA / "z4.json"), str(DATA / "z2.json"), "--no-timing"])
    b = run_command(["regular-pair", str(DATA / "z4.json"), str(DATA / "z2.json"), "--no-timing"])
    assert a == b


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
