import json
import subprocess
import sys

import pytest

from boxideal.cli import main
from boxideal.segre import ConcreteTensor


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == 1
    return code, doc


def test_minors(capsys):
    assert run_json(capsys, "minors", "2x2")[1]["count"] == 1
    assert run_json(capsys, "minors", "2x2x2")[1]["count"] == 12
    assert run_json(capsys, "minors", "1x5")[1]["generators"] == []


def test_malformed_spec_is_an_input_error(capsys):
    code, _, err = run(capsys, "minors", "2xq")
    assert code == 2 and "malformed" in err


@pytest.mark.parametrize("spec", ["2x3", "2x2x3"])
def test_gb_verify_passes(capsys, spec):
    code, doc = run_json(capsys, "gb-verify", spec)
    assert code == 0 and doc["status"] == "pass"


def test_gb_verify_mutation_fails_with_certificate(capsys):
    code, doc = run_json(capsys, "gb-verify", "2x2x2", "--mutate")
    assert code == 1 and doc["status"] == "fail"
    assert doc["remainder"] and len(doc["failing_pair"]) == 2


def test_budget_exhaustion_exit_code(capsys):
    code, _, err = run(capsys, "segre-kernel", "2x2x2", "--budget-spairs", "1")
    assert code == 3 and "budget" in err


def test_hilbert_rows(capsys):
    code, doc = run_json(capsys, "hilbert", "2x2x2", "--tmax", "3")
    assert code == 0 and all(r["agree"] for r in doc["rows"])
    assert doc["rows"][0]["formula"] == [0, 1]
    code, doc = run_json(capsys, "hilbert", "3x3", "--tmax", "2")
    assert doc["rows"][2]["formula"][0] == 9


def test_segre_kernel(capsys):
    assert run_json(capsys, "segre-kernel", "2x2")[1]["status"] == "equal"
    assert run_json(capsys, "segre-kernel", "2x2x2")[1]["status"] == "equal"
    code, _, err = run(capsys, "segre-kernel", "3x3x3")
    assert code == 2 and "gate" in err


def test_decompose(capsys, tmp_path):
    rank_one = tmp_path / "r1.json"
    rank_one.write_text(json.dumps(ConcreteTensor.outer([(1, 2), (3, 5, 7)]).to_json()))
    code, doc = run_json(capsys, "decompose", str(rank_one))
    assert code == 0 and doc["decomposable"] and doc["factors"] == [["1", "2"], ["3", "5", "7"]]

    bumped = tmp_path / "p.json"
    bumped.write_text(json.dumps({"sizes": [2, 2], "entries": [{"pos": [1, 1], "value": "1"},
                                                                {"pos": [2, 2], "value": "1"}]}))
    code, doc = run_json(capsys, "decompose", str(bumped))
    assert not doc["decomposable"] and doc["witness"]["value"] == "1"

    zero = tmp_path / "z.json"
    zero.write_text(json.dumps({"sizes": [2, 2], "entries": []}))
    assert run(capsys, "decompose", str(zero))[0] == 2
    assert run(capsys, "decompose", str(tmp_path / "missing.json"))[0] == 2


def test_blowup(capsys):
    code, doc = run_json(capsys, "blowup", "--d", "2", "--n", "1", "--seed", "7")
    assert code == 0 and doc["status"] == "pass"
    assert len(doc["model"]["relations"]) == 2
    assert len(doc["model"]["ideal"]["generators"]) == 11
    code, doc = run_json(capsys, "blowup", "--d", "1", "--n", "1")
    surf = doc["checks"]["surface"][0]
    assert surf["status"] == "pass" and "degree 3 " in surf["detail"]
    assert run(capsys, "blowup", "--d", "0", "--n", "1")[0] == 2


def test_text_output_and_out_file(capsys, tmp_path):
    code, out, _ = run(capsys, "gb-verify", "2x2")
    assert out.startswith("gb-verify 2x2: pass")
    target = tmp_path / "o.json"
    assert main(["minors", "2x3", "--format", "json", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["count"] == 3


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "boxideal", "minors", "2x2"], capture_output=True, text=True)
    assert res.returncode == 0 and "x[1,2]*x[2,1]" in res.stdout
