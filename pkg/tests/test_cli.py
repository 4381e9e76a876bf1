import json

import pytest

from treelattice.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def inst_file(tmp_path):
    p = tmp_path / "inst.json"
    p.write_text(json.dumps({"d": 3, "F": [[1, 2, 0]], "Fprime": [[1, 2, 0], [1, 0, 2]],
                             "base_color": 0}))
    return str(p)


def test_inspect(capsys, inst_file):
    code, out, _ = run(capsys, "inspect", inst_file)
    info = json.loads(out)
    assert code == 0
    assert info["n"] == 2 and info["order_Fprime"] == 6
    assert len(info["generators"]) == 6
    assert info["F"]["regular"]


def test_inspect_reference_C(capsys):
    code, out, _ = run(capsys, "inspect", "C")
    assert code == 0 and json.loads(out)["n"] == 6


@pytest.mark.parametrize("bad", [
    {"d": 3, "F": [[1, 1, 0]], "Fprime": [[1, 2, 0]]},
    {"d": 3, "F": [[1, 2, 0]], "Fprime": [[1, 2, 0]]},
    {"d": 3, "Fprime": [[1, 2, 0]]},
])
def test_bad_instance_exits_2(capsys, tmp_path, bad):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    code, out, err = run(capsys, "verify", "--suite", "cocycle", "--instance", str(p))
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "inspect", str(tmp_path / "nope.json"))
    assert code == 2 and "error" in err


def test_ball_dot(capsys):
    code, out, _ = run(capsys, "ball", "--graph", "x", "--n", "2", "--d", "3", "--radius", "1")
    assert code == 0
    assert out.count("--") == 6 and out.count("type=1") == 4


@pytest.mark.parametrize("fmt", ["--graphml", "--json", "--dot"])
def test_ball_formats_deterministic(capsys, fmt):
    args = ("ball", "--graph", "c", "--n", "2", "--d", "3", "--radius", "2", fmt)
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second and first


def test_ball_dl(capsys):
    code, out, _ = run(capsys, "ball", "--graph", "dl", "--n", "2", "--radius", "2", "--json")
    assert code == 0
    assert len(json.loads(out)["vertices"]) == len(set(json.loads(out)["vertices"]))


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "A", "--config", "0:1,12:1", "--edge", "e:0")
    trace = json.loads(out)
    assert code == 0
    assert len(trace["steps"]) == 2
    assert trace["final"] == "|e:0"


def test_cayley(capsys):
    code, out, _ = run(capsys, "cayley", "A", "--radius", "2")
    res = json.loads(out)
    assert code == 0 and res["matches_x_ball"]


@pytest.mark.parametrize("suite", ["cocycle", "action", "icc", "gamma", "dl"])
def test_verify_passes(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--radius", "2")
    rep = json.loads(out)
    assert code == 0 and rep["overall"] == "pass"
    assert rep["suite"] == suite


def test_verify_lattice_default(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lattice")
    rep = json.loads(out)
    assert code == 0
    assert rep["checks"][0]["value"] is True


def test_verify_lattice_groups_file(capsys, tmp_path):
    p = tmp_path / "groups.json"
    p.write_text(json.dumps({"d": 3, "A": [], "B": [[1, 0, 2]]}))
    code, out, _ = run(capsys, "verify", "--suite", "lattice", "--groups", str(p))
    rep = json.loads(out)
    assert code == 0
    assert rep["checks"][0]["value"] is False


def test_verify_report_deterministic(capsys):
    args = ("verify", "--suite", "embedding", "--instance", "A", "--radius", "3", "--seed", "5")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_compare_dl(capsys):
    code, out, _ = run(capsys, "compare-dl", "--n", "2", "--radius", "2", "--show-map")
    res = json.loads(out)
    assert code == 0 and res["isomorphic"]
    assert len(res["map"]) == res["vertices"]
