import json

import pytest

from e2quiver.cli import main
from e2quiver.euclid import EuclideanModule, from_quiver, to_quiver
from e2quiver.moduli import Partition, framed_point, young_module
from e2quiver.preproj import QuiverRep, direct_sum


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, f"exit {code}, stderr: {err}, stdout: {out}"
    return json.loads(out)


def write_json(path, doc):
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


@pytest.fixture
def hook_module_path(tmp_path):
    gs = young_module(Partition.of(2, 1), 0)
    return write_json(tmp_path / "hook.json", gs.module.to_json_dict())


def test_verify_valid_module(capsys, hook_module_path):
    doc = run_json(capsys, "verify", "--module", hook_module_path)
    assert doc == {"valid": True, "violations": []}


def test_verify_invalid_module_exits_1(capsys, tmp_path):
    bad = {
        "dims": {"0": 1, "1": 1},
        "p_plus": {"0": [["1"]]},
        "p_minus": {"1": [["1"]]},
    }
    path = write_json(tmp_path / "bad.json", bad)
    code, out, _ = run_cli(capsys, "verify", "--module", path)
    assert code == 1
    doc = json.loads(out)
    assert doc["valid"] is False and doc["violations"]


def test_young_command_matches_residues(capsys):
    doc = run_json(capsys, "young", "--partition", "[2,1]", "--weight", "0")
    assert doc["dims"] == {"-1": 1, "0": 1, "1": 1}
    assert doc["generators"] == [{"weight": 0, "vector": ["1"]}]
    # emitted module re-parses to the library object
    assert EuclideanModule.from_json_dict(doc["module"]) == young_module(Partition.of(2, 1), 0).module


def test_residue_dims_command(capsys):
    doc = run_json(capsys, "residue-dims", "--partition", "[3,1]", "--weight", "2")
    assert doc == {"dims": {"1": 1, "2": 1, "3": 1, "4": 1}}


def test_enumerate_thin_sixteen(capsys):
    docs = run_json(capsys, "enumerate-thin", "--window", "0", "4")
    assert len(docs) == 16
    assert all(d["indecomposable"] is True for d in docs)
    reps = [QuiverRep.from_json_dict(d) for d in docs]
    assert len({json.dumps(r.to_json_dict(), sort_keys=True) for r in reps}) == 16


def test_enumerate_thin_with_decomposables(capsys):
    docs = run_json(capsys, "enumerate-thin", "--window", "0", "2", "--include-decomposables")
    assert len(docs) == 3 ** 2
    assert sum(1 for d in docs if d["indecomposable"]) == 4


def test_to_quiver_round_trip(capsys, hook_module_path):
    doc = run_json(capsys, "to-quiver", "--module", hook_module_path)
    rep = QuiverRep.from_json_dict(doc)
    assert rep == to_quiver(young_module(Partition.of(2, 1), 0).module)


def test_from_quiver_round_trip(capsys, tmp_path):
    rep = to_quiver(young_module(Partition.of(2, 2), 0).module)
    path = write_json(tmp_path / "rep.json", rep.to_json_dict())
    doc = run_json(capsys, "from-quiver", "--module", path)
    assert EuclideanModule.from_json_dict(doc) == from_quiver(rep)


def test_from_quiver_rejects_relation_violation(capsys, tmp_path):
    bad = {
        "window": [0, 1],
        "dims": {"0": 1, "1": 1},
        "maps": {"h0": [["1"]], "hbar0": [["1"]]},
    }
    path = write_json(tmp_path / "bad_rep.json", bad)
    code, out, _ = run_cli(capsys, "from-quiver", "--module", path)
    assert code == 1
    assert "error" in json.loads(out)


def test_shift_command(capsys, tmp_path, hook_module_path):
    doc = run_json(capsys, "shift", "--module", hook_module_path, "--weight", "2")
    assert doc["dims"] == {"1": 1, "2": 1, "3": 1}


def test_stable_command(capsys, tmp_path):
    p = framed_point(young_module(Partition.of(3, 1), 0))
    path = write_json(tmp_path / "framed.json", p.to_json_dict())
    assert run_json(capsys, "stable", "--module", path) == {"stable": True}


def test_dim_formula_command(capsys):
    doc = run_json(capsys, "dim-formula", "--v", '{"0": 2}', "--w", '{"0": 1}')
    assert doc == {"dimension": -2, "empty_advisory": True}


def test_iso_command(capsys, tmp_path):
    x = to_quiver(young_module(Partition.of(2), 0).module)
    y = to_quiver(young_module(Partition.of(1, 1), 1).module)
    px = write_json(tmp_path / "x.json", x.to_json_dict())
    py = write_json(tmp_path / "y.json", y.to_json_dict())
    assert run_json(capsys, "iso", "--module", px, "--module", px) == {"isomorphic": True}
    assert run_json(
        capsys, "iso", "--module", px, "--module", py, "--exhaustive"
    ) == {"isomorphic": False}


def test_framed_iso_command(capsys, tmp_path):
    p = framed_point(young_module(Partition.of(2, 1), 0))
    path = write_json(tmp_path / "p.json", p.to_json_dict())
    doc = run_json(capsys, "framed-iso", "--module", path, "--module", path)
    assert doc == {"equivalent": True}


def test_iso_requires_two_modules(capsys, tmp_path):
    x = to_quiver(young_module(Partition.of(2), 0).module)
    px = write_json(tmp_path / "x.json", x.to_json_dict())
    code, out, _ = run_cli(capsys, "iso", "--module", px)
    assert code == 1
    assert "error" in json.loads(out)


def test_decompose_command(capsys, tmp_path):
    x = to_quiver(young_module(Partition.of(2), 0).module)
    path = write_json(tmp_path / "sum.json", direct_sum(x, x).to_json_dict())
    doc = run_json(capsys, "decompose", "--module", path)
    assert doc["count"] == 2
    assert doc["complete"] is True
    assert all(s["verdict"] == "indecomposable" for s in doc["summands"])


def test_end_algebra_command(capsys, tmp_path):
    x = to_quiver(young_module(Partition.of(2), 0).module)
    path = write_json(tmp_path / "x.json", x.to_json_dict())
    doc = run_json(capsys, "end-algebra", "--module", path)
    assert doc == {"dim": 1, "radical_dim": 0, "semisimple_quotient_dim": 1}


def test_apply_word_command(capsys, hook_module_path):
    doc = run_json(
        capsys,
        "apply-word",
        "--module",
        hook_module_path,
        "--word",
        '["P+", "Proj:0"]',
        "--vector",
        '{"0": ["1"]}',
    )
    assert doc == {"result": {"1": ["1"]}}


def test_weight_runs_command(capsys):
    doc = run_json(capsys, "weight-runs", "--set", "[0, 1, 2, 5, 6]")
    assert doc == {
        "runs": [[0, 2], [5, 6]],
        "max_run_length": 3,
        "finite_type_guarantee": True,
    }
    doc = run_json(capsys, "weight-runs", "--set", "[0, 1, 2, 3, 4]")
    assert doc["finite_type_guarantee"] is False


def test_stdin_input(capsys, monkeypatch):
    import io

    gs = young_module(Partition.of(2), 0)
    payload = json.dumps(gs.module.to_json_dict())
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    doc = run_json(capsys, "verify", "--module", "-")
    assert doc["valid"] is True


def test_malformed_json_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, out, err = run_cli(capsys, "verify", "--module", str(path))
    assert code == 2
    assert out == ""
    assert "malformed JSON" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate-thin"])  # missing --window
    assert exc.value.code == 2


def test_identical_seeds_identical_output(capsys, tmp_path):
    x = to_quiver(young_module(Partition.of(2, 1), 0).module)
    moved = direct_sum(x, x)
    px = write_json(tmp_path / "a.json", moved.to_json_dict())
    _, out1, _ = run_cli(capsys, "iso", "--module", px, "--module", px, "--seed", "7")
    _, out2, _ = run_cli(capsys, "iso", "--module", px, "--module", px, "--seed", "7")
    assert out1 == out2


def test_emitted_documents_reparse(capsys):
    docs = run_json(capsys, "enumerate-thin", "--window", "0", "2")
    for doc in docs:
        rep = QuiverRep.from_json_dict(doc)
        emitted = rep.to_json_dict()
        assert emitted["dims"] == doc["dims"]
        assert emitted["maps"] == doc["maps"]
