import json

import pytest

from relhom.fixtures import EXAMPLE_BASIS, lu_example
from relhom.io.cli import main
from relhom.io.files import (InputError, algebra_from_dict, algebra_to_dict, digest, dumps,
                             parse_scalar)
from relhom.exactla import GF, QQ


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out), out


@pytest.fixture()
def lu(tmp_path, capsys):
    code, _, _ = run(capsys, "example", "lu", "--out", tmp_path)
    assert code == 0
    return tmp_path / "lu.algebra.json", tmp_path / "lu.pair.json"


def test_example_writes_fixture(lu):
    alg, pair = lu
    doc = json.loads(alg.read_text())
    assert doc["basis_names"] == list(EXAMPLE_BASIS)
    assert doc["dim"] == 10
    p = json.loads(pair.read_text())
    assert p["algebra"] == digest(doc)
    assert set(p["subrings"]) == {"S", "L", "U"}
    assert p["idempotents"] == {"e": {"e11": "1/1"}}


def test_round_trip_is_byte_identical(lu):
    alg, _ = lu
    text = alg.read_text()
    assert dumps(algebra_to_dict(algebra_from_dict(json.loads(text)))) == text
    assert algebra_from_dict(json.loads(text)) == lu_example().algebra


def test_reports_are_deterministic(lu, capsys):
    alg, pair = lu
    first = run(capsys, "tor", alg, "--pair", pair, "Abar", "Abar", "--degree", 2)[2]
    second = run(capsys, "tor", alg, "--pair", pair, "Abar", "Abar", "--degree", 2)[2]
    assert first == second


def test_ideal_and_quotient(lu, capsys, tmp_path):
    alg, pair = lu
    code, rep, _ = run(capsys, "ideal", alg, "e11")
    assert code == 0 and rep["result"]["dim"] == 9
    out = tmp_path / "q.json"
    code, rep, _ = run(capsys, "quotient", alg, "--pair", pair, "--out", out)
    assert code == 0 and rep["result"]["dim_quotient"] == 1
    code, rep, _ = run(capsys, "check", out)
    assert code == 0 and rep["verdict"] == "pass"


def test_peirce(lu, capsys):
    alg, pair = lu
    code, rep, _ = run(capsys, "peirce", alg, "--pair", pair, "--idempotent", "e")
    assert code == 0
    assert rep["result"]["dims"] == {"eAe": 4, "eAebar": 2, "ebarAe": 2, "ebarAebar": 2}


def test_stratify_lu_example(lu, capsys):
    alg, pair = lu
    code, rep, _ = run(capsys, "stratify", alg, "--pair", pair)
    assert code == 0
    assert rep["verdict"] == "stratifying-up-to-4"
    assert rep["degree"] == 4
    assert rep["result"]["tor_dims"] == [1, 0, 0, 0, 0]


def test_stratify_failure_exits_one(tmp_path, capsys):
    run(capsys, "example", "zero-relation", "--out", tmp_path)
    code, rep, _ = run(capsys, "stratify", tmp_path / "zero-relation.algebra.json",
                       "--pair", tmp_path / "zero-relation.pair.json", "--idempotent", "e2")
    assert code == 1 and rep["verdict"] == "fails-at-2"


def test_bar_and_lu(lu, capsys):
    alg, pair = lu
    code, rep, _ = run(capsys, "bar", alg, "--pair", pair, "Abar", "--degree", 2)
    assert code == 0 and rep["result"]["dims"] == {"-1": 1, "0": 4, "1": 20, "2": 104}
    code, rep, _ = run(capsys, "lu", alg, "--pair", pair)
    assert code == 0 and rep["result"] == {"dim_tensor": 10, "dim_algebra": 10}
    code, rep, _ = run(capsys, "lu", alg, "--pair", pair, "--theorem", "--degree", 2)
    assert code == 0 and rep["verdict"] == "stratifying-up-to-2"
    code, rep, _ = run(capsys, "lu", alg, "--pair", pair, "--lower", "U", "--upper", "L")
    assert code == 1


def test_field_override(lu, capsys):
    alg, pair = lu
    code, rep, _ = run(capsys, "lu", alg, "--pair", pair, "--field", "fp:5")
    assert code == 0
    code, rep, _ = run(capsys, "check", alg, "--field", "R")
    assert code == 2


def test_twist_build(tmp_path, capsys, lu):
    run(capsys, "example", "lu-factors", "--out", tmp_path)
    files = [tmp_path / f"factors.{n}.json" for n in ("L", "U", "S", "tau")]
    out = tmp_path / "built.json"
    code, rep, _ = run(capsys, "twist-build", *files, "--order", ",".join(EXAMPLE_BASIS),
                       "--out", out)
    assert code == 0
    assert out.read_text() == lu[0].read_text()
    tau = json.loads(files[3].read_text())
    for entry in tau["tau"]:
        if entry["u"] == "w":
            entry["image"] = [{"l": "e22", "u": "e22", "c": "1"}]
    files[3].write_text(json.dumps(tau))
    code, rep, _ = run(capsys, "twist-build", *files)
    assert code == 1 and rep["verdict"] == "not-associative"
    assert ["e11", "w", "v"] in rep["result"]["associativity_witnesses"]


def test_input_errors_exit_two(tmp_path, capsys, lu):
    alg, pair = lu
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "check", junk)[0] == 2
    junk.write_text(json.dumps({"field": "Q"}))
    assert run(capsys, "check", junk)[0] == 2
    assert run(capsys, "check", tmp_path / "missing.json")[0] == 2
    other = tmp_path / "other.pair.json"
    doc = json.loads(pair.read_text())
    doc["algebra"] = "sha256:0"
    other.write_text(json.dumps(doc))
    code, rep, _ = run(capsys, "stratify", alg, "--pair", other)
    assert code == 2 and "does not match" in rep["error"]
    assert run(capsys, "stratify", alg, "--pair", pair, "--idempotent", "x")[0] == 2
    assert run(capsys, "tor", alg, "--pair", pair, "Abar", "Nope")[0] == 2


def test_check_reports_non_associative(tmp_path, capsys):
    doc = {"field": "Q", "dim": 2, "basis_names": ["1", "a"], "unit": ["1", "0"],
           "mult": [{"i": 0, "j": 0, "k": 0, "c": "1"}, {"i": 0, "j": 1, "k": 1, "c": "1"},
                    {"i": 1, "j": 0, "k": 1, "c": "1"}, {"i": 1, "j": 1, "k": 0, "c": "1"},
                    {"i": 1, "j": 1, "k": 1, "c": "1"}]}
    path = tmp_path / "a.json"
    path.write_text(json.dumps(doc))
    code, rep, _ = run(capsys, "check", path)
    assert code == 0  # a^2 = 1 + a is a fine commutative algebra
    doc["unit"] = ["0", "1"]
    path.write_text(json.dumps(doc))
    code, rep, _ = run(capsys, "check", path)
    assert code == 1


def test_scalar_parsing():
    assert parse_scalar(QQ, "3/6") == QQ(1) / 2
    assert parse_scalar(GF(7), "1/2") == 4
    for bad in ("x", 1.5, True, "1/0"):
        with pytest.raises(InputError):
            parse_scalar(QQ, bad)
