import json

import pytest
from click.testing import CliRunner

from exactla import scale
from squared import SquaredCoalgebra, canonical
from serialization import comodule_to_model, save, squared_to_model
from shc import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def odd_file(tmp_path, v_odd):
    path = tmp_path / "odd.json"
    save(comodule_to_model(v_odd), str(path))
    return str(path)


def test_demo_passes(runner):
    result = runner.invoke(cli, ["demo", "kZ2-qt"])
    assert result.exit_code == 0, result.output
    assert "checks passed" in result.output


def test_verify_builtin_hopf(runner):
    result = runner.invoke(cli, ["verify", "hopf", "builtin:kZ2"])
    assert result.exit_code == 0, result.output


def test_verify_comodule_file(runner, odd_file):
    result = runner.invoke(cli, ["--json", "verify", "comodule", odd_file])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["ok"] is True


def test_corrupted_squared_exits_with_axiom_failure(runner, tmp_path, k2):
    S = canonical(k2)
    path = tmp_path / "broken.json"
    save(squared_to_model(SquaredCoalgebra(S.C, S.delta, scale(S.eps, 2), "broken")), str(path))
    result = runner.invoke(cli, ["--json", "verify", "squared", str(path)])
    assert result.exit_code == 1
    entries = {e["check"]: e["status"] for e in json.loads(result.output)["entries"]}
    assert entries["e23b"] == "fail"
    assert entries["d23a"] == "pass"


def test_missing_dual_table_is_an_input_error(runner):
    result = runner.invoke(cli, ["coend", "builtin:kZ2-odd", "--antipode"])
    assert result.exit_code == 2


def test_c58_deficit_is_an_axiom_failure(runner):
    result = runner.invoke(cli, ["coend", "builtin:kZ2-odd", "--check-c58"])
    assert result.exit_code == 1
    assert "c58-closure[I]" in result.output


def test_ribbon_coend_round_trip(runner, tmp_path):
    out = tmp_path / "ribbon.json"
    result = runner.invoke(cli, ["coend", "builtin:kZ2-qt", "--ribbon", "-o", str(out)])
    assert result.exit_code == 0, result.output
    for kind in ("bicoalgebra", "hopf-coalgebra", "quasitriangular", "ribbon"):
        verified = runner.invoke(cli, ["verify", kind, str(out)])
        assert verified.exit_code == 0, (kind, verified.output)
    opposite = runner.invoke(cli, ["opposite", str(out), "-o", str(tmp_path / "dual.json")])
    assert opposite.exit_code == 0, opposite.output


def test_coend_output_is_byte_stable(runner, tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for out in (first, second):
        assert runner.invoke(cli, ["coend", "builtin:kZ2-qt", "--antipode", "-o", str(out)]).exit_code == 0
    assert first.read_bytes() == second.read_bytes()


def test_coalgebra_document_without_structure_is_rejected(runner, tmp_path):
    out = tmp_path / "plain.json"
    assert runner.invoke(cli, ["coend", "builtin:trivial-k2", "-o", str(out)]).exit_code == 0
    result = runner.invoke(cli, ["verify", "ribbon", str(out)])
    assert result.exit_code == 2


def test_eval(runner, odd_file):
    result = runner.invoke(cli, ["eval", "X_1 ⊗ X_2", "--bind", f"X={odd_file}"])
    assert result.exit_code == 0, result.output
    assert "level 2, dimension 1" in result.output


def test_eval_json(runner, odd_file):
    result = runner.invoke(cli, ["--json", "eval", "X_{1} (.) I_{2}", "--bind", f"X={odd_file}"])
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["level"] == 2
    assert data["coaction"] == [["0"], ["0"], ["1"], ["0"]]


@pytest.mark.parametrize("args", [
    ["eval", "X_1", "--bind", "X"],
    ["eval", "X_{12}", "--bind", "X=missing.json"],
    ["eval", "X_1 ⊗ 2"],
    ["verify", "comodule", "missing.json"],
    ["verify", "hopf", "builtin:kZ0"],
])
def test_input_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_bad_field_option(runner):
    assert runner.invoke(cli, ["--field", "GF(4)", "demo", "kZ2-qt"]).exit_code == 2


def test_field_from_environment(runner):
    assert runner.invoke(cli, ["demo", "trivial-comatrix"], env={"SHC_FIELD": "GF(4)"}).exit_code == 2
    assert runner.invoke(cli, ["demo", "trivial-comatrix"], env={"SHC_FIELD": "GF(7)"}).exit_code == 0


def test_failed_report_writes_no_document(runner, tmp_path):
    out = tmp_path / "odd.json"
    result = runner.invoke(cli, ["coend", "builtin:kZ2-odd", "--check-c58", "-o", str(out)])
    assert result.exit_code == 1
    assert not out.exists()


def test_document_field_wins_unless_pinned(runner, tmp_path):
    out = tmp_path / "ribbon7.json"
    made = runner.invoke(cli, ["--field", "GF(7)", "coend", "builtin:kZ2-qt", "--ribbon", "-o", str(out)])
    assert made.exit_code == 0, made.output
    assert json.loads(out.read_text())["field"] == "GF(7)"
    assert runner.invoke(cli, ["verify", "ribbon", str(out)]).exit_code == 0
    assert runner.invoke(cli, ["--field", "GF(7)", "verify", "ribbon", str(out)]).exit_code == 0
    clash = runner.invoke(cli, ["--field", "QQ", "verify", "ribbon", str(out)])
    assert clash.exit_code == 2
    assert "FieldMismatch" in clash.output
    assert runner.invoke(cli, ["opposite", str(out)], env={"SHC_FIELD": "GF(3)"}).exit_code == 2
