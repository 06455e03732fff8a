import json
from dataclasses import replace

import pytest
from pydantic import ValidationError

from exactla import Field, scale
from hopf import builtin
from squared import SquaredCoalgebra, canonical, check_squared
from coend import build_coend, check_structures, induce_ribbon
from coend.fixtures import kz2_qt
from serialization import (
    ComoduleModel,
    SquaredModel,
    coend_from_model,
    coend_to_model,
    comodule_from_model,
    comodule_to_model,
    dumps,
    hopf_from_ref,
    hopf_to_ref,
    load,
    load_diagram,
    report_to_model,
    save,
    squared_from_model,
    squared_to_model,
)
from utils.errors import UnknownFixture


@pytest.fixture(scope="module")
def ribbon_model():
    return coend_to_model(induce_ribbon(build_coend(kz2_qt())))


def test_coend_document(ribbon_model):
    assert ribbon_model.field == "QQ"
    assert ribbon_model.diagram.hopf == "builtin:kZ2"
    assert ribbon_model.diagram.unit_object == "I"
    assert ribbon_model.diagram.dual_witnesses == {"I": [["1"]], "V": [["1"]]}
    assert ribbon_model.ribbon is not None
    assert sorted(ribbon_model.q) == ["I", "V"]


def test_dumps_is_deterministic(ribbon_model):
    text = dumps(ribbon_model)
    assert text == dumps(ribbon_model)
    assert text.endswith("\n")
    data = json.loads(text)
    assert list(data) == sorted(data)


def test_stored_coend_is_reloaded_as_is(ribbon_model):
    E = coend_from_model(ribbon_model)
    assert E.dim == 2
    assert E.ribbon is not None
    assert check_structures(E).ok
    assert dumps(coend_to_model(E)) == dumps(ribbon_model)


def test_save_and_load_squared(tmp_path, k2):
    path = tmp_path / "comatrix.json"
    save(squared_to_model(canonical(k2)), str(path))
    S = squared_from_model(load(str(path), SquaredModel), Field.rational())
    assert S.dim == 4
    assert check_squared(S).ok


def test_corrupted_squared_document_fails(k2):
    S = canonical(k2)
    model = squared_to_model(SquaredCoalgebra(S.C, S.delta, scale(S.eps, 2), "broken"))
    assert model.eps == [["2", "0", "0", "2"]]
    report = check_squared(squared_from_model(model, Field.rational()))
    assert not report.passed("e23b")


def test_hopf_references(kz2):
    assert hopf_to_ref(kz2) == "builtin:kZ2"
    renamed = replace(kz2, name="group-Z2")
    ref = hopf_to_ref(renamed)
    assert ref.name == "group-Z2"
    assert hopf_from_ref(ref, Field.rational()).same_as(kz2)
    with pytest.raises(UnknownFixture):
        hopf_from_ref("kZ2", Field.rational())


def test_comodule_document(v_odd):
    model = comodule_to_model(v_odd)
    assert model.coaction == [["0"], ["1"]]
    assert comodule_from_model(model, Field.rational()).same_as(v_odd)
    with pytest.raises(ValidationError):
        ComoduleModel.model_validate({"hopf": "builtin:kZ2", "dim": 1, "coaction": [["1"]], "colour": "red"})


def test_comodule_over_a_prime_field():
    model = ComoduleModel(hopf="builtin:kZ3", dim=1, coaction=[["0"], ["1"], ["0"]])
    X = comodule_from_model(model, Field.prime(7))
    assert X.hopf.same_as(builtin("kZ3", Field.prime(7)))


def test_load_builtin_diagram():
    D = load_diagram("builtin:kZ2-qt", Field.rational())
    assert D.name == "kZ2-qt"
    assert D.dual_table == {"I": "I", "V": "V"}


def test_report_document(k2):
    S = canonical(k2)
    report = check_squared(SquaredCoalgebra(S.C, S.delta, scale(S.eps, 2), "broken"))
    model = report_to_model(report)
    assert not model.ok
    failed = [e for e in model.entries if e.check == "e23b"][0]
    assert failed.status == "fail"
    assert set(failed.witness) == {"row", "col", "lhs", "rhs"}


def test_level_zero_comodule_document():
    model = ComoduleModel(hopf="builtin:kZ2", level=0, dim=2, coaction=[["1", "0"], ["0", "1"]])
    X = comodule_from_model(model, Field.rational())
    assert X.level == 0
    assert X.legs == 1
    assert comodule_to_model(X) == model
    with pytest.raises(ValidationError):
        ComoduleModel(hopf="builtin:kZ2", level=-1, dim=1, coaction=[["1"]])
