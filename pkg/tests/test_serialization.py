import json
import os

import pytest

from awmc import error, serialization
from awmc.models import HmsModel, KripkeLatticeModel
from awmc.transforms import l_transform
from tests.testing_models import (
    TRADE_HMS_PATH,
    TRADE_KLM_PATH,
    trade_document,
    trade_hms,
    trade_klm,
)


def test_load_bundled_files():
    assert isinstance(serialization.load(TRADE_HMS_PATH), HmsModel)
    assert isinstance(serialization.load(TRADE_KLM_PATH, "kripke_lattice"), KripkeLatticeModel)


@pytest.mark.parametrize("kind", ["hms", "kripke_lattice"])
def test_documents_survive_a_save(tmp_path, kind):
    model = trade_hms() if kind == "hms" else trade_klm()
    path = str(tmp_path / "model.json")
    serialization.save(model, path)
    assert serialization.to_dict(serialization.load(path)) == serialization.to_dict(model)
    assert os.listdir(tmp_path) == ["model.json"]


def test_klm_document_matches_fixture():
    assert serialization.to_dict(trade_klm()) == trade_document("kripke_lattice")


def test_wrong_kind():
    with pytest.raises(error.ModelFileError, match="Expected a hms model, the file holds a kripke_lattice model"):
        serialization.load(TRADE_KLM_PATH, "hms")


def test_unknown_kind():
    document = trade_document("hms")
    document["kind"] = "hsm"
    with pytest.raises(error.ModelFileError, match="Did you mean: `hms`"):
        serialization.from_dict(document)


def test_missing_field():
    document = trade_document("kripke_lattice")
    del document["awareness"]
    with pytest.raises(error.ModelFileError, match="missing the field `awareness`"):
        serialization.from_dict(document)


def test_vocabulary_mismatch():
    document = trade_document("hms")
    document["atoms"] = ["i"]
    with pytest.raises(error.ModelFileError, match="declares the atoms"):
        serialization.from_dict(document)


def test_dangling_reference():
    document = trade_document("kripke_lattice")
    document["valuation"]["i"] = ["w4"]
    with pytest.raises(error.ModelError, match="unknown world w4"):
        serialization.from_dict(document)


def test_unreadable_files(tmp_path):
    with pytest.raises(error.ModelFileError, match="Cannot read model file"):
        serialization.load(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(error.ModelFileError, match="not valid JSON"):
        serialization.load(str(broken))
    listing = tmp_path / "list.json"
    listing.write_text("[]", encoding="utf-8")
    with pytest.raises(error.ModelFileError, match="must hold a JSON object"):
        serialization.load(str(listing))


def test_correspondence_document(tmp_path):
    _, correspondence = l_transform(trade_hms())
    path = tmp_path / "trade.correspondence.json"
    serialization.save_correspondence(correspondence, str(path))
    document = json.loads(path.read_text(encoding="utf-8"))
    assert document["kind"] == "state_correspondence"
    assert document["correspondence"]["!i"] == ["(!i,!l)@{i}", "(!i,l)@{i}"]
    assert len(document["correspondence"]) == 9


def _set_relation_pair(document):
    document["relations"]["B"][0] = ["w1"]


def _set_awareness_target(document):
    document["awareness"]["B"]["w1@{i,l}"] = ["w1@{i,l}"]


def _set_projection_record(document):
    document["projections"][0] = "from S_il to S_i"


def _set_valuation_event(document):
    document["valuation"]["i"] = ["i"]


@pytest.mark.parametrize(
    "kind, corrupt",
    [
        ("kripke_lattice", _set_relation_pair),
        ("kripke_lattice", _set_awareness_target),
        ("hms", _set_projection_record),
        ("hms", _set_valuation_event),
    ],
)
def test_malformed_documents(kind, corrupt):
    document = trade_document(kind)
    corrupt(document)
    with pytest.raises(error.ModelFileError):
        serialization.from_dict(document)


def test_write_atomic_failure(tmp_path):
    target = tmp_path / "taken"
    target.mkdir()
    with pytest.raises(error.OutputFileError, match="Cannot write"):
        serialization.write_atomic(str(target), "{}\n")
    with pytest.raises(error.OutputFileError, match="Cannot write"):
        serialization.write_atomic(str(tmp_path / "missing" / "model.json"), "{}\n")
    assert os.listdir(tmp_path) == ["taken"]
    assert target.is_dir()
