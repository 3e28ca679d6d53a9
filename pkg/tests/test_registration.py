"""Tests that `awmc.register` and `awmc.make` work as expected."""
import re
from typing import Optional

import pytest

import awmc
from awmc import error
from awmc.registration import is_registered, parse_model_id, registry
from tests.testing_models import identity_klm


@pytest.fixture(scope="function")
def register_testing_models():
    """Registers versioned testing models."""
    versions = [1, 3]
    for version in versions:
        awmc.register(
            id=f"Identity-v{version}",
            entry_point="tests.testing_models:identity_klm",
            kind="kripke_lattice",
            worlds=("u", "v", "w")[:version],
        )
    awmc.register(id="Unversioned", entry_point=identity_klm)

    yield

    for version in versions:
        del registry[f"Identity-v{version}"]
    del registry["Unversioned"]


@pytest.mark.parametrize(
    "model_id, name, version",
    [
        ("MyModel-v0", "MyModel", 0),
        ("MyModel", "MyModel", None),
        ("MyModel-vfinal-v0", "MyModel-vfinal", 0),
        ("MyModel-vfinal", "MyModel-vfinal", None),
        ("MyModel--", "MyModel--", None),
        ("MyModel-v", "MyModel-v", None),
    ],
)
def test_parse_model_id(model_id: str, name: str, version: Optional[int]):
    assert parse_model_id(model_id) == (name, version)


def test_malformed_id():
    with pytest.raises(error.RegistrationError, match=re.escape("Malformed model ID: my model")):
        awmc.register("my model", "no-entry-point")


def test_bundled_models():
    hms = awmc.make("TradeHMS-v0")
    klm = awmc.make("TradeKLM")
    assert hms.kind == "hms" and klm.kind == "kripke_lattice"
    assert hms.spec.id == "TradeHMS-v0"
    assert klm.spec.id == "TradeKLM-v0"
    assert str(klm) == "<KripkeLatticeModel<TradeKLM-v0>>"
    assert awmc.spec("TradeHMS-v0").kwargs == {"filename": "trade.hms.json"}


def test_make_highest_version(register_testing_models):
    klm = awmc.make("Identity")
    assert klm.spec.id == "Identity-v3"
    assert klm.base.worlds == ("u", "v", "w")
    assert awmc.make("Identity-v1").base.worlds == ("u",)


def test_make_kwargs(register_testing_models):
    klm = awmc.make("Unversioned", atom_set=("p", "q"))
    assert klm.atom_set == {"p", "q"}
    assert klm.spec.kwargs == {"atom_set": ("p", "q")}
    assert registry["Unversioned"].kwargs == {}


@pytest.mark.parametrize(
    "model_id, exception, message",
    [
        ("Identity-v2", error.VersionNotFound, "It provides versioned models: [ `v1`, `v3` ]."),
        ("Identiti-v1", error.NameNotFound, "Did you mean: `Identity`?"),
        ("Missing", error.NameNotFound, "Model Missing doesn't exist."),
    ],
)
def test_make_errors(register_testing_models, model_id, exception, message):
    with pytest.raises(exception, match=re.escape(message)):
        awmc.make(model_id)


def test_make_checks_kind(register_testing_models):
    awmc.register("WrongKind-v0", entry_point=identity_klm, kind="hms")
    try:
        with pytest.raises(error.ModelFileError, match="registered as hms"):
            awmc.make("WrongKind-v0")
    finally:
        del registry["WrongKind-v0"]


def test_override_warns():
    awmc.register("Twice-v0", entry_point=identity_klm)
    with pytest.warns(UserWarning, match="Overriding model Twice-v0"):
        awmc.register("Twice-v0", entry_point=identity_klm)
    del registry["Twice-v0"]


def test_is_registered(register_testing_models):
    assert is_registered("TradeHMS-v0")
    assert is_registered("Identity")
    assert is_registered("Unversioned")
    assert not is_registered("Identity-v2")
    assert not is_registered("models/trade.json")
