import re

import pytest

from awmc import error
from awmc.models.hms import Event, HmsModel
from awmc.models.kripke import RestrictedWorld, is_equivalence
from awmc.transforms import (
    find_renaming,
    l_transform,
    min_spaces,
    space_profiles,
    state_correspondence,
)
from awmc.transforms.l_transform import l_transform_unchecked
from tests.testing_models import (
    TRADE_RENAMING,
    frame_from_document,
    single_space_hms,
    trade_document,
    trade_hms,
    trade_klm,
)


def test_trade_matches_fixture():
    klm, _ = l_transform(trade_hms())
    assert klm.base.worlds == ("(i,l)", "(!i,l)", "(!i,!l)")
    assert find_renaming(klm, trade_klm()) == TRADE_RENAMING
    assert all(is_equivalence(klm.base, agent) for agent in klm.agents)


def test_space_profiles():
    model = trade_hms()
    assert space_profiles(model) == {
        "S_il": {"i", "l"},
        "S_i": {"i"},
        "S_l": {"l"},
        "S_empty": frozenset(),
    }
    assert min_spaces(model) == {
        frozenset({"i", "l"}): "S_il",
        frozenset({"i"}): "S_i",
        frozenset({"l"}): "S_l",
        frozenset(): "S_empty",
    }


def test_correspondence():
    model = trade_hms()
    _, correspondence = l_transform(model)
    assert len(correspondence) == len(model.worlds())
    assert correspondence["!i"] == {
        RestrictedWorld("(!i,l)", {"i"}),
        RestrictedWorld("(!i,!l)", {"i"}),
    }
    assert correspondence["(i,l)"] == {RestrictedWorld("(i,l)", {"i", "l"})}
    assert correspondence["empty"] == state_correspondence(model, "empty")
    assert len(correspondence["empty"]) == 3
    assert len(list(correspondence.pairs())) == 12
    with pytest.raises(error.UnknownState):
        correspondence["nowhere"]


def test_single_space_completes_from_the_top():
    with pytest.warns(UserWarning, match=re.escape("defines exactly the atoms {}")):
        klm, correspondence = l_transform(single_space_hms())
    assert klm.base.worlds == ("s1", "s2")
    assert klm.awareness_image("a", RestrictedWorld("s2", set())) == RestrictedWorld("s2", set())
    assert klm.awareness_image("a", RestrictedWorld("s1", {"p"})) == RestrictedWorld("s1", {"p"})
    assert correspondence["s1"] == {RestrictedWorld("s1", {"p"})}
    assert not klm.violations()


def test_invalid_frame_is_rejected():
    document = trade_document("hms")
    document["correspondences"]["O"]["(i,l)"] = ["(i,l)"]
    frame = frame_from_document(document)
    model = HmsModel(
        frame,
        {
            atom: Event(frame.lattice, record["states"], record["base"])
            for atom, record in document["valuation"].items()
        },
    )
    with pytest.raises(error.InvalidFrame):
        l_transform(model)
    with pytest.raises(error.InvalidFrame):
        l_transform_unchecked(model)
