"""Small models shared by the test suite, next to the bundled trade fixtures."""
import json
import os
from typing import Any, Dict, Sequence

from awmc.models.hms import Event, HmsModel, StateSpaceLattice, UnawarenessFrame
from awmc.models.kripke import KripkeModel, RestrictedWorld, build_lattice, partition_relation
from awmc.models.lattice_model import KripkeLatticeModel, awareness_from_sets
from awmc.serialization import ASSETS_DIR, load_asset

TRADE_HMS_PATH = os.path.join(ASSETS_DIR, "trade.hms.json")
TRADE_KLM_PATH = os.path.join(ASSETS_DIR, "trade.klm.json")

TRADE_RENAMING = {"(i,l)": "w1", "(!i,l)": "w2", "(!i,!l)": "w3"}


def rw(text: str) -> RestrictedWorld:
    """Shorthand for :meth:`RestrictedWorld.parse`."""
    return RestrictedWorld.parse(text)


def trade_hms() -> HmsModel:
    return load_asset("trade.hms.json", "hms")  # type: ignore[return-value]


def trade_klm() -> KripkeLatticeModel:
    return load_asset("trade.klm.json", "kripke_lattice")  # type: ignore[return-value]


def trade_document(kind: str = "hms") -> Dict[str, Any]:
    """A fresh copy of the JSON document of a trade fixture, safe to modify."""
    path = TRADE_HMS_PATH if kind == "hms" else TRADE_KLM_PATH
    with open(path, encoding="utf-8") as file:
        return json.load(file)


def trade_kripke() -> KripkeModel:
    """The base Kripke model of the trade fixture."""
    return KripkeModel(
        worlds=["w1", "w2", "w3"],
        agents=["B", "O"],
        atom_set=["i", "l"],
        accessibility={
            "B": partition_relation([["w1"], ["w2", "w3"]]),
            "O": partition_relation([["w1", "w2", "w3"]]),
        },
        valuation={"i": ["w1"], "l": ["w1", "w2"]},
    )


def identity_klm(
    atom_set: Sequence[str] = ("p",),
    worlds: Sequence[str] = ("w1", "w2"),
    agents: Sequence[str] = ("a",),
) -> KripkeLatticeModel:
    """A fully aware model where every agent considers every world possible, ``p`` true at the first world only."""
    model = KripkeModel(
        worlds,
        agents,
        atom_set,
        {agent: partition_relation([worlds]) for agent in agents},
        {atom: [worlds[0]] for atom in atom_set},
    )
    lattice = build_lattice(model)
    return KripkeLatticeModel(lattice, awareness_from_sets(lattice, {}))


def non_equivalence_klm() -> KripkeLatticeModel:
    """A fully aware model whose relation only links ``w1`` to ``w2``."""
    model = KripkeModel(["w1", "w2"], ["a"], ["p"], {"a": [("w1", "w2")]}, {"p": ["w1"]})
    lattice = build_lattice(model)
    return KripkeLatticeModel(lattice, awareness_from_sets(lattice, {}))


def single_space_hms() -> HmsModel:
    """An HMS model with one space of two states that agent ``a`` cannot tell apart."""
    lattice = StateSpaceLattice({"S": ["s1", "s2"]}, [], {})
    frame = UnawarenessFrame(lattice, {"a": {"s1": ["s1", "s2"], "s2": ["s1", "s2"]}})
    return HmsModel(frame, {"p": Event(lattice, ["s1"], "S")})


def frame_from_document(document: Dict[str, Any]) -> UnawarenessFrame:
    """The frame of an HMS document, without validating it."""
    lattice = StateSpaceLattice(
        document["spaces"],
        [tuple(pair) for pair in document["order"]],
        {(record["to"], record["from"]): record["map"] for record in document["projections"]},
    )
    return UnawarenessFrame(lattice, document["correspondences"])
