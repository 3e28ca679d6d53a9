"""Model files: self-describing JSON documents for Kripke lattice models and HMS models.

Both kinds carry ``kind``, ``atoms`` and ``agents``. Kripke lattice models add ``worlds``,
``relations`` (pairs per agent), ``valuation`` (worlds per atom) and ``awareness``
(``"w@{a,b}"`` to ``"w@{a}"`` per agent). HMS models add ``spaces`` (states per space),
``order`` (pairs ``[lower, upper]``), ``projections`` (``{"from", "to", "map"}`` records),
``correspondences`` (possible states per state per agent) and ``valuation``
(``{"base", "states"}`` per atom). Loading validates the model.
"""
import json
import os
import tempfile
from typing import Any, Dict, Optional, Union

from awmc import error
from awmc.core import Model
from awmc.models.hms import (
    Event,
    HmsModel,
    StateSpaceLattice,
    UnawarenessFrame,
    validate_frame,
)
from awmc.models.kripke import KripkeModel, RestrictedWorld, build_lattice
from awmc.models.lattice_model import KripkeLatticeModel
from awmc.transforms.l_transform import StateCorrespondence

KINDS = ("kripke_lattice", "hms")
ASSETS_DIR = os.path.join(os.path.dirname(__file__), "models", "assets")


def _require(data: Dict[str, Any], key: str) -> Any:
    if not isinstance(data, dict):
        raise error.ModelFileError(
            f"Expected a JSON object holding `{key}`, found {json.dumps(data)}"
        )
    if key not in data:
        raise error.ModelFileError(f"Model file is missing the field `{key}`")
    return data[key]


def _check_vocabulary(data: Dict[str, Any], atoms, agents):
    if sorted(_require(data, "atoms")) != sorted(atoms):
        raise error.ModelFileError(
            f"Model file declares the atoms {sorted(data['atoms'])} but defines {sorted(atoms)}"
        )
    if sorted(_require(data, "agents")) != sorted(agents):
        raise error.ModelFileError(
            f"Model file declares the agents {sorted(data['agents'])} but defines {sorted(agents)}"
        )


def klm_to_dict(klm: KripkeLatticeModel) -> Dict[str, Any]:
    """The model file document of ``klm``."""
    base = klm.base
    return {
        "kind": klm.kind,
        "atoms": sorted(base.atom_set),
        "agents": list(base.agents),
        "worlds": list(base.worlds),
        "relations": {
            agent: [
                [source, target]
                for source in base.worlds
                for target in base.successors(agent, source)
            ]
            for agent in base.agents
        },
        "valuation": {
            atom: [world for world in base.worlds if world in base.valuation[atom]]
            for atom in sorted(base.atom_set)
        },
        "awareness": {
            agent: {
                str(world): str(klm.awareness_image(agent, world)) for world in klm.worlds()
            }
            for agent in klm.agents
        },
    }


def klm_from_dict(data: Dict[str, Any]) -> KripkeLatticeModel:
    """Builds and validates a Kripke lattice model from its document.

    Raises:
        ModelFileError: If a field is missing or the vocabulary is inconsistent
        UnknownWorld: If an awareness entry is not a world reference
        InvalidKripkeLatticeModel: If the awareness maps are invalid
    """
    relations = _require(data, "relations")
    model = KripkeModel(
        _require(data, "worlds"),
        _require(data, "agents"),
        _require(data, "atoms"),
        {agent: [tuple(pair) for pair in pairs] for agent, pairs in relations.items()},
        _require(data, "valuation"),
    )
    awareness = {
        agent: {
            RestrictedWorld.parse(source): RestrictedWorld.parse(target)
            for source, target in mapping.items()
        }
        for agent, mapping in _require(data, "awareness").items()
    }
    return KripkeLatticeModel(build_lattice(model), awareness)


def hms_to_dict(model: HmsModel) -> Dict[str, Any]:
    """The model file document of ``model``."""
    lattice, frame = model.lattice, model.frame
    return {
        "kind": model.kind,
        "atoms": sorted(model.atom_set),
        "agents": list(model.agents),
        "spaces": {name: list(states) for name, states in lattice.spaces.items()},
        "order": [list(pair) for pair in lattice.order],
        "projections": [
            {"from": upper, "to": lower, "map": dict(mapping)}
            for (lower, upper), mapping in lattice.given_projections.items()
        ],
        "correspondences": {
            agent: {
                state: sorted(frame.possibility(agent, state)) for state in lattice.states()
            }
            for agent in frame.agents
        },
        "valuation": {
            atom: {
                "base": event.base,
                "states": [state for state in lattice.spaces[event.base] if state in event.d],
            }
            for atom, event in model.valuation.items()
        },
    }


def hms_from_dict(data: Dict[str, Any]) -> HmsModel:
    """Builds and validates an HMS model from its document.

    Raises:
        ModelFileError: If a field is missing or the vocabulary is inconsistent
        InvalidFrame: If the frame fails validation
    """
    projections = {}
    for record in _require(data, "projections"):
        pair = (_require(record, "to"), _require(record, "from"))
        projections[pair] = _require(record, "map")
    lattice = StateSpaceLattice(
        _require(data, "spaces"),
        [tuple(pair) for pair in _require(data, "order")],
        projections,
    )
    frame = UnawarenessFrame(lattice, _require(data, "correspondences"))
    valuation = {
        atom: Event(lattice, _require(event, "states"), _require(event, "base"))
        for atom, event in _require(data, "valuation").items()
    }
    _check_vocabulary(data, valuation, frame.agents)
    report = validate_frame(frame)
    if not report.ok:
        raise error.InvalidFrame(report)
    return HmsModel(frame, valuation)


def to_dict(model: Model) -> Dict[str, Any]:
    """The model file document of either kind of model."""
    if isinstance(model, KripkeLatticeModel):
        return klm_to_dict(model)
    if isinstance(model, HmsModel):
        return hms_to_dict(model)
    raise error.ModelFileError(f"Cannot serialize {type(model).__name__}")


def from_dict(data: Dict[str, Any], kind: Optional[str] = None) -> Model:
    """Builds the model a document describes.

    Args:
        data: The document
        kind: If given, the kind the document must have

    Raises:
        ModelFileError: If the kind is unknown or differs from ``kind``, if a field has the
            wrong shape, or if the document refers to an atom, agent or world it does not define
        ModelError: If the document is well formed but describes an invalid model
    """
    if not isinstance(data, dict):
        raise error.ModelFileError("A model file must hold a JSON object")
    found = _require(data, "kind")
    if found not in KINDS:
        raise error.ModelFileError(
            f"Unknown model kind `{found}`, expected one of {', '.join(KINDS)}."
            + error.did_you_mean(str(found), KINDS)
        )
    if kind is not None and found != kind:
        raise error.ModelFileError(f"Expected a {kind} model, the file holds a {found} model")
    try:
        if found == "hms":
            return hms_from_dict(data)
        klm = klm_from_dict(data)
    except (error.UnknownAtom, error.UnknownAgent, error.UnknownWorld) as exc:
        raise error.ModelFileError(f"Model file refers to an undefined name: {exc}") from exc
    except (TypeError, ValueError, AttributeError, KeyError) as exc:
        raise error.ModelFileError(f"Malformed {found} model file: {exc!r}") from exc
    _check_vocabulary(data, klm.atom_set, klm.agents)
    return klm


def dumps(model: Model) -> str:
    return json.dumps(to_dict(model), indent=2) + "\n"


def loads(text: str, kind: Optional[str] = None) -> Model:
    """Parses a model file document.

    Raises:
        ModelFileError: If ``text`` is not JSON
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise error.ModelFileError(f"Model file is not valid JSON: {exc}") from None
    return from_dict(data, kind)


def load(path: str, kind: Optional[str] = None) -> Model:
    """Reads and validates the model file at ``path``.

    Raises:
        ModelFileError: If the file cannot be read or is malformed
    """
    try:
        with open(path, encoding="utf-8") as file:
            text = file.read()
    except OSError as exc:
        raise error.ModelFileError(f"Cannot read model file {path}: {exc.strerror}") from None
    return loads(text, kind)


def write_atomic(path: str, text: str):
    """Writes ``text`` to ``path`` through a temporary file in the same directory.

    Raises:
        OutputFileError: If the file cannot be written, ``path`` is then left untouched
    """
    directory = os.path.dirname(os.path.abspath(path))
    try:
        handle, temporary = tempfile.mkstemp(dir=directory, prefix=".awmc-", suffix=".tmp")
    except OSError as exc:
        raise error.OutputFileError(f"Cannot write {path}: {exc.strerror}") from exc
    try:
        with os.fdopen(handle, "w", encoding="utf-8") as file:
            file.write(text)
        os.replace(temporary, path)
    except BaseException as exc:
        if os.path.exists(temporary):
            os.unlink(temporary)
        if isinstance(exc, OSError):
            raise error.OutputFileError(f"Cannot write {path}: {exc.strerror}") from exc
        raise


def save(model: Model, path: str):
    """Writes the model file of ``model`` to ``path`` atomically."""
    write_atomic(path, dumps(model))


def correspondence_to_dict(correspondence: StateCorrespondence) -> Dict[str, Any]:
    """The sidecar document of a state correspondence, worlds sorted by reference."""
    return {
        "kind": "state_correspondence",
        "correspondence": {
            state: sorted(str(world) for world in worlds)
            for state, worlds in correspondence.items()
        },
    }


def correspondence_dumps(correspondence: StateCorrespondence) -> str:
    return json.dumps(correspondence_to_dict(correspondence), indent=2) + "\n"


def save_correspondence(correspondence: StateCorrespondence, path: str):
    write_atomic(path, correspondence_dumps(correspondence))


def load_asset(filename: str, kind: Optional[str] = None) -> Union[KripkeLatticeModel, HmsModel]:
    """Loads one of the model files bundled with the package."""
    return load(os.path.join(ASSETS_DIR, filename), kind)  # type: ignore[return-value]
