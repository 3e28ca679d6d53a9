"""Kripke lattice models, HMS models and the bundled trade fixtures."""
from awmc.models.hms import (
    Event,
    FrameReport,
    FrameViolation,
    HmsModel,
    PossibilityCorrespondence,
    StateSpaceLattice,
    UnawarenessFrame,
    a_event,
    atom_profile,
    conj_events,
    denotation,
    hms_satisfies,
    is_well_formed,
    k_event,
    neg_event,
    possibility_of,
    top_event,
    upward_closure,
    validate_frame,
)
from awmc.models.kripke import (
    KripkeModel,
    RestrictedWorld,
    Restriction,
    RestrictionLattice,
    build_lattice,
    info_cell,
    is_equivalence,
    restrict,
)
from awmc.models.lattice_model import (
    AwarenessMap,
    KripkeLatticeModel,
    ValidityResult,
    awareness_from_sets,
    build_klm,
    check_awareness_map,
    satisfies,
    valid_over,
)
from awmc.models.three_valued import ThreeVal
from awmc.registration import register

register(
    id="TradeHMS-v0",
    entry_point="awmc.serialization:load_asset",
    kind="hms",
    filename="trade.hms.json",
)

register(
    id="TradeKLM-v0",
    entry_point="awmc.serialization:load_asset",
    kind="kripke_lattice",
    filename="trade.klm.json",
)

__all__ = [
    "ThreeVal",
    "KripkeModel",
    "RestrictedWorld",
    "Restriction",
    "RestrictionLattice",
    "restrict",
    "build_lattice",
    "info_cell",
    "is_equivalence",
    "AwarenessMap",
    "KripkeLatticeModel",
    "ValidityResult",
    "build_klm",
    "check_awareness_map",
    "awareness_from_sets",
    "satisfies",
    "valid_over",
    "StateSpaceLattice",
    "PossibilityCorrespondence",
    "UnawarenessFrame",
    "Event",
    "FrameViolation",
    "FrameReport",
    "HmsModel",
    "upward_closure",
    "validate_frame",
    "neg_event",
    "conj_events",
    "k_event",
    "a_event",
    "top_event",
    "is_well_formed",
    "denotation",
    "hms_satisfies",
    "atom_profile",
    "possibility_of",
]
