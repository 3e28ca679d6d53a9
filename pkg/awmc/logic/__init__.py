"""The axiom system of knowledge and awareness: schemas, validity sweeps and random corpora."""
from awmc.logic.axioms import (
    DERIVED_THEOREMS,
    FIVE,
    SCHEMAS,
    AxiomSchema,
    MpPremise,
    RkPremise,
    aware_theorem,
    instantiate,
    is_tautology,
    template_schema,
)
from awmc.logic.generation import generate_hms_models, generate_models
from awmc.logic.sweeps import (
    SweepEntry,
    SweepReport,
    aware_theorem_sweep,
    axiom_sweep,
    derived_theorem_sweep,
    mp_apply,
    rk_apply,
)

__all__ = [
    "AxiomSchema",
    "RkPremise",
    "MpPremise",
    "SCHEMAS",
    "FIVE",
    "DERIVED_THEOREMS",
    "instantiate",
    "is_tautology",
    "template_schema",
    "aware_theorem",
    "SweepEntry",
    "SweepReport",
    "axiom_sweep",
    "derived_theorem_sweep",
    "aware_theorem_sweep",
    "rk_apply",
    "mp_apply",
    "generate_models",
    "generate_hms_models",
]
