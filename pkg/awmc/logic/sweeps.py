"""Validity sweeps of axiom schemas and derived theorems over finite model sets."""
import itertools
from dataclasses import dataclass, field
from typing import AbstractSet, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from awmc import error, logger
from awmc.formula.enumeration import enumerate_formulas
from awmc.formula.syntax import Formula, agents_of, atoms
from awmc.logic.axioms import (
    DERIVED_THEOREMS,
    SCHEMAS,
    AxiomSchema,
    MpPremise,
    RkPremise,
    aware_theorem,
    instantiate,
    split,
)
from awmc.models.kripke import is_equivalence
from awmc.models.lattice_model import KripkeLatticeModel, valid_over


@dataclass(frozen=True)
class SweepEntry:
    """One line of a sweep report: an instance valid on every model, or its counterexample on one model."""

    schema: str
    instance: Formula
    model: str = "*"
    world: str = "*"
    valid: bool = True

    def __str__(self) -> str:
        verdict = "VALID" if self.valid else "CEX"
        return (
            f"SCHEMA {self.schema} INSTANCE {self.instance} "
            f"MODEL {self.model} WORLD {self.world} -> {verdict}"
        )


@dataclass
class SweepReport:
    """The entries of a sweep in the order they were checked."""

    entries: List[SweepEntry] = field(default_factory=list)

    @property
    def counterexamples(self) -> List[SweepEntry]:
        return [entry for entry in self.entries if not entry.valid]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def for_schema(self, name: str) -> List[SweepEntry]:
        """The entries of the schemas called ``name``."""
        return [entry for entry in self.entries if entry.schema == name]

    def lines(self) -> List[str]:
        return [str(entry) for entry in self.entries]

    def summary(self) -> str:
        """``all schemas valid`` or the count of counterexamples per failing schema."""
        failing = {}
        for entry in self.counterexamples:
            failing[entry.schema] = failing.get(entry.schema, 0) + 1
        if not failing:
            return f"all schemas valid ({len(self.entries)} instances)"
        return "; ".join(f"{name} counterexamples: {count}" for name, count in failing.items())

    def extend(self, other: "SweepReport"):
        self.entries.extend(other.entries)


def _model_id(index: int, model: KripkeLatticeModel) -> str:
    return model.spec.id if model.spec is not None else str(index)


def _require_equivalence(models: Sequence[KripkeLatticeModel]):
    for model in models:
        for agent in model.agents:
            if not is_equivalence(model.base, agent):
                raise error.NonEquivalenceRelation(agent)


def _theorems(
    schemas: Iterable[AxiomSchema], arguments: Sequence[Formula], agent_pool: Sequence[str]
) -> Iterator[Tuple[AxiomSchema, Formula]]:
    for schema in schemas:
        for formulas in itertools.product(arguments, repeat=schema.formula_arity):
            if not schema.applicable(formulas):
                continue
            for agents in itertools.product(agent_pool, repeat=schema.agent_arity):
                for part in split(schema, instantiate(schema, formulas, agents)):
                    yield schema, part


def _sweep(
    models: Sequence[KripkeLatticeModel],
    schemas: Iterable[AxiomSchema],
    arguments: Sequence[Formula],
    agent_pool: Sequence[str],
) -> SweepReport:
    report = SweepReport()
    for schema, part in _theorems(schemas, arguments, agent_pool):
        report.entries.extend(_check_part(models, schema.name, part))
    _log_sweep(report, models)
    return report


def _log_sweep(report: SweepReport, models: Sequence[KripkeLatticeModel]):
    logger.debug(
        "swept %s instances over %s models, %s counterexamples",
        len(report.entries),
        len(models),
        len(report.counterexamples),
    )


def _check_part(
    models: Sequence[KripkeLatticeModel], schema: str, part: Formula
) -> List[SweepEntry]:
    needed_atoms, needed_agents = atoms(part), agents_of(part)
    failures = []
    for index, model in enumerate(models):
        if not (needed_atoms <= model.atom_set and needed_agents <= set(model.agents)):
            continue
        result = valid_over([model], part)
        if not result.valid:
            _, world = result.counterexample
            failures.append(SweepEntry(schema, part, _model_id(index, model), str(world), False))
    return failures or [SweepEntry(schema, part)]


def axiom_sweep(
    models: Sequence[KripkeLatticeModel],
    atom_pool: AbstractSet[str],
    agent_pool: AbstractSet[str],
    max_arg_depth: int,
    schemas: Iterable[AxiomSchema] = SCHEMAS,
) -> SweepReport:
    """Checks every instance of every schema, with arguments up to ``max_arg_depth``, on every model.

    Biconditional instances are checked one direction at a time. A model is skipped for
    an instance mentioning atoms or agents it lacks.

    Args:
        models: Kripke lattice models with equivalence relations
        atom_pool: The atoms argument formulas are built from
        agent_pool: The agents filling the agent arguments and knowledge operators
        max_arg_depth: The largest depth of an argument formula
        schemas: The schemas to check, pass ``SCHEMAS + (FIVE,)`` to add negative introspection

    Returns:
        One entry per valid instance and one per model refuting an instance

    Raises:
        NonEquivalenceRelation: If some model has a relation that is not an equivalence
    """
    models = list(models)
    _require_equivalence(models)
    arguments = enumerate_formulas(atom_pool, agent_pool, max_arg_depth)
    return _sweep(models, schemas, arguments, sorted(agent_pool))


def derived_theorem_sweep(
    models: Sequence[KripkeLatticeModel],
    max_arg_depth: int,
    atom_pool: Optional[AbstractSet[str]] = None,
    agent_pool: Optional[AbstractSet[str]] = None,
    theorems: Iterable[AxiomSchema] = DERIVED_THEOREMS,
) -> SweepReport:
    """Checks the derived theorems like :func:`axiom_sweep`, the pools defaulting to the models' vocabulary."""
    models = list(models)
    _require_equivalence(models)
    if atom_pool is None:
        atom_pool = frozenset().union(*(model.atom_set for model in models))
    if agent_pool is None:
        agent_pool = frozenset(agent for model in models for agent in model.agents)
    arguments = enumerate_formulas(atom_pool, agent_pool, max_arg_depth)
    return _sweep(models, theorems, arguments, sorted(agent_pool))


def aware_theorem_sweep(
    models: Sequence[KripkeLatticeModel],
    atom_pool: AbstractSet[str],
    agent_pool: AbstractSet[str],
    max_arg_depth: int,
    schemas: Iterable[AxiomSchema] = SCHEMAS,
) -> SweepReport:
    """Checks ``A{a} θ -> K{a} θ`` for every agent ``a`` and every schema instance ``θ``.

    The instances are those :func:`axiom_sweep` checks, each direction of a biconditional
    taken as its own theorem. Entries are reported under ``AwareKnows/<schema>``.

    Raises:
        NonEquivalenceRelation: If some model has a relation that is not an equivalence
    """
    models = list(models)
    _require_equivalence(models)
    arguments = enumerate_formulas(atom_pool, agent_pool, max_arg_depth)
    agents = sorted(agent_pool)
    report = SweepReport()
    for schema, theorem in _theorems(schemas, arguments, agents):
        for agent in agents:
            report.entries.extend(
                _check_part(models, f"AwareKnows/{schema.name}", aware_theorem(theorem, agent))
            )
    _log_sweep(report, models)
    return report


def _known_validity(
    models: Sequence[KripkeLatticeModel],
    phi: Formula,
    validities: Optional[Dict[Formula, bool]],
) -> bool:
    if validities is None:
        return valid_over(models, phi).valid
    if phi not in validities:
        validities[phi] = valid_over(models, phi).valid
    return validities[phi]


def rk_apply(
    rk: RkPremise,
    models: Sequence[KripkeLatticeModel],
    premise_validities: Optional[Dict[Formula, bool]] = None,
) -> bool:
    """Checks that the RK rule preserves validity on ``models`` for this application.

    Args:
        rk: The rule application
        models: The model set validity is taken over
        premise_validities: Verdicts already established on ``models``, keyed by formula.
            The premise implication is looked up here before it is checked, and its verdict
            is recorded. Without it the premise implication is checked on every call.

    Returns:
        False only if the premise implication is valid on ``models`` but the knowledge implication is not

    Raises:
        SideConditionViolated: If the conclusion mentions an atom no premise mentions
    """
    rk.check_side_condition()
    models = list(models)
    if not _known_validity(models, rk.premise_implication(), premise_validities):
        return True
    return valid_over(models, rk.knowledge_implication()).valid


def mp_apply(
    mp: MpPremise,
    models: Sequence[KripkeLatticeModel],
    premise_validities: Optional[Dict[Formula, bool]] = None,
) -> bool:
    """Checks that Modus Ponens preserves validity on ``models`` for this application.

    A formula is valid when it is true wherever all its atoms are defined. Truth at a
    restricted world only depends on the atoms a formula mentions, so the consequent is
    true wherever it is defined once the antecedent and the implication are valid.

    Args:
        mp: The rule application
        models: The model set validity is taken over
        premise_validities: Verdicts already established on ``models``, shared with :func:`rk_apply`

    Returns:
        False only if both premises are valid on ``models`` but the consequent is not
    """
    models = list(models)
    for premise in (mp.antecedent, mp.implication()):
        if not _known_validity(models, premise, premise_validities):
            return True
    return valid_over(models, mp.consequent).valid
