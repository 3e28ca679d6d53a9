"""Axiom schemas of the logic of knowledge and awareness, and the RK rule.

Schemas are written as formula templates over the placeholder atoms ``P`` and ``Q``
and the placeholder agents ``a`` and ``b``; instantiation substitutes all of them at once.
"""
import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple

from awmc import error
from awmc.formula.parser import parse
from awmc.formula.syntax import (
    And,
    Atom,
    Formula,
    Knows,
    Not,
    Top,
    atoms,
    aware,
    big_and,
    iff,
    iff_parts,
    substitute,
)

FORMULA_PLACEHOLDERS = ("P", "Q")
AGENT_PLACEHOLDERS = ("a", "b")


def _always(formulas: Sequence[Formula]) -> bool:
    return True


@dataclass(frozen=True)
class AxiomSchema:
    """A named schema taking ``formula_arity`` formulas and ``agent_arity`` agents.

    Attributes:
        name: The schema name used in sweep reports
        formula_arity: The number of formula arguments
        agent_arity: The number of agent arguments
        instantiator: Builds the normalized instance from formulas and agents
        biconditional: If sweeps should check the two directions separately
        applicable: Which formula arguments the schema is stated for
    """

    name: str
    formula_arity: int
    agent_arity: int
    instantiator: Callable[[Sequence[Formula], Sequence[str]], Formula] = field(compare=False)
    biconditional: bool = False
    applicable: Callable[[Sequence[Formula]], bool] = field(default=_always, compare=False)

    def __str__(self) -> str:
        return self.name


def template_schema(
    name: str, template: str, formula_arity: int, agent_arity: int = 0
) -> AxiomSchema:
    """A schema given by a template in the surface syntax.

    Example::

        >>> str(instantiate(template_schema("T", "K{a} P -> P", 1, 1), [Atom("i")], ["B"]))
        '!(K{B} i & !i)'
    """
    pattern = parse(template)
    formula_names = FORMULA_PLACEHOLDERS[:formula_arity]
    agent_names = AGENT_PLACEHOLDERS[:agent_arity]

    def instantiator(formulas: Sequence[Formula], agents: Sequence[str]) -> Formula:
        return substitute(
            pattern, dict(zip(formula_names, formulas)), dict(zip(agent_names, agents))
        )

    return AxiomSchema(
        name,
        formula_arity,
        agent_arity,
        instantiator,
        biconditional=iff_parts(pattern) is not None,
    )


def instantiate(
    schema: AxiomSchema, formulas: Sequence[Formula], agents: Sequence[str] = ()
) -> Formula:
    """The instance of ``schema`` at the given formulas and agents.

    Raises:
        ArityMismatch: If the number of formulas or agents does not match the schema
    """
    if len(formulas) != schema.formula_arity or len(agents) != schema.agent_arity:
        raise error.ArityMismatch(
            f"Schema {schema.name} takes {schema.formula_arity} formulas and "
            f"{schema.agent_arity} agents, got {len(formulas)} and {len(agents)}"
        )
    return schema.instantiator(tuple(formulas), tuple(agents))


def _letters(phi: Formula, found: Dict[Formula, None]):
    if isinstance(phi, Not):
        _letters(phi.operand, found)
    elif isinstance(phi, And):
        _letters(phi.left, found)
        _letters(phi.right, found)
    elif isinstance(phi, (Atom, Knows)):
        found.setdefault(phi, None)


def _classical(phi: Formula, assignment: Dict[Formula, bool]) -> bool:
    if isinstance(phi, Top):
        return True
    if isinstance(phi, Not):
        return not _classical(phi.operand, assignment)
    if isinstance(phi, And):
        return _classical(phi.left, assignment) and _classical(phi.right, assignment)
    return assignment[phi]


def is_tautology(phi: Formula) -> bool:
    """Whether ``phi`` is true under every classical assignment to its atoms and knowledge subformulas."""
    found: Dict[Formula, None] = {}
    _letters(phi, found)
    letters = list(found)
    return all(
        _classical(phi, dict(zip(letters, values)))
        for values in itertools.product((False, True), repeat=len(letters))
    )


PROP_TAUTOLOGY_TEMPLATES = (
    ("P -> P", 1),
    ("P | !P", 1),
    ("!!P <-> P", 1),
    ("top", 0),
    ("P -> (Q -> P)", 2),
    ("(!P -> !Q) -> (Q -> P)", 2),
    ("P & Q -> P", 2),
    ("P -> P | Q", 2),
    ("!(P & Q) <-> !P | !Q", 2),
)

PROP_TAUTOLOGIES = tuple(
    template_schema("PropTautology", template, arity)
    for template, arity in PROP_TAUTOLOGY_TEMPLATES
)

# Every argument formula that is itself a classical tautology.
ENUMERATED_TAUTOLOGIES = AxiomSchema(
    "PropTautology",
    1,
    0,
    lambda formulas, agents: formulas[0],
    applicable=lambda formulas: is_tautology(formulas[0]),
)

SYMMETRY = template_schema("Symmetry", "A{a} !P <-> A{a} P", 1, 1)
AWARENESS_CONJUNCTION = template_schema(
    "AwarenessConjunction", "A{a} (P & Q) <-> A{a} P & A{a} Q", 2, 1
)
AWARENESS_KNOWLEDGE_REFLECTION = template_schema(
    "AwarenessKnowledgeReflection", "A{a} P <-> A{a} K{b} P", 1, 2
)
T = template_schema("T", "K{a} P -> P", 1, 1)
FOUR = template_schema("Four", "K{a} P -> K{a} K{a} P", 1, 1)

SCHEMAS: Tuple[AxiomSchema, ...] = PROP_TAUTOLOGIES + (
    ENUMERATED_TAUTOLOGIES,
    SYMMETRY,
    AWARENESS_CONJUNCTION,
    AWARENESS_KNOWLEDGE_REFLECTION,
    T,
    FOUR,
)

# Negative introspection, not sound once agents can be unaware.
FIVE = template_schema("Five", "!K{a} P -> K{a} !K{a} P", 1, 1)


def _generated_by_primitives(formulas: Sequence[Formula], agents: Sequence[str]) -> Formula:
    (phi,), (agent,) = formulas, agents
    return iff(
        aware(agent, phi),
        big_and(aware(agent, Atom(name)) for name in sorted(atoms(phi))),
    )


WEAK_FIVE = template_schema(
    "WeakFive", "K{a} !K{a} !K{a} P -> K{a} P | K{a} !K{a} P", 1, 1
)
AWARENESS_INTROSPECTION = template_schema(
    "AwarenessIntrospection", "A{a} P -> K{a} A{a} P", 1, 1
)
GENERATED_BY_PRIMITIVES = AxiomSchema(
    "GeneratedByPrimitives",
    1,
    1,
    _generated_by_primitives,
    biconditional=True,
    applicable=lambda formulas: bool(atoms(formulas[0])),
)
A_SYMMETRY = template_schema("ASymmetry", "A{a} !P <-> A{a} P", 1, 1)
UNAWARENESS_ITERATION = template_schema(
    "UnawarenessIteration", "U{a} P -> !K{a} !K{a} !K{a} P", 1, 1
)

DERIVED_THEOREMS: Tuple[AxiomSchema, ...] = (
    WEAK_FIVE,
    AWARENESS_INTROSPECTION,
    GENERATED_BY_PRIMITIVES,
    A_SYMMETRY,
    UNAWARENESS_ITERATION,
)


@dataclass(frozen=True)
class RkPremise:
    """An application of the RK rule: from ``premises -> conclusion`` infer ``K premises -> K conclusion``."""

    premises: Tuple[Formula, ...]
    conclusion: Formula
    agent: str

    def check_side_condition(self):
        """Raises unless every atom of the conclusion occurs in some premise.

        Raises:
            SideConditionViolated: With the atoms missing from the premises
        """
        available = frozenset().union(*(atoms(phi) for phi in self.premises))
        missing = atoms(self.conclusion) - available
        if missing:
            raise error.SideConditionViolated(
                f"The conclusion mentions {{{','.join(sorted(missing))}}}, "
                f"which no premise mentions"
            )

    def premise_implication(self) -> Formula:
        """The conjunction of the premises implying the conclusion."""
        return _implication(big_and(self.premises), self.conclusion)

    def knowledge_implication(self) -> Formula:
        """The conjunction of the known premises implying the known conclusion."""
        return _implication(
            big_and(Knows(self.agent, phi) for phi in self.premises),
            Knows(self.agent, self.conclusion),
        )


@dataclass(frozen=True)
class MpPremise:
    """An application of Modus Ponens: from ``antecedent`` and ``antecedent -> consequent`` infer ``consequent``."""

    antecedent: Formula
    consequent: Formula

    def implication(self) -> Formula:
        return _implication(self.antecedent, self.consequent)


def aware_theorem(theorem: Formula, agent: str) -> Formula:
    """``A{agent} theorem -> K{agent} theorem``, a theorem whenever ``theorem`` is one."""
    return _implication(aware(agent, theorem), Knows(agent, theorem))


def _implication(left: Formula, right: Formula) -> Formula:
    return Not(And(left, Not(right)))


def split(schema: AxiomSchema, instance: Formula) -> Tuple[Formula, ...]:
    """The parts of ``instance`` checked separately, its two directions if ``schema`` is a biconditional."""
    parts: Optional[Tuple[Formula, Formula]] = (
        iff_parts(instance) if schema.biconditional else None
    )
    return (instance,) if parts is None else parts
