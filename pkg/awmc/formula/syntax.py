"""Abstract syntax of the language of knowledge and awareness.

The core language has five constructors: :class:`Top`, :class:`Atom`, :class:`Not`,
:class:`And` and :class:`Knows`. The remaining classes are surface sugar that
:func:`normalize` eliminates; all semantics in this package are defined on the core only.

    >>> to_text(normalize(Aware("B", Atom("l"))))
    '!(!K{B} l & !K{B} !K{B} l)'
"""
import functools
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from awmc import error

IDENTIFIER_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")

AtomId = str
AgentId = str


def check_identifier(name: str, kind: str = "identifier") -> str:
    """Returns ``name`` unchanged if it is a valid atom or agent identifier.

    Raises:
        Error: If ``name`` does not match ``[a-zA-Z][a-zA-Z0-9_]*``
    """
    if not isinstance(name, str) or IDENTIFIER_RE.fullmatch(name) is None:
        raise error.Error(
            f"Invalid {kind} {name!r}, expected a name matching {IDENTIFIER_RE.pattern}"
        )
    return name


@dataclass(frozen=True)
class Formula:
    """Base class of every formula node, core and sugar alike."""

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Top(Formula):
    """The constant that holds everywhere."""


@dataclass(frozen=True)
class Atom(Formula):
    """An atomic proposition."""

    name: AtomId


@dataclass(frozen=True)
class Not(Formula):
    """Negation."""

    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    """Binary conjunction."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Knows(Formula):
    """``agent`` knows ``operand``."""

    agent: AgentId
    operand: Formula


# Surface sugar, removed by `normalize`


@dataclass(frozen=True)
class Or(Formula):
    """Disjunction, ``!(!left & !right)``."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    """Material implication, ``!(left & !right)``."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    """Biconditional, the conjunction of both implications."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Aware(Formula):
    """``agent`` is aware of ``operand``: ``K{a} phi | K{a} !K{a} phi``."""

    agent: AgentId
    operand: Formula


@dataclass(frozen=True)
class Unaware(Formula):
    """``agent`` is unaware of ``operand``, the negation of :class:`Aware`."""

    agent: AgentId
    operand: Formula


TOP = Top()
CORE_TYPES = (Top, Atom, Not, And, Knows)


@functools.lru_cache(maxsize=None)
def normalize(phi: Formula) -> Formula:
    """Rewrites every sugar node of ``phi`` into the core constructors.

    Normalization is idempotent and leaves core formulas unchanged.
    """
    if isinstance(phi, (Top, Atom)):
        return phi
    if isinstance(phi, Not):
        return Not(normalize(phi.operand))
    if isinstance(phi, And):
        return And(normalize(phi.left), normalize(phi.right))
    if isinstance(phi, Knows):
        return Knows(phi.agent, normalize(phi.operand))
    if isinstance(phi, Or):
        return Not(And(Not(normalize(phi.left)), Not(normalize(phi.right))))
    if isinstance(phi, Implies):
        return Not(And(normalize(phi.left), Not(normalize(phi.right))))
    if isinstance(phi, Iff):
        left, right = normalize(phi.left), normalize(phi.right)
        return And(Not(And(left, Not(right))), Not(And(right, Not(left))))
    if isinstance(phi, Aware):
        inner = normalize(phi.operand)
        known = Knows(phi.agent, inner)
        return Not(And(Not(known), Not(Knows(phi.agent, Not(known)))))
    if isinstance(phi, Unaware):
        return Not(normalize(Aware(phi.agent, phi.operand)))
    raise TypeError(f"Expected a Formula, actual type: {type(phi)}")


def is_normalized(phi: Formula) -> bool:
    """Checks that ``phi`` only uses the core constructors."""
    if isinstance(phi, (Top, Atom)):
        return True
    if isinstance(phi, Not):
        return is_normalized(phi.operand)
    if isinstance(phi, And):
        return is_normalized(phi.left) and is_normalized(phi.right)
    if isinstance(phi, Knows):
        return is_normalized(phi.operand)
    return False


@functools.lru_cache(maxsize=None)
def atoms(phi: Formula) -> FrozenSet[AtomId]:
    """The atoms occurring as subformulas of ``phi``."""
    phi = normalize(phi)
    if isinstance(phi, Top):
        return frozenset()
    if isinstance(phi, Atom):
        return frozenset((phi.name,))
    if isinstance(phi, (Not, Knows)):
        return atoms(phi.operand)
    assert isinstance(phi, And)
    return atoms(phi.left) | atoms(phi.right)


@functools.lru_cache(maxsize=None)
def agents_of(phi: Formula) -> FrozenSet[AgentId]:
    """The agents indexing a knowledge operator in ``phi``."""
    phi = normalize(phi)
    if isinstance(phi, (Top, Atom)):
        return frozenset()
    if isinstance(phi, Not):
        return agents_of(phi.operand)
    if isinstance(phi, Knows):
        return agents_of(phi.operand) | {phi.agent}
    assert isinstance(phi, And)
    return agents_of(phi.left) | agents_of(phi.right)


def depth(phi: Formula) -> int:
    """Height of the normalized syntax tree, leaves have depth 0."""
    phi = normalize(phi)
    if isinstance(phi, (Top, Atom)):
        return 0
    if isinstance(phi, (Not, Knows)):
        return 1 + depth(phi.operand)
    assert isinstance(phi, And)
    return 1 + max(depth(phi.left), depth(phi.right))


def substitute(
    phi: Formula,
    formulas: Mapping[AtomId, Formula],
    agents: Optional[Mapping[AgentId, AgentId]] = None,
) -> Formula:
    """Simultaneously replaces atoms by formulas and renames agents in a normalized formula.

    Atoms and agents missing from the mappings are left unchanged.
    """
    agents = agents or {}
    phi = normalize(phi)
    if isinstance(phi, Top):
        return phi
    if isinstance(phi, Atom):
        return normalize(formulas.get(phi.name, phi))
    if isinstance(phi, Not):
        return Not(substitute(phi.operand, formulas, agents))
    if isinstance(phi, Knows):
        return Knows(
            agents.get(phi.agent, phi.agent), substitute(phi.operand, formulas, agents)
        )
    assert isinstance(phi, And)
    return And(
        substitute(phi.left, formulas, agents), substitute(phi.right, formulas, agents)
    )


def iff_parts(phi: Formula) -> Optional[Tuple[Formula, Formula]]:
    """Splits a normalized biconditional into its two implications, or returns None."""
    if (
        isinstance(phi, And)
        and isinstance(phi.left, Not)
        and isinstance(phi.right, Not)
        and isinstance(phi.left.operand, And)
        and isinstance(phi.right.operand, And)
    ):
        forward, backward = phi.left.operand, phi.right.operand
        if (
            isinstance(forward.right, Not)
            and isinstance(backward.right, Not)
            and forward.left == backward.right.operand
            and forward.right.operand == backward.left
        ):
            return phi.left, phi.right
    return None


# Constructors returning normalized formulas


def neg(phi: Formula) -> Formula:
    """Normalized negation."""
    return Not(normalize(phi))


def conj(left: Formula, right: Formula) -> Formula:
    """Normalized conjunction."""
    return And(normalize(left), normalize(right))


def disj(left: Formula, right: Formula) -> Formula:
    """Normalized disjunction."""
    return normalize(Or(left, right))


def implies(left: Formula, right: Formula) -> Formula:
    """Normalized implication."""
    return normalize(Implies(left, right))


def iff(left: Formula, right: Formula) -> Formula:
    """Normalized biconditional."""
    return normalize(Iff(left, right))


def knows(agent: AgentId, phi: Formula) -> Formula:
    """Normalized knowledge."""
    return Knows(agent, normalize(phi))


def aware(agent: AgentId, phi: Formula) -> Formula:
    """Normalized awareness."""
    return normalize(Aware(agent, phi))


def unaware(agent: AgentId, phi: Formula) -> Formula:
    """Normalized unawareness."""
    return normalize(Unaware(agent, phi))


def big_and(formulas: Iterable[Formula]) -> Formula:
    """Left-nested conjunction of ``formulas``; the empty conjunction is ``top``."""
    result: Optional[Formula] = None
    for phi in formulas:
        result = normalize(phi) if result is None else And(result, normalize(phi))
    return TOP if result is None else result


# Printing

_BINARY_SUGAR: Dict[type, str] = {Or: "|", Implies: "->", Iff: "<->"}


def to_text(phi: Formula) -> str:
    """Prints ``phi`` in the surface syntax accepted by :func:`awmc.formula.parse`.

    Binary operands are parenthesized whenever they are themselves binary, so the
    output never depends on precedence or associativity.
    """
    if isinstance(phi, Top):
        return "top"
    if isinstance(phi, Atom):
        return phi.name
    if isinstance(phi, Not):
        return "!" + _operand_text(phi.operand)
    if isinstance(phi, Knows):
        return f"K{{{phi.agent}}} " + _operand_text(phi.operand)
    if isinstance(phi, Aware):
        return f"A{{{phi.agent}}} " + _operand_text(phi.operand)
    if isinstance(phi, Unaware):
        return f"U{{{phi.agent}}} " + _operand_text(phi.operand)
    if isinstance(phi, And):
        return f"{_operand_text(phi.left)} & {_operand_text(phi.right)}"
    if isinstance(phi, tuple(_BINARY_SUGAR)):
        symbol = _BINARY_SUGAR[type(phi)]
        return f"{_operand_text(phi.left)} {symbol} {_operand_text(phi.right)}"  # type: ignore[attr-defined]
    raise TypeError(f"Expected a Formula, actual type: {type(phi)}")


def _operand_text(phi: Formula) -> str:
    text = to_text(phi)
    if isinstance(phi, (And, Or, Implies, Iff)):
        return f"({text})"
    return text
