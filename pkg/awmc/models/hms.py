"""HMS unawareness frames and models.

A frame is a lattice of disjoint state-spaces, richer spaces lying higher, with
projections sending states of a richer space onto poorer ones, and one possibility
correspondence per agent. Events are upward closed sets generated at a base space;
formulas denote events and are true, false or undefined at a state depending on
whether the state lies in the event, in its negation, or below its base space.
"""
import itertools
from dataclasses import dataclass, field
from typing import (
    AbstractSet,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Set,
    Tuple,
)

from awmc import error, logger
from awmc.core import Model
from awmc.formula.syntax import And, Atom, Formula, Knows, Not, Top, atoms
from awmc.models.three_valued import ThreeVal

HMS_PROPERTIES = ("Conf", "Gref", "Stat", "PPI", "PPK")

SpacePair = Tuple[str, str]


class StateSpaceLattice:
    """A finite lattice of disjoint state-spaces with projections between comparable spaces.

    ``order`` lists pairs ``(lower, upper)``; its reflexive-transitive closure is the
    lattice order. ``projections`` maps a pair ``(lower, upper)`` to the projection
    from ``upper`` onto ``lower`` as a state-to-state mapping. Projections for pairs that
    are not given are obtained by composition; identities need not be given.

    Structural mistakes (unknown names, overlapping spaces) raise :class:`awmc.error.ModelError`.
    Failures of the lattice and projection laws are reported by :func:`validate_frame`.
    """

    def __init__(
        self,
        spaces: Mapping[str, Iterable[str]],
        order: Iterable[SpacePair],
        projections: Mapping[SpacePair, Mapping[str, str]],
    ):
        self.spaces: Dict[str, Tuple[str, ...]] = {
            name: tuple(states) for name, states in spaces.items()
        }
        if not self.spaces:
            raise error.ModelError("An unawareness frame needs at least one state-space")
        self._space_of: Dict[str, str] = {}
        for name, states in self.spaces.items():
            if not states:
                raise error.ModelError(f"State-space {name} is empty")
            for state in states:
                if state in self._space_of:
                    raise error.ModelError(
                        f"State {state} belongs to both {self._space_of[state]} and {name}"
                    )
                self._space_of[state] = name

        self.order: List[SpacePair] = [tuple(pair) for pair in order]  # type: ignore[misc]
        order = self.order
        for pair in order:
            for name in pair:
                self.check_space(name)
        self._leq: Set[SpacePair] = {(name, name) for name in self.spaces} | set(order)  # type: ignore[arg-type]
        for middle in self.spaces:
            for lower in self.spaces:
                if (lower, middle) not in self._leq:
                    continue
                for upper in self.spaces:
                    if (middle, upper) in self._leq:
                        self._leq.add((lower, upper))

        self.given_projections: Dict[SpacePair, Dict[str, str]] = {}
        for (lower, upper), mapping in projections.items():
            self.check_space(lower)
            self.check_space(upper)
            if (lower, upper) not in self._leq:
                raise error.ModelError(
                    f"Projection given from {upper} onto {lower}, but {lower} is not below {upper}"
                )
            for source, target in mapping.items():
                if self._space_of.get(source) != upper:
                    raise error.ModelError(
                        f"Projection onto {lower} maps {source}, which is not a state of {upper}"
                    )
                if self._space_of.get(target) != lower:
                    raise error.ModelError(
                        f"Projection from {upper} maps {source} to {target}, which is not a state of {lower}"
                    )
            self.given_projections[(lower, upper)] = dict(mapping)

        self.projections: Dict[SpacePair, Dict[str, str]] = {
            (name, name): {state: state for state in states}
            for name, states in self.spaces.items()
        }
        self.projections.update(
            (pair, mapping)
            for pair, mapping in self.given_projections.items()
            if pair[0] != pair[1]
        )
        changed = True
        while changed:
            changed = False
            for (lower, middle), low_map in list(self.projections.items()):
                for upper in self.spaces:
                    if (lower, upper) in self.projections or (middle, upper) not in self.projections:
                        continue
                    self.projections[(lower, upper)] = {
                        state: low_map[image]
                        for state, image in self.projections[(middle, upper)].items()
                        if image in low_map
                    }
                    changed = True
        self._upsets: Dict[Tuple[FrozenSet[str], str], FrozenSet[str]] = {}

    def check_space(self, name: str):
        if name not in self.spaces:
            raise error.ModelError(
                f"Unknown state-space {name}." + error.did_you_mean(name, self.spaces)
            )

    def leq(self, lower: str, upper: str) -> bool:
        """``lower`` is weakly below ``upper``."""
        return (lower, upper) in self._leq

    def states(self) -> Tuple[str, ...]:
        """Every state, space by space in the given order."""
        return tuple(state for states in self.spaces.values() for state in states)

    def space_of(self, state: str) -> str:
        """The state-space containing ``state``.

        Raises:
            UnknownState: If ``state`` is in no space
        """
        try:
            return self._space_of[state]
        except KeyError:
            raise error.UnknownState(
                f"Unknown state {state}." + error.did_you_mean(state, self._space_of)
            ) from None

    def space_of_set(self, states: AbstractSet[str]) -> Optional[str]:
        """The single space containing all of ``states``, None if there is none or ``states`` is empty."""
        spaces = {self.space_of(state) for state in states}
        return spaces.pop() if len(spaces) == 1 else None

    def upper_spaces(self, space: str) -> Tuple[str, ...]:
        """Every space weakly above ``space``."""
        return tuple(upper for upper in self.spaces if (space, upper) in self._leq)

    def lower_spaces(self, space: str) -> Tuple[str, ...]:
        """Every space weakly below ``space``."""
        return tuple(lower for lower in self.spaces if (lower, space) in self._leq)

    def project(self, state: str, lower: str) -> Optional[str]:
        """The projection of ``state`` onto the space ``lower``, None if the projection is undefined there."""
        upper = self.space_of(state)
        assert self.leq(lower, upper), f"Cannot project {state} of {upper} onto {lower}, which is not below it"
        return self.projections.get((lower, upper), {}).get(state)

    def upward_closure(self, subset: AbstractSet[str], space: str) -> FrozenSet[str]:
        """The states of spaces above ``space`` projecting into ``subset``, ``subset`` included."""
        key = (frozenset(subset), space)
        cached = self._upsets.get(key)
        if cached is None:
            cached = frozenset(
                state
                for upper in self.upper_spaces(space)
                for state, image in self.projections.get((space, upper), {}).items()
                if image in key[0]
            )
            self._upsets[key] = cached
        return cached

    def _bounds(self, spaces: Iterable[str], upper: bool) -> Optional[str]:
        spaces = list(spaces)
        if upper:
            candidates = [c for c in self.spaces if all(self.leq(s, c) for s in spaces)]
            best = [c for c in candidates if all(self.leq(c, other) for other in candidates)]
        else:
            candidates = [c for c in self.spaces if all(self.leq(c, s) for s in spaces)]
            best = [c for c in candidates if all(self.leq(other, c) for other in candidates)]
        return best[0] if len(best) == 1 else None

    def sup(self, spaces: Iterable[str]) -> Optional[str]:
        """The least space above all of ``spaces``, None if it does not exist."""
        return self._bounds(spaces, upper=True)

    def inf(self, spaces: Iterable[str]) -> Optional[str]:
        """The greatest space below all of ``spaces``, None if it does not exist."""
        return self._bounds(spaces, upper=False)

    @property
    def top(self) -> str:
        """The most expressive space.

        Raises:
            ModelError: If the order has no greatest element
        """
        top = self.sup(self.spaces)
        if top is None:
            raise error.ModelError("The state-space order has no greatest element")
        return top

    @property
    def bottom(self) -> str:
        """The least expressive space.

        Raises:
            ModelError: If the order has no least element
        """
        bottom = self.inf(self.spaces)
        if bottom is None:
            raise error.ModelError("The state-space order has no least element")
        return bottom

    def __repr__(self) -> str:
        return f"StateSpaceLattice({', '.join(f'{name}: {len(states)}' for name, states in self.spaces.items())})"


class PossibilityCorrespondence:
    """The possibility correspondence of one agent: the states it considers possible at each state."""

    def __init__(self, agent: str, mapping: Mapping[str, Iterable[str]]):
        self.agent = agent
        self.mapping: Dict[str, FrozenSet[str]] = {
            state: frozenset(possible) for state, possible in mapping.items()
        }

    def __getitem__(self, state: str) -> FrozenSet[str]:
        return self.mapping.get(state, frozenset())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PossibilityCorrespondence)
            and self.agent == other.agent
            and self.mapping == other.mapping
        )

    def __repr__(self) -> str:
        return f"PossibilityCorrespondence({self.agent}, {len(self.mapping)} states)"


class UnawarenessFrame:
    """A state-space lattice with one possibility correspondence per agent."""

    def __init__(
        self,
        lattice: StateSpaceLattice,
        correspondences: Mapping[str, Mapping[str, Iterable[str]]],
    ):
        """Attaches the correspondences to the lattice.

        Raises:
            ModelError: If there are no agents or a correspondence mentions an unknown state
        """
        self.lattice = lattice
        if not correspondences:
            raise error.ModelError("An unawareness frame needs at least one agent")
        self.correspondences: Dict[str, PossibilityCorrespondence] = {}
        for agent in sorted(correspondences):
            given = correspondences[agent]
            correspondence = (
                given
                if isinstance(given, PossibilityCorrespondence)
                else PossibilityCorrespondence(agent, given)
            )
            for state, possible in correspondence.mapping.items():
                lattice.space_of(state)
                for other in possible:
                    lattice.space_of(other)
            self.correspondences[agent] = correspondence

    @property
    def agents(self) -> Tuple[str, ...]:
        return tuple(self.correspondences)

    def possibility(self, agent: str, state: str) -> FrozenSet[str]:
        """The states ``agent`` considers possible at ``state``.

        Raises:
            UnknownAgent: If ``agent`` has no correspondence
        """
        if agent not in self.correspondences:
            raise error.UnknownAgent(
                f"Unknown agent {agent}." + error.did_you_mean(agent, self.correspondences)
            )
        return self.correspondences[agent][state]


def possibility_of(frame: UnawarenessFrame, agent: str, state: str) -> FrozenSet[str]:
    """See :meth:`UnawarenessFrame.possibility`."""
    return frame.possibility(agent, state)


def upward_closure(
    frame: UnawarenessFrame, subset: AbstractSet[str], space: Optional[str] = None
) -> FrozenSet[str]:
    """The upward closure of ``subset`` based at ``space``.

    Args:
        frame: The unawareness frame
        subset: States of one space
        space: The base space, inferred from ``subset`` if omitted

    Raises:
        ModelError: If ``subset`` is not contained in ``space`` (or in any single space)
    """
    lattice = frame.lattice
    if space is None:
        space = lattice.space_of_set(subset)
        if space is None:
            raise error.ModelError(
                f"Cannot infer the space of {sorted(subset)}, pass it explicitly"
            )
    lattice.check_space(space)
    outside = [state for state in subset if lattice.space_of(state) != space]
    if outside:
        raise error.ModelError(f"States {sorted(outside)} are not in the space {space}")
    return lattice.upward_closure(subset, space)


# Validation


@dataclass(frozen=True)
class FrameViolation:
    """One failure of a lattice, projection or HMS property, with its witnesses."""

    property: str
    agent: Optional[str]
    witness: Tuple[str, ...]
    message: str

    def __str__(self) -> str:
        who = f" ({self.agent})" if self.agent is not None else ""
        return f"{self.property}{who}: {self.message}"


@dataclass
class FrameReport:
    """Every violation found by :func:`validate_frame`."""

    violations: List[FrameViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def holds(self, property_name: str) -> bool:
        """Whether no violation of ``property_name`` was found."""
        return all(violation.property != property_name for violation in self.violations)

    def summary(self) -> str:
        """``k/5 HMS properties hold``, followed by failing structural checks if any."""
        held = sum(self.holds(name) for name in HMS_PROPERTIES)
        text = f"{held}/{len(HMS_PROPERTIES)} HMS properties hold"
        broken = [name for name in ("lattice", "projections") if not self.holds(name)]
        if broken:
            text += f" ({' and '.join(broken)} invalid)"
        return text

    def lines(self) -> List[str]:
        """One line per violation."""
        return [
            f"VIOLATION {violation.property} AGENT {violation.agent or '-'} "
            f"WITNESS {' '.join(violation.witness)}"
            for violation in self.violations
        ]


def _check_lattice(lattice: StateSpaceLattice, report: FrameReport):
    names = list(lattice.spaces)
    for lower, upper in itertools.permutations(names, 2):
        if lattice.leq(lower, upper) and lattice.leq(upper, lower):
            report.violations.append(
                FrameViolation("lattice", None, (lower, upper), f"{lower} and {upper} are below each other")
            )
    for left, right in itertools.combinations_with_replacement(names, 2):
        if lattice.sup((left, right)) is None or lattice.inf((left, right)) is None:
            report.violations.append(
                FrameViolation("lattice", None, (left, right), f"{left} and {right} lack a supremum or infimum")
            )
    for lower, upper in itertools.permutations(names, 2):
        if lattice.leq(lower, upper) and len(lattice.spaces[lower]) > len(lattice.spaces[upper]):
            report.violations.append(
                FrameViolation("lattice", None, (lower, upper), f"{lower} is below {upper} but larger")
            )


def _check_projections(lattice: StateSpaceLattice, report: FrameReport):
    def fail(witness: Tuple[str, ...], message: str):
        report.violations.append(FrameViolation("projections", None, witness, message))

    for (lower, upper), mapping in lattice.given_projections.items():
        if lower == upper and any(source != target for source, target in mapping.items()):
            fail((lower,), f"The projection of {lower} onto itself is not the identity")
    for lower in lattice.spaces:
        for upper in lattice.upper_spaces(lower):
            mapping = lattice.projections.get((lower, upper))
            if mapping is None:
                fail((lower, upper), f"No projection from {upper} onto {lower}")
                continue
            missing = [state for state in lattice.spaces[upper] if state not in mapping]
            if missing:
                fail((lower, upper, missing[0]), f"Projection onto {lower} is undefined at {missing[0]}")
            unreached = [state for state in lattice.spaces[lower] if state not in set(mapping.values())]
            if unreached:
                fail((lower, upper, unreached[0]), f"Projection from {upper} misses {unreached[0]}")
    for lower in lattice.spaces:
        for middle in lattice.upper_spaces(lower):
            for upper in lattice.upper_spaces(middle):
                if len({lower, middle, upper}) < 3:
                    continue
                direct = lattice.projections.get((lower, upper), {})
                first = lattice.projections.get((middle, upper), {})
                second = lattice.projections.get((lower, middle), {})
                for state in lattice.spaces[upper]:
                    if direct.get(state) != second.get(first.get(state, ""), None):
                        fail(
                            (lower, middle, upper, state),
                            f"Projections through {middle} do not commute at {state}",
                        )
                        break


def _check_agent(frame: UnawarenessFrame, agent: str, report: FrameReport):
    lattice = frame.lattice

    def fail(name: str, witness: Tuple[str, ...], message: str):
        report.violations.append(FrameViolation(name, agent, witness, message))

    confined: Dict[str, str] = {}
    for state in lattice.states():
        possible = frame.possibility(agent, state)
        space = lattice.space_of_set(possible) if possible else None
        if space is None or not lattice.leq(space, lattice.space_of(state)):
            fail("Conf", (state,), f"The possibility set at {state} is not inside one space below it")
        else:
            confined[state] = space

    def closure(state: str) -> FrozenSet[str]:
        return lattice.upward_closure(frame.possibility(agent, state), confined[state])

    for state, space in confined.items():
        if state not in closure(state):
            fail("Gref", (state,), f"{state} is not in the upward closure of its possibility set")

    for state in lattice.states():
        possible = frame.possibility(agent, state)
        for other in sorted(possible):
            if frame.possibility(agent, other) != possible:
                fail("Stat", (state, other), f"{other} is possible at {state} but has another possibility set")
                break

    for state, space in confined.items():
        for lower in lattice.lower_spaces(lattice.space_of(state)):
            projected = lattice.project(state, lower)
            if projected is None or projected not in confined:
                continue
            if not closure(state) <= closure(projected):
                fail("PPI", (state, projected), f"Projecting {state} to {projected} loses ignorance")

    for state, space in confined.items():
        possible = frame.possibility(agent, state)
        for lower in lattice.lower_spaces(space):
            projected = lattice.project(state, lower)
            images = {lattice.project(other, lower) for other in possible}
            if projected is None or images != set(frame.possibility(agent, projected)):
                fail(
                    "PPK",
                    (state, lower),
                    f"Projecting the possibility set of {state} onto {lower} differs from the possibility set of its projection",
                )


def validate_frame(frame: UnawarenessFrame) -> FrameReport:
    """Checks the lattice and projection laws and the five HMS properties of every agent.

    Returns:
        A report listing every violation with its witnesses; ``report.ok`` if there are none
    """
    report = FrameReport()
    _check_lattice(frame.lattice, report)
    _check_projections(frame.lattice, report)
    for agent in frame.agents:
        _check_agent(frame, agent, report)
    logger.debug("frame validation: %s", report.summary())
    return report


# Events


class Event:
    """The event generated by the states ``d`` of the space ``base``.

    Its upset is the upward closure of ``d``; two events are equal when they share
    base space and upset, so empty events based at different spaces differ.
    """

    def __init__(self, lattice: StateSpaceLattice, d: Iterable[str], base: str):
        """Creates the event.

        Raises:
            MalformedEvent: If ``base`` is unknown or ``d`` is not contained in it
        """
        if base not in lattice.spaces:
            raise error.MalformedEvent(
                f"Unknown base space {base}." + error.did_you_mean(base, lattice.spaces)
            )
        self.lattice = lattice
        self.d: FrozenSet[str] = frozenset(d)
        self.base = base
        outside = sorted(self.d - set(lattice.spaces[base]))
        if outside:
            raise error.MalformedEvent(f"States {outside} of the event are not in its base space {base}")
        self._upset: Optional[FrozenSet[str]] = None

    @property
    def upset(self) -> FrozenSet[str]:
        if self._upset is None:
            self._upset = self.lattice.upward_closure(self.d, self.base)
        return self._upset

    @property
    def base_space(self) -> str:
        return self.base

    def __eq__(self, other) -> bool:
        return isinstance(other, Event) and self.base == other.base and self.upset == other.upset

    def __hash__(self) -> int:
        return hash((self.base, self.upset))

    def __repr__(self) -> str:
        return f"Event({{{', '.join(sorted(self.d))}}} based at {self.base})"


def is_well_formed(lattice: StateSpaceLattice, upset: AbstractSet[str], base: str) -> bool:
    """Whether ``upset`` is the upward closure of its own part in ``base``."""
    generator = frozenset(upset) & set(lattice.spaces[base])
    return lattice.upward_closure(generator, base) == frozenset(upset)


def top_event(frame: UnawarenessFrame) -> Event:
    """The event containing every state, based at the least space."""
    bottom = frame.lattice.bottom
    return Event(frame.lattice, frame.lattice.spaces[bottom], bottom)


def neg_event(frame: UnawarenessFrame, e: Event) -> Event:
    """The complement of ``e`` within its base space, closed upwards."""
    return Event(frame.lattice, set(frame.lattice.spaces[e.base]) - e.d, e.base)


def conj_events(frame: UnawarenessFrame, events: Iterable[Event]) -> Event:
    """The intersection of the upsets, based at the supremum of the base spaces.

    Raises:
        ModelError: If the base spaces have no supremum
    """
    events = list(events)
    assert events, "Expected at least one event to conjoin"
    if len(events) == 1:
        return events[0]
    lattice = frame.lattice
    base = lattice.sup(e.base for e in events)
    if base is None:
        raise error.ModelError(
            f"The spaces {sorted({e.base for e in events})} have no supremum"
        )
    upset = frozenset.intersection(*(e.upset for e in events))
    return Event(lattice, upset & set(lattice.spaces[base]), base)


def _event_from_states(frame: UnawarenessFrame, states: Iterable[str], base: str) -> Event:
    return Event(frame.lattice, set(states) & set(frame.lattice.spaces[base]), base)


def k_event(frame: UnawarenessFrame, agent: str, e: Event) -> Event:
    """The states whose possibility set for ``agent`` lies inside ``e``, based where ``e`` is."""
    return _event_from_states(
        frame,
        (
            state
            for state in frame.lattice.states()
            if frame.possibility(agent, state) <= e.upset
        ),
        e.base,
    )


def a_event(frame: UnawarenessFrame, agent: str, e: Event) -> Event:
    """The states whose possibility set for ``agent`` lies where ``e`` is expressible."""
    expressible = frame.lattice.upward_closure(frame.lattice.spaces[e.base], e.base)
    return _event_from_states(
        frame,
        (
            state
            for state in frame.lattice.states()
            if frame.possibility(agent, state) <= expressible
        ),
        e.base,
    )


class HmsModel(Model[str]):
    """An unawareness frame with an event for every atom.

    Example::

        model = awmc.make("TradeHMS-v0")
        model.check("(i,l)", "K{B} (i & l)")  # ThreeVal(true)
        model.check("(!i,!l)", "K{B} l")  # ThreeVal(undefined)
    """

    kind = "hms"

    def __init__(self, frame: UnawarenessFrame, valuation: Mapping[str, Event]):
        """Attaches the valuation to the frame.

        Raises:
            ModelError: If a valuation event belongs to another frame
        """
        self.frame = frame
        self.lattice = frame.lattice
        self.valuation: Dict[str, Event] = {atom: valuation[atom] for atom in sorted(valuation)}
        for atom, event in self.valuation.items():
            if event.lattice is not frame.lattice:
                raise error.ModelError(f"The event of atom {atom} belongs to another frame")
        self.atom_set = frozenset(self.valuation)
        self.agents = frame.agents
        self._denotations: Dict[Formula, Event] = {}

    def worlds(self) -> Tuple[str, ...]:
        return self.lattice.states()

    def resolve_world(self, ref: str) -> str:
        self.lattice.space_of(ref)
        return ref

    def denotation(self, phi: Formula) -> Event:
        """The event ``phi`` denotes.

        Raises:
            UnknownAtom: If ``phi`` mentions an atom without valuation
        """
        cached = self._denotations.get(phi)
        if cached is not None:
            return cached
        if isinstance(phi, Top):
            result = top_event(self.frame)
        elif isinstance(phi, Atom):
            if phi.name not in self.valuation:
                raise error.UnknownAtom(
                    f"Atom {phi.name} has no valuation." + error.did_you_mean(phi.name, self.valuation)
                )
            result = self.valuation[phi.name]
        elif isinstance(phi, Not):
            result = neg_event(self.frame, self.denotation(phi.operand))
        elif isinstance(phi, And):
            result = conj_events(
                self.frame, (self.denotation(phi.left), self.denotation(phi.right))
            )
        elif isinstance(phi, Knows):
            result = k_event(self.frame, phi.agent, self.denotation(phi.operand))
        else:
            raise TypeError(f"Expected a normalized formula, actual type: {type(phi)}")
        self._denotations[phi] = result
        return result

    def satisfies(self, world: str, phi: Formula) -> ThreeVal:
        """True in the denotation of ``phi``, false in that of its negation, undefined elsewhere.

        Raises:
            UnknownState: If ``world`` is not a state of the frame
        """
        self.lattice.space_of(world)
        self.check_formula(phi)
        denotation = self.denotation(phi)
        if world in denotation.upset:
            return ThreeVal.TRUE
        if world in neg_event(self.frame, denotation).upset:
            return ThreeVal.FALSE
        return ThreeVal.UNDEFINED

    def __repr__(self) -> str:
        return f"HmsModel({self.lattice!r}, agents={list(self.agents)}, atoms={sorted(self.atom_set)})"


def denotation(model: HmsModel, phi: Formula) -> Event:
    """See :meth:`HmsModel.denotation`."""
    return model.denotation(phi)


def hms_satisfies(model: HmsModel, state: str, phi: Formula) -> ThreeVal:
    """See :meth:`HmsModel.satisfies`."""
    return model.satisfies(state, phi)


def atom_profile(model: HmsModel, states: Iterable[str]) -> FrozenSet[str]:
    """The atoms with a truth value at every one of ``states``."""
    states = frozenset(states)
    return frozenset(
        atom
        for atom, event in model.valuation.items()
        if states <= event.upset | neg_event(model.frame, event).upset
    )
