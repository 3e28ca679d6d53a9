"""The H-transform, turning a Kripke lattice model into an HMS model, and state merging.

The H-transform keeps every restriction as its own state-space, so all of its spaces
have as many states as the base model has worlds. Merging collapses states of a
space that no formula tells apart, giving HMS models with shrinking spaces.
"""
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from awmc import error, logger
from awmc.models.hms import (
    Event,
    HmsModel,
    StateSpaceLattice,
    UnawarenessFrame,
)
from awmc.models.kripke import RestrictedWorld, is_equivalence, subset_text
from awmc.models.lattice_model import KripkeLatticeModel


def space_id(atom_subset: Iterable[str]) -> str:
    """The name of the space holding the restriction to ``atom_subset``."""
    return subset_text(atom_subset)


def state_id(world: RestrictedWorld) -> str:
    """The name of the state standing for ``world``."""
    return str(world)


def h_transform(klm: KripkeLatticeModel) -> HmsModel:
    """Builds the HMS model whose spaces are the restrictions of ``klm``.

    Spaces are ordered by inclusion of their atom subsets and project ``w_X`` onto
    ``w_Y``. The possibility set of an agent at ``w_X`` is its information cell at the
    awareness image of ``w_X``; atom ``p`` denotes the event based at the space of ``{p}``
    generated by the copies of the worlds where ``p`` holds.

    Raises:
        NonEquivalenceRelation: If some accessibility relation is not an equivalence
    """
    base = klm.base
    for agent in base.agents:
        if not is_equivalence(base, agent):
            raise error.NonEquivalenceRelation(agent)

    restrictions = list(klm.lattice)
    spaces = {
        space_id(r.atom_subset): [state_id(world) for world in r.worlds]
        for r in restrictions
    }
    order = []
    projections = {}
    for upper in restrictions:
        for atom in sorted(upper.atom_subset):
            lower = upper.atom_subset - {atom}
            pair = (space_id(lower), space_id(upper.atom_subset))
            order.append(pair)
            projections[pair] = {
                state_id(world): state_id(world.restrict(lower)) for world in upper.worlds
            }
    lattice = StateSpaceLattice(spaces, order, projections)

    correspondences = {
        agent: {
            state_id(world): [
                state_id(other)
                for other in klm.info_cell(agent, klm.awareness_image(agent, world))
            ]
            for world in klm.worlds()
        }
        for agent in klm.agents
    }
    frame = UnawarenessFrame(lattice, correspondences)
    valuation = {
        atom: Event(
            lattice,
            (state_id(RestrictedWorld(world, {atom})) for world in base.valuation[atom]),
            space_id({atom}),
        )
        for atom in sorted(base.atom_set)
    }
    logger.info(
        "H-transform: %s worlds to %s spaces of %s states",
        len(klm.worlds()),
        len(spaces),
        len(base.worlds),
    )
    return HmsModel(frame, valuation)


def _check_groups(model: HmsModel, space: str, groups: Sequence[Sequence[str]]) -> Dict[str, str]:
    lattice = model.lattice
    lattice.check_space(space)
    if space == lattice.top:
        raise error.ModelError("The states of the top space cannot be merged")
    members = set(lattice.spaces[space])
    representative: Dict[str, str] = {}
    for group in groups:
        for state in group:
            if state not in members:
                raise error.ModelError(f"State {state} is not in the space {space}")
            if state in representative:
                raise error.ModelError(f"State {state} appears in two groups")
            representative[state] = group[0]
    for state in lattice.spaces[space]:
        representative.setdefault(state, state)
    return representative


def merge_states(model: HmsModel, space: str, groups: Sequence[Sequence[str]]) -> HmsModel:
    """Replaces each group of states of ``space`` by its first member.

    Every projection onto a merged state is redirected to its representative and so are
    the possibility sets. States of a group must agree on all projections below, on
    their possibility sets once merged, and on the atoms based at ``space``.

    Raises:
        ModelError: If ``space`` is the top space or a group's states can be told apart
    """
    lattice, frame = model.lattice, model.frame
    representative = _check_groups(model, space, groups)

    def merged(states: Iterable[str]) -> FrozenSet[str]:
        return frozenset(representative.get(state, state) for state in states)

    for group in groups:
        first, *rest = group
        for other in rest:
            for lower in lattice.lower_spaces(space):
                if lower != space and lattice.project(other, lower) != lattice.project(first, lower):
                    raise error.ModelError(
                        f"Cannot merge {other} into {first}: their projections onto {lower} differ"
                    )
            for agent in frame.agents:
                if merged(frame.possibility(agent, other)) != merged(frame.possibility(agent, first)):
                    raise error.ModelError(
                        f"Cannot merge {other} into {first}: {agent} considers different states possible"
                    )
            for atom, event in model.valuation.items():
                if event.base == space and (other in event.d) != (first in event.d):
                    raise error.ModelError(
                        f"Cannot merge {other} into {first}: they disagree on atom {atom}"
                    )

    spaces = {
        name: [state for state in states if representative.get(state, state) == state]
        for name, states in lattice.spaces.items()
    }
    kept = {state for states in spaces.values() for state in states}
    order = [
        (lower, upper)
        for lower in lattice.spaces
        for upper in lattice.upper_spaces(lower)
        if lower != upper
    ]
    projections = {
        (lower, upper): {
            source: representative.get(target, target)
            for source, target in lattice.projections.get((lower, upper), {}).items()
            if source in kept
        }
        for lower, upper in order
    }
    new_lattice = StateSpaceLattice(spaces, order, projections)
    correspondences = {
        agent: {state: merged(frame.possibility(agent, state)) for state in kept}
        for agent in frame.agents
    }
    valuation = {
        atom: Event(new_lattice, merged(event.d), event.base)
        for atom, event in model.valuation.items()
    }
    logger.debug(
        "merged %s states of %s", len(lattice.spaces[space]) - len(spaces[space]), space
    )
    return HmsModel(UnawarenessFrame(new_lattice, correspondences), valuation)


def bisimilar_groups(model: HmsModel, space: str) -> List[List[str]]:
    """The coarsest partition of ``space`` whose blocks :func:`merge_states` accepts.

    Refinement starts from projections and valuation, then splits blocks until the
    possibility sets of every agent agree block-wise.
    """
    lattice, frame = model.lattice, model.frame
    states = lattice.spaces[space]
    lowers = [lower for lower in lattice.lower_spaces(space) if lower != space]
    based_here = [event for event in model.valuation.values() if event.base == space]

    def signature(state: str) -> Tuple:
        return (
            tuple(lattice.project(state, lower) for lower in lowers),
            tuple(state in event.d for event in based_here),
        )

    block: Dict[str, int] = {}
    signatures: Dict[Tuple, int] = {}
    for state in states:
        block[state] = signatures.setdefault(signature(state), len(signatures))

    while True:
        refined: Dict[Tuple, int] = {}
        new_block: Dict[str, int] = {}
        for state in states:
            key = (block[state],) + tuple(
                frozenset(block.get(other, other) for other in frame.possibility(agent, state))
                for agent in frame.agents
            )
            new_block[state] = refined.setdefault(key, len(refined))
        if len(refined) == len(set(block.values())):
            break
        block = new_block

    groups: Dict[int, List[str]] = {}
    for state in states:
        groups.setdefault(block[state], []).append(state)
    return list(groups.values())


def collapse(model: HmsModel) -> HmsModel:
    """Merges indistinguishable states in every space but the top, poorest spaces first."""
    top = model.lattice.top
    pending: Set[str] = set(model.lattice.spaces) - {top}
    order = sorted(pending, key=lambda name: (len(model.lattice.lower_spaces(name)), name))
    for space in order:
        groups = bisimilar_groups(model, space)
        if any(len(group) > 1 for group in groups):
            model = merge_states(model, space, groups)
    return model

