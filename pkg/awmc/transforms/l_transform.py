"""The L-transform, turning an HMS model into a Kripke lattice model."""
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple

from awmc import error, logger
from awmc.models.hms import HmsModel, atom_profile, validate_frame
from awmc.models.kripke import KripkeModel, RestrictedWorld, build_lattice, subset_text
from awmc.models.lattice_model import AwarenessMap, KripkeLatticeModel


class StateCorrespondence(Mapping[str, FrozenSet[RestrictedWorld]]):
    """Pairs each HMS state with the worlds of the L-transform that represent it.

    A state ``s`` corresponds to the copies, under the atoms defined on its space, of
    every top-space state projecting onto ``s``.
    """

    def __init__(self, mapping: Mapping[str, FrozenSet[RestrictedWorld]]):
        self.mapping: Dict[str, FrozenSet[RestrictedWorld]] = dict(mapping)

    def __getitem__(self, state: str) -> FrozenSet[RestrictedWorld]:
        try:
            return self.mapping[state]
        except KeyError:
            raise error.UnknownState(
                f"Unknown state {state}." + error.did_you_mean(state, self.mapping)
            ) from None

    def __contains__(self, state) -> bool:
        return state in self.mapping

    def __iter__(self) -> Iterator[str]:
        return iter(self.mapping)

    def __len__(self) -> int:
        return len(self.mapping)

    def pairs(self) -> Iterator[Tuple[str, RestrictedWorld]]:
        """Every (state, world) pair, worlds of each state in lattice order."""
        for state, worlds in self.mapping.items():
            for world in sorted(worlds, key=lambda w: (w.base, sorted(w.atom_subset))):
                yield state, world

    def __repr__(self) -> str:
        return f"StateCorrespondence({len(self.mapping)} states)"


def space_profiles(model: HmsModel) -> Dict[str, FrozenSet[str]]:
    """The atoms defined at every state of each space."""
    return {
        space: atom_profile(model, states)
        for space, states in model.lattice.spaces.items()
    }


def min_spaces(model: HmsModel, profiles: Optional[Mapping[str, FrozenSet[str]]] = None) -> Dict[FrozenSet[str], str]:
    """The least space defining exactly each realized atom subset.

    Raises:
        AmbiguousMinSpace: If the spaces sharing a profile have no least element among them
    """
    profiles = space_profiles(model) if profiles is None else profiles
    candidates: Dict[FrozenSet[str], List[str]] = {}
    for space, profile in profiles.items():
        candidates.setdefault(profile, []).append(space)
    result = {}
    for profile, spaces in candidates.items():
        least = model.lattice.inf(spaces)
        if least not in spaces:
            raise error.AmbiguousMinSpace(profile, spaces)
        result[profile] = least
    return result


def state_correspondence(model: HmsModel, state: str) -> FrozenSet[RestrictedWorld]:
    """The worlds of the L-transform corresponding to ``state``.

    Raises:
        UnknownState: If ``state`` is not a state of ``model``
    """
    lattice = model.lattice
    space = lattice.space_of(state)
    profile = atom_profile(model, lattice.spaces[space])
    return frozenset(
        RestrictedWorld(world, profile)
        for world in lattice.spaces[lattice.top]
        if lattice.project(world, space) == state
    )


def _transform(model: HmsModel, validate: bool) -> Tuple[KripkeLatticeModel, StateCorrespondence]:
    report = validate_frame(model.frame)
    if not report.ok:
        raise error.InvalidFrame(report)
    lattice, frame = model.lattice, model.frame
    top = lattice.top
    top_states = lattice.spaces[top]
    profiles = space_profiles(model)
    least = min_spaces(model, profiles)

    def aware_space(agent: str, state: str) -> str:
        space = lattice.space_of_set(frame.possibility(agent, state))
        assert space is not None, f"Possibility set of {agent} at {state} spans several spaces"
        return space

    accessibility = {
        agent: [
            (world, other)
            for world in top_states
            for other in top_states
            if lattice.project(other, aware_space(agent, world))
            in frame.possibility(agent, world)
        ]
        for agent in frame.agents
    }
    valuation = {
        atom: [world for world in top_states if world in event.upset]
        for atom, event in model.valuation.items()
    }
    base = KripkeModel(top_states, frame.agents, model.atom_set, accessibility, valuation)
    restriction_lattice = build_lattice(base)

    unrealized = sorted(
        (r.atom_subset for r in restriction_lattice if r.atom_subset not in least),
        key=sorted,
    )
    for subset in unrealized:
        logger.warn(
            "No state-space defines exactly the atoms %s, completing its awareness images from the top",
            subset_text(subset),
        )

    def image(agent: str, world: RestrictedWorld) -> RestrictedWorld:
        space = least.get(world.atom_subset)
        if space is None:
            top_image = image(agent, world.restrict(profiles[top]))
            return world.restrict(world.atom_subset & top_image.atom_subset)
        state = lattice.project(world.base, space)
        return world.restrict(profiles[aware_space(agent, state)])

    awareness = {
        agent: AwarenessMap(
            agent, {world: image(agent, world) for world in restriction_lattice.worlds()}
        )
        for agent in frame.agents
    }
    klm = KripkeLatticeModel(restriction_lattice, awareness, validate=validate)
    correspondence = StateCorrespondence(
        {state: state_correspondence(model, state) for state in lattice.states()}
    )
    logger.info(
        "L-transform: %s spaces to %s worlds over %s restrictions",
        len(lattice.spaces),
        len(top_states),
        len(restriction_lattice),
    )
    return klm, correspondence


def l_transform(model: HmsModel) -> Tuple[KripkeLatticeModel, StateCorrespondence]:
    """Builds the Kripke lattice model of an HMS model on the worlds of its top space.

    Two worlds are related for an agent when the second projects into the possibility
    set of the first; the awareness image of ``w_X`` keeps the atoms defined on the
    space the agent's possibility set lies in, read at the least space defining ``X``.

    Args:
        model: A valid HMS model

    Returns:
        The Kripke lattice model and the correspondence from states to its worlds

    Raises:
        InvalidFrame: If the frame fails validation
        AmbiguousMinSpace: If some atom profile has no least space
        InvalidKripkeLatticeModel: If the resulting awareness maps are invalid
    """
    return _transform(model, validate=True)


def l_transform_unchecked(model: HmsModel) -> Tuple[KripkeLatticeModel, StateCorrespondence]:
    """Like :func:`l_transform`, but leaves invalid awareness maps in place for inspection."""
    return _transform(model, validate=False)
