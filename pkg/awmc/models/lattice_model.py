"""Kripke lattice models: restriction lattices with awareness maps, and their semantics.

An awareness map sends every tagged world ``w_X`` to a copy ``w_Y`` of the same world
under fewer atoms, the vocabulary the agent actually reasons with at ``w_X``. Knowledge
is evaluated in the information cell of that copy, so uncertainty lives in the
relations and unawareness in the maps.
"""
import itertools
from dataclasses import dataclass
from typing import (
    AbstractSet,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
    Union,
)

from awmc import error
from awmc.core import Model
from awmc.formula.syntax import And, Atom, Formula, Knows, Not, Top, atoms
from awmc.models.kripke import (
    KripkeModel,
    RestrictedWorld,
    RestrictionLattice,
    build_lattice,
    subset_key,
    subset_text,
)
from awmc.models.three_valued import ThreeVal


class AwarenessMap:
    """The awareness map of one agent, a total map on the worlds of the lattice."""

    def __init__(self, agent: str, mapping: Mapping[RestrictedWorld, RestrictedWorld]):
        self.agent = agent
        self.mapping: Dict[RestrictedWorld, RestrictedWorld] = dict(mapping)

    def __getitem__(self, world: RestrictedWorld) -> RestrictedWorld:
        return self.mapping[world]

    def get(self, world: RestrictedWorld) -> Optional[RestrictedWorld]:
        return self.mapping.get(world)

    def __contains__(self, world) -> bool:
        return world in self.mapping

    def __len__(self) -> int:
        return len(self.mapping)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AwarenessMap)
            and self.agent == other.agent
            and self.mapping == other.mapping
        )

    def __repr__(self) -> str:
        return f"AwarenessMap({self.agent}, {len(self.mapping)} worlds)"


def _proper_subsets(atom_subset: FrozenSet[str]) -> Iterator[FrozenSet[str]]:
    atoms_ = sorted(atom_subset)
    subsets = [
        frozenset(subset)
        for size in range(len(atoms_))
        for subset in itertools.combinations(atoms_, size)
    ]
    return iter(sorted(subsets, key=subset_key))


def check_awareness_map(
    lattice: RestrictionLattice, awareness_map: AwarenessMap
) -> List[error.AwarenessViolation]:
    """Lists every way ``awareness_map`` fails to be total, downwards, introspective or surprise free.

    At most one violation per world and property is reported, the first in lattice order.

    Args:
        lattice: The restriction lattice the map acts on
        awareness_map: The map to check

    Returns:
        The violations, empty if the map is valid
    """
    agent = awareness_map.agent
    violations: List[error.AwarenessViolation] = [
        error.PartialMap(agent, world)
        for world in lattice.worlds()
        if world not in awareness_map
    ]
    for world in lattice.worlds():
        image = awareness_map.get(world)
        if image is None:
            continue
        if not (
            isinstance(image, RestrictedWorld)
            and image in lattice
            and image.base == world.base
            and image.atom_subset <= world.atom_subset
        ):
            violations.append(error.NotDownwards(agent, world, image))
            continue

        restriction = lattice[image.atom_subset]
        cell = restriction.successors(agent, image)
        for other in cell:
            target = awareness_map.get(other)
            if target is not None and target not in cell:
                violations.append(error.NotIntrospective(agent, world, other))
                break

        for subset in _proper_subsets(world.atom_subset):
            subset_world = world.restrict(subset)
            expected = world.restrict(subset & image.atom_subset)
            got = awareness_map.get(subset_world)
            if got is not None and got != expected:
                violations.append(
                    error.Surprise(agent, world, subset_world, expected, got)
                )
                break
    return violations


def awareness_from_sets(
    lattice: RestrictionLattice, targets: Mapping[str, Mapping[str, AbstractSet[str]]]
) -> Dict[str, AwarenessMap]:
    """Builds the awareness maps ``w_X -> w_{X & Z}`` from awareness sets ``Z`` at the base worlds.

    These are exactly the maps satisfying downwards and no surprises; they are also
    introspective whenever ``Z`` is constant on every information cell.

    Args:
        lattice: The restriction lattice
        targets: For each agent, the awareness set of each base world; missing worlds are fully aware

    Returns:
        The awareness map of every agent of the lattice's base model
    """
    base = lattice.base
    maps = {}
    for agent in base.agents:
        sets = targets.get(agent, {})
        unknown = set().union(*sets.values()) - base.atom_set
        if unknown:
            atom = min(unknown)
            raise error.UnknownAtom(
                f"Awareness set of {agent} mentions unknown atom {atom}."
                + error.did_you_mean(atom, base.atom_set)
            )
        maps[agent] = AwarenessMap(
            agent,
            {
                world: world.restrict(
                    world.atom_subset & frozenset(sets.get(world.base, base.atom_set))
                )
                for world in lattice.worlds()
            },
        )
    return maps


class KripkeLatticeModel(Model[RestrictedWorld]):
    """A restriction lattice together with one awareness map per agent.

    Satisfaction is three-valued and memoized per model::

        >>> klm.satisfies(RestrictedWorld("w2", {"i"}), Atom("l"))
        ThreeVal(undefined)
    """

    kind = "kripke_lattice"

    def __init__(
        self,
        lattice: RestrictionLattice,
        awareness: Mapping[str, Union[AwarenessMap, Mapping[RestrictedWorld, RestrictedWorld]]],
        validate: bool = True,
    ):
        """Attaches the awareness maps to the lattice.

        Args:
            lattice: The restriction lattice
            awareness: For each agent, its awareness map or a plain mapping
            validate: If to reject maps violating downwards, introspection or no surprises

        Raises:
            UnknownAgent: If a map is given for an agent outside the base model
            InvalidKripkeLatticeModel: If ``validate`` and some map is invalid
        """
        self.lattice = lattice
        self.base: KripkeModel = lattice.base
        self.atom_set = self.base.atom_set
        self.agents = self.base.agents
        for agent in awareness:
            if agent not in self.agents:
                raise error.UnknownAgent(
                    f"Awareness map given for unknown agent {agent}."
                    + error.did_you_mean(agent, self.agents)
                )
        self.awareness: Dict[str, AwarenessMap] = {}
        for agent in self.agents:
            given = awareness.get(agent, {})
            self.awareness[agent] = (
                given if isinstance(given, AwarenessMap) else AwarenessMap(agent, given)
            )
        self._memo: Dict[Tuple[RestrictedWorld, Formula], bool] = {}
        if validate:
            violations = self.violations()
            if violations:
                raise error.InvalidKripkeLatticeModel(violations)

    def violations(self) -> List[error.AwarenessViolation]:
        """Every awareness-map violation, agent by agent."""
        return [
            violation
            for agent in self.agents
            for violation in check_awareness_map(self.lattice, self.awareness[agent])
        ]

    def worlds(self) -> Tuple[RestrictedWorld, ...]:
        return self.lattice.worlds()

    def resolve_world(self, ref: str) -> RestrictedWorld:
        world = RestrictedWorld.parse(ref)
        self.lattice.restriction_of(world)
        return world

    def info_cell(self, agent: str, world: RestrictedWorld) -> Tuple[RestrictedWorld, ...]:
        """The information cell of ``agent`` at ``world`` within its own restriction."""
        return self.lattice.restriction_of(world).successors(agent, world)

    def awareness_image(self, agent: str, world: RestrictedWorld) -> RestrictedWorld:
        """The copy of ``world`` under the atoms ``agent`` is aware of there."""
        image = self.awareness[agent].get(world)
        if image is None:
            raise error.ModelError(f"Awareness map of {agent} is undefined at {world}")
        return image

    def awareness_set(self, agent: str, world: RestrictedWorld) -> FrozenSet[str]:
        """The atoms ``agent`` is aware of at ``world``."""
        return self.awareness_image(agent, world).atom_subset

    def holds(self, world: RestrictedWorld, phi: Formula) -> bool:
        """The two-valued forcing relation; never true when ``phi`` mentions atoms outside ``world``'s subset."""
        key = (world, phi)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        subset = world.atom_subset
        if isinstance(phi, Top):
            result = True
        elif isinstance(phi, Atom):
            result = phi.name in subset and world.base in self.base.valuation[phi.name]
        elif isinstance(phi, Not):
            result = atoms(phi.operand) <= subset and not self.holds(world, phi.operand)
        elif isinstance(phi, And):
            result = self.holds(world, phi.left) and self.holds(world, phi.right)
        elif isinstance(phi, Knows):
            image = self.awareness_image(phi.agent, world)
            result = atoms(phi.operand) <= subset and all(
                self.holds(other, phi.operand)
                for other in self.lattice[image.atom_subset].successors(phi.agent, image)
            )
        else:
            raise TypeError(f"Expected a normalized formula, actual type: {type(phi)}")
        self._memo[key] = result
        return result

    def satisfies(self, world: RestrictedWorld, phi: Formula) -> ThreeVal:
        """Evaluates ``phi`` at ``world``: true if forced, false if its negation is forced, else undefined.

        Raises:
            UnknownWorld: If ``world`` is not in the lattice
            UnknownAtom: If ``phi`` mentions an atom outside the model's atom set
            UnknownAgent: If ``phi`` mentions an unknown agent
        """
        self.lattice.restriction_of(world)
        self.check_formula(phi)
        if self.holds(world, phi):
            return ThreeVal.TRUE
        if self.holds(world, Not(phi)):
            return ThreeVal.FALSE
        return ThreeVal.UNDEFINED

    def __repr__(self) -> str:
        return (
            f"KripkeLatticeModel(worlds={list(self.base.worlds)}, agents={list(self.agents)}, "
            f"atom_set={subset_text(self.atom_set)})"
        )


def build_klm(
    model: KripkeModel,
    awareness: Mapping[str, Union[AwarenessMap, Mapping[RestrictedWorld, RestrictedWorld]]],
    cap: Optional[int] = None,
) -> KripkeLatticeModel:
    """Builds the restriction lattice of ``model`` and validates the awareness maps on it.

    Args:
        model: The base Kripke model
        awareness: For each agent, a total map from tagged worlds to tagged worlds
        cap: The powerset cap passed to :func:`build_lattice`

    Raises:
        InvalidKripkeLatticeModel: With every violation found
    """
    return KripkeLatticeModel(build_lattice(model, cap), awareness)


def satisfies(klm: KripkeLatticeModel, world: RestrictedWorld, phi: Formula) -> ThreeVal:
    """Three-valued satisfaction of ``phi`` at ``world``, see :meth:`KripkeLatticeModel.satisfies`."""
    return klm.satisfies(world, phi)


@dataclass(frozen=True)
class ValidityResult:
    """Whether a formula is valid over a set of models, with the first counterexample otherwise.

    ``counterexample`` is the pair of the model's index and the failing world.
    """

    valid: bool
    counterexample: Optional[Tuple[int, RestrictedWorld]] = None

    def __bool__(self) -> bool:
        return self.valid


def valid_over(models: Iterable[KripkeLatticeModel], phi: Formula) -> ValidityResult:
    """Checks ``phi`` at every world of every model where all atoms of ``phi`` are defined.

    Worlds lacking some atom of ``phi`` are skipped, so ``phi`` is valid when it is true
    wherever it has a truth value.
    """
    needed = atoms(phi)
    for index, klm in enumerate(models):
        klm.check_formula(phi)
        for world in klm.worlds():
            if needed <= world.atom_subset and not klm.holds(world, phi):
                return ValidityResult(False, (index, world))
    return ValidityResult(True)


def awareness_image(klm: KripkeLatticeModel, agent: str, world: RestrictedWorld) -> RestrictedWorld:
    """See :meth:`KripkeLatticeModel.awareness_image`."""
    return klm.awareness_image(agent, world)


def awareness_set(klm: KripkeLatticeModel, agent: str, world: RestrictedWorld) -> FrozenSet[str]:
    """See :meth:`KripkeLatticeModel.awareness_set`."""
    return klm.awareness_set(agent, world)


def is_idempotent(klm: KripkeLatticeModel) -> bool:
    """Whether applying any awareness map twice equals applying it once."""
    return all(
        klm.awareness_image(agent, klm.awareness_image(agent, world))
        == klm.awareness_image(agent, world)
        for agent in klm.agents
        for world in klm.worlds()
    )


def awareness_sets_at_top(klm: KripkeLatticeModel) -> Dict[str, Dict[str, FrozenSet[str]]]:
    """The awareness set of every agent at the fully expressive copy of each base world."""
    top = klm.lattice.top
    return {
        agent: {world.base: klm.awareness_set(agent, world) for world in top.worlds}
        for agent in klm.agents
    }

