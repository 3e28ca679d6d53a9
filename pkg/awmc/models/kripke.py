"""Finite Kripke models, their restrictions to atom subsets, and the restriction lattice."""
import itertools
import os
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
    Sequence,
    Tuple,
)

from awmc import error, logger
from awmc.formula.syntax import check_identifier

Pair = Tuple[str, str]

MAX_ATOMS_ENV = "AWMC_MAX_ATOMS"
DEFAULT_MAX_ATOMS = 16


def subset_text(atom_subset: Iterable[str]) -> str:
    """Writes an atom subset as ``{a,b}`` with sorted atoms."""
    return "{" + ",".join(sorted(atom_subset)) + "}"


def subset_key(atom_subset: AbstractSet[str]) -> Tuple[int, Tuple[str, ...]]:
    """Sort key placing larger subsets first, ties broken lexicographically."""
    return -len(atom_subset), tuple(sorted(atom_subset))


@dataclass(frozen=True)
class RestrictedWorld:
    """The copy ``w_X`` of a base world ``w`` in the restriction to the atoms ``X``.

    Equality is componentwise, so copies of one world under different atom subsets are
    distinct. The text form is ``w@{a,b}``.
    """

    base: str
    atom_subset: FrozenSet[str]

    def __post_init__(self):
        if not isinstance(self.atom_subset, frozenset):
            object.__setattr__(self, "atom_subset", frozenset(self.atom_subset))

    def __str__(self) -> str:
        return f"{self.base}@{subset_text(self.atom_subset)}"

    def restrict(self, atom_subset: AbstractSet[str]) -> "RestrictedWorld":
        """The copy of the same base world under ``atom_subset``."""
        return RestrictedWorld(self.base, frozenset(atom_subset))

    @classmethod
    def parse(cls, text: str) -> "RestrictedWorld":
        """Parses the ``id@{a,b}`` form.

        Raises:
            UnknownWorld: If ``text`` is not of that form
        """
        base, sep, subset = text.strip().rpartition("@")
        if not sep or not base or not (subset.startswith("{") and subset.endswith("}")):
            raise error.UnknownWorld(
                f"Malformed world reference {text!r}, expected the form `id@{{atom,...}}`"
            )
        names = [name.strip() for name in subset[1:-1].split(",") if name.strip()]
        return cls(base.strip(), frozenset(names))


def is_reflexive(pairs: AbstractSet[Pair], worlds: Iterable[str]) -> bool:
    """Every world reaches itself."""
    return all((world, world) in pairs for world in worlds)


def is_symmetric(pairs: AbstractSet[Pair]) -> bool:
    """Every pair is matched by its reverse."""
    return all((target, source) in pairs for source, target in pairs)


def is_transitive(pairs: AbstractSet[Pair]) -> bool:
    """Pairs compose within the relation."""
    successors: Dict[str, set] = {}
    for source, target in pairs:
        successors.setdefault(source, set()).add(target)
    return all(
        (source, after) in pairs
        for source, target in pairs
        for after in successors.get(target, ())
    )


def equivalence_closure(pairs: Iterable[Pair], worlds: Sequence[str]) -> FrozenSet[Pair]:
    """The least equivalence relation on ``worlds`` containing ``pairs``."""
    parent = {world: world for world in worlds}

    def find(world: str) -> str:
        while parent[world] != world:
            parent[world] = parent[parent[world]]
            world = parent[world]
        return world

    for source, target in pairs:
        parent[find(source)] = find(target)
    blocks: Dict[str, List[str]] = {}
    for world in worlds:
        blocks.setdefault(find(world), []).append(world)
    return frozenset(
        (source, target)
        for block in blocks.values()
        for source in block
        for target in block
    )


def partition_relation(blocks: Iterable[Iterable[str]]) -> FrozenSet[Pair]:
    """The equivalence relation whose classes are ``blocks``."""
    return frozenset(
        (source, target)
        for block in map(tuple, blocks)
        for source in block
        for target in block
    )


class KripkeModel:
    """A finite multi-agent Kripke model over the atom set ``atom_set``.

    Worlds keep the order in which they were given; agents and atoms are sorted.

    Example::

        >>> model = KripkeModel(
        ...     worlds=["w1", "w2"],
        ...     agents=["a"],
        ...     atom_set=["p"],
        ...     accessibility={"a": [("w1", "w1"), ("w2", "w2")]},
        ...     valuation={"p": ["w1"]},
        ... )
        >>> model.is_equivalence_model
        True
    """

    def __init__(
        self,
        worlds: Sequence[str],
        agents: Iterable[str],
        atom_set: Iterable[str],
        accessibility: Mapping[str, Iterable[Pair]],
        valuation: Mapping[str, Iterable[str]],
    ):
        """Builds the model and checks that every reference resolves.

        Raises:
            ModelError: On an empty world or agent set, duplicate worlds, or a dangling reference
        """
        self.worlds: Tuple[str, ...] = tuple(worlds)
        self.agents: Tuple[str, ...] = tuple(
            sorted(check_identifier(agent, "agent") for agent in agents)
        )
        self.atom_set: FrozenSet[str] = frozenset(
            check_identifier(atom, "atom") for atom in atom_set
        )
        if not self.worlds:
            raise error.ModelError("A Kripke model needs at least one world")
        if not self.agents:
            raise error.ModelError("A Kripke model needs at least one agent")
        if len(set(self.worlds)) != len(self.worlds):
            raise error.ModelError(f"Duplicate world ids in {list(self.worlds)}")
        world_set = set(self.worlds)

        self.accessibility: Dict[str, FrozenSet[Pair]] = {}
        for agent in self.agents:
            pairs = frozenset(
                (source, target) for source, target in accessibility.get(agent, ())
            )
            for pair in pairs:
                for world in pair:
                    if world not in world_set:
                        raise error.ModelError(
                            f"Relation of agent {agent} refers to unknown world {world}."
                            + error.did_you_mean(world, world_set)
                        )
            self.accessibility[agent] = pairs
        for agent in accessibility:
            if agent not in self.agents:
                raise error.UnknownAgent(
                    f"Relation given for unknown agent {agent}."
                    + error.did_you_mean(agent, self.agents)
                )

        self.valuation: Dict[str, FrozenSet[str]] = {}
        for atom in sorted(self.atom_set):
            true_worlds = frozenset(valuation.get(atom, ()))
            for world in true_worlds:
                if world not in world_set:
                    raise error.ModelError(
                        f"Valuation of atom {atom} refers to unknown world {world}."
                        + error.did_you_mean(world, world_set)
                    )
            self.valuation[atom] = true_worlds
        for atom in valuation:
            if atom not in self.atom_set:
                raise error.UnknownAtom(
                    f"Valuation given for unknown atom {atom}."
                    + error.did_you_mean(atom, self.atom_set)
                )

        self._successors: Dict[str, Dict[str, Tuple[str, ...]]] = {
            agent: {
                world: tuple(
                    target for target in self.worlds if (world, target) in pairs
                )
                for world in self.worlds
            }
            for agent, pairs in self.accessibility.items()
        }

    def successors(self, agent: str, world: str) -> Tuple[str, ...]:
        """The worlds ``agent`` considers possible at ``world``, in world order."""
        return self._successors[agent][world]

    @property
    def is_equivalence_model(self) -> bool:
        """Whether every accessibility relation is an equivalence relation."""
        return all(is_equivalence(self, agent) for agent in self.agents)

    def __repr__(self) -> str:
        return (
            f"KripkeModel(worlds={list(self.worlds)}, agents={list(self.agents)}, "
            f"atom_set={subset_text(self.atom_set)})"
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KripkeModel)
            and self.worlds == other.worlds
            and self.agents == other.agents
            and self.atom_set == other.atom_set
            and self.accessibility == other.accessibility
            and self.valuation == other.valuation
        )


def is_equivalence(model: KripkeModel, agent: str) -> bool:
    """Whether the relation of ``agent`` is reflexive, transitive and symmetric on the worlds.

    Raises:
        UnknownAgent: If ``agent`` is not an agent of ``model``
    """
    if agent not in model.accessibility:
        raise error.UnknownAgent(
            f"Unknown agent {agent}." + error.did_you_mean(agent, model.agents)
        )
    pairs = model.accessibility[agent]
    return (
        is_reflexive(pairs, model.worlds)
        and is_symmetric(pairs)
        and is_transitive(pairs)
    )


class Restriction:
    """The copy ``K_X`` of a Kripke model keeping only the atoms ``X``.

    Worlds are tagged with ``X``; relations are copied pair by pair and the valuation
    is defined on exactly the atoms of ``X``.
    """

    def __init__(self, model: KripkeModel, atom_subset: FrozenSet[str]):
        self.atom_subset = atom_subset
        self.worlds: Tuple[RestrictedWorld, ...] = tuple(
            RestrictedWorld(world, atom_subset) for world in model.worlds
        )
        self.accessibility: Dict[str, FrozenSet[Tuple[RestrictedWorld, RestrictedWorld]]] = {
            agent: frozenset(
                (RestrictedWorld(source, atom_subset), RestrictedWorld(target, atom_subset))
                for source, target in pairs
            )
            for agent, pairs in model.accessibility.items()
        }
        self.valuation: Dict[str, FrozenSet[RestrictedWorld]] = {
            atom: frozenset(RestrictedWorld(world, atom_subset) for world in worlds)
            for atom, worlds in model.valuation.items()
            if atom in atom_subset
        }
        self._model = model
        self._world_set = frozenset(self.worlds)

    def __contains__(self, world) -> bool:
        return world in self._world_set

    def successors(self, agent: str, world: RestrictedWorld) -> Tuple[RestrictedWorld, ...]:
        """The worlds ``agent`` considers possible at ``world`` within this restriction."""
        return tuple(
            RestrictedWorld(target, self.atom_subset)
            for target in self._model.successors(agent, world.base)
        )

    def __repr__(self) -> str:
        return f"Restriction({subset_text(self.atom_subset)}, {len(self.worlds)} worlds)"


def max_atoms() -> int:
    """The powerset cap, ``AWMC_MAX_ATOMS`` if set, else 16.

    Raises:
        Error: If the environment variable is not a non-negative integer
    """
    raw = os.environ.get(MAX_ATOMS_ENV)
    if raw is None:
        return DEFAULT_MAX_ATOMS
    try:
        value = int(raw)
    except ValueError:
        value = -1
    if value < 0:
        raise error.Error(
            f"{MAX_ATOMS_ENV} must be a non-negative integer, actual: {raw!r}"
        )
    if value > DEFAULT_MAX_ATOMS:
        logger.warn(
            "%s=%s raises the powerset cap above %s atoms, lattices may not fit in memory",
            MAX_ATOMS_ENV,
            value,
            DEFAULT_MAX_ATOMS,
        )
    return value


def restrict(model: KripkeModel, subset: Iterable[str]) -> Restriction:
    """The restriction of ``model`` to the atoms ``subset``.

    Raises:
        UnknownAtom: If ``subset`` contains an atom outside ``model.atom_set``
    """
    subset = frozenset(subset)
    for atom in sorted(subset - model.atom_set):
        raise error.UnknownAtom(
            f"Cannot restrict to atom {atom} outside {subset_text(model.atom_set)}."
            + error.did_you_mean(atom, model.atom_set)
        )
    return Restriction(model, subset)


class RestrictionLattice:
    """Every restriction of one Kripke model, ordered by inclusion of their atom subsets.

    Iteration visits the restrictions from the full atom set down to the empty one,
    larger subsets first and ties in lexicographic order.
    """

    def __init__(self, base: KripkeModel, restrictions: Mapping[FrozenSet[str], Restriction]):
        self.base = base
        self.restrictions: Dict[FrozenSet[str], Restriction] = {
            subset: restrictions[subset] for subset in sorted(restrictions, key=subset_key)
        }
        self._world_order: Dict[RestrictedWorld, int] = {
            world: index
            for index, world in enumerate(
                world
                for restriction in self.restrictions.values()
                for world in restriction.worlds
            )
        }

    def __iter__(self) -> Iterator[Restriction]:
        return iter(self.restrictions.values())

    def __len__(self) -> int:
        return len(self.restrictions)

    def __getitem__(self, subset: AbstractSet[str]) -> Restriction:
        return self.restrictions[frozenset(subset)]

    def __contains__(self, world) -> bool:
        return world in self._world_order

    def worlds(self) -> Tuple[RestrictedWorld, ...]:
        """Every tagged world of every restriction, in lattice iteration order."""
        return tuple(self._world_order)

    def world_index(self, world: RestrictedWorld) -> int:
        """Position of ``world`` in :meth:`worlds`."""
        return self._world_order[world]

    def restriction_of(self, world: RestrictedWorld) -> Restriction:
        """The restriction containing ``world``.

        Raises:
            UnknownWorld: If ``world`` is in no restriction
        """
        if world not in self._world_order:
            raise error.UnknownWorld(
                f"World {world} is not in the restriction lattice."
                + error.did_you_mean(str(world), map(str, self._world_order))
            )
        return self.restrictions[world.atom_subset]

    @property
    def top(self) -> Restriction:
        return self.restrictions[self.base.atom_set]

    @property
    def bottom(self) -> Restriction:
        return self.restrictions[frozenset()]

    @staticmethod
    def leq(left: AbstractSet[str], right: AbstractSet[str]) -> bool:
        """``K_left`` lies below ``K_right``."""
        return frozenset(left) <= frozenset(right)

    def meet(self, left: AbstractSet[str], right: AbstractSet[str]) -> Restriction:
        return self[frozenset(left) & frozenset(right)]

    def join(self, left: AbstractSet[str], right: AbstractSet[str]) -> Restriction:
        return self[frozenset(left) | frozenset(right)]


def build_lattice(model: KripkeModel, cap: Optional[int] = None) -> RestrictionLattice:
    """Materializes the restriction of ``model`` to every subset of its atoms.

    Args:
        model: The base Kripke model
        cap: The largest atom set accepted, defaults to :func:`max_atoms`

    Raises:
        LatticeTooLarge: If the model has more atoms than the cap
    """
    cap = max_atoms() if cap is None else cap
    if len(model.atom_set) > cap:
        raise error.LatticeTooLarge(
            f"The restriction lattice of {len(model.atom_set)} atoms has "
            f"{2 ** len(model.atom_set)} restrictions, above the cap of {cap} atoms "
            f"(set {MAX_ATOMS_ENV} to override)"
        )
    atoms = sorted(model.atom_set)
    restrictions = {
        frozenset(subset): Restriction(model, frozenset(subset))
        for size in range(len(atoms) + 1)
        for subset in itertools.combinations(atoms, size)
    }
    logger.debug(
        "built restriction lattice with %s restrictions of %s worlds",
        len(restrictions),
        len(model.worlds),
    )
    return RestrictionLattice(model, restrictions)


def info_cell(
    restriction: Restriction, agent: str, world: RestrictedWorld
) -> FrozenSet[RestrictedWorld]:
    """The worlds ``agent`` considers possible at ``world`` in ``restriction``.

    Raises:
        UnknownWorld: If ``world`` is not a world of ``restriction``
    """
    if world not in restriction:
        raise error.UnknownWorld(
            f"World {world} is not in the restriction to {subset_text(restriction.atom_subset)}"
        )
    if agent not in restriction.accessibility:
        raise error.UnknownAgent(
            f"Unknown agent {agent}." + error.did_you_mean(agent, restriction.accessibility)
        )
    return frozenset(restriction.successors(agent, world))
