"""Core API shared by both kinds of awareness model."""
from typing import TYPE_CHECKING, FrozenSet, Generic, Optional, Tuple, TypeVar

from awmc.formula.parser import check_vocabulary, parse
from awmc.formula.syntax import Formula

if TYPE_CHECKING:
    from awmc.models.three_valued import ThreeVal
    from awmc.registration import ModelSpec

WorldT = TypeVar("WorldT")


class Model(Generic[WorldT]):
    r"""The common interface of Kripke lattice models and HMS models.

    Both kinds evaluate the same language with three truth values: a formula is
    true or false wherever all its atoms are expressible and undefined elsewhere.

    The main API methods are:

    - :meth:`satisfies` - Evaluates a normalized formula at a world or state
    - :meth:`worlds` - The worlds (or states) of the model in a deterministic order
    - :meth:`resolve_world` - Turns the textual reference of a world into the world itself
    - :meth:`check` - Parses a formula and evaluates it at a referenced world

    And the following attributes:

    - :attr:`kind` - The model file kind, ``"kripke_lattice"`` or ``"hms"``
    - :attr:`atom_set` - The atoms the model interprets
    - :attr:`agents` - The agents of the model
    - :attr:`spec` - The registry spec the model was made from, if any
    """

    kind: str = ""
    spec: Optional["ModelSpec"] = None

    atom_set: FrozenSet[str]
    agents: Tuple[str, ...]

    def satisfies(self, world: WorldT, phi: Formula) -> "ThreeVal":
        """Evaluates the normalized formula ``phi`` at ``world``."""
        raise NotImplementedError

    def worlds(self) -> Tuple[WorldT, ...]:
        """Every world of the model in a deterministic order."""
        raise NotImplementedError

    def resolve_world(self, ref: str) -> WorldT:
        """The world named by ``ref``.

        Raises:
            UnknownWorld: If ``ref`` names no world of the model
        """
        raise NotImplementedError

    def world_text(self, world: WorldT) -> str:
        """The textual reference of ``world``, the inverse of :meth:`resolve_world`."""
        return str(world)

    def check_formula(self, phi: Formula):
        """Raises if ``phi`` uses an atom or agent the model does not know."""
        check_vocabulary(phi, self.atom_set, set(self.agents))

    def check(self, ref: str, text: str) -> "ThreeVal":
        """Parses ``text`` against the model's vocabulary and evaluates it at the world ``ref``."""
        phi = parse(text, self.atom_set, set(self.agents))
        return self.satisfies(self.resolve_world(ref), phi)

    def __str__(self):
        if self.spec is None:
            return f"<{type(self).__name__} instance>"
        return f"<{type(self).__name__}<{self.spec.id}>>"
