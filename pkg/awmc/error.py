"""Set of Error classes for awmc."""
import difflib
from typing import TYPE_CHECKING, Any, FrozenSet, Iterable, Optional, Sequence

if TYPE_CHECKING:
    from awmc.models.hms import FrameReport
    from awmc.models.kripke import RestrictedWorld


class Error(Exception):
    """Error superclass."""


# Formula errors


class FormulaSyntaxError(Error):
    """Raised when a formula does not conform to the surface grammar.

    Attributes:
        offset: Byte offset into the (UTF-8 encoded) input where parsing failed
        expected: The names of the tokens that would have been accepted at ``offset``
    """

    def __init__(
        self, message: str, offset: int, expected: Iterable[str] = ()
    ):
        super().__init__(message)
        self.offset = offset
        self.expected: FrozenSet[str] = frozenset(expected)


class UnbalancedParentheses(FormulaSyntaxError):
    """Raised when an opening or closing parenthesis has no partner."""


class UnknownEscape(FormulaSyntaxError):
    """Raised when a backslash is followed by anything but a line break."""


class UnknownAtom(Error):
    """Raised when a formula or reference names an atom outside the model's atom set."""


class UnknownAgent(Error):
    """Raised when a formula or reference names an agent outside the model's agents."""


# Lookup errors


class UnknownWorld(Error):
    """Raised when a world reference does not resolve in a Kripke lattice model."""


class UnknownState(UnknownWorld):
    """Raised when a state does not belong to any state-space of an unawareness frame."""


# Model errors


class ModelError(Error):
    """Raised when a model is structurally malformed, e.g. a relation refers to a missing world."""


class LatticeTooLarge(ModelError):
    """Raised when the restriction lattice would exceed the configured powerset cap."""


class MalformedEvent(ModelError):
    """Raised when an event's generating set is not contained in its base space."""


class InvalidFrame(ModelError):
    """Raised when an unawareness frame fails one of the lattice, projection or HMS properties."""

    def __init__(self, report: "FrameReport"):
        super().__init__(
            f"Invalid unawareness frame, {report.summary()}: "
            + "; ".join(str(violation) for violation in report.violations[:3])
        )
        self.report = report


class AwarenessViolation(ModelError):
    """A single failure of an awareness map to be total, downwards, introspective or surprise free."""

    property_name = ""

    def __init__(self, message: str, agent: str, world: "RestrictedWorld"):
        super().__init__(message)
        self.agent = agent
        self.world = world


class NotDownwards(AwarenessViolation):
    """The awareness image of ``world`` changes the base world or enlarges the atom subset."""

    property_name = "D"

    def __init__(self, agent: str, world: "RestrictedWorld", image: Any):
        super().__init__(
            f"Awareness map of {agent} sends {world} to {image}, which is not below it",
            agent,
            world,
        )
        self.image = image


class NotIntrospective(AwarenessViolation):
    """A world in the information cell of the awareness image is not mapped into that cell."""

    property_name = "II"

    def __init__(
        self, agent: str, world: "RestrictedWorld", witness: "RestrictedWorld"
    ):
        super().__init__(
            f"Awareness map of {agent} at {world}: {witness} lies in the information cell "
            f"of the awareness image but is mapped outside of it",
            agent,
            world,
        )
        self.witness = witness


class Surprise(AwarenessViolation):
    """A restriction of ``world`` is mapped somewhere other than its intersection with the awareness image."""

    property_name = "NS"

    def __init__(
        self,
        agent: str,
        world: "RestrictedWorld",
        subset_world: "RestrictedWorld",
        expected: "RestrictedWorld",
        got: Any,
    ):
        super().__init__(
            f"Awareness map of {agent} at {world}: expected {subset_world} to map to {expected}, got {got}",
            agent,
            world,
        )
        self.subset_world = subset_world
        self.expected = expected
        self.got = got


class PartialMap(AwarenessViolation):
    """The awareness map of ``agent`` has no image for ``world``."""

    property_name = "total"

    def __init__(self, agent: str, world: "RestrictedWorld"):
        super().__init__(
            f"Awareness map of {agent} is undefined at {world}", agent, world
        )


class InvalidKripkeLatticeModel(ModelError):
    """Raised when one or more awareness maps fail validation, carries every violation found."""

    def __init__(self, violations: Sequence[AwarenessViolation]):
        shown = "; ".join(str(violation) for violation in violations[:3])
        more = f" (and {len(violations) - 3} more)" if len(violations) > 3 else ""
        super().__init__(f"Invalid Kripke lattice model: {shown}{more}")
        self.violations = list(violations)


# Transform errors


class AmbiguousMinSpace(ModelError):
    """Raised when the state-spaces sharing an atom profile have no least element among them."""

    def __init__(self, atom_subset: FrozenSet[str], candidates: Sequence[str]):
        super().__init__(
            f"No least state-space defines exactly the atoms {{{','.join(sorted(atom_subset))}}}, "
            f"candidates: {', '.join(candidates)}"
        )
        self.atom_subset = atom_subset
        self.candidates = tuple(candidates)


class NonEquivalenceRelation(ModelError):
    """Raised when an operation requires the accessibility relation of ``agent`` to be an equivalence."""

    def __init__(self, agent: str):
        super().__init__(
            f"The accessibility relation of agent {agent} is not an equivalence relation"
        )
        self.agent = agent


# Logic errors


class ArityMismatch(Error):
    """Raised when an axiom schema is instantiated with the wrong number of formulas or agents."""


class SideConditionViolated(Error):
    """Raised when the RK rule is applied to a conclusion mentioning atoms absent from all premises."""


# Registry and file errors


class ModelFileError(Error):
    """Raised when a model file cannot be read, is of the wrong kind or has dangling references."""


class OutputFileError(Error):
    """Raised when a model or report file cannot be written."""


class Unregistered(Error):
    """Raised when the user requests a model from the registry that does not actually exist."""


class NameNotFound(Unregistered):
    """Raised when the user requests a model from the registry where the name doesn't exist."""


class VersionNotFound(Unregistered):
    """Raised when the user requests a model from the registry where the version doesn't exist."""


class RegistrationError(Error):
    """Raised when the user attempts to register an invalid model id."""


def did_you_mean(name: str, choices: Iterable[str]) -> str:
    """Returns a ``Did you mean`` hint for ``name`` among ``choices`` or an empty string."""
    suggestion: Optional[Sequence[str]] = difflib.get_close_matches(
        name, sorted(choices), n=1
    )
    return f" Did you mean: `{suggestion[0]}`?" if suggestion else ""
