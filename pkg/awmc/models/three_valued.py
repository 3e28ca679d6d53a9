"""Three truth values: a formula is true, false, or undefined at a world lacking its atoms."""
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class ThreeVal:
    """A Kleene truth value.

    Undefined is absorbing for ``&`` and ``|`` only when the other operand does not
    already decide the result, and ``~`` leaves it unchanged::

        >>> ThreeVal.FALSE & ThreeVal.UNDEFINED
        ThreeVal(false)
        >>> ~ThreeVal.UNDEFINED
        ThreeVal(undefined)
    """

    val: int

    _FALSE = 0
    _TRUE = 1
    _UNDEFINED = 2

    def is_true(self) -> bool:
        return self.val == ThreeVal._TRUE

    def is_false(self) -> bool:
        return self.val == ThreeVal._FALSE

    def is_undefined(self) -> bool:
        return self.val == ThreeVal._UNDEFINED

    @staticmethod
    def from_bool(value: bool) -> "ThreeVal":
        """Lifts a classical truth value."""
        return ThreeVal.TRUE if value else ThreeVal.FALSE

    @staticmethod
    def all(values: Iterable["ThreeVal"]) -> "ThreeVal":
        """Kleene conjunction of ``values``; the empty conjunction is true."""
        values = list(values)
        if any(value.is_false() for value in values):
            return ThreeVal.FALSE
        if any(value.is_undefined() for value in values):
            return ThreeVal.UNDEFINED
        return ThreeVal.TRUE

    @staticmethod
    def any(values: Iterable["ThreeVal"]) -> "ThreeVal":
        """Kleene disjunction of ``values``; the empty disjunction is false."""
        values = list(values)
        if any(value.is_true() for value in values):
            return ThreeVal.TRUE
        if any(value.is_undefined() for value in values):
            return ThreeVal.UNDEFINED
        return ThreeVal.FALSE

    def __invert__(self) -> "ThreeVal":
        if self.is_undefined():
            return self
        return ThreeVal.from_bool(not self.is_true())

    def __and__(self, other: "ThreeVal") -> "ThreeVal":
        return ThreeVal.all((self, other))

    def __or__(self, other: "ThreeVal") -> "ThreeVal":
        return ThreeVal.any((self, other))

    def __bool__(self):
        raise TypeError(
            "ThreeVal has no classical truth value, use is_true(), is_false() or is_undefined()"
        )

    def __str__(self) -> str:
        return ("false", "true", "undefined")[self.val]

    def __repr__(self) -> str:
        return f"ThreeVal({self})"

    @staticmethod
    def parse(text: str) -> "ThreeVal":
        """Inverse of ``str``."""
        try:
            return ThreeVal(("false", "true", "undefined").index(text.strip().lower()))
        except ValueError:
            raise ValueError(
                f"Expected one of true, false or undefined, actual: {text!r}"
            ) from None


ThreeVal.FALSE = ThreeVal(ThreeVal._FALSE)  # type: ignore[attr-defined]
ThreeVal.TRUE = ThreeVal(ThreeVal._TRUE)  # type: ignore[attr-defined]
ThreeVal.UNDEFINED = ThreeVal(ThreeVal._UNDEFINED)  # type: ignore[attr-defined]
