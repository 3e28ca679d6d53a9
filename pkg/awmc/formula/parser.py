"""Parser for the ASCII surface syntax of formulas.

Grammar, from loosest to tightest binding::

    phi ::= phi "<->" phi            (right associative)
          | phi "->" phi             (right associative)
          | phi "|" phi | phi "&" phi
          | "!" phi | "K{" AGENT "}" phi | "A{" AGENT "}" phi | "U{" AGENT "}" phi
          | "top" | ATOM | "(" phi ")"

A backslash directly followed by a line break continues the formula on the next line;
every other backslash is rejected.
"""
from typing import AbstractSet, Iterable, List, Optional

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from awmc import error
from awmc.formula.syntax import (
    TOP,
    And,
    Atom,
    Aware,
    Formula,
    Iff,
    Implies,
    Knows,
    Not,
    Or,
    Unaware,
    agents_of,
    atoms,
    normalize,
)

GRAMMAR = r"""
?start: iff

?iff: imp
    | imp "<->" iff             -> iff_

?imp: disj
    | disj "->" imp             -> implies

?disj: conj
    | disj "|" conj             -> or_

?conj: unary
    | conj "&" unary            -> and_

?unary: primary
    | "!" unary                 -> not_
    | _KNOWS NAME "}" unary     -> knows
    | _AWARE NAME "}" unary     -> aware
    | _UNAWARE NAME "}" unary   -> unaware

?primary: "top"                 -> top
    | NAME                      -> atom
    | "(" iff ")"

_KNOWS.2: /K\{/
_AWARE.2: /A\{/
_UNAWARE.2: /U\{/
NAME: /[a-zA-Z][a-zA-Z0-9_]*/

%import common.WS
%ignore WS
"""


@v_args(inline=True)
class _ToFormula(Transformer):
    """Translates the lark parse tree into :mod:`awmc.formula.syntax` nodes."""

    def top(self):
        return TOP

    def atom(self, name: Token):
        return Atom(str(name))

    def not_(self, operand):
        return Not(operand)

    def and_(self, left, right):
        return And(left, right)

    def or_(self, left, right):
        return Or(left, right)

    def implies(self, left, right):
        return Implies(left, right)

    def iff_(self, left, right):
        return Iff(left, right)

    def knows(self, agent: Token, operand):
        return Knows(str(agent), operand)

    def aware(self, agent: Token, operand):
        return Aware(str(agent), operand)

    def unaware(self, agent: Token, operand):
        return Unaware(str(agent), operand)


_LARK = Lark(GRAMMAR, parser="lalr")
_TRANSFORMER = _ToFormula()
_TOKEN_TEXT = {
    terminal.name: terminal.pattern.value
    for terminal in _LARK.terminals
    if terminal.pattern.type == "str"
}
_TOKEN_TEXT.update({"_KNOWS": "K{", "_AWARE": "A{", "_UNAWARE": "U{", "$END": "end of input"})


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _strip_continuations(text: str) -> str:
    """Replaces line continuations with blanks, keeping every other character in place."""
    chars: List[str] = []
    index = 0
    while index < len(text):
        char = text[index]
        if char != "\\":
            chars.append(char)
            index += 1
            continue
        if text.startswith("\r\n", index + 1):
            chars.append("   ")
            index += 3
        elif text.startswith("\n", index + 1):
            chars.append("  ")
            index += 2
        else:
            raise error.UnknownEscape(
                f"Unknown escape {text[index:index + 2]!r} at offset {_byte_offset(text, index)}",
                _byte_offset(text, index),
            )
    return "".join(chars)


def _check_parentheses(text: str):
    opened: List[int] = []
    for index, char in enumerate(text):
        if char == "(":
            opened.append(index)
        elif char == ")":
            if not opened:
                raise error.UnbalancedParentheses(
                    f"Unmatched ')' at offset {_byte_offset(text, index)}",
                    _byte_offset(text, index),
                    expected=("end of input",),
                )
            opened.pop()
    if opened:
        raise error.UnbalancedParentheses(
            f"Unclosed '(' at offset {_byte_offset(text, opened[-1])}",
            _byte_offset(text, opened[-1]),
            expected=(")",),
        )


def _syntax_error(text: str, exc: UnexpectedInput) -> error.FormulaSyntaxError:
    token = getattr(exc, "token", None)
    if token is not None and token.type == "$END":
        index = len(text)
    else:
        index = getattr(exc, "pos_in_stream", None)
        if index is None or index < 0:
            index = len(text)
    names: Iterable[str] = (
        getattr(exc, "expected", None) or getattr(exc, "allowed", None) or ()
    )
    expected = sorted(_TOKEN_TEXT.get(name, name) for name in names)
    offset = _byte_offset(text, index)
    return error.FormulaSyntaxError(
        f"Unexpected input at offset {offset}, expected one of: {', '.join(expected)}",
        offset,
        expected,
    )


def parse(
    text: str,
    atom_set: Optional[AbstractSet[str]] = None,
    agents: Optional[AbstractSet[str]] = None,
) -> Formula:
    """Parses ``text`` and returns the normalized formula.

    Args:
        text: The formula in the surface syntax
        atom_set: If given, every atom of the formula must belong to it
        agents: If given, every agent of the formula must belong to it

    Returns:
        The normalized abstract syntax tree

    Raises:
        UnknownEscape: A backslash not followed by a line break
        UnbalancedParentheses: A parenthesis without partner
        FormulaSyntaxError: Any other deviation from the grammar
        UnknownAtom: An atom outside ``atom_set``
        UnknownAgent: An agent outside ``agents``
    """
    cleaned = _strip_continuations(text)
    _check_parentheses(cleaned)
    try:
        tree = _LARK.parse(cleaned)
    except UnexpectedInput as exc:
        raise _syntax_error(cleaned, exc) from None
    try:
        phi = normalize(_TRANSFORMER.transform(tree))
    except VisitError as exc:
        raise exc.orig_exc
    check_vocabulary(phi, atom_set, agents)
    return phi


def check_vocabulary(
    phi: Formula,
    atom_set: Optional[AbstractSet[str]] = None,
    agents: Optional[AbstractSet[str]] = None,
):
    """Raises if ``phi`` mentions atoms or agents outside the given vocabularies."""
    if atom_set is not None:
        for name in sorted(atoms(phi) - set(atom_set)):
            raise error.UnknownAtom(
                f"Atom {name} is not in the atom set {{{','.join(sorted(atom_set))}}}."
                + error.did_you_mean(name, atom_set)
            )
    if agents is not None:
        for name in sorted(agents_of(phi) - set(agents)):
            raise error.UnknownAgent(
                f"Agent {name} is not one of the agents {{{','.join(sorted(agents))}}}."
                + error.did_you_mean(name, agents)
            )

