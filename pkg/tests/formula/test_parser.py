import re

import pytest

from awmc import error
from awmc.formula import (
    TOP,
    And,
    Atom,
    Aware,
    Iff,
    Implies,
    Knows,
    Not,
    Or,
    normalize,
    parse,
)

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("top", TOP),
        ("K{B} !i", Knows("B", Not(Atom("i")))),
        ("A{B} l", normalize(Aware("B", Atom("l")))),
        ("U{B} l", Not(normalize(Aware("B", Atom("l"))))),
        ("(p)", p),
        ("p_1", Atom("p_1")),
    ],
)
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("!p & q", And(Not(p), q)),
        ("K{a} p & q", And(Knows("a", p), q)),
        ("p & q | r", Or(And(p, q), r)),
        ("p | q & r", Or(p, And(q, r))),
        ("p | q -> r", Implies(Or(p, q), r)),
        ("p -> q -> r", Implies(p, Implies(q, r))),
        ("p & q & r", And(And(p, q), r)),
        ("p <-> q -> r", Iff(p, Implies(q, r))),
        ("p -> q <-> r", Iff(Implies(p, q), r)),
        ("p <-> q <-> r", Iff(p, Iff(q, r))),
    ],
)
def test_precedence(text, expected):
    assert parse(text) == normalize(expected)


def test_line_continuation():
    assert parse("p &\\\nq") == And(p, q)
    assert parse("p &\\\r\nq") == And(p, q)


@pytest.mark.parametrize(
    "text, offset",
    [("(p & q", 0), ("p & q)", 5), ("((p)", 0), ("p)) & (q", 1)],
)
def test_unbalanced_parentheses(text, offset):
    with pytest.raises(error.UnbalancedParentheses) as exc_info:
        parse(text)
    assert exc_info.value.offset == offset


def test_unknown_escape():
    with pytest.raises(error.UnknownEscape, match=re.escape("Unknown escape '\\\\t'")) as exc_info:
        parse("p \\t q")
    assert exc_info.value.offset == 2


def test_unexpected_end():
    with pytest.raises(error.FormulaSyntaxError) as exc_info:
        parse("p &")
    assert exc_info.value.offset == 3
    assert {"!", "(", "K{", "top"} <= exc_info.value.expected


@pytest.mark.parametrize("text, offset", [("p q", 2), ("K{a p", 4), ("p & & q", 4), ("p & #", 4)])
def test_syntax_error_offset(text, offset):
    with pytest.raises(error.FormulaSyntaxError) as exc_info:
        parse(text)
    assert exc_info.value.offset == offset


def test_vocabulary():
    assert parse("K{a} p", {"p"}, {"a"}) == Knows("a", p)
    with pytest.raises(error.UnknownAtom, match="Atom x is not in the atom set"):
        parse("x & p", atom_set={"p"})
    with pytest.raises(error.UnknownAgent, match="Agent Z is not one of the agents"):
        parse("K{Z} p", agents={"a"})
