import pytest

from awmc import error
from awmc.formula import TOP, Atom, Knows, Not, implies, parse, to_text
from awmc.logic import (
    FIVE,
    SCHEMAS,
    MpPremise,
    RkPremise,
    aware_theorem,
    instantiate,
    is_tautology,
    template_schema,
)
from awmc.logic.axioms import (
    AWARENESS_KNOWLEDGE_REFLECTION,
    ENUMERATED_TAUTOLOGIES,
    GENERATED_BY_PRIMITIVES,
    PROP_TAUTOLOGIES,
    PROP_TAUTOLOGY_TEMPLATES,
    SYMMETRY,
    T,
    split,
)

i, l = Atom("i"), Atom("l")


def test_instantiate():
    assert to_text(instantiate(T, [i], ["B"])) == "!(K{B} i & !i)"
    assert instantiate(FIVE, [l], ["B"]) == parse("!K{B} l -> K{B} !K{B} l")
    assert instantiate(AWARENESS_KNOWLEDGE_REFLECTION, [i], ["B", "O"]) == parse(
        "A{B} i <-> A{B} K{O} i"
    )


def test_instantiation_is_simultaneous():
    swap = template_schema("Swap", "P -> Q", 2)
    assert instantiate(swap, [Atom("Q"), Atom("P")]) == implies(Atom("Q"), Atom("P"))


def test_arity_mismatch():
    with pytest.raises(error.ArityMismatch, match="takes 1 formulas and 1 agents, got 0 and 1"):
        instantiate(T, [], ["B"])
    with pytest.raises(error.ArityMismatch):
        instantiate(T, [i], ["B", "O"])


def test_generated_by_primitives():
    instance = instantiate(GENERATED_BY_PRIMITIVES, [parse("K{O} (i & !l)")], ["B"])
    assert instance == parse("A{B} K{O} (i & !l) <-> A{B} i & A{B} l")
    assert not GENERATED_BY_PRIMITIVES.applicable([TOP])
    assert GENERATED_BY_PRIMITIVES.biconditional


def test_split():
    instance = instantiate(SYMMETRY, [i], ["B"])
    assert SYMMETRY.biconditional
    assert split(SYMMETRY, instance) == (
        parse("A{B} !i -> A{B} i"),
        parse("A{B} i -> A{B} !i"),
    )
    assert split(T, instantiate(T, [i], ["B"])) == (instantiate(T, [i], ["B"]),)


@pytest.mark.parametrize(
    "schema", PROP_TAUTOLOGIES, ids=[template for template, _ in PROP_TAUTOLOGY_TEMPLATES]
)
def test_propositional_templates_are_tautologies(schema):
    arguments = [Knows("a", i), Not(l)][: schema.formula_arity]
    assert is_tautology(instantiate(schema, arguments))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("K{a} p -> K{a} p", True),
        ("K{a} p | !K{a} p", True),
        ("K{a} p -> p", False),
        ("p & !p", False),
        ("top", True),
    ],
)
def test_is_tautology(text, expected):
    assert is_tautology(parse(text)) == expected


def test_schema_names():
    names = [str(schema) for schema in SCHEMAS]
    assert names.count("PropTautology") == len(PROP_TAUTOLOGIES) + 1
    assert names[-5:] == [
        "Symmetry",
        "AwarenessConjunction",
        "AwarenessKnowledgeReflection",
        "T",
        "Four",
    ]
    assert "Five" not in names


def test_rk_side_condition():
    RkPremise((i, l), parse("i & l"), "B").check_side_condition()
    with pytest.raises(error.SideConditionViolated, match="mentions {l}"):
        RkPremise((i,), l, "B").check_side_condition()


def test_rk_implications():
    rk = RkPremise((i, l), parse("i & l"), "B")
    assert rk.premise_implication() == parse("i & l -> i & l")
    assert rk.knowledge_implication() == parse("K{B} i & K{B} l -> K{B} (i & l)")
    assert RkPremise((), TOP, "a").premise_implication() == implies(TOP, TOP)


def test_enumerated_tautologies():
    tautology = parse("K{B} i -> K{B} i")
    assert ENUMERATED_TAUTOLOGIES.applicable([tautology])
    assert not ENUMERATED_TAUTOLOGIES.applicable([parse("K{B} i -> i")])
    assert instantiate(ENUMERATED_TAUTOLOGIES, [tautology]) == tautology
    assert not ENUMERATED_TAUTOLOGIES.biconditional


def test_mp_implication():
    mp = MpPremise(i, parse("i | l"))
    assert mp.implication() == parse("i -> i | l")


def test_aware_theorem():
    assert aware_theorem(i, "B") == parse("A{B} i -> K{B} i")
    assert aware_theorem(TOP, "O") == parse("A{O} top -> K{O} top")
