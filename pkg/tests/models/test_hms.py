import pytest

from awmc import error, serialization
from awmc.formula import Knows, Not, atoms, enumerate_formulas, implies, parse
from awmc.models import ThreeVal
from awmc.models.hms import (
    Event,
    StateSpaceLattice,
    UnawarenessFrame,
    a_event,
    atom_profile,
    conj_events,
    hms_satisfies,
    is_well_formed,
    k_event,
    neg_event,
    possibility_of,
    top_event,
    upward_closure,
    validate_frame,
)
from tests.testing_models import frame_from_document, trade_document, trade_hms

S_IL = ["(i,l)", "(!i,l)", "(!i,!l)"]


def test_lattice_queries():
    lattice = trade_hms().lattice
    assert lattice.top == "S_il"
    assert lattice.bottom == "S_empty"
    assert lattice.sup(["S_i", "S_l"]) == "S_il"
    assert lattice.inf(["S_i", "S_l"]) == "S_empty"
    assert lattice.leq("S_empty", "S_il") and not lattice.leq("S_i", "S_l")
    assert lattice.project("(!i,!l)", "S_empty") == "empty"
    assert lattice.project("(!i,l)", "S_l") == "l'"
    assert lattice.space_of("l'") == "S_l"
    with pytest.raises(error.UnknownState):
        lattice.space_of("(i,!l)")


def test_upward_closure():
    frame = trade_hms().frame
    assert upward_closure(frame, {"!i"}, "S_i") == {"!i", "(!i,l)", "(!i,!l)"}
    assert upward_closure(frame, {"empty"}) == set(frame.lattice.states())
    assert upward_closure(frame, set(), "S_l") == frozenset()
    with pytest.raises(error.ModelError, match="not in the space S_i"):
        upward_closure(frame, {"l"}, "S_i")
    with pytest.raises(error.ModelError, match="Cannot infer the space"):
        upward_closure(frame, {"l", "i"})


def test_validate_trade():
    report = validate_frame(trade_hms().frame)
    assert report.ok
    assert report.summary() == "5/5 HMS properties hold"
    assert report.lines() == []


def test_stat_violation():
    document = trade_document("hms")
    document["correspondences"]["O"]["(i,l)"] = ["(i,l)"]
    report = validate_frame(frame_from_document(document))
    stat = [violation for violation in report.violations if violation.property == "Stat"]
    assert {violation.witness for violation in stat} == {
        ("(!i,l)", "(i,l)"),
        ("(!i,!l)", "(i,l)"),
    }
    assert all(violation.agent == "O" for violation in stat)
    assert report.holds("Conf") and not report.holds("Stat")

    with pytest.raises(error.InvalidFrame, match="HMS properties hold") as exc_info:
        serialization.from_dict(document)
    assert exc_info.value.report.violations == report.violations


def test_conf_violation():
    document = trade_document("hms")
    document["correspondences"]["B"]["i"] = ["(i,l)"]
    report = validate_frame(frame_from_document(document))
    conf = [violation for violation in report.violations if violation.property == "Conf"]
    assert [(violation.agent, violation.witness) for violation in conf] == [("B", ("i",))]
    assert "VIOLATION Conf AGENT B WITNESS i" in report.lines()


def test_lattice_without_supremum():
    lattice = StateSpaceLattice({"A": ["a"], "B": ["b"]}, [], {})
    frame = UnawarenessFrame(lattice, {"x": {"a": ["a"], "b": ["b"]}})
    report = validate_frame(frame)
    assert not report.holds("lattice")
    assert "(lattice invalid)" in report.summary()
    with pytest.raises(error.ModelError, match="no supremum"):
        conj_events(frame, [Event(lattice, ["a"], "A"), Event(lattice, ["b"], "B")])
    with pytest.raises(error.ModelError, match="no greatest element"):
        lattice.top


def test_structural_errors():
    with pytest.raises(error.ModelError, match="belongs to both"):
        StateSpaceLattice({"A": ["a"], "B": ["a"]}, [], {})
    with pytest.raises(error.ModelError, match="is not below"):
        StateSpaceLattice({"A": ["a"], "B": ["b"]}, [], {("A", "B"): {"b": "a"}})
    with pytest.raises(error.ModelError, match="Unknown state-space C"):
        StateSpaceLattice({"A": ["a"]}, [("A", "C")], {})


def test_events():
    model = trade_hms()
    frame, lattice = model.frame, model.lattice
    i_event, l_event = model.valuation["i"], model.valuation["l"]

    both = conj_events(frame, [i_event, l_event])
    assert (both.base, both.upset) == ("S_il", {"(i,l)"})
    assert both == Event(lattice, ["(i,l)"], "S_il")

    known = k_event(frame, "B", both)
    assert (known.base, known.upset) == ("S_il", {"(i,l)"})

    aware = a_event(frame, "B", l_event)
    assert aware.d == {"l"}
    assert aware.upset == {"l", "(i,l)"}

    assert neg_event(frame, i_event).upset == {"!i", "(!i,l)", "(!i,!l)"}
    assert top_event(frame).upset == set(lattice.states())
    assert is_well_formed(lattice, {"l", "(i,l)"}, "S_l")
    assert not is_well_formed(lattice, {"l"}, "S_l")


def test_empty_events_keep_their_base():
    model = trade_hms()
    nobody_knows = model.denotation(parse("K{O} l"))
    assert nobody_knows == Event(model.lattice, [], "S_l")
    assert nobody_knows != Event(model.lattice, [], "S_i")
    assert len({nobody_knows, Event(model.lattice, [], "S_i")}) == 2


def test_malformed_event():
    lattice = trade_hms().lattice
    with pytest.raises(error.MalformedEvent, match="not in its base space S_l"):
        Event(lattice, ["i"], "S_l")
    with pytest.raises(error.MalformedEvent, match="Unknown base space"):
        Event(lattice, [], "S_x")


@pytest.mark.parametrize(
    "state, text, expected",
    [
        ("(i,l)", "K{B} (i & l)", ThreeVal.TRUE),
        ("(i,l)", "A{O} l & !K{O} l", ThreeVal.TRUE),
        ("(i,l)", "!K{O} i", ThreeVal.TRUE),
        ("(!i,l)", "U{B} l", ThreeVal.TRUE),
        ("(!i,l)", "K{B} !i", ThreeVal.TRUE),
        ("(!i,l)", "A{B} l", ThreeVal.FALSE),
        ("(i,l)", "A{O} i & A{O} l", ThreeVal.TRUE),
        ("(i,l)", "!K{O} i & !K{O} l", ThreeVal.TRUE),
        ("(i,l)", "!K{O} !(K{B} !i & U{B} l)", ThreeVal.TRUE),
        ("(!i,!l)", "A{B} i", ThreeVal.TRUE),
        ("!i", "l", ThreeVal.UNDEFINED),
        ("empty", "top", ThreeVal.TRUE),
    ],
)
def test_trade_claims(state, text, expected):
    assert trade_hms().check(state, text) == expected


def test_atom_profile():
    model = trade_hms()
    assert atom_profile(model, ["i", "!i"]) == {"i"}
    assert atom_profile(model, S_IL) == {"i", "l"}
    assert atom_profile(model, ["empty"]) == frozenset()


def test_undefined_exactly_when_inexpressible():
    model = trade_hms()
    for phi in enumerate_formulas(model.atom_set, model.agents, 1):
        for state in model.worlds():
            undefined = model.satisfies(state, phi).is_undefined()
            assert undefined == (not atoms(phi) <= atom_profile(model, [state]))


def test_double_negation():
    model = trade_hms()
    for phi in enumerate_formulas(model.atom_set, model.agents, 1):
        assert model.denotation(Not(Not(phi))) == model.denotation(phi)


def test_knowledge_is_truthful():
    model = trade_hms()
    for phi in enumerate_formulas(model.atom_set, model.agents, 1):
        for agent in model.agents:
            axiom = implies(Knows(agent, phi), phi)
            for state in model.worlds():
                assert not model.satisfies(state, axiom).is_false()


def test_satisfies_errors():
    model = trade_hms()
    with pytest.raises(error.UnknownState):
        model.check("(i,!l)", "i")
    with pytest.raises(error.UnknownWorld):
        model.resolve_world("nowhere")
    with pytest.raises(error.UnknownAtom):
        model.check("(i,l)", "x")


def test_possibility_and_satisfies_helpers():
    model = trade_hms()
    assert possibility_of(model.frame, "B", "(!i,l)") == {"!i"}
    assert possibility_of(model.frame, "O", "l'") == {"l", "l'", "!l"}
    assert hms_satisfies(model, "(!i,l)", parse("U{B} l")) == ThreeVal.TRUE
    assert hms_satisfies(model, "!i", parse("l")) == ThreeVal.UNDEFINED
