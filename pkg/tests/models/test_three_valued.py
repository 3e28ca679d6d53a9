import pytest

from awmc.models import ThreeVal

T, F, U = ThreeVal.TRUE, ThreeVal.FALSE, ThreeVal.UNDEFINED


@pytest.mark.parametrize(
    "left, right, conjunction, disjunction",
    [
        (T, T, T, T),
        (T, F, F, T),
        (T, U, U, T),
        (F, F, F, F),
        (F, U, F, U),
        (U, U, U, U),
    ],
)
def test_kleene_tables(left, right, conjunction, disjunction):
    assert left & right == conjunction == right & left
    assert left | right == disjunction == right | left


def test_negation():
    assert ~T == F
    assert ~F == T
    assert ~U == U


def test_aggregates():
    assert ThreeVal.all([]) == T
    assert ThreeVal.any([]) == F
    assert ThreeVal.all([T, U, F]) == F
    assert ThreeVal.any([F, U]) == U


def test_text():
    assert [str(value) for value in (T, F, U)] == ["true", "false", "undefined"]
    assert ThreeVal.parse(" Undefined ") == U
    assert repr(F) == "ThreeVal(false)"
    with pytest.raises(ValueError):
        ThreeVal.parse("maybe")


def test_no_classical_truth_value():
    with pytest.raises(TypeError):
        bool(U)
    assert ThreeVal.from_bool(True).is_true()
    assert ThreeVal.from_bool(False).is_false()
