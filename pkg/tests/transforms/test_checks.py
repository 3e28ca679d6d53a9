import pytest

from awmc import error
from awmc.formula import Atom
from awmc.models.kripke import KripkeModel, RestrictedWorld, build_lattice
from awmc.models.lattice_model import KripkeLatticeModel
from awmc.transforms import (
    CheckResult,
    Disagreement,
    check_equivalence_h,
    check_equivalence_l,
    check_h_properties,
    check_l_properties,
    check_lemma1,
    check_roundtrip,
    find_renaming,
    h_transform,
    klm_isomorphic,
    l_transform,
)
from tests.testing_models import (
    identity_klm,
    non_equivalence_klm,
    trade_hms,
    trade_klm,
)


def _rebuild(klm, accessibility=None, valuation=None):
    base = klm.base
    model = KripkeModel(
        base.worlds,
        base.agents,
        base.atom_set,
        base.accessibility if accessibility is None else accessibility,
        base.valuation if valuation is None else valuation,
    )
    return KripkeLatticeModel(build_lattice(model), klm.awareness, validate=False)


def test_lemma1():
    result = check_lemma1(trade_hms())
    assert result.ok and result.counterexample is None
    assert result.checked == 2 * 3 * 3


def test_lemma1_counterexample():
    model = trade_hms()
    klm, _ = l_transform(model)
    relations = dict(klm.base.accessibility)
    relations["B"] = relations["B"] | {("(i,l)", "(!i,l)")}
    result = check_lemma1(model, _rebuild(klm, accessibility=relations))
    assert not result
    assert result.counterexample == (
        "B",
        RestrictedWorld("(i,l)", {"i", "l"}),
        RestrictedWorld("(!i,l)", {"i", "l"}),
    )


def test_equivalence_l():
    result = check_equivalence_l(trade_hms(), 1)
    assert result.ok
    assert result.checked == 21 * 12


def test_equivalence_l_stale_valuation():
    model = trade_hms()
    klm, correspondence = l_transform(model)
    stale = _rebuild(klm, valuation={"i": ["(i,l)"], "l": ["(i,l)"]})
    result = check_equivalence_l(model, 1, stale, correspondence)
    assert not result.ok
    disagreement = result.counterexample
    assert isinstance(disagreement, Disagreement)
    assert disagreement.formula == Atom("l")
    assert disagreement.left == "(!i,l)"
    assert (disagreement.lhs, disagreement.rhs) == (
        model.satisfies("(!i,l)", Atom("l")),
        stale.satisfies(disagreement.right, Atom("l")),
    )
    assert "is true at (!i,l) but false at" in str(disagreement)


def test_equivalence_h():
    result = check_equivalence_h(trade_klm(), 1)
    assert result.ok and result.checked == 21 * 12
    assert check_equivalence_h(identity_klm(), 2)


def test_equivalence_h_against_another_model():
    klm = trade_klm()
    other = h_transform(_rebuild(klm, valuation={"i": ["w1"], "l": ["w1"]}))
    result = check_equivalence_h(klm, 1, other)
    assert not result
    assert result.counterexample.formula == Atom("l")


def test_roundtrip():
    assert check_roundtrip(trade_klm(), 1)
    assert check_roundtrip(identity_klm(atom_set=("p", "q")), 1)


def test_transform_properties():
    assert check_l_properties(trade_hms())
    assert check_h_properties(trade_klm())
    with pytest.raises(error.NonEquivalenceRelation):
        check_h_properties(non_equivalence_klm())


def test_find_renaming():
    klm = trade_klm()
    assert find_renaming(klm, klm) == {"w1": "w1", "w2": "w2", "w3": "w3"}
    assert klm_isomorphic(klm, klm)
    assert find_renaming(klm, identity_klm()) is None
    changed = _rebuild(klm, valuation={"i": ["w2"], "l": ["w1", "w2"]})
    assert not klm_isomorphic(klm, changed)


def test_check_result_truth():
    assert CheckResult(True)
    assert not CheckResult(False, "witness", 3)
