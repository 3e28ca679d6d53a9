"""Checks every structural property and equivalence on the seeded random corpus."""
import pytest

from awmc.logic import (
    aware_theorem_sweep,
    axiom_sweep,
    derived_theorem_sweep,
    generate_hms_models,
    generate_models,
)
from awmc.models.hms import validate_frame
from awmc.transforms import (
    check_equivalence_h,
    check_equivalence_l,
    check_h_properties,
    check_l_properties,
    check_lemma1,
    check_roundtrip,
)

SEED = 0
CORPUS = generate_models(SEED, sample_count=100)
HMS_CORPUS = generate_hms_models(SEED, sample_count=100)
EXHAUSTIVE_COUNT = 20


@pytest.mark.parametrize("index", range(len(CORPUS)))
def test_transform_properties(index):
    klm, hms = CORPUS[index], HMS_CORPUS[index]
    assert not klm.violations()
    assert validate_frame(hms.frame).ok
    assert check_h_properties(klm)
    assert check_l_properties(hms)
    assert check_lemma1(hms)


@pytest.mark.parametrize("index", range(EXHAUSTIVE_COUNT))
def test_equivalence_at_depth_two(index):
    result = check_equivalence_l(HMS_CORPUS[index], 2)
    assert result, result.counterexample
    result = check_equivalence_h(CORPUS[index], 2)
    assert result, result.counterexample
    assert check_roundtrip(CORPUS[index], 1)


def test_axioms_and_derived_theorems():
    models = CORPUS[:EXHAUSTIVE_COUNT]
    report = axiom_sweep(models, {"p", "q"}, {"a", "b"}, 1)
    assert report.ok, report.summary()
    derived = derived_theorem_sweep(models, 1)
    assert derived.ok, derived.summary()
    rules = aware_theorem_sweep(models, {"p", "q"}, {"a", "b"}, 0)
    assert rules.ok, rules.summary()
