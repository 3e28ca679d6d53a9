"""Transforms between HMS models and Kripke lattice models, with the checks relating them."""
from awmc.transforms.checks import (
    CheckResult,
    Disagreement,
    check_equivalence_h,
    check_equivalence_l,
    check_h_properties,
    check_l_properties,
    check_lemma1,
    check_roundtrip,
    find_renaming,
    klm_isomorphic,
)
from awmc.transforms.h_transform import (
    bisimilar_groups,
    collapse,
    h_transform,
    merge_states,
)
from awmc.transforms.l_transform import (
    StateCorrespondence,
    l_transform,
    min_spaces,
    space_profiles,
    state_correspondence,
)

__all__ = [
    "l_transform",
    "h_transform",
    "StateCorrespondence",
    "state_correspondence",
    "space_profiles",
    "min_spaces",
    "merge_states",
    "bisimilar_groups",
    "collapse",
    "CheckResult",
    "Disagreement",
    "check_lemma1",
    "check_equivalence_l",
    "check_equivalence_h",
    "check_roundtrip",
    "check_l_properties",
    "check_h_properties",
    "find_renaming",
    "klm_isomorphic",
]
