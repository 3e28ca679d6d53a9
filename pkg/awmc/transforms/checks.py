"""Executable checks relating HMS models and Kripke lattice models.

Every check is exhaustive over a finite model and returns a :class:`CheckResult`
carrying the first counterexample in a deterministic order.
"""
import itertools
from dataclasses import dataclass
from typing import Any, Dict, Optional

from awmc import logger
from awmc.formula.enumeration import iter_formulas
from awmc.formula.syntax import Formula
from awmc.models.hms import HmsModel, validate_frame
from awmc.models.kripke import RestrictedWorld, is_equivalence
from awmc.models.lattice_model import KripkeLatticeModel
from awmc.models.three_valued import ThreeVal
from awmc.transforms.h_transform import h_transform, state_id
from awmc.transforms.l_transform import (
    StateCorrespondence,
    l_transform,
    l_transform_unchecked,
    space_profiles,
)


@dataclass(frozen=True)
class CheckResult:
    """The outcome of an exhaustive check.

    Attributes:
        ok: Whether no counterexample was found
        counterexample: The first counterexample, None when ``ok``
        checked: The number of cases examined before stopping
    """

    ok: bool
    counterexample: Any = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Disagreement:
    """A formula evaluated differently at two corresponding points."""

    formula: Formula
    left: Any
    right: Any
    lhs: ThreeVal
    rhs: ThreeVal

    def __str__(self) -> str:
        return f"{self.formula} is {self.lhs} at {self.left} but {self.rhs} at {self.right}"


def check_lemma1(
    model: HmsModel, klm: Optional[KripkeLatticeModel] = None
) -> CheckResult:
    """Checks that information cells of the L-transform mirror the possibility sets.

    For every agent ``a`` and top state ``w`` with possibility set in the space ``S``
    defining the atoms ``Y``, a world ``v_Y`` lies in the cell of ``w_Y`` exactly when
    the projection of ``v`` onto ``S`` is possible at ``w``.

    Args:
        model: A valid HMS model
        klm: The Kripke lattice model to compare with, the L-transform of ``model`` by default

    Returns:
        The result, with counterexample ``(agent, w_Y, v_Y)``
    """
    if klm is None:
        klm, _ = l_transform(model)
    lattice, frame = model.lattice, model.frame
    profiles = space_profiles(model)
    top_states = lattice.spaces[lattice.top]
    checked = 0
    for agent in frame.agents:
        for world in top_states:
            possible = frame.possibility(agent, world)
            space = lattice.space_of_set(possible)
            profile = profiles[space]
            cell = set(klm.info_cell(agent, RestrictedWorld(world, profile)))
            for other in top_states:
                checked += 1
                if (RestrictedWorld(other, profile) in cell) != (
                    lattice.project(other, space) in possible
                ):
                    return CheckResult(
                        False,
                        (agent, RestrictedWorld(world, profile), RestrictedWorld(other, profile)),
                        checked,
                    )
    return CheckResult(True, checked=checked)


def check_equivalence_l(
    model: HmsModel,
    max_depth: int,
    klm: Optional[KripkeLatticeModel] = None,
    correspondence: Optional[StateCorrespondence] = None,
) -> CheckResult:
    """Checks that every state and each of its corresponding worlds agree on all formulas up to ``max_depth``.

    Returns:
        The result, with a :class:`Disagreement` between a state and a world as counterexample
    """
    if klm is None or correspondence is None:
        transformed, transformed_correspondence = l_transform(model)
        klm = transformed if klm is None else klm
        correspondence = (
            transformed_correspondence if correspondence is None else correspondence
        )
    pairs = list(correspondence.pairs())
    checked = 0
    for phi in iter_formulas(model.atom_set, set(model.agents), max_depth):
        for state, world in pairs:
            checked += 1
            lhs, rhs = model.satisfies(state, phi), klm.satisfies(world, phi)
            if lhs != rhs:
                return CheckResult(False, Disagreement(phi, state, world, lhs, rhs), checked)
    logger.debug("L-equivalence: %s checks over %s pairs", checked, len(pairs))
    return CheckResult(True, checked=checked)


def check_equivalence_h(
    klm: KripkeLatticeModel, max_depth: int, hms: Optional[HmsModel] = None
) -> CheckResult:
    """Checks that every world and its H-transform state agree on all formulas up to ``max_depth``.

    Returns:
        The result, with a :class:`Disagreement` between a world and a state as counterexample
    """
    hms = h_transform(klm) if hms is None else hms
    worlds = klm.worlds()
    checked = 0
    for phi in iter_formulas(klm.atom_set, set(klm.agents), max_depth):
        for world in worlds:
            checked += 1
            lhs, rhs = klm.satisfies(world, phi), hms.satisfies(state_id(world), phi)
            if lhs != rhs:
                return CheckResult(
                    False, Disagreement(phi, world, state_id(world), lhs, rhs), checked
                )
    logger.debug("H-equivalence: %s checks over %s worlds", checked, len(worlds))
    return CheckResult(True, checked=checked)


def check_roundtrip(klm: KripkeLatticeModel, max_depth: int) -> CheckResult:
    """Checks that ``klm`` and the L-transform of its H-transform agree at corresponding worlds."""
    hms = h_transform(klm)
    back, correspondence = l_transform(hms)
    checked = 0
    for phi in iter_formulas(klm.atom_set, set(klm.agents), max_depth):
        for world in klm.worlds():
            lhs = klm.satisfies(world, phi)
            for other in sorted(correspondence[state_id(world)], key=str):
                checked += 1
                rhs = back.satisfies(other, phi)
                if lhs != rhs:
                    return CheckResult(False, Disagreement(phi, world, other, lhs, rhs), checked)
    return CheckResult(True, checked=checked)


def check_l_properties(model: HmsModel) -> CheckResult:
    """Checks that the L-transform has valid awareness maps and equivalence relations.

    Returns:
        The result, with the first awareness violation or the name of an agent whose
        relation is not an equivalence as counterexample
    """
    klm, _ = l_transform_unchecked(model)
    violations = klm.violations()
    if violations:
        return CheckResult(False, violations[0], len(klm.worlds()))
    for agent in klm.agents:
        if not is_equivalence(klm.base, agent):
            return CheckResult(False, agent, len(klm.worlds()))
    return CheckResult(True, checked=len(klm.worlds()) * len(klm.agents))


def check_h_properties(klm: KripkeLatticeModel) -> CheckResult:
    """Checks that the H-transform is a valid frame whose spaces all have as many states as ``klm`` has base worlds.

    Returns:
        The result, with the first frame violation or an undersized space as counterexample
    """
    hms = h_transform(klm)
    report = validate_frame(hms.frame)
    if not report.ok:
        return CheckResult(False, report.violations[0], len(hms.worlds()))
    for space, states in hms.lattice.spaces.items():
        if len(states) != len(klm.base.worlds):
            return CheckResult(False, space, len(hms.worlds()))
    return CheckResult(True, checked=len(hms.worlds()))


def find_renaming(
    left: KripkeLatticeModel, right: KripkeLatticeModel
) -> Optional[Dict[str, str]]:
    """Searches for a bijection of base worlds making ``left`` and ``right`` identical.

    The bijection must carry valuations, accessibility relations and awareness maps of
    ``left`` onto those of ``right``. Candidates are tried in permutation order.

    Returns:
        The first such bijection from the worlds of ``left`` to those of ``right``, or None
    """
    a, b = left.base, right.base
    if (
        a.atom_set != b.atom_set
        or a.agents != b.agents
        or len(a.worlds) != len(b.worlds)
    ):
        return None
    for image in itertools.permutations(b.worlds):
        renaming = dict(zip(a.worlds, image))

        def rename(world: RestrictedWorld) -> RestrictedWorld:
            return RestrictedWorld(renaming[world.base], world.atom_subset)

        if any(
            frozenset(renaming[w] for w in a.valuation[atom]) != b.valuation[atom]
            for atom in a.atom_set
        ):
            continue
        if any(
            frozenset((renaming[s], renaming[t]) for s, t in a.accessibility[agent])
            != b.accessibility[agent]
            for agent in a.agents
        ):
            continue
        if all(
            rename(left.awareness_image(agent, world))
            == right.awareness_image(agent, rename(world))
            for agent in a.agents
            for world in left.worlds()
        ):
            return renaming
    return None


def klm_isomorphic(left: KripkeLatticeModel, right: KripkeLatticeModel) -> bool:
    """Whether :func:`find_renaming` finds a bijection."""
    return find_renaming(left, right) is not None
