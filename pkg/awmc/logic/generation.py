"""Seeded random corpora of valid Kripke lattice models and HMS models."""
from typing import Dict, FrozenSet, List, Optional, Tuple

from awmc import logger
from awmc.models.hms import HmsModel
from awmc.models.kripke import KripkeModel, build_lattice, partition_relation
from awmc.models.lattice_model import KripkeLatticeModel, awareness_from_sets
from awmc.transforms.h_transform import collapse, h_transform
from awmc.utils import seeding

ATOM_NAMES = ("p", "q", "r")
AGENT_NAMES = ("a", "b")
MAX_WORLDS = 4


def _random_blocks(rng: seeding.RNG, worlds: List[str]) -> List[List[str]]:
    labels = rng.integers(0, len(worlds), size=len(worlds))
    blocks: Dict[int, List[str]] = {}
    for world, label in zip(worlds, labels):
        blocks.setdefault(int(label), []).append(world)
    return list(blocks.values())


def _random_model(
    rng: seeding.RNG, atom_count: int, world_count: int, agent_count: int
) -> KripkeLatticeModel:
    size = int(rng.integers(1, world_count + 1))
    worlds = [f"w{index + 1}" for index in range(size)]
    atom_set = ATOM_NAMES[:atom_count]
    agents = AGENT_NAMES[:agent_count]

    partitions = {agent: _random_blocks(rng, worlds) for agent in agents}
    valuation = {
        atom: [world for world, bit in zip(worlds, rng.integers(0, 2, size=size)) if bit]
        for atom in atom_set
    }
    model = KripkeModel(
        worlds,
        agents,
        atom_set,
        {agent: partition_relation(blocks) for agent, blocks in partitions.items()},
        valuation,
    )

    targets: Dict[str, Dict[str, FrozenSet[str]]] = {}
    for agent, blocks in partitions.items():
        targets[agent] = {}
        for block in blocks:
            mask = rng.integers(0, 2, size=atom_count)
            aware_of = frozenset(atom for atom, bit in zip(atom_set, mask) if bit)
            for world in block:
                targets[agent][world] = aware_of
    lattice = build_lattice(model)
    return KripkeLatticeModel(lattice, awareness_from_sets(lattice, targets))


def generate_models(
    seed: Optional[int],
    atom_count: int = 2,
    world_count: int = 3,
    agent_count: int = 2,
    sample_count: int = 10,
) -> Tuple[KripkeLatticeModel, ...]:
    """Draws ``sample_count`` valid Kripke lattice models from a seeded generator.

    Every model has exactly ``atom_count`` atoms named from ``p, q, r`` and ``agent_count``
    agents named from ``a, b``; the number of worlds is drawn between 1 and ``world_count``.
    Relations come from random partitions and each information cell gets one random
    awareness set, so the awareness maps are valid by construction.

    Args:
        seed: The corpus seed, equal seeds give equal corpora and longer corpora extend shorter ones.
            If None, a seed is drawn from the operating system and logged
        atom_count: At most 3
        world_count: At most 4
        agent_count: 1 or 2
        sample_count: The number of models

    Returns:
        The models in generation order
    """
    assert 0 <= atom_count <= len(ATOM_NAMES), f"Expected at most {len(ATOM_NAMES)} atoms, actual: {atom_count}"
    assert 1 <= world_count <= MAX_WORLDS, f"Expected 1 to {MAX_WORLDS} worlds, actual: {world_count}"
    assert 1 <= agent_count <= len(AGENT_NAMES), f"Expected 1 or 2 agents, actual: {agent_count}"
    assert sample_count >= 0, f"Expected a non-negative sample count, actual: {sample_count}"
    if seed is None:
        _, seed = seeding.np_random()
        logger.info("drew corpus seed %s", seed)
    models = tuple(
        _random_model(rng, atom_count, world_count, agent_count)
        for rng in seeding.spawn(seed, sample_count)
    )
    logger.debug("generated %s models from seed %s", len(models), seed)
    return models


def generate_hms_models(
    seed: Optional[int],
    atom_count: int = 2,
    world_count: int = 3,
    agent_count: int = 2,
    sample_count: int = 10,
    merge: bool = True,
) -> Tuple[HmsModel, ...]:
    """The H-transforms of :func:`generate_models`, with indistinguishable states merged if ``merge``."""
    return tuple(
        collapse(h_transform(klm)) if merge else h_transform(klm)
        for klm in generate_models(seed, atom_count, world_count, agent_count, sample_count)
    )
