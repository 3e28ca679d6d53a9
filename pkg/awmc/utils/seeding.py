"""Seeded random number generators for the random model corpora.

A corpus seed spawns one child generator per model, so the ``k``-th model of a corpus
does not depend on how many models are drawn after it.
"""
from typing import List, Optional, Tuple

import numpy as np

from awmc import error

RNG = np.random.Generator


def check_seed(seed: Optional[int]) -> Optional[int]:
    """Returns ``seed`` if it is a non-negative integer or None.

    Raises:
        Error: Seed must be a non-negative integer or omitted
    """
    if seed is not None and not (
        isinstance(seed, int) and not isinstance(seed, bool) and seed >= 0
    ):
        raise error.Error(f"Seed must be a non-negative integer or omitted, not {seed!r}")
    return seed


def np_random(seed: Optional[int] = None) -> Tuple[RNG, int]:
    """A generator seeded with ``seed`` and the entropy it was built from.

    Without a seed the entropy is drawn from the operating system; passing it back
    as the seed reproduces the generator.
    """
    seed_seq = np.random.SeedSequence(check_seed(seed))
    return RNG(np.random.PCG64(seed_seq)), seed_seq.entropy


def spawn(seed: int, count: int) -> List[RNG]:
    """``count`` independent generators derived from ``seed``, one per corpus member."""
    children = np.random.SeedSequence(check_seed(seed)).spawn(count)
    return [RNG(np.random.PCG64(child)) for child in children]
