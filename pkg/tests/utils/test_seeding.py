import pickle

import pytest

from awmc import error
from awmc.utils import seeding


@pytest.mark.parametrize("seed", [-1, "test", 1.5, True])
def test_invalid_seeds(seed):
    with pytest.raises(error.Error, match="Seed must be a non-negative integer"):
        seeding.np_random(seed)


def test_valid_seeds():
    for seed in [0, 1]:
        _, entropy = seeding.np_random(seed)
        assert seed == entropy


def test_unseeded_entropy_reproduces():
    rng, entropy = seeding.np_random()
    again, _ = seeding.np_random(entropy)
    assert rng.integers(0, 2**32) == again.integers(0, 2**32)


def test_spawn():
    first = [rng.random() for rng in seeding.spawn(4, 3)]
    assert first == [rng.random() for rng in seeding.spawn(4, 3)]
    assert first[:2] == [rng.random() for rng in seeding.spawn(4, 2)]
    assert len(set(first)) == 3
    with pytest.raises(error.Error):
        seeding.spawn(-4, 1)


def test_rng_pickle():
    rng, _ = seeding.np_random(seed=0)
    rng2 = pickle.loads(pickle.dumps(rng))
    assert isinstance(rng2, seeding.RNG), "Unpickled object is not a Generator"
    assert rng.random() == rng2.random()
