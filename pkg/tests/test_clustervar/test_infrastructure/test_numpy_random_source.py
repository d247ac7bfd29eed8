"""Tests for the numpy random source."""

import numpy as np
import pytest

from clustervar.infrastructure.rng import NumpyRandomSource, NumpyRandomSourceFactory


def test_random_source_is_deterministic() -> None:
    """Should repeat the same draws for the same seed and call sequence."""
    a, b = NumpyRandomSource(123), NumpyRandomSource(123)
    assert a.poisson(10.0, 5) == b.poisson(10.0, 5)
    assert a.uniform(0.5, 1.0, 5) == b.uniform(0.5, 1.0, 5)
    assert a.bernoulli([0.5] * 5) == b.bernoulli([0.5] * 5)


def test_random_source_accepts_full_64_bit_seed() -> None:
    """Should seed from the largest unsigned 64-bit value."""
    assert len(NumpyRandomSource(2**64 - 1).poisson(3.0, 4)) == 4


def test_uniform_respects_bounds() -> None:
    """Should draw within [low, high] and return low for equal bounds."""
    source = NumpyRandomSource(1)
    draws = source.uniform(0.2, 0.4, 1000)
    assert all(0.2 <= d <= 0.4 for d in draws)
    assert source.uniform(0.7, 0.7, 3) == [0.7, 0.7, 0.7]


def test_bernoulli_extreme_rates() -> None:
    """Should always fail at rate 0 and always succeed at rate 1."""
    source = NumpyRandomSource(2)
    assert source.bernoulli([0.0] * 50) == [0] * 50
    assert source.bernoulli([1.0] * 50) == [1] * 50


@pytest.mark.parametrize("mean", [0.5, 3.0, 10.0, 30.0])
def test_poisson_inversion_consumes_one_uniform_per_draw(mean: float) -> None:
    """Should leave the stream where six uniforms would have left it."""
    source = NumpyRandomSource(11)
    counts = source.poisson(mean, 6)
    reference = np.random.Generator(np.random.PCG64(11))
    reference.random(6)
    assert all(isinstance(k, int) and k >= 0 for k in counts)
    assert source.uniform(0.0, 1.0, 2) == reference.random(2).tolist()


def test_poisson_sample_moments() -> None:
    """Should draw counts with mean and variance close to the Poisson mean."""
    for mean in (10.0, 50.0):
        draws = np.array(NumpyRandomSource(5).poisson(mean, 20000))
        assert draws.mean() == pytest.approx(mean, rel=0.03)
        assert draws.var() == pytest.approx(mean, rel=0.05)
        assert draws.min() >= 0


def test_metadata_names_generator_and_method() -> None:
    """Should describe the generator and switch Poisson method above 30."""
    source = NumpyRandomSource(0)
    assert source.metadata(10.0)["generator"] == "numpy.random.PCG64"
    assert source.metadata(10.0)["poisson_method"] == "inversion"
    assert source.metadata(31.0)["poisson_method"] == "numpy.poisson"
    assert source.metadata(10.0)["numpy_version"] == np.__version__


def test_factory_creates_seeded_sources() -> None:
    """Should create sources equivalent to direct construction."""
    created = NumpyRandomSourceFactory().create(9)
    assert created.uniform(0.0, 1.0, 3) == NumpyRandomSource(9).uniform(0.0, 1.0, 3)


def test_derive_seed_is_deterministic_and_distinct() -> None:
    """Should derive reproducible, distinct 64-bit seeds per index."""
    factory = NumpyRandomSourceFactory()
    seeds = [factory.derive_seed(1, index) for index in range(1000)]
    assert seeds == [factory.derive_seed(1, index) for index in range(1000)]
    assert len(set(seeds)) == 1000
    assert all(0 <= s < 2**64 for s in seeds)
    assert factory.derive_seed(1, 0) != factory.derive_seed(2, 0)
