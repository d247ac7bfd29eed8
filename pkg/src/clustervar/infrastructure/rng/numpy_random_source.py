"""numpy-backed random source."""

import numpy as np
from scipy import stats

from clustervar.application.interfaces import IRandomSource, IRandomSourceFactory

# Above this mean numpy's own Poisson sampler replaces inversion.
INVERSION_MAX_MEAN = 30.0
GENERATOR_NAME = "numpy.random.PCG64"
SEED_DERIVATION = "numpy.random.SeedSequence(entropy=seed, spawn_key=(index,))"


class NumpyRandomSource(IRandomSource):
    """Random source on a PCG64 ``numpy.random.Generator``.

    Derivations:
        poisson: inversion of the CDF with one uniform per draw when the mean
            is at most 30, else ``Generator.poisson``.
        uniform: low + (high - low) * u, so equal bounds return low exactly.
        bernoulli: 1 when u < rate, one uniform per draw.
    """

    def __init__(self, seed: int) -> None:
        """Initialize the generator.

        Args:
            seed: Unsigned 64-bit seed.
        """
        self._generator = np.random.Generator(np.random.PCG64(seed))

    def poisson(self, mean: float, size: int) -> list[int]:
        """Draw ``size`` Poisson counts."""
        if mean > INVERSION_MAX_MEAN:
            return self._generator.poisson(mean, size).tolist()
        uniforms = self._generator.random(size)
        # ppf(0) is -1; the support starts at 0
        counts = np.maximum(stats.poisson.ppf(uniforms, mean), 0.0)
        return counts.astype(int).tolist()

    def uniform(self, low: float, high: float, size: int) -> list[float]:
        """Draw ``size`` values on [low, high]."""
        uniforms = self._generator.random(size)
        return (low + (high - low) * uniforms).tolist()

    def bernoulli(self, rates: list[float]) -> list[int]:
        """Draw one 0/1 outcome per rate."""
        uniforms = self._generator.random(len(rates))
        return (uniforms < np.asarray(rates, dtype=float)).astype(int).tolist()

    def metadata(self, mean: float) -> dict[str, str]:
        """Describe the generator, numpy version, and derivations."""
        method = "inversion" if mean <= INVERSION_MAX_MEAN else "numpy.poisson"
        return {
            "generator": GENERATOR_NAME,
            "numpy_version": np.__version__,
            "poisson_method": method,
            "seed_derivation": SEED_DERIVATION,
        }


class NumpyRandomSourceFactory(IRandomSourceFactory):
    """Creates NumpyRandomSource instances and derives replication seeds."""

    def create(self, seed: int) -> NumpyRandomSource:
        """Return a random source seeded with ``seed``."""
        return NumpyRandomSource(seed)

    def derive_seed(self, master_seed: int, index: int) -> int:
        """Mix (master_seed, index) through a SeedSequence spawn key."""
        sequence = np.random.SeedSequence(entropy=master_seed, spawn_key=(index,))
        return int(sequence.generate_state(1, dtype=np.uint64)[0])
