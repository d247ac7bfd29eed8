"""Random source abstract base classes."""

from abc import ABC, abstractmethod


class IRandomSource(ABC):
    """Seeded stream of the draws needed by the data-generating process.

    Implementations must be deterministic: the same seed yields the same
    sequence of draws for the same sequence of calls.
    """

    @abstractmethod
    def poisson(self, mean: float, size: int) -> list[int]:
        """Draw ``size`` Poisson counts with the given mean."""
        ...  # pragma: no cover

    @abstractmethod
    def uniform(self, low: float, high: float, size: int) -> list[float]:
        """Draw ``size`` values uniformly from [low, high]."""
        ...  # pragma: no cover

    @abstractmethod
    def bernoulli(self, rates: list[float]) -> list[int]:
        """Draw one 0/1 outcome per entry of ``rates``."""
        ...  # pragma: no cover

    @abstractmethod
    def metadata(self, mean: float) -> dict[str, str]:
        """Describe the generator and the Poisson method used at ``mean``."""
        ...  # pragma: no cover


class IRandomSourceFactory(ABC):
    """Creates random sources and derives per-replication seeds."""

    @abstractmethod
    def create(self, seed: int) -> IRandomSource:
        """Return a random source seeded with ``seed``."""
        ...  # pragma: no cover

    @abstractmethod
    def derive_seed(self, master_seed: int, index: int) -> int:
        """Deterministically mix (master_seed, index) into a 64-bit seed.

        Distinct indices must give distinct seeds with overwhelming
        probability.
        """
        ...  # pragma: no cover
