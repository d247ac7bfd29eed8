"""Random number infrastructure."""

from clustervar.infrastructure.rng.numpy_random_source import (
    NumpyRandomSource,
    NumpyRandomSourceFactory,
)

__all__ = ["NumpyRandomSource", "NumpyRandomSourceFactory"]
