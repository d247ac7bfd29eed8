"""Simulation configuration value object."""

import math
from dataclasses import dataclass, replace

from clustervar.domain.exceptions import ValidationError
from clustervar.domain.value_objects.assignment_scheme import AssignmentScheme


@dataclass(frozen=True, slots=True, kw_only=True)
class SimConfig:
    """Parameters of the clustered Bernoulli data-generating process.

    Each cluster draws a Poisson size and a uniform success rate shared by
    its units; every unit's outcome is Bernoulli at that rate. Both arms draw
    rates from the same distribution, so the true treatment effect is zero.
    The defaults reproduce the shape of the reference simulation
    (100 clusters, Poisson(10) sizes, Uniform(0.5, 1) rates, alternating arms).

    Attributes:
        n_clusters: Number of clusters drawn (size-0 clusters emit no units).
        mean_cluster_size: Poisson mean of the cluster size.
        rate_low: Lower bound of the per-cluster success rate.
        rate_high: Upper bound of the per-cluster success rate.
        assignment: Cluster-to-arm assignment scheme.
        seed: Unsigned 64-bit seed.
    """

    n_clusters: int = 100
    mean_cluster_size: float = 10.0
    rate_low: float = 0.5
    rate_high: float = 1.0
    assignment: AssignmentScheme = AssignmentScheme.ALTERNATING
    seed: int = 0

    MAX_SEED = 2**64 - 1

    def __post_init__(self) -> None:
        """Validate parameter ranges."""
        if self.n_clusters < 2:
            raise ValidationError("n_clusters must be at least 2")
        if not math.isfinite(self.mean_cluster_size) or self.mean_cluster_size <= 0:
            raise ValidationError("mean_cluster_size must be a positive number")
        if not (0.0 <= self.rate_low <= 1.0 and 0.0 <= self.rate_high <= 1.0):
            raise ValidationError("rate_low and rate_high must lie in [0, 1]")
        if self.rate_low > self.rate_high:
            raise ValidationError(
                f"rate_low ({self.rate_low}) cannot exceed rate_high ({self.rate_high})"
            )
        if not (0 <= self.seed <= self.MAX_SEED):
            raise ValidationError("seed must be an unsigned 64-bit integer")

    def with_seed(self, seed: int) -> "SimConfig":
        """Return a copy of this configuration with another seed."""
        return replace(self, seed=seed)
