"""Cluster aggregate entity."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True, kw_only=True)
class ClusterAggregate:
    """Per-cluster sufficient statistics.

    Exactly one of ``s_treat`` and ``s_control`` can be nonzero: the other is
    a sum over an empty set and is stored as exactly 0.0.

    Attributes:
        cluster_id: Cluster key.
        n_g: Number of units in the cluster (at least 1).
        r_g: Sum of outcomes.
        w_g: Arm of the cluster (0 or 1).
        s_treat: Sum of residuals over treated units (S_gT).
        s_control: Sum of residuals over control units (S_gC).
    """

    cluster_id: str
    n_g: int
    r_g: float
    w_g: int
    s_treat: float
    s_control: float

    @property
    def residual_sum(self) -> float:
        """Sum of all residuals in the cluster."""
        return self.s_treat + self.s_control
