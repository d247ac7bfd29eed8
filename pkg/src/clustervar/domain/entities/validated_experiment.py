"""Validated experiment entity."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from clustervar.domain.entities.unit_record import UnitRecord


@dataclass(frozen=True, slots=True, kw_only=True)
class ValidatedExperiment:
    """A unit table that passed cluster-randomization checks.

    Instances are built by ``domain.services.validate``; the constructor does
    not re-check the invariants.

    Attributes:
        units: Units in input order.
        n_treat: Treated unit count (N_T, at least 1).
        n_control: Control unit count (N_C, at least 1).
        n_units: Total unit count (N = N_T + N_C).
        cluster_index: Cluster id to unit positions, in first-appearance order.
        cluster_arms: Cluster id to the shared assignment of its units.
    """

    units: tuple[UnitRecord, ...]
    n_treat: int
    n_control: int
    n_units: int
    cluster_index: Mapping[str, tuple[int, ...]] = field(compare=False)
    cluster_arms: Mapping[str, int] = field(compare=False)

    def __post_init__(self) -> None:
        """Freeze the index mappings."""
        index = MappingProxyType(dict(self.cluster_index))
        arms = MappingProxyType(dict(self.cluster_arms))
        object.__setattr__(self, "cluster_index", index)
        object.__setattr__(self, "cluster_arms", arms)

    @property
    def n_clusters(self) -> int:
        """Number of distinct clusters."""
        return len(self.cluster_index)

    def clusters_in_arm(self, w: int) -> int:
        """Number of clusters assigned to arm ``w``."""
        return sum(1 for arm in self.cluster_arms.values() if arm == w)
