"""Validation of cluster-randomized unit tables."""

from collections.abc import Sequence

from clustervar.domain.entities import UnitRecord, ValidatedExperiment
from clustervar.domain.exceptions import (
    EmptyArmError,
    MixedAssignmentClusterError,
    ValidationError,
)


def validate(records: Sequence[UnitRecord]) -> ValidatedExperiment:
    """Check cluster homogeneity and arm sizes, and index units by cluster.

    Args:
        records: Unit records in input order.

    Returns:
        The validated experiment; record order is preserved.

    Raises:
        ValidationError: If ``records`` is empty.
        MixedAssignmentClusterError: If a cluster mixes w=0 and w=1 units.
        EmptyArmError: If either arm has no units.
    """
    if not records:
        raise ValidationError("An experiment needs at least one unit")

    positions: dict[str, list[int]] = {}
    arms: dict[str, int] = {}
    n_treat = 0

    for position, record in enumerate(records):
        arm = arms.setdefault(record.cluster_id, record.w)
        if arm != record.w:
            raise MixedAssignmentClusterError(record.cluster_id)
        positions.setdefault(record.cluster_id, []).append(position)
        n_treat += record.w

    n_units = len(records)
    n_control = n_units - n_treat
    if n_treat == 0:
        raise EmptyArmError("treatment")
    if n_control == 0:
        raise EmptyArmError("control")

    return ValidatedExperiment(
        units=tuple(records),
        n_treat=n_treat,
        n_control=n_control,
        n_units=n_units,
        cluster_index={cid: tuple(idx) for cid, idx in positions.items()},
        cluster_arms=arms,
    )
