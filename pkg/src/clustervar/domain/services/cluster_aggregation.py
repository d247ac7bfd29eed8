"""Reduction of unit-level data to per-cluster sufficient statistics."""

import math
from collections.abc import Sequence

from clustervar.domain.entities import ClusterAggregate, ValidatedExperiment
from clustervar.domain.exceptions import LengthMismatchError


def aggregate_clusters(
    exp: ValidatedExperiment, residuals: Sequence[float]
) -> list[ClusterAggregate]:
    """Sum sizes, outcomes, and residuals within each cluster.

    Sums are correctly rounded, so the result does not depend on row order.
    The residual sum of the arm a cluster does not belong to is exactly 0.0.

    Args:
        exp: Validated experiment.
        residuals: One residual per unit, aligned with ``exp.units``.

    Returns:
        One aggregate per cluster, in first-appearance order.

    Raises:
        LengthMismatchError: If ``residuals`` does not have N entries.
    """
    if len(residuals) != exp.n_units:
        raise LengthMismatchError(expected=exp.n_units, actual=len(residuals))

    aggregates = []
    for cluster_id, positions in exp.cluster_index.items():
        w_g = exp.cluster_arms[cluster_id]
        residual_sum = math.fsum(residuals[i] for i in positions)
        aggregates.append(
            ClusterAggregate(
                cluster_id=cluster_id,
                n_g=len(positions),
                r_g=math.fsum(exp.units[i].y for i in positions),
                w_g=w_g,
                s_treat=residual_sum if w_g == 1 else 0.0,
                s_control=residual_sum if w_g == 0 else 0.0,
            )
        )
    return aggregates


def split_by_arm(
    aggregates: Sequence[ClusterAggregate],
) -> tuple[list[ClusterAggregate], list[ClusterAggregate]]:
    """Partition aggregates into (treatment, control) lists."""
    treatment = [agg for agg in aggregates if agg.w_g == 1]
    control = [agg for agg in aggregates if agg.w_g == 0]
    return treatment, control
