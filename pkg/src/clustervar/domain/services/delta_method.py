"""Delta-method variance of the difference of arm means.

Each arm mean is a ratio of cluster totals, sum(r_g) / sum(n_g). Linearizing
that ratio around (mu_r, mu_n) gives the per-arm variance below, and the two
arms are independent, so their variances add.
"""

import math
import sys
from collections.abc import Sequence

from clustervar.domain.entities import ArmMoments, ClusterAggregate, ValidatedExperiment
from clustervar.domain.exceptions import DegenerateArmError, InsufficientClustersError
from clustervar.domain.services.cluster_aggregation import split_by_arm
from clustervar.domain.services.estimators import clamp_variance, fitted_aggregates
from clustervar.domain.value_objects import MomentMode

# Relative size, against the magnitude of the terms being combined, below
# which the linearized variance is indistinguishable from zero.
CANCELLATION_SLACK = 16 * sys.float_info.epsilon


def arm_moments(
    arm_aggregates: Sequence[ClusterAggregate],
    mode: MomentMode = MomentMode.POPULATION,
    arm: str = "arm",
) -> ArmMoments:
    """Two-pass moments of (r_g, n_g) over one arm's clusters.

    Args:
        arm_aggregates: Aggregates that all share one w_g.
        mode: Divisor convention (n or n - 1).
        arm: Arm label used in error messages.

    Returns:
        The arm's moments.

    Raises:
        InsufficientClustersError: If there are fewer clusters than the mode
            needs (1 for population, 2 for sample).
    """
    n = len(arm_aggregates)
    if n < mode.min_clusters:
        raise InsufficientClustersError(arm, n, mode.min_clusters)

    mu_r = math.fsum(agg.r_g for agg in arm_aggregates) / n
    mu_n = math.fsum(agg.n_g for agg in arm_aggregates) / n
    dr = [agg.r_g - mu_r for agg in arm_aggregates]
    dn = [agg.n_g - mu_n for agg in arm_aggregates]
    divisor = mode.divisor(n)

    return ArmMoments(
        n_clusters=n,
        mu_r=mu_r,
        mu_n=mu_n,
        var_r=math.fsum(d * d for d in dr) / divisor,
        var_n=math.fsum(d * d for d in dn) / divisor,
        cov_rn=math.fsum(a * b for a, b in zip(dr, dn, strict=True)) / divisor,
        mode=mode,
    )


def delta_arm_variance(m: ArmMoments) -> float:
    """Linearized variance of the ratio mean sum(r_g) / sum(n_g).

    Evaluates var_r/(n mu_n^2) - 2 mu_r cov_rn/(n mu_n^3)
    + mu_r^2 var_n/(n mu_n^4), grouped over the common factor 1/(n mu_n^2).
    A combination smaller than its own rounding error is returned as 0.0.

    Raises:
        DegenerateArmError: If mu_n is zero.
    """
    if m.mu_n == 0.0:
        raise DegenerateArmError("Mean cluster size is zero")

    ratio = m.mu_r / m.mu_n
    cross = 2.0 * ratio * m.cov_rn
    curvature = ratio * ratio * m.var_n
    centered = m.var_r - cross + curvature
    if abs(centered) <= CANCELLATION_SLACK * (m.var_r + abs(cross) + curvature):
        return 0.0
    return clamp_variance(centered / (m.n_clusters * m.mu_n * m.mu_n))


def delta_method_variance(
    exp: ValidatedExperiment,
    mode: MomentMode = MomentMode.POPULATION,
    aggregates: Sequence[ClusterAggregate] | None = None,
) -> float:
    """Delta-method variance of tau_hat: treatment arm plus control arm.

    Args:
        exp: Validated experiment.
        mode: Divisor convention for the cluster moments.
        aggregates: Cluster aggregates of the full-experiment residuals. When
            omitted they come from ``fitted_aggregates``.

    Raises:
        InsufficientClustersError: If an arm has too few clusters for ``mode``.
    """
    if aggregates is None:
        aggregates = fitted_aggregates(exp)

    treatment, control = split_by_arm(aggregates)
    return delta_arm_variance(
        arm_moments(treatment, mode, arm="treatment")
    ) + delta_arm_variance(arm_moments(control, mode, arm="control"))
