"""Difference-in-means, residuals, and the cluster-robust sandwich.

The sandwich path uses genuine 2x2 matrix algebra (bread, inverse, meat,
two products) so that its agreement with the residual cluster-sum form is an
observed fact rather than an assumption.
"""

import math
import sys
from collections.abc import Sequence
from dataclasses import replace

from clustervar.domain.entities import (
    AteEstimate,
    ClusterAggregate,
    ValidatedExperiment,
)
from clustervar.domain.services.cluster_aggregation import aggregate_clusters
from clustervar.domain.value_objects import Matrix2

# Largest negative rounding residue that is reported as an exact zero variance.
NEGATIVE_ZERO_SLACK = 1e-15

# A fitted residual sum within this many machine epsilons of the magnitudes
# that produced it (|y_i| plus |fitted_i|) is rounding noise.
RESIDUAL_SUM_SLACK = 8 * sys.float_info.epsilon


def clamp_variance(value: float) -> float:
    """Map tiny negative rounding residue to 0.0; leave other values alone."""
    if -NEGATIVE_ZERO_SLACK <= value < 0.0:
        return 0.0
    return value


def difference_in_means(exp: ValidatedExperiment) -> AteEstimate:
    """Estimate the control mean and the difference of arm means.

    Args:
        exp: Validated experiment (both arms non-empty).

    Returns:
        alpha_hat = mean of control outcomes, tau_hat = treatment mean minus
        alpha_hat.
    """
    treated_sum = math.fsum(unit.y for unit in exp.units if unit.is_treated)
    control_sum = math.fsum(unit.y for unit in exp.units if not unit.is_treated)
    alpha_hat = control_sum / exp.n_control
    tau_hat = treated_sum / exp.n_treat - alpha_hat
    return AteEstimate(alpha_hat=alpha_hat, tau_hat=tau_hat)


def residuals(exp: ValidatedExperiment, est: AteEstimate) -> list[float]:
    """Return y_i - alpha_hat - tau_hat * w_i for every unit, in unit order."""
    return [unit.y - est.alpha_hat - est.tau_hat * unit.w for unit in exp.units]


def fitted_aggregates(
    exp: ValidatedExperiment, est: AteEstimate | None = None
) -> list[ClusterAggregate]:
    """Aggregate the residuals of the difference-in-means fit per cluster.

    Unlike :func:`aggregate_clusters`, which keeps caller-supplied residuals
    exactly, a fitted residual sum no larger than its rounding bound is stored
    as 0.0. A one-cluster arm's residuals sum to zero in exact arithmetic.

    Args:
        exp: Validated experiment.
        est: Fit of ``exp``; computed when omitted.

    Returns:
        One aggregate per cluster, in first-appearance order.
    """
    if est is None:
        est = difference_in_means(exp)
    fitted_residuals = residuals(exp, est)
    return [
        _drop_rounding_noise(exp, fitted_residuals, agg)
        for agg in aggregate_clusters(exp, fitted_residuals)
    ]


def bread(exp: ValidatedExperiment) -> Matrix2:
    """Return the design cross-product [[N, N_T], [N_T, N_T]]."""
    n = float(exp.n_units)
    n_t = float(exp.n_treat)
    return Matrix2(a11=n, a12=n_t, a21=n_t, a22=n_t)


def invert2(m: Matrix2) -> Matrix2:
    """Invert a 2x2 matrix.

    Raises:
        SingularMatrixError: If the determinant is zero.
    """
    return m.inverse()


def meat(aggregates: Sequence[ClusterAggregate]) -> Matrix2:
    """Sum the outer products of the per-cluster score vectors.

    The score of cluster g is (sum of residuals, sum of w_i * residuals),
    which is (s_treat + s_control, s_treat). Each entry of the sum of outer
    products is accumulated with correctly rounded summation.
    """
    outers = [Matrix2.outer(agg.residual_sum, agg.s_treat) for agg in aggregates]
    return Matrix2(
        a11=math.fsum(o.a11 for o in outers),
        a12=math.fsum(o.a12 for o in outers),
        a21=math.fsum(o.a21 for o in outers),
        a22=math.fsum(o.a22 for o in outers),
    )


def sandwich_covariance(
    exp: ValidatedExperiment,
    aggregates: Sequence[ClusterAggregate] | None = None,
) -> Matrix2:
    """Cluster-robust covariance of (alpha_hat, tau_hat): B^-1 M B^-1.

    Args:
        exp: Validated experiment.
        aggregates: Cluster aggregates of the full-experiment residuals. When
            omitted they come from :func:`fitted_aggregates`.

    Returns:
        The 2x2 covariance estimate; the (2,2) entry is the variance of
        tau_hat.

    Raises:
        SingularMatrixError: If the bread is singular (unreachable for
            validated experiments).
    """
    if aggregates is None:
        aggregates = fitted_aggregates(exp)

    bread_inv = invert2(bread(exp))
    return bread_inv @ meat(aggregates) @ bread_inv


def variance_simplified(
    aggregates: Sequence[ClusterAggregate], n_treat: int, n_control: int
) -> float:
    """Residual cluster-sum variance of tau_hat.

    Returns:
        sum(s_treat^2) / N_T^2 + sum(s_control^2) / N_C^2.
    """
    treat_term, control_term = arm_variances(aggregates, n_treat, n_control)
    return treat_term + control_term


def arm_variances(
    aggregates: Sequence[ClusterAggregate], n_treat: int, n_control: int
) -> tuple[float, float]:
    """Return the treatment-mean and control-mean variance terms separately."""
    sum_sq_treat = math.fsum(agg.s_treat * agg.s_treat for agg in aggregates)
    sum_sq_control = math.fsum(agg.s_control * agg.s_control for agg in aggregates)
    return sum_sq_treat / n_treat**2, sum_sq_control / n_control**2


def _drop_rounding_noise(
    exp: ValidatedExperiment,
    fitted_residuals: Sequence[float],
    agg: ClusterAggregate,
) -> ClusterAggregate:
    positions = exp.cluster_index[agg.cluster_id]
    magnitude = math.fsum(
        abs(exp.units[i].y) + abs(exp.units[i].y - fitted_residuals[i])
        for i in positions
    )
    if abs(agg.residual_sum) > RESIDUAL_SUM_SLACK * magnitude:
        return agg
    return replace(agg, s_treat=0.0, s_control=0.0)
