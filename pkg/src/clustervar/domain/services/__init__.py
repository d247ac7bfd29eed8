"""Pure estimator services for the domain layer."""

from clustervar.domain.services.analysis import (
    DEFAULT_CI_LEVEL,
    DEFAULT_TOLERANCE,
    analyze,
    normal_quantile,
    relative_discrepancy,
)
from clustervar.domain.services.cluster_aggregation import (
    aggregate_clusters,
    split_by_arm,
)
from clustervar.domain.services.delta_method import (
    arm_moments,
    delta_arm_variance,
    delta_method_variance,
)
from clustervar.domain.services.estimators import (
    arm_variances,
    bread,
    clamp_variance,
    difference_in_means,
    fitted_aggregates,
    invert2,
    meat,
    residuals,
    sandwich_covariance,
    variance_simplified,
)
from clustervar.domain.services.experiment_validation import validate

__all__ = [
    "DEFAULT_CI_LEVEL",
    "DEFAULT_TOLERANCE",
    "aggregate_clusters",
    "analyze",
    "arm_moments",
    "arm_variances",
    "bread",
    "clamp_variance",
    "delta_arm_variance",
    "delta_method_variance",
    "difference_in_means",
    "fitted_aggregates",
    "invert2",
    "meat",
    "normal_quantile",
    "relative_discrepancy",
    "residuals",
    "sandwich_covariance",
    "split_by_arm",
    "validate",
    "variance_simplified",
]
