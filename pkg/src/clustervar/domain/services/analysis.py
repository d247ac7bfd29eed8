"""Run every variance route on one experiment and compare them."""

import itertools
import math
from collections.abc import Iterable

from scipy import stats

from clustervar.domain.entities import ValidatedExperiment, VarianceReport
from clustervar.domain.exceptions import ValidationError
from clustervar.domain.services.delta_method import delta_method_variance
from clustervar.domain.services.estimators import (
    arm_variances,
    clamp_variance,
    difference_in_means,
    fitted_aggregates,
    sandwich_covariance,
)
from clustervar.domain.value_objects import MomentMode

DEFAULT_CI_LEVEL = 0.95
DEFAULT_TOLERANCE = 1e-12
DISCREPANCY_FLOOR = 1e-300


def relative_discrepancy(values: Iterable[float]) -> float:
    """Largest pairwise |a - b| / max(|a|, |b|, 1e-300)."""
    pairs = itertools.combinations(list(values), 2)
    return max(
        (abs(a - b) / max(abs(a), abs(b), DISCREPANCY_FLOOR) for a, b in pairs),
        default=0.0,
    )


def normal_quantile(ci_level: float) -> float:
    """Two-sided standard normal critical value for ``ci_level``."""
    return float(stats.norm.ppf(0.5 + ci_level / 2.0))


def analyze(
    exp: ValidatedExperiment,
    ci_level: float = DEFAULT_CI_LEVEL,
    tol: float = DEFAULT_TOLERANCE,
    mode: MomentMode = MomentMode.POPULATION,
) -> VarianceReport:
    """Estimate tau_hat and its variance by the sandwich, simplified, and
    delta-method routes, all on the same residuals.

    Args:
        exp: Validated experiment.
        ci_level: Confidence level in (0, 1) for the normal interval.
        tol: Relative discrepancy above which a warning is attached.
        mode: Moment mode requested by the caller. SAMPLE makes the
            sample-mode delta estimate mandatory.

    Returns:
        The variance report. The interval is tau_hat +/- z * sqrt(var_simplified).

    Raises:
        ValidationError: If ``ci_level`` or ``tol`` is out of range.
        InsufficientClustersError: If ``mode`` is SAMPLE and an arm has fewer
            than two clusters.
    """
    if not 0.0 < ci_level < 1.0:
        raise ValidationError(f"ci_level must lie in (0, 1), got {ci_level}")
    if not tol >= 0.0:
        raise ValidationError(f"tol must be non-negative, got {tol}")

    estimate = difference_in_means(exp)
    aggregates = fitted_aggregates(exp, estimate)

    sandwich = sandwich_covariance(exp, aggregates)
    var_treatment_mean, var_control_mean = arm_variances(
        aggregates, exp.n_treat, exp.n_control
    )
    var_sandwich = clamp_variance(sandwich.a22)
    var_simplified = var_treatment_mean + var_control_mean
    var_delta_pop = delta_method_variance(exp, MomentMode.POPULATION, aggregates)

    warnings: list[str] = []
    var_delta_sample: float | None = None
    min_clusters = min(exp.clusters_in_arm(1), exp.clusters_in_arm(0))
    if mode is MomentMode.SAMPLE or min_clusters >= MomentMode.SAMPLE.min_clusters:
        var_delta_sample = delta_method_variance(exp, MomentMode.SAMPLE, aggregates)
    else:
        warnings.append(
            "var_delta_sample omitted: an arm has fewer than 2 clusters"
        )

    discrepancy = relative_discrepancy((var_sandwich, var_simplified, var_delta_pop))
    if discrepancy > tol:
        warnings.append(
            f"max_rel_discrepancy {discrepancy:.3e} exceeds tolerance {tol:.3e}"
        )

    half_width = normal_quantile(ci_level) * math.sqrt(var_simplified)
    return VarianceReport(
        estimate=estimate,
        var_sandwich=var_sandwich,
        var_simplified=var_simplified,
        var_delta_pop=var_delta_pop,
        var_delta_sample=var_delta_sample,
        max_rel_discrepancy=discrepancy,
        ci_low=estimate.tau_hat - half_width,
        ci_high=estimate.tau_hat + half_width,
        ci_level=ci_level,
        var_treatment_mean=var_treatment_mean,
        var_control_mean=var_control_mean,
        var_alpha_hat=clamp_variance(sandwich.a11),
        cov_alpha_tau=sandwich.a12,
        n_units=exp.n_units,
        n_treat=exp.n_treat,
        n_control=exp.n_control,
        n_clusters_treat=exp.clusters_in_arm(1),
        n_clusters_control=exp.clusters_in_arm(0),
        moment_mode=mode,
        warnings=tuple(warnings),
    )
