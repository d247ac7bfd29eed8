"""Variance report data transfer objects."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True, kw_only=True)
class AteEstimateDTO:
    """Point estimates.

    Attributes:
        alpha_hat: Control mean.
        tau_hat: Difference of arm means.
    """

    alpha_hat: float
    tau_hat: float


@dataclass(frozen=True, slots=True, kw_only=True)
class VarianceReportDTO:
    """Data transfer object for VarianceReport.

    Field names and order are the JSON serialization contract.
    ``var_delta_sample`` is None when an arm has fewer than two clusters.
    """

    estimate: AteEstimateDTO
    var_sandwich: float
    var_simplified: float
    var_delta_pop: float
    var_delta_sample: float | None
    max_rel_discrepancy: float
    ci_low: float
    ci_high: float
    ci_level: float
    standard_error: float
    var_treatment_mean: float
    var_control_mean: float
    var_alpha_hat: float
    cov_alpha_tau: float
    n_units: int
    n_treat: int
    n_control: int
    n_clusters_treat: int
    n_clusters_control: int
    moment_mode: str
