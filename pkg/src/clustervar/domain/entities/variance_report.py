"""Variance report entity."""

from dataclasses import dataclass, field

from clustervar.domain.entities.ate_estimate import AteEstimate
from clustervar.domain.value_objects import MomentMode


@dataclass(frozen=True, slots=True, kw_only=True)
class VarianceReport:
    """Point estimates, the three variance routes, and a confidence interval.

    Attributes:
        estimate: alpha_hat and tau_hat.
        var_sandwich: (2,2) entry of the cluster-robust sandwich.
        var_simplified: Residual cluster-sum form.
        var_delta_pop: Delta method with population moments.
        var_delta_sample: Delta method with sample moments, None when an arm
            has fewer than two clusters.
        max_rel_discrepancy: Largest pairwise relative difference among
            var_sandwich, var_simplified and var_delta_pop.
        ci_low: Lower confidence bound for tau_hat.
        ci_high: Upper confidence bound for tau_hat.
        ci_level: Confidence level of the interval.
        var_treatment_mean: Variance of the treatment mean.
        var_control_mean: Variance of the control mean.
        var_alpha_hat: (1,1) entry of the sandwich.
        cov_alpha_tau: (1,2) entry of the sandwich.
        n_units: N.
        n_treat: N_T.
        n_control: N_C.
        n_clusters_treat: Treated clusters.
        n_clusters_control: Control clusters.
        moment_mode: Mode requested by the caller.
        warnings: Non-fatal notes, such as an omitted sample-mode estimate.
    """

    estimate: AteEstimate
    var_sandwich: float
    var_simplified: float
    var_delta_pop: float
    var_delta_sample: float | None
    max_rel_discrepancy: float
    ci_low: float
    ci_high: float
    ci_level: float
    var_treatment_mean: float
    var_control_mean: float
    var_alpha_hat: float
    cov_alpha_tau: float
    n_units: int
    n_treat: int
    n_control: int
    n_clusters_treat: int
    n_clusters_control: int
    moment_mode: MomentMode = MomentMode.POPULATION
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def standard_error(self) -> float:
        """Square root of the simplified variance."""
        return self.var_simplified**0.5

    def covers(self, value: float) -> bool:
        """Whether the closed interval [ci_low, ci_high] contains ``value``."""
        return self.ci_low <= value <= self.ci_high
