"""Coverage result data transfer object."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True, kw_only=True)
class CoverageResultDTO:
    """Data transfer object for CoverageResult.

    Attributes:
        replications: Replications that produced an analyzable dataset.
        covered: Replications whose interval contained the true effect 0.
        coverage_rate: covered / replications.
        mean_tau_hat: Average point estimate.
        mean_variance: Average estimated variance.
        empirical_variance_of_tau_hat: Sample variance of the point estimates.
        skipped: Replications dropped because an arm was empty.
    """

    replications: int
    covered: int
    coverage_rate: float
    mean_tau_hat: float
    mean_variance: float
    empirical_variance_of_tau_hat: float
    skipped: int
