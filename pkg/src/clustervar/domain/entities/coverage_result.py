"""Coverage result entity."""

from dataclasses import dataclass

from clustervar.domain.exceptions import ValidationError


@dataclass(frozen=True, slots=True, kw_only=True)
class CoverageResult:
    """Summary of a Monte Carlo confidence-interval coverage study.

    Attributes:
        replications: Replications that produced an analyzable dataset.
        covered: Replications whose interval contained the true effect.
        coverage_rate: covered / replications; NaN when no replication
            was analyzable.
        mean_tau_hat: Average point estimate.
        mean_variance: Average estimated variance (simplified form).
        empirical_variance_of_tau_hat: Sample variance of the point estimates;
            NaN with fewer than two analyzable replications.
        skipped: Replications dropped because an arm was empty.
    """

    replications: int
    covered: int
    coverage_rate: float
    mean_tau_hat: float
    mean_variance: float
    empirical_variance_of_tau_hat: float
    skipped: int = 0

    def __post_init__(self) -> None:
        """Validate counts and rate."""
        if not 0 <= self.covered <= self.replications:
            raise ValidationError("covered must lie between 0 and replications")
        if self.replications > 0 and not 0.0 <= self.coverage_rate <= 1.0:
            raise ValidationError("coverage_rate must lie in [0, 1]")
