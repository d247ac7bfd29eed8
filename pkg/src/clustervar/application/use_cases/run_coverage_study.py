"""Run coverage study use case."""

import logging
import math
from dataclasses import dataclass

from clustervar.application.dtos import CoverageResultDTO
from clustervar.application.interfaces import IRandomSourceFactory
from clustervar.application.services import generate, run_replications
from clustervar.domain.entities import CoverageResult
from clustervar.domain.exceptions import EmptyArmError, ValidationError
from clustervar.domain.services import DEFAULT_CI_LEVEL, analyze, validate
from clustervar.domain.value_objects import SimConfig

logger = logging.getLogger(__name__)

# Both arms draw rates from the same distribution.
TRUE_EFFECT = 0.0


class RunCoverageStudy:
    """Use case for measuring confidence-interval coverage by simulation.

    Replication ``i`` uses the seed derived from (base seed, i), so results
    are independent of execution order and worker count.
    """

    MIN_REPLICATIONS = 100

    @dataclass(frozen=True, slots=True, kw_only=True)
    class Input:
        """Input data for RunCoverageStudy use case.

        Attributes:
            config: Base simulation parameters; ``config.seed`` is the master seed.
            replications: Number of replications (at least 100).
            ci_level: Nominal confidence level.
            workers: Worker threads.
        """

        config: SimConfig
        replications: int = 2000
        ci_level: float = DEFAULT_CI_LEVEL
        workers: int = 1

    @dataclass(frozen=True, slots=True, kw_only=True)
    class Output:
        """Output data for RunCoverageStudy use case.

        Attributes:
            result: Coverage summary.
            metadata: Random generator description.
            warnings: Notes on a degenerate study.
        """

        result: CoverageResultDTO
        metadata: dict[str, str]
        warnings: tuple[str, ...] = ()

    def __init__(self, random_source_factory: IRandomSourceFactory) -> None:
        """Initialize the use case.

        Args:
            random_source_factory: Creates seeded random sources and derives
                per-replication seeds.
        """
        self._random_source_factory = random_source_factory

    def execute(self, input_data: Input) -> Output:
        """Execute the use case.

        Raises:
            ValidationError: If replications, ci_level, or workers is out of range.
        """
        if input_data.replications < self.MIN_REPLICATIONS:
            raise ValidationError(
                f"replications must be at least {self.MIN_REPLICATIONS}"
            )
        if not 0.0 < input_data.ci_level < 1.0:
            raise ValidationError("ci_level must lie in (0, 1)")
        if input_data.workers < 1:
            raise ValidationError("workers must be at least 1")

        config = input_data.config
        outcomes = run_replications(
            lambda index: self._replicate(config, index, input_data.ci_level),
            input_data.replications,
            input_data.workers,
        )
        analyzed = [outcome for outcome in outcomes if outcome is not None]
        skipped = len(outcomes) - len(analyzed)
        result = RunCoverageStudy._summarize(analyzed, skipped=skipped)
        warnings: tuple[str, ...] = ()
        if len(analyzed) < 2:
            warnings = (
                f"only {len(analyzed)} of {len(outcomes)} replications had both "
                "arms; undefined summaries are reported as null",
            )
            logger.warning(warnings[0])
        logger.info(
            "Coverage %.4f over %d replications (%d skipped)",
            result.coverage_rate,
            result.replications,
            result.skipped,
        )

        metadata = self._random_source_factory.create(config.seed).metadata(
            config.mean_cluster_size
        )
        return RunCoverageStudy.Output(
            result=RunCoverageStudy._to_dto(result),
            metadata=metadata,
            warnings=warnings,
        )

    def _replicate(
        self, config: SimConfig, index: int, ci_level: float
    ) -> tuple[float, float, bool] | None:
        """Run one replication: (tau_hat, variance, covered) or None if skipped."""
        seed = self._random_source_factory.derive_seed(config.seed, index)
        replica = config.with_seed(seed)
        records = generate(replica, self._random_source_factory.create(seed))
        try:
            experiment = validate(records)
        except EmptyArmError:
            logger.debug("Replication %d skipped: empty arm", index)
            return None
        report = analyze(experiment, ci_level=ci_level)
        return (
            report.estimate.tau_hat,
            report.var_simplified,
            report.covers(TRUE_EFFECT),
        )

    @staticmethod
    def _summarize(
        analyzed: list[tuple[float, float, bool]], skipped: int
    ) -> CoverageResult:
        """Aggregate replication outcomes with two-pass moments.

        Averages over no replications, and the sample variance of fewer than
        two, are NaN.
        """
        n = len(analyzed)
        taus = [tau for tau, _, _ in analyzed]
        covered = sum(1 for _, _, hit in analyzed if hit)
        mean_tau = mean_variance = coverage_rate = empirical = math.nan
        if n:
            mean_tau = math.fsum(taus) / n
            mean_variance = math.fsum(var for _, var, _ in analyzed) / n
            coverage_rate = covered / n
        if n >= 2:
            empirical = math.fsum((tau - mean_tau) ** 2 for tau in taus) / (n - 1)
        return CoverageResult(
            replications=n,
            covered=covered,
            coverage_rate=coverage_rate,
            mean_tau_hat=mean_tau,
            mean_variance=mean_variance,
            empirical_variance_of_tau_hat=empirical,
            skipped=skipped,
        )

    @staticmethod
    def _to_dto(result: CoverageResult) -> CoverageResultDTO:
        """Convert a CoverageResult entity to its DTO."""
        return CoverageResultDTO(
            replications=result.replications,
            covered=result.covered,
            coverage_rate=result.coverage_rate,
            mean_tau_hat=result.mean_tau_hat,
            mean_variance=result.mean_variance,
            empirical_variance_of_tau_hat=result.empirical_variance_of_tau_hat,
            skipped=result.skipped,
        )
