"""Check equivalence use case."""

import logging
from dataclasses import dataclass

from clustervar.application.dtos import SweepSummaryDTO
from clustervar.application.interfaces import IRandomSourceFactory
from clustervar.application.services import generate, run_replications
from clustervar.domain.exceptions import EmptyArmError, ValidationError
from clustervar.domain.services import DEFAULT_TOLERANCE, analyze, validate
from clustervar.domain.value_objects import MomentMode, SimConfig

logger = logging.getLogger(__name__)


class CheckEquivalence:
    """Use case for an equivalence sweep over consecutive seeds.

    For seeds base.seed .. base.seed + n_seeds - 1, generates a dataset,
    analyzes it in population mode, and records the largest relative
    discrepancy between the sandwich, simplified, and delta-method
    variances. Seeds are used as-is so any offending seed can be reproduced
    with a single simulation.
    """

    @dataclass(frozen=True, slots=True, kw_only=True)
    class Input:
        """Input data for CheckEquivalence use case.

        Attributes:
            config: Base simulation parameters; ``config.seed`` is the first seed.
            n_seeds: Number of consecutive seeds.
            tol: Relative tolerance.
            workers: Worker threads.
        """

        config: SimConfig
        n_seeds: int = 1000
        tol: float = DEFAULT_TOLERANCE
        workers: int = 1

    @dataclass(frozen=True, slots=True, kw_only=True)
    class Output:
        """Output data for CheckEquivalence use case.

        Attributes:
            summary: Sweep summary.
            metadata: Random generator description.
        """

        summary: SweepSummaryDTO
        metadata: dict[str, str]

    def __init__(self, random_source_factory: IRandomSourceFactory) -> None:
        """Initialize the use case.

        Args:
            random_source_factory: Creates one seeded random source per seed.
        """
        self._random_source_factory = random_source_factory

    def execute(self, input_data: Input) -> Output:
        """Execute the use case.

        Raises:
            ValidationError: If n_seeds, tol, or workers is out of range, or
                the seed range overflows 64 bits.
        """
        config = input_data.config
        if input_data.n_seeds < 1:
            raise ValidationError("n_seeds must be at least 1")
        if not input_data.tol >= 0.0:
            raise ValidationError("tol must be non-negative")
        if input_data.workers < 1:
            raise ValidationError("workers must be at least 1")
        if config.seed + input_data.n_seeds - 1 > SimConfig.MAX_SEED:
            raise ValidationError("Seed range exceeds the unsigned 64-bit range")

        discrepancies = run_replications(
            lambda index: self._discrepancy(config.with_seed(config.seed + index)),
            input_data.n_seeds,
            input_data.workers,
        )

        analyzed = [
            (config.seed + index, value)
            for index, value in enumerate(discrepancies)
            if value is not None
        ]
        worst_seed, worst = max(analyzed, key=lambda pair: pair[1], default=(None, 0.0))
        summary = SweepSummaryDTO(
            n_seeds=input_data.n_seeds,
            analyzed=len(analyzed),
            skipped=input_data.n_seeds - len(analyzed),
            max_rel_discrepancy=worst,
            worst_seed=worst_seed,
            tolerance=input_data.tol,
            within_tolerance=worst <= input_data.tol,
        )
        logger.info(
            "Equivalence sweep: %d analyzed, %d skipped, max %.3e (seed %s)",
            summary.analyzed,
            summary.skipped,
            summary.max_rel_discrepancy,
            summary.worst_seed,
        )

        metadata = self._random_source_factory.create(config.seed).metadata(
            config.mean_cluster_size
        )
        return CheckEquivalence.Output(summary=summary, metadata=metadata)

    def _discrepancy(self, config: SimConfig) -> float | None:
        """Analyze one seeded dataset; None when an arm is empty."""
        records = generate(config, self._random_source_factory.create(config.seed))
        try:
            experiment = validate(records)
        except EmptyArmError:
            logger.debug("Seed %d skipped: empty arm", config.seed)
            return None
        report = analyze(experiment, mode=MomentMode.POPULATION)
        return report.max_rel_discrepancy
