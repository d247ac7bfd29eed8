"""Simulate experiment use case."""

import logging
from dataclasses import dataclass

from clustervar.application.dtos import GenerationSummaryDTO
from clustervar.application.interfaces import IExperimentSink, IRandomSourceFactory
from clustervar.application.services import generate
from clustervar.domain.value_objects import SimConfig

logger = logging.getLogger(__name__)


class SimulateExperiment:
    """Use case for drawing one synthetic experiment and storing it."""

    @dataclass(frozen=True, slots=True, kw_only=True)
    class Input:
        """Input data for SimulateExperiment use case.

        Attributes:
            config: Simulation parameters, seed included.
            location: Where to write the unit records.
        """

        config: SimConfig
        location: str

    @dataclass(frozen=True, slots=True, kw_only=True)
    class Output:
        """Output data for SimulateExperiment use case.

        Attributes:
            summary: Realized dataset shape.
            metadata: Random generator description.
            warnings: Notes such as an empty arm in the realized data.
        """

        summary: GenerationSummaryDTO
        metadata: dict[str, str]
        warnings: tuple[str, ...]

    def __init__(
        self,
        random_source_factory: IRandomSourceFactory,
        experiment_sink: IExperimentSink,
    ) -> None:
        """Initialize the use case.

        Args:
            random_source_factory: Creates the seeded random source.
            experiment_sink: Destination for the generated records.
        """
        self._random_source_factory = random_source_factory
        self._experiment_sink = experiment_sink

    def execute(self, input_data: Input) -> Output:
        """Execute the use case.

        Raises:
            FileSystemError: If the output cannot be written.
        """
        config = input_data.config
        random_source = self._random_source_factory.create(config.seed)
        records = generate(config, random_source)
        self._experiment_sink.save(input_data.location, records)

        arms: dict[str, int] = {record.cluster_id: record.w for record in records}
        n_treat = sum(record.w for record in records)
        n_clusters_treat = sum(arms.values())
        summary = GenerationSummaryDTO(
            output=input_data.location,
            n_units=len(records),
            n_treat=n_treat,
            n_control=len(records) - n_treat,
            n_clusters=len(arms),
            n_clusters_treat=n_clusters_treat,
            n_clusters_control=len(arms) - n_clusters_treat,
        )

        warnings = []
        if summary.n_treat == 0 or summary.n_control == 0:
            warnings.append("Generated data has an empty arm and cannot be analyzed")
        logger.info(
            "Wrote %d units in %d clusters to %s",
            summary.n_units,
            summary.n_clusters,
            input_data.location,
        )

        return SimulateExperiment.Output(
            summary=summary,
            metadata=random_source.metadata(config.mean_cluster_size),
            warnings=tuple(warnings),
        )
