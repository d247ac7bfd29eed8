"""Analyze experiment use case."""

import logging
from dataclasses import dataclass

from clustervar.application.dtos import AteEstimateDTO, VarianceReportDTO
from clustervar.application.interfaces import IExperimentSource
from clustervar.domain.entities import VarianceReport
from clustervar.domain.services import (
    DEFAULT_CI_LEVEL,
    DEFAULT_TOLERANCE,
    analyze,
    validate,
)
from clustervar.domain.value_objects import MomentMode

logger = logging.getLogger(__name__)


class AnalyzeExperiment:
    """Use case for estimating the treatment effect of a stored experiment.

    Loads unit records, validates cluster randomization, runs the three
    variance routes, and reports whether they agree within tolerance.
    """

    @dataclass(frozen=True, slots=True, kw_only=True)
    class Input:
        """Input data for AnalyzeExperiment use case.

        Attributes:
            location: Where the unit records are stored.
            ci_level: Confidence level of the normal interval.
            tol: Relative tolerance for the equivalence check.
            mode: Moment mode; SAMPLE requires two clusters per arm.
        """

        location: str
        ci_level: float = DEFAULT_CI_LEVEL
        tol: float = DEFAULT_TOLERANCE
        mode: MomentMode = MomentMode.POPULATION

    @dataclass(frozen=True, slots=True, kw_only=True)
    class Output:
        """Output data for AnalyzeExperiment use case.

        Attributes:
            report: The variance report DTO.
            within_tolerance: Whether max_rel_discrepancy <= tol.
            warnings: Non-fatal notes from the analysis.
        """

        report: VarianceReportDTO
        within_tolerance: bool
        warnings: tuple[str, ...]

    def __init__(self, experiment_source: IExperimentSource) -> None:
        """Initialize the use case.

        Args:
            experiment_source: Source the unit records are loaded from.
        """
        self._experiment_source = experiment_source

    def execute(self, input_data: Input) -> Output:
        """Execute the use case.

        Args:
            input_data: Location and analysis settings.

        Returns:
            Output containing the report and the equivalence verdict.

        Raises:
            FileSystemError: If the records cannot be read.
            ValidationError: If parsing, validation, or settings fail.
            InsufficientClustersError: If SAMPLE mode lacks clusters.
        """
        records = self._experiment_source.load(input_data.location)
        experiment = validate(records)
        logger.info(
            "Loaded %d units in %d clusters from %s",
            experiment.n_units,
            experiment.n_clusters,
            input_data.location,
        )

        report = analyze(
            experiment,
            ci_level=input_data.ci_level,
            tol=input_data.tol,
            mode=input_data.mode,
        )
        within_tolerance = report.max_rel_discrepancy <= input_data.tol
        if not within_tolerance:
            logger.error(
                "Variance routes disagree: max_rel_discrepancy=%.3e > tol=%.3e",
                report.max_rel_discrepancy,
                input_data.tol,
            )

        return AnalyzeExperiment.Output(
            report=AnalyzeExperiment._to_dto(report),
            within_tolerance=within_tolerance,
            warnings=report.warnings,
        )

    @staticmethod
    def _to_dto(report: VarianceReport) -> VarianceReportDTO:
        """Convert a VarianceReport entity to its DTO.

        Args:
            report: The report entity to convert.

        Returns:
            VarianceReportDTO representation of the entity.
        """
        return VarianceReportDTO(
            estimate=AteEstimateDTO(
                alpha_hat=report.estimate.alpha_hat,
                tau_hat=report.estimate.tau_hat,
            ),
            var_sandwich=report.var_sandwich,
            var_simplified=report.var_simplified,
            var_delta_pop=report.var_delta_pop,
            var_delta_sample=report.var_delta_sample,
            max_rel_discrepancy=report.max_rel_discrepancy,
            ci_low=report.ci_low,
            ci_high=report.ci_high,
            ci_level=report.ci_level,
            standard_error=report.standard_error,
            var_treatment_mean=report.var_treatment_mean,
            var_control_mean=report.var_control_mean,
            var_alpha_hat=report.var_alpha_hat,
            cov_alpha_tau=report.cov_alpha_tau,
            n_units=report.n_units,
            n_treat=report.n_treat,
            n_control=report.n_control,
            n_clusters_treat=report.n_clusters_treat,
            n_clusters_control=report.n_clusters_control,
            moment_mode=report.moment_mode.value,
        )
