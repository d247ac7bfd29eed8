"""Data transfer objects for the application layer."""

from clustervar.application.dtos.coverage_result_dto import CoverageResultDTO
from clustervar.application.dtos.generation_summary_dto import GenerationSummaryDTO
from clustervar.application.dtos.output_envelope import OutputEnvelope
from clustervar.application.dtos.sweep_summary_dto import SweepSummaryDTO
from clustervar.application.dtos.variance_report_dto import (
    AteEstimateDTO,
    VarianceReportDTO,
)

__all__ = [
    "AteEstimateDTO",
    "CoverageResultDTO",
    "GenerationSummaryDTO",
    "OutputEnvelope",
    "SweepSummaryDTO",
    "VarianceReportDTO",
]
