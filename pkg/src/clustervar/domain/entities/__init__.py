"""Domain entities."""

from clustervar.domain.entities.arm_moments import ArmMoments
from clustervar.domain.entities.ate_estimate import AteEstimate
from clustervar.domain.entities.cluster_aggregate import ClusterAggregate
from clustervar.domain.entities.coverage_result import CoverageResult
from clustervar.domain.entities.unit_record import UnitRecord
from clustervar.domain.entities.validated_experiment import ValidatedExperiment
from clustervar.domain.entities.variance_report import VarianceReport

__all__ = [
    "ArmMoments",
    "AteEstimate",
    "ClusterAggregate",
    "CoverageResult",
    "UnitRecord",
    "ValidatedExperiment",
    "VarianceReport",
]
