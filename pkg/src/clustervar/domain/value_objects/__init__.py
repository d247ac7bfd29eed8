"""Value objects for the domain layer."""

from clustervar.domain.value_objects.assignment_scheme import AssignmentScheme
from clustervar.domain.value_objects.matrix2 import Matrix2
from clustervar.domain.value_objects.moment_mode import MomentMode
from clustervar.domain.value_objects.sim_config import SimConfig

__all__ = [
    "AssignmentScheme",
    "Matrix2",
    "MomentMode",
    "SimConfig",
]
