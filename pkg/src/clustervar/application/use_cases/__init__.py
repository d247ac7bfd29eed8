"""Use cases for the application layer."""

from clustervar.application.use_cases.analyze_experiment import AnalyzeExperiment
from clustervar.application.use_cases.check_equivalence import CheckEquivalence
from clustervar.application.use_cases.run_coverage_study import RunCoverageStudy
from clustervar.application.use_cases.simulate_experiment import SimulateExperiment

__all__ = [
    "AnalyzeExperiment",
    "CheckEquivalence",
    "RunCoverageStudy",
    "SimulateExperiment",
]
