"""Application services."""

from clustervar.application.services.experiment_generator import generate
from clustervar.application.services.replication_runner import run_replications

__all__ = ["generate", "run_replications"]
