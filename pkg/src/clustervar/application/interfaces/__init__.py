"""Abstract interfaces for the application layer."""

from clustervar.application.interfaces.experiment_source import (
    IExperimentSink,
    IExperimentSource,
)
from clustervar.application.interfaces.random_source import (
    IRandomSource,
    IRandomSourceFactory,
)

__all__ = [
    "IExperimentSink",
    "IExperimentSource",
    "IRandomSource",
    "IRandomSourceFactory",
]
