"""Adapters implementing application interfaces."""

from clustervar.interface_adapters.adapters.csv_experiment_repository import (
    CsvExperimentRepository,
)

__all__ = ["CsvExperimentRepository"]
