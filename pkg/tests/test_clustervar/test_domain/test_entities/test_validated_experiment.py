"""Tests for ValidatedExperiment entity."""

import pytest

from tests.test_clustervar.builders import reference_experiment


def test_validated_experiment_counts() -> None:
    """Should expose unit and cluster counts per arm."""
    exp = reference_experiment()
    assert exp.n_units == 6
    assert exp.n_treat == 3
    assert exp.n_control == 3
    assert exp.n_clusters == 4
    assert exp.clusters_in_arm(1) == 2
    assert exp.clusters_in_arm(0) == 2


def test_validated_experiment_cluster_index_in_first_appearance_order() -> None:
    """Should map cluster ids to unit positions in first-appearance order."""
    exp = reference_experiment()
    assert list(exp.cluster_index) == ["g1", "g2", "g3", "g4"]
    assert exp.cluster_index["g1"] == (0, 1)
    assert exp.cluster_index["g4"] == (5,)
    assert exp.cluster_arms["g3"] == 0


def test_validated_experiment_indexes_are_read_only() -> None:
    """Should not allow the cluster index to be mutated."""
    exp = reference_experiment()
    with pytest.raises(TypeError):
        exp.cluster_index["new"] = (0,)  # type: ignore[index]
