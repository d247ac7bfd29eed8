"""Shared experiment builders for the test suite."""

import numpy as np
from hypothesis import strategies as st

from clustervar.domain.entities import UnitRecord, ValidatedExperiment
from clustervar.domain.services import validate

# (cluster_id, w, outcomes). tau_hat = 1/3, alpha_hat = 1/3, every variance
# route gives 10/81.
REFERENCE_CLUSTERS: list[tuple[str, int, list[float]]] = [
    ("g1", 1, [1.0, 0.0]),
    ("g2", 1, [1.0]),
    ("g3", 0, [0.0, 0.0]),
    ("g4", 0, [1.0]),
]


def records_from_clusters(
    clusters: list[tuple[str, int, list[float]]],
) -> list[UnitRecord]:
    """Expand (cluster_id, w, outcomes) triples into unit records."""
    return [
        UnitRecord(cluster_id=cluster_id, w=w, y=y)
        for cluster_id, w, outcomes in clusters
        for y in outcomes
    ]


def reference_records() -> list[UnitRecord]:
    """Unit records of the four-cluster reference experiment."""
    return records_from_clusters(REFERENCE_CLUSTERS)


def reference_experiment() -> ValidatedExperiment:
    """Validated four-cluster reference experiment."""
    return validate(reference_records())


def random_clusters(
    seed: int,
    n_treat_clusters: int,
    n_control_clusters: int,
    max_size: int,
    binary: bool = False,
) -> list[tuple[str, int, list[float]]]:
    """Draw a cluster-randomized dataset from a seeded numpy generator.

    Outcomes are a cluster effect plus unit noise (or Bernoulli draws at a
    per-cluster rate when ``binary``), so both arms have real within- and
    between-cluster variation.
    """
    rng = np.random.default_rng(seed)
    arms = [1] * n_treat_clusters + [0] * n_control_clusters
    rng.shuffle(arms)
    clusters = []
    for index, w in enumerate(arms):
        size = int(rng.integers(1, max_size + 1))
        if binary:
            rate = rng.uniform(0.2, 0.8)
            outcomes = (rng.random(size) < rate).astype(float).tolist()
        else:
            effect = rng.normal(0.0, 1.0)
            outcomes = (effect + rng.normal(0.0, 1.0, size)).tolist()
        clusters.append((f"c{index}", int(w), outcomes))
    return clusters


def random_records(
    seed: int,
    n_treat_clusters: int,
    n_control_clusters: int,
    max_size: int,
    binary: bool = False,
) -> list[UnitRecord]:
    """Unit records of ``random_clusters``."""
    return records_from_clusters(
        random_clusters(seed, n_treat_clusters, n_control_clusters, max_size, binary)
    )


def random_experiments(
    min_clusters: int = 2, max_clusters: int = 10, max_size: int = 6
) -> st.SearchStrategy[ValidatedExperiment]:
    """Hypothesis strategy of validated random experiments."""
    return st.builds(
        lambda *args: validate(random_records(*args)),
        st.integers(min_value=0, max_value=2**32 - 1),
        st.integers(min_value=min_clusters, max_value=max_clusters),
        st.integers(min_value=min_clusters, max_value=max_clusters),
        st.integers(min_value=2, max_value=max_size),
        st.booleans(),
    )
