"""Clustered Bernoulli data-generating process."""

import logging

from clustervar.application.interfaces import IRandomSource
from clustervar.domain.entities import UnitRecord
from clustervar.domain.value_objects import AssignmentScheme, SimConfig

logger = logging.getLogger(__name__)


def generate(config: SimConfig, random_source: IRandomSource) -> list[UnitRecord]:
    """Draw one synthetic cluster-randomized experiment.

    Draw order is fixed: all cluster sizes, then all cluster rates, then
    (for BERNOULLI_HALF) all cluster coin flips, then unit outcomes in
    cluster order. Clusters are labelled "1".."G"; a size-0 cluster emits no
    rows and so does not exist in the output.

    Args:
        config: Simulation parameters.
        random_source: Seeded random source (seeded with ``config.seed`` by
            the caller).

    Returns:
        Unit records grouped by cluster, clusters in index order.
    """
    g = config.n_clusters
    sizes = random_source.poisson(config.mean_cluster_size, g)
    rates = random_source.uniform(config.rate_low, config.rate_high, g)

    if config.assignment is AssignmentScheme.ALTERNATING:
        arms = [index % 2 for index in range(g)]
    else:
        arms = random_source.bernoulli([0.5] * g)

    unit_rates = [
        rate for rate, size in zip(rates, sizes, strict=True) for _ in range(size)
    ]
    outcomes = random_source.bernoulli(unit_rates)

    records: list[UnitRecord] = []
    position = 0
    for index, size in enumerate(sizes):
        cluster_id = str(index + 1)
        w = arms[index]
        records.extend(
            UnitRecord(cluster_id=cluster_id, w=w, y=float(y))
            for y in outcomes[position : position + size]
        )
        position += size

    logger.debug(
        "Generated %d units in %d non-empty clusters (seed=%d)",
        len(records),
        sum(1 for size in sizes if size > 0),
        config.seed,
    )
    return records
