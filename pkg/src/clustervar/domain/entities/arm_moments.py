"""Arm moments entity."""

from dataclasses import dataclass

from clustervar.domain.value_objects import MomentMode


@dataclass(frozen=True, slots=True, kw_only=True)
class ArmMoments:
    """First and second moments of (r_g, n_g) over one arm's clusters.

    Attributes:
        n_clusters: Clusters in the arm.
        mu_r: Mean cluster outcome sum.
        mu_n: Mean cluster size (positive).
        var_r: Variance of r_g.
        var_n: Variance of n_g.
        cov_rn: Covariance of r_g and n_g.
        mode: Divisor convention used for the second moments.
    """

    n_clusters: int
    mu_r: float
    mu_n: float
    var_r: float
    var_n: float
    cov_rn: float
    mode: MomentMode
