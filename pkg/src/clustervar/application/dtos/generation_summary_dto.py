"""Generated dataset summary data transfer object."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True, kw_only=True)
class GenerationSummaryDTO:
    """Realized shape of a simulated dataset.

    Attributes:
        output: Where the CSV was written.
        n_units: N.
        n_treat: N_T.
        n_control: N_C.
        n_clusters: Non-empty clusters.
        n_clusters_treat: Non-empty treated clusters.
        n_clusters_control: Non-empty control clusters.
    """

    output: str
    n_units: int
    n_treat: int
    n_control: int
    n_clusters: int
    n_clusters_treat: int
    n_clusters_control: int
