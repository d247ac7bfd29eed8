"""Equivalence sweep summary data transfer object."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True, kw_only=True)
class SweepSummaryDTO:
    """Result of an equivalence sweep over consecutive seeds.

    Attributes:
        n_seeds: Seeds attempted.
        analyzed: Seeds whose dataset had both arms.
        skipped: Seeds whose dataset had an empty arm.
        max_rel_discrepancy: Worst discrepancy observed (0.0 if none analyzed).
        worst_seed: Seed that produced the worst discrepancy, or None.
        tolerance: Tolerance the sweep was judged against.
        within_tolerance: Whether max_rel_discrepancy <= tolerance.
    """

    n_seeds: int
    analyzed: int
    skipped: int
    max_rel_discrepancy: float
    worst_seed: int | None
    tolerance: float
    within_tolerance: bool
