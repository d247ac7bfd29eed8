"""Average treatment effect estimate entity."""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True, kw_only=True)
class AteEstimate:
    """Point estimates of the two-arm regression y = alpha + tau * w.

    Attributes:
        alpha_hat: Control mean.
        tau_hat: Difference of arm means (treatment minus control).
    """

    alpha_hat: float
    tau_hat: float
