"""Tests for the combined variance analysis."""

import math

import pytest

from clustervar.domain.exceptions import InsufficientClustersError, ValidationError
from clustervar.domain.services import (
    analyze,
    normal_quantile,
    relative_discrepancy,
    validate,
)
from clustervar.domain.value_objects import MomentMode
from tests.test_clustervar.builders import (
    random_records,
    records_from_clusters,
    reference_experiment,
)

Z_95 = 1.959963984540054

# --- Reference experiment ---


def test_analyze_reference_variances_agree() -> None:
    """Should give 10/81 by all three routes and 20/81 with sample moments."""
    report = analyze(reference_experiment())
    assert report.estimate.tau_hat == pytest.approx(1 / 3, rel=1e-15)
    assert report.estimate.alpha_hat == pytest.approx(1 / 3, rel=1e-15)
    assert report.var_sandwich == pytest.approx(10 / 81, rel=1e-14)
    assert report.var_simplified == pytest.approx(10 / 81, rel=1e-14)
    assert report.var_delta_pop == pytest.approx(10 / 81, rel=1e-14)
    assert report.var_delta_sample == pytest.approx(20 / 81, rel=1e-14)
    assert report.max_rel_discrepancy <= 1e-14
    assert report.warnings == ()


def test_analyze_reference_components() -> None:
    """Should split the variance by arm and expose the intercept terms."""
    report = analyze(reference_experiment())
    assert report.var_treatment_mean == pytest.approx(2 / 81, rel=1e-14)
    assert report.var_control_mean == pytest.approx(8 / 81, rel=1e-14)
    assert report.var_alpha_hat == pytest.approx(8 / 81, rel=1e-14)
    assert report.cov_alpha_tau == pytest.approx(-8 / 81, rel=1e-14)
    assert (report.n_units, report.n_treat, report.n_control) == (6, 3, 3)
    assert (report.n_clusters_treat, report.n_clusters_control) == (2, 2)


def test_analyze_reference_confidence_interval() -> None:
    """Should center a normal interval of half-width z * sqrt(var) on tau_hat."""
    report = analyze(reference_experiment())
    half_width = Z_95 * math.sqrt(10 / 81)
    assert report.ci_low == pytest.approx(1 / 3 - half_width, rel=1e-12)
    assert report.ci_high == pytest.approx(1 / 3 + half_width, rel=1e-12)
    assert report.ci_level == 0.95


def test_analyze_reports_requested_mode() -> None:
    """Should record the requested moment mode."""
    report = analyze(reference_experiment(), mode=MomentMode.SAMPLE)
    assert report.moment_mode is MomentMode.SAMPLE
    assert report.var_delta_sample == pytest.approx(20 / 81, rel=1e-14)


# --- Edge cases ---


def test_analyze_one_cluster_per_arm() -> None:
    """Should give zero variances and omit the sample-mode estimate."""
    exp = validate(
        records_from_clusters([("t", 1, [0.2, 0.9, 0.4]), ("c", 0, [0.1, 0.7])])
    )
    report = analyze(exp)
    assert report.var_sandwich == 0.0
    assert report.var_simplified == 0.0
    assert report.var_delta_pop == 0.0
    assert report.var_delta_sample is None
    assert report.max_rel_discrepancy == 0.0
    assert report.ci_low == report.ci_high == report.estimate.tau_hat
    assert any("var_delta_sample omitted" in w for w in report.warnings)


def test_analyze_sample_mode_requires_two_clusters_per_arm() -> None:
    """Should raise InsufficientClustersError when SAMPLE mode is requested."""
    exp = validate(records_from_clusters([("t", 1, [1.0]), ("c", 0, [0.0])]))
    with pytest.raises(InsufficientClustersError):
        analyze(exp, mode=MomentMode.SAMPLE)


def test_analyze_constant_outcomes_gives_exact_zeros() -> None:
    """Should give exact zero variances when every outcome is equal."""
    exp = validate(
        records_from_clusters(
            [
                ("a", 1, [0.3, 0.3]),
                ("b", 1, [0.3]),
                ("c", 0, [0.3, 0.3, 0.3]),
                ("d", 0, [0.3]),
            ]
        )
    )
    report = analyze(exp)
    assert report.var_sandwich == 0.0
    assert report.var_simplified == 0.0
    assert report.var_delta_pop == 0.0
    assert report.var_delta_sample == 0.0
    assert report.max_rel_discrepancy == 0.0


def test_analyze_singleton_clusters() -> None:
    """Should agree with the unit-level variance when every cluster has one unit."""
    clusters = [(f"u{i}", i % 2, [float(i % 3)]) for i in range(12)]
    report = analyze(validate(records_from_clusters(clusters)))
    assert report.max_rel_discrepancy <= 1e-12
    assert report.var_simplified > 0.0


def test_analyze_sample_to_population_ratio() -> None:
    """Should scale by n / (n - 1) when both arms have n clusters."""
    exp = validate(random_records(7, 50, 50, 8))
    report = analyze(exp)
    assert report.var_delta_sample is not None
    ratio = report.var_delta_sample / report.var_delta_pop
    assert ratio == pytest.approx(50 / 49, rel=1e-12)


@pytest.mark.parametrize("ci_level", [0.0, 1.0, -0.5, 1.5, float("nan")])
def test_analyze_rejects_invalid_ci_level(ci_level: float) -> None:
    """Should raise ValidationError for a level outside (0, 1)."""
    with pytest.raises(ValidationError, match="ci_level"):
        analyze(reference_experiment(), ci_level=ci_level)


@pytest.mark.parametrize("tol", [-1e-12, float("nan")])
def test_analyze_rejects_invalid_tolerance(tol: float) -> None:
    """Should raise ValidationError for a negative or NaN tolerance."""
    with pytest.raises(ValidationError, match="tol"):
        analyze(reference_experiment(), tol=tol)


# --- Helpers ---


def test_relative_discrepancy() -> None:
    """Should return the largest pairwise relative difference."""
    assert relative_discrepancy([1.0, 1.0, 1.0]) == 0.0
    assert relative_discrepancy([1.0, 2.0, 1.5]) == 0.5
    assert relative_discrepancy([0.0, 0.0, 0.0]) == 0.0
    assert relative_discrepancy([0.0, 1e-310]) == pytest.approx(1e-10)


def test_relative_discrepancy_single_value() -> None:
    """Should return 0.0 when there is nothing to compare."""
    assert relative_discrepancy([3.0]) == 0.0


@pytest.mark.parametrize(
    ("level", "expected"),
    [(0.95, Z_95), (0.9, 1.6448536269514722), (0.99, 2.5758293035489004)],
)
def test_normal_quantile(level: float, expected: float) -> None:
    """Should return the two-sided standard normal critical value."""
    assert normal_quantile(level) == pytest.approx(expected, rel=1e-12)
