"""Tests for AssignmentScheme value object."""

import pytest

from clustervar.domain.exceptions import ValidationError
from clustervar.domain.value_objects import AssignmentScheme


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("alternating", AssignmentScheme.ALTERNATING),
        ("bernoulli", AssignmentScheme.BERNOULLI_HALF),
        ("bernoulli_half", AssignmentScheme.BERNOULLI_HALF),
        ("Alternating", AssignmentScheme.ALTERNATING),
    ],
)
def test_assignment_scheme_from_string(name: str, expected: AssignmentScheme) -> None:
    """Should parse scheme names and the bernoulli alias."""
    assert AssignmentScheme.from_string(name) is expected


def test_assignment_scheme_has_two_members() -> None:
    """Should expose exactly the two schemes."""
    assert len(AssignmentScheme) == 2


def test_assignment_scheme_rejects_unknown_name() -> None:
    """Should raise ValidationError for an unknown scheme."""
    with pytest.raises(ValidationError, match="Invalid assignment scheme"):
        AssignmentScheme.from_string("stratified")
