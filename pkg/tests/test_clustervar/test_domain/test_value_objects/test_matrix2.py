"""Tests for Matrix2 value object."""

import pytest

from clustervar.domain.exceptions import SingularMatrixError
from clustervar.domain.value_objects import Matrix2

# --- Construction ---


def test_matrix2_outer_product() -> None:
    """Should build u u' for a column vector."""
    m = Matrix2.outer(2.0, -3.0)
    assert m.rows() == ((4.0, -6.0), (-6.0, 9.0))
    assert m.a12 == m.a21


def test_matrix2_is_immutable() -> None:
    """Should reject attribute assignment."""
    m = Matrix2.outer(1.0, 1.0)
    with pytest.raises(AttributeError):
        m.a11 = 2.0  # type: ignore[misc]


# --- Algebra ---


def test_matrix2_determinant() -> None:
    """Should compute a11 * a22 - a12 * a21."""
    m = Matrix2(a11=6.0, a12=3.0, a21=3.0, a22=3.0)
    assert m.determinant() == 9.0


def test_matrix2_inverse_of_bread() -> None:
    """Should invert [[6, 3], [3, 3]] to [[1/3, -1/3], [-1/3, 2/3]]."""
    inverse = Matrix2(a11=6.0, a12=3.0, a21=3.0, a22=3.0).inverse()
    assert inverse.a11 == pytest.approx(1 / 3, rel=1e-15)
    assert inverse.a12 == pytest.approx(-1 / 3, rel=1e-15)
    assert inverse.a21 == pytest.approx(-1 / 3, rel=1e-15)
    assert inverse.a22 == pytest.approx(2 / 3, rel=1e-15)


def test_matrix2_inverse_times_matrix_is_identity() -> None:
    """Should satisfy m @ m^-1 = I for a non-singular matrix."""
    m = Matrix2(a11=4.0, a12=2.0, a21=1.0, a22=3.0)
    product = m @ m.inverse()
    assert product.a11 == pytest.approx(1.0, abs=1e-15)
    assert product.a12 == pytest.approx(0.0, abs=1e-15)
    assert product.a21 == pytest.approx(0.0, abs=1e-15)
    assert product.a22 == pytest.approx(1.0, abs=1e-15)


def test_matrix2_inverse_rejects_singular() -> None:
    """Should raise SingularMatrixError when the determinant is zero."""
    with pytest.raises(SingularMatrixError, match="singular"):
        Matrix2(a11=2.0, a12=2.0, a21=2.0, a22=2.0).inverse()


def test_matrix2_matmul() -> None:
    """Should multiply rows by columns."""
    a = Matrix2(a11=1.0, a12=2.0, a21=3.0, a22=4.0)
    b = Matrix2(a11=5.0, a12=6.0, a21=7.0, a22=8.0)
    assert (a @ b).rows() == ((19.0, 22.0), (43.0, 50.0))


def test_matrix2_matmul_rejects_other_types() -> None:
    """Should not multiply by non-matrix operands."""
    with pytest.raises(TypeError):
        Matrix2.outer(1.0, 0.0) @ 2.0  # type: ignore[operator]
