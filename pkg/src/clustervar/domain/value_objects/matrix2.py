"""2x2 real matrix value object."""

from dataclasses import dataclass

from clustervar.domain.exceptions import SingularMatrixError


@dataclass(frozen=True, slots=True, kw_only=True)
class Matrix2:
    """A 2x2 real matrix used for the bread, meat, and sandwich algebra.

    Entries are named by (row, column), 1-based, to match the usual
    statistical notation for the covariance of (alpha_hat, tau_hat).

    Attributes:
        a11: Row 1, column 1.
        a12: Row 1, column 2.
        a21: Row 2, column 1.
        a22: Row 2, column 2.

    Example:
        >>> m = Matrix2(a11=6.0, a12=3.0, a21=3.0, a22=3.0)
        >>> m.inverse().a22  # 2/3
    """

    a11: float
    a12: float
    a21: float
    a22: float

    @classmethod
    def outer(cls, u1: float, u2: float) -> "Matrix2":
        """Return the outer product u u' of the column vector (u1, u2)."""
        return cls(a11=u1 * u1, a12=u1 * u2, a21=u2 * u1, a22=u2 * u2)

    def determinant(self) -> float:
        """Return a11 * a22 - a12 * a21."""
        return self.a11 * self.a22 - self.a12 * self.a21

    def inverse(self) -> "Matrix2":
        """Return the adjugate-over-determinant inverse.

        Returns:
            The inverse matrix.

        Raises:
            SingularMatrixError: If the determinant is zero.
        """
        det = self.determinant()
        if det == 0.0:
            raise SingularMatrixError(f"Cannot invert singular matrix {self.rows()}")

        return Matrix2(
            a11=self.a22 / det,
            a12=-self.a12 / det,
            a21=-self.a21 / det,
            a22=self.a11 / det,
        )

    def rows(self) -> tuple[tuple[float, float], tuple[float, float]]:
        """Return the entries as a tuple of rows."""
        return ((self.a11, self.a12), (self.a21, self.a22))

    def __matmul__(self, other: object) -> "Matrix2":
        """Matrix product self @ other."""
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(
            a11=self.a11 * other.a11 + self.a12 * other.a21,
            a12=self.a11 * other.a12 + self.a12 * other.a22,
            a21=self.a21 * other.a11 + self.a22 * other.a21,
            a22=self.a21 * other.a12 + self.a22 * other.a22,
        )
