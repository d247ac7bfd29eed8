"""CSV input format errors."""

from clustervar.domain.exceptions.validation_error import ValidationError


class MalformedRowError(ValidationError):
    """Raised when a data row cannot be parsed into a unit record.

    Attributes:
        line_number: 1-based line number in the file (the header is line 1).
        reason: Short description of what was wrong with the row.
    """

    def __init__(self, line_number: int, reason: str) -> None:
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"Malformed row at line {line_number}: {reason}")


class MissingColumnError(ValidationError):
    """Raised when the header row lacks a required column.

    Attributes:
        column: Name of the missing column.
    """

    def __init__(self, column: str) -> None:
        self.column = column
        super().__init__(f"Missing required column: '{column}'")


class EmptyFileError(ValidationError):
    """Raised when the input has no header or no data rows."""
