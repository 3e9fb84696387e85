from typing import Optional


class LingamError(Exception):
    """Base error. ``exit_code`` is what the CLI returns when it escapes."""

    exit_code = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail
        self.phase: Optional[str] = None

    def __str__(self) -> str:
        if self.phase:
            return f"[{self.phase}] {self.detail}"
        return self.detail


# -------------------------------
# Data errors (exit code 2)
# -------------------------------
class DataError(LingamError):
    exit_code = 2


class NonFinite(DataError):
    pass


class DegenerateShape(DataError):
    pass


class DuplicateNames(DataError):
    pass


class LengthMismatch(DataError):
    pass


class ShapeMismatch(DataError):
    pass


class InsufficientSamples(DataError):
    pass


class InvalidDensity(DataError):
    pass


class EmptyFile(DataError):
    pass


class RaggedRows(DataError):
    def __init__(self, row: int, expected: int, found: int):
        super().__init__(f"row {row} has {found} fields, expected {expected}")
        self.row = row


class ParseError(DataError):
    def __init__(self, row: int, col: int, token: str):
        super().__init__(f"cannot parse {token!r} as a number at row {row}, column {col}")
        self.row = row
        self.col = col


# -------------------------------
# Numerical failures (exit code 3)
# -------------------------------
class NumericalError(LingamError):
    exit_code = 3


class ZeroVariance(NumericalError):
    def __init__(self, column: Optional[int] = None, detail: Optional[str] = None):
        if detail is None:
            detail = (
                "constant column cannot be standardized"
                if column is None
                else f"column {column} has zero variance"
            )
        super().__init__(detail)
        self.column = column


class SingularDesign(NumericalError):
    pass


class NonStationary(NumericalError):
    pass
