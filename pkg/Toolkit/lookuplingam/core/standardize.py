import logging

import numpy as np

from lookuplingam.errors import DegenerateShape, DuplicateNames, NonFinite, ZeroVariance
from lookuplingam.models.timeseries import DataMatrix, StandardizedMatrix

logger = logging.getLogger(__name__)

# A column is constant when its spread is within this many ulps of its largest
# entry, i.e. nothing beyond the rounding of the mean.
CONSTANT_ULPS = 64


def is_constant(u: np.ndarray) -> bool:
    if u.size == 0 or np.ptp(u) == 0:
        return True
    return bool(np.std(u) <= CONSTANT_ULPS * np.spacing(np.max(np.abs(u))))


def validate(x: DataMatrix) -> DataMatrix:
    """Return ``x`` unchanged if it is a usable data matrix, else raise."""
    values = x.values
    if values.ndim != 2:
        raise DegenerateShape(f"expected a 2-D matrix, got {values.ndim} dimensions")
    n, m = values.shape
    if n < 2 or m < 1:
        raise DegenerateShape(f"need at least 2 samples and 1 variable, got {n}x{m}")
    if len(x.names) != m:
        raise DegenerateShape(f"{len(x.names)} names given for {m} columns")
    if len(set(x.names)) != m:
        dupes = sorted({name for name in x.names if x.names.count(name) > 1})
        raise DuplicateNames(f"duplicate variable names: {dupes}")
    if not np.isfinite(values).all():
        rows, cols = np.nonzero(~np.isfinite(values))
        raise NonFinite(f"non-finite value at row {rows[0]}, column {cols[0]}")
    return x


def standardize_values(values: np.ndarray) -> np.ndarray:
    """z-score every column with the population (divisor n) std."""
    out = np.empty(values.shape, dtype=np.float64, order="F")
    for i in range(values.shape[1]):
        col = values[:, i]
        if is_constant(col):
            raise ZeroVariance(i)
        out[:, i] = (col - np.mean(col)) / np.std(col)
    return out


def standardize(x: DataMatrix) -> StandardizedMatrix:
    return StandardizedMatrix(values=standardize_values(x.values), names=list(x.names))
