from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator


def _frozen_columns(values) -> np.ndarray:
    # Column-contiguous float64 copy that nobody can write through.
    arr = np.array(values, dtype=np.float64, order="F", copy=True)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1, order="F")
    arr.flags.writeable = False
    return arr


class DataMatrix(BaseModel):
    """n x m sample-by-variable matrix; rows are time-ordered samples."""

    values: np.ndarray
    names: List[str]

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @field_validator("values", mode="before")
    @classmethod
    def _coerce_values(cls, v):
        return _frozen_columns(v)

    @classmethod
    def from_array(cls, values, names: Optional[Sequence[str]] = None):
        arr = _frozen_columns(values)
        if names is None:
            names = [f"v{i}" for i in range(arr.shape[1])]
        return cls(values=arr, names=list(names))

    @property
    def n_samples(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_variables(self) -> int:
        return int(self.values.shape[1])


class StandardizedMatrix(DataMatrix):
    """Every column has zero mean and unit (population) variance."""


class CausalOrder(BaseModel):
    order: List[int]

    model_config = ConfigDict(frozen=True)

    @field_validator("order", mode="before")
    @classmethod
    def _check_permutation(cls, v):
        order = [int(i) for i in v]
        if sorted(order) != list(range(len(order))):
            raise ValueError(f"{order} is not a permutation of 0..{len(order) - 1}")
        return order

    @property
    def first(self) -> int:
        return self.order[0]

    def position(self, variable: int) -> int:
        return self.order.index(variable)

    def names(self, names: Sequence[str]) -> List[str]:
        return [names[i] for i in self.order]
