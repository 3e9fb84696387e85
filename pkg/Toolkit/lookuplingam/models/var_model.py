from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class VarModel(BaseModel):
    """Fitted VAR(p): x_t = intercept + sum_tau M_tau x_{t-tau} + residual_t."""

    lag_order: int = Field(ge=0)
    coefficients: List[np.ndarray]
    intercept: np.ndarray
    residuals: np.ndarray
    fitted: np.ndarray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def n_variables(self) -> int:
        return int(self.intercept.shape[0])
