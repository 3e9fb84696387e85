from enum import Enum
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict

from lookuplingam.models.timeseries import CausalOrder


class NoiseFamily(str, Enum):
    uniform = "uniform"
    laplace = "laplace"
    mixed = "mixed"


class GroundTruth(BaseModel):
    b0_true: np.ndarray
    lagged_true: List[np.ndarray]
    order_true: CausalOrder
    noise_family: NoiseFamily

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)
