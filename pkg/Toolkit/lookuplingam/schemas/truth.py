from typing import List

import numpy as np
from pydantic import BaseModel

from lookuplingam.models.ground_truth import GroundTruth, NoiseFamily
from lookuplingam.models.timeseries import CausalOrder
from lookuplingam.schemas.result import CONVENTION


class GroundTruthFile(BaseModel):
    convention: str = CONVENTION
    names: List[str]
    noise_family: NoiseFamily
    order_true: List[int]
    b0_true: List[List[float]]
    lagged_true: List[List[List[float]]]

    @classmethod
    def from_truth(cls, truth: GroundTruth, names):
        return cls(
            names=list(names),
            noise_family=truth.noise_family,
            order_true=truth.order_true.order,
            b0_true=truth.b0_true.tolist(),
            lagged_true=[b.tolist() for b in truth.lagged_true],
        )

    def to_truth(self) -> GroundTruth:
        m = len(self.b0_true)
        return GroundTruth(
            b0_true=np.array(self.b0_true, dtype=np.float64).reshape(m, m),
            lagged_true=[np.array(b, dtype=np.float64).reshape(m, m) for b in self.lagged_true],
            order_true=CausalOrder(order=self.order_true),
            noise_family=self.noise_family,
        )
