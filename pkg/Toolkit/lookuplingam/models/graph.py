from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict


class CausalGraph(BaseModel):
    """Instantaneous matrix b0 plus lagged matrices B_1..B_p.

    Entry (i, j) of every matrix is the effect of variable j on variable i.
    """

    b0: np.ndarray
    lagged: List[np.ndarray] = []

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def n_variables(self) -> int:
        return int(self.b0.shape[0])

    @property
    def lag_order(self) -> int:
        return len(self.lagged)

    def matrices(self) -> List[np.ndarray]:
        return [self.b0, *self.lagged]

    def edges(self, eps: float = 0.0) -> np.ndarray:
        """Boolean instantaneous adjacency: (i, j) true when |b0[i, j]| > eps, diagonal off."""
        adj = np.abs(self.b0) > eps
        np.fill_diagonal(adj, False)
        return adj
