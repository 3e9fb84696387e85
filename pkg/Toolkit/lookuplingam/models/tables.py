import numpy as np
from pydantic import BaseModel, ConfigDict


class EntropyTables(BaseModel):
    """Entropy lookup store: ex[i] = H(x_i), er[i, j] = H(r_{i<-j}).

    The diagonal of ``er`` is NaN so a self-pair read poisons any score.
    """

    ex: np.ndarray
    er: np.ndarray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def n_variables(self) -> int:
        return int(self.ex.shape[0])

    def pair_scores(self) -> np.ndarray:
        """T[i, j] = ex[i] - er[i, j]."""
        return self.ex[:, None] - self.er
