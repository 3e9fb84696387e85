from typing import Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, Field

from lookuplingam.models.graph import CausalGraph
from lookuplingam.models.timeseries import CausalOrder

CONVENTION = (
    "entry (i, j) of every matrix is the effect of variable j on variable i; "
    "matrices are row-major lists of rows"
)


class DiscoveryConfig(BaseModel):
    """Echo of every parameter that can change a discovery result.

    Thread count is absent: it only changes speed.
    """

    input: str = "<memory>"
    engine: Literal["baseline", "heuristic"] = "heuristic"
    lags: int = Field(1, ge=0)
    select_lags: Optional[int] = Field(None, ge=1)
    prune_eps: float = Field(0.05, ge=0)
    seed: Optional[int] = None
    delimiter: str = ","
    header: bool = True


class GraphOut(BaseModel):
    b0: List[List[float]]
    lagged: List[List[List[float]]] = []

    @classmethod
    def from_graph(cls, graph: CausalGraph):
        return cls(
            b0=graph.b0.tolist(),
            lagged=[b.tolist() for b in graph.lagged],
        )

    def to_graph(self) -> CausalGraph:
        m = len(self.b0)
        return CausalGraph(
            b0=np.array(self.b0, dtype=np.float64).reshape(m, m),
            lagged=[np.array(b, dtype=np.float64).reshape(m, m) for b in self.lagged],
        )


class DiscoveryResult(BaseModel):
    convention: str = CONVENTION
    config: DiscoveryConfig
    names: List[str]
    lag_order: int
    order: CausalOrder
    graph: GraphOut
    timings: Dict[str, float] = {}

    @classmethod
    def from_graph(cls, config, names, order, graph, timings, lag_order=None):
        return cls(
            config=config,
            names=list(names),
            lag_order=graph.lag_order if lag_order is None else lag_order,
            order=order,
            graph=GraphOut.from_graph(graph),
            timings=timings,
        )

    def causal_graph(self) -> CausalGraph:
        return self.graph.to_graph()

    def timings_consistent(self, slack: float = 1.05) -> bool:
        phases = sum(v for k, v in self.timings.items() if k != "total")
        return phases <= self.timings.get("total", 0.0) * slack
