from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from lookuplingam.models.ground_truth import NoiseFamily

# Fixed column order of the benchmark CSV.
BENCHMARK_COLUMNS = [
    "engine",
    "m",
    "n",
    "p",
    "seed",
    "repeat",
    "phase_load",
    "phase_var",
    "phase_precompute",
    "phase_search",
    "phase_b0",
    "total",
    "f1",
    "shd",
    "status",
    "error",
]

# DiscoveryResult timing key for each phase column.
PHASE_COLUMNS = {
    "phase_load": "load",
    "phase_var": "var_fit",
    "phase_precompute": "precompute",
    "phase_search": "ordering_search",
    "phase_b0": "b0_estimation",
    "total": "total",
}


class BenchmarkGrid(BaseModel):
    m_values: List[int] = Field(min_length=1)
    n_values: List[int] = Field(min_length=1)
    seeds: List[int] = Field(min_length=1)
    p: int = Field(1, ge=0)
    density: Optional[float] = Field(None, gt=0, le=1)
    noise_family: NoiseFamily = NoiseFamily.uniform
    prune_eps: float = Field(0.05, ge=0)
    repeats: int = Field(3, ge=1)
    threads: int = Field(1, ge=1)
    engines: List[Literal["baseline", "heuristic"]] = ["baseline", "heuristic"]
