"""Result and ground-truth files.

All are UTF-8 JSON written through pydantic. A result file holds everything
except the timings, which go to a ``<stem>.timings.json`` sidecar next to it,
so two identical runs write byte-identical result files.
"""
import json
import logging
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from lookuplingam.errors import ShapeMismatch
from lookuplingam.models.graph import CausalGraph
from lookuplingam.schemas.result import DiscoveryResult
from lookuplingam.schemas.truth import GroundTruthFile
from lookuplingam.storage.csv_loader import load_csv

logger = logging.getLogger(__name__)


def timings_path(path: Union[str, Path]) -> Path:
    return Path(path).with_suffix(".timings.json")


def dump_result(result: DiscoveryResult, include_timings: bool = True) -> str:
    exclude = None if include_timings else {"timings"}
    return result.model_dump_json(indent=2, exclude=exclude) + "\n"


def write_result(result: DiscoveryResult, path: Union[str, Path]) -> Path:
    """Write the result file and its timings sidecar; returns the sidecar path."""
    Path(path).write_text(dump_result(result, include_timings=False), encoding="utf-8")
    sidecar = timings_path(path)
    sidecar.write_text(json.dumps(result.timings, indent=2) + "\n", encoding="utf-8")
    return sidecar


def load_result(path: Union[str, Path]) -> DiscoveryResult:
    result = DiscoveryResult.model_validate_json(Path(path).read_text(encoding="utf-8"))
    sidecar = timings_path(path)
    if sidecar.exists():
        timings = json.loads(sidecar.read_text(encoding="utf-8"))
        result = result.model_copy(update={"timings": timings})
    else:
        logger.info("no timings file next to %s", path)
    return result


def write_truth(truth: GroundTruthFile, path: Union[str, Path]) -> None:
    Path(path).write_text(truth.model_dump_json(indent=2) + "\n", encoding="utf-8")


def load_truth(path: Union[str, Path]) -> GroundTruthFile:
    return GroundTruthFile.model_validate_json(Path(path).read_text(encoding="utf-8"))


# -----------------------------
# Ground truth that ships with external datasets
# -----------------------------
def load_adjacency_csv(
    path: Union[str, Path], delimiter: str = ",", header: bool = True
) -> Tuple[List[str], CausalGraph]:
    """Read B0 (and optionally B1..Bp) from a CSV of stacked m x m blocks.

    Columns are variables; the first m data rows are B0 and every further
    block of m rows is the next lag. Entry (i, j) is the effect of j on i;
    only which entries are nonzero matters for scoring.
    """
    data = load_csv(path, delimiter=delimiter, header=header)
    m = data.n_variables
    if data.n_samples % m:
        raise ShapeMismatch(
            f"{path} has {data.n_samples} rows, not a multiple of its {m} columns"
        )
    blocks = [np.array(data.values[k : k + m]) for k in range(0, data.n_samples, m)]
    logger.info("loaded %d adjacency block(s) over %d variables from %s", len(blocks), m, path)
    return list(data.names), CausalGraph(b0=blocks[0], lagged=blocks[1:])
