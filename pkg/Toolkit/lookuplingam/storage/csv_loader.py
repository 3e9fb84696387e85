"""CSV ingestion for time-series tables.

Parsed with the stdlib csv reader rather than pandas so that ragged rows and
unparsable cells can be reported with their exact position.
"""
import csv
import logging
from pathlib import Path
from typing import List, Optional, Union

import numpy as np
import pandas as pd

from lookuplingam.core.standardize import validate
from lookuplingam.errors import EmptyFile, ParseError, RaggedRows
from lookuplingam.models.timeseries import DataMatrix

logger = logging.getLogger(__name__)


def load_csv(path: Union[str, Path], delimiter: str = ",", header: bool = True) -> DataMatrix:
    """Rows are time-ordered samples, columns are variables.

    Row and column indices in errors count data rows only, from 0.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh, delimiter=delimiter) if row]
    if not rows:
        raise EmptyFile(f"{path} is empty")

    names: Optional[List[str]] = None
    if header:
        names = [name.strip() for name in rows[0]]
        rows = rows[1:]
        if not rows:
            raise EmptyFile(f"{path} has a header but no data rows")

    width = len(names) if names is not None else len(rows[0])
    values = np.empty((len(rows), width))
    for r, row in enumerate(rows):
        if len(row) != width:
            raise RaggedRows(r, width, len(row))
        for c, token in enumerate(row):
            try:
                values[r, c] = float(token)
            except ValueError:
                raise ParseError(r, c, token) from None

    logger.info("loaded %dx%d matrix from %s", values.shape[0], values.shape[1], path)
    return validate(DataMatrix.from_array(values, names))


def write_csv(data: DataMatrix, path: Union[str, Path], delimiter: str = ",") -> None:
    frame = pd.DataFrame(np.asarray(data.values), columns=data.names)
    frame.to_csv(path, sep=delimiter, index=False)
