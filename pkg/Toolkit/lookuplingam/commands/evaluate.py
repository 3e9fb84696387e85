import logging
from pathlib import Path
from typing import Dict, List, Tuple, Union

from lookuplingam.commands.common import nonnegative_float
from lookuplingam.errors import ShapeMismatch
from lookuplingam.evaluation.metrics import binarize, graph_metrics
from lookuplingam.models.graph import CausalGraph
from lookuplingam.storage.result_file import load_adjacency_csv, load_result, load_truth

logger = logging.getLogger(__name__)

TRUTH_FORMATS = ("json", "csv")


def load_truth_graph(path: Union[str, Path], truth_format: str = "json") -> Tuple[List[str], CausalGraph]:
    """Names and true matrices from a ``simulate`` truth file or an adjacency CSV."""
    if truth_format == "csv":
        return load_adjacency_csv(path)
    if truth_format != "json":
        raise ValueError(f"unknown truth format {truth_format!r}")
    truth = load_truth(path)
    model = truth.to_truth()
    return truth.names, CausalGraph(b0=model.b0_true, lagged=model.lagged_true)


# -----------------------------
# Score a result against the truth
# -----------------------------
def run_evaluate(
    result_path: Union[str, Path],
    truth_path: Union[str, Path],
    prune_eps: float = 0.0,
    truth_format: str = "json",
) -> List[Dict[str, float]]:
    """SHD, F1, precision and recall of a result file against the truth.

    One entry for B0, then one per lag present on both sides. Lagged matrices
    count self-loops since a variable's own past is a real effect.
    """
    result = load_result(result_path)
    names, truth = load_truth_graph(truth_path, truth_format)
    if result.names != names:
        raise ShapeMismatch(f"variable names differ: {result.names} vs {names}")

    graph = result.causal_graph()
    rows = [{"matrix": "B0", **graph_metrics(binarize(truth.b0, prune_eps), binarize(graph.b0, prune_eps))}]

    shared = min(graph.lag_order, truth.lag_order)
    if graph.lag_order != truth.lag_order:
        logger.warning(
            "lag orders differ (estimated %d, true %d); comparing the first %d",
            graph.lag_order, truth.lag_order, shared,
        )
    for tau in range(shared):
        t = binarize(truth.lagged[tau], prune_eps, include_diagonal=True)
        e = binarize(graph.lagged[tau], prune_eps, include_diagonal=True)
        rows.append({"matrix": f"B{tau + 1}", **graph_metrics(t, e, include_diagonal=True)})
    return rows


def _handle(args) -> int:
    for row in run_evaluate(args.result, args.truth, args.prune, args.truth_format):
        print(
            f"{row['matrix']}: SHD={row['shd']} F1={row['f1']:.4f} "
            f"precision={row['precision']:.4f} recall={row['recall']:.4f}"
        )
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("eval", help="Score a result file against a ground-truth file")
    parser.add_argument("--result", required=True)
    parser.add_argument("--truth", required=True)
    parser.add_argument("--truth-format", choices=TRUTH_FORMATS, default="json",
                        help="json from `simulate`, or csv of stacked m x m adjacency blocks with a name header")
    parser.add_argument("--prune", type=nonnegative_float, default=0.0, metavar="EPS",
                        help="Extra threshold applied to both sides before scoring")
    parser.set_defaults(func=_handle)
