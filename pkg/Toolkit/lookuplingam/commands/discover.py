import logging
from pathlib import Path
from typing import Optional, Union

from lookuplingam.commands.common import nonnegative_float, nonnegative_int, positive_int
from lookuplingam.core.adjacency import build_graph, estimate_b0, prune_threshold
from lookuplingam.core.standardize import standardize, validate
from lookuplingam.core.var import fit_var, select_lag
from lookuplingam.models.timeseries import DataMatrix
from lookuplingam.ordering.baseline import causal_order_baseline
from lookuplingam.ordering.heuristic import precompute_tables, search_order
from lookuplingam.schemas.result import DiscoveryConfig, DiscoveryResult
from lookuplingam.storage.csv_loader import load_csv
from lookuplingam.storage.result_file import write_result
from lookuplingam.timing import PhaseTimer

logger = logging.getLogger(__name__)


# -----------------------------
# Pipeline: load -> VAR -> ordering -> B0 -> lagged -> prune
# -----------------------------
def run_discover(
    input: Union[str, Path, DataMatrix],
    engine: str = "heuristic",
    lags: int = 1,
    prune_eps: float = 0.05,
    select_lags: Optional[int] = None,
    threads: int = 1,
    seed: Optional[int] = None,
    delimiter: str = ",",
    header: bool = True,
) -> DiscoveryResult:
    config = DiscoveryConfig(
        input=str(input) if not isinstance(input, DataMatrix) else "<memory>",
        engine=engine,
        lags=lags,
        select_lags=select_lags,
        prune_eps=prune_eps,
        seed=seed,
        delimiter=delimiter,
        header=header,
    )
    timer = PhaseTimer()

    with timer.phase("load"):
        if isinstance(input, DataMatrix):
            data = validate(input)
        else:
            data = load_csv(input, delimiter=delimiter, header=header)

    with timer.phase("var_fit"):
        p = select_lag(data, select_lags) if select_lags else lags
        var = fit_var(data, p)
    residuals = DataMatrix.from_array(var.residuals, data.names)

    if config.engine == "heuristic":
        with timer.phase("standardize"):
            z = standardize(residuals)
        with timer.phase("precompute"):
            tables = precompute_tables(z, n_jobs=threads)
        with timer.phase("ordering_search"):
            order = search_order(tables)
    else:
        # Standardization happens inside every round of the exact search.
        with timer.phase("ordering_search"):
            order = causal_order_baseline(residuals, n_jobs=threads)

    with timer.phase("b0_estimation"):
        b0 = estimate_b0(residuals, order)
    graph = prune_threshold(build_graph(b0, var), config.prune_eps)

    timings = timer.finish()
    logger.info("%s ordering: %s (%.3f s total)", config.engine, order.order, timings["total"])
    result = DiscoveryResult.from_graph(config, data.names, order, graph, timings, lag_order=p)
    if not result.timings_consistent():
        logger.warning("phase timings add up to more than the total: %s", timings)
    return result


def _handle(args) -> int:
    result = run_discover(
        args.input,
        engine=args.engine,
        lags=args.lags,
        prune_eps=args.prune,
        select_lags=args.select_lags,
        threads=args.threads,
        seed=args.seed,
        delimiter=args.delimiter,
        header=not args.no_header,
    )
    if args.out:
        write_result(result, args.out)
    names = result.names
    print("order:", " -> ".join(result.order.names(names)))
    graph = result.causal_graph()
    targets, sources = graph.edges().nonzero()
    edges = [(names[j], names[i], graph.b0[i, j]) for i, j in zip(targets, sources)]
    print(f"instantaneous edges ({len(edges)}):")
    for src, dst, w in edges:
        print(f"  {src} -> {dst}: {w:+.4f}")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("discover", help="Run VarLiNGAM discovery on a CSV file")
    parser.add_argument("input", help="CSV file, rows are time-ordered samples")
    parser.add_argument("--engine", choices=["baseline", "heuristic"], default="heuristic")
    parser.add_argument("--lags", type=nonnegative_int, default=1, help="VAR lag order (default: 1)")
    parser.add_argument("--select-lags", type=positive_int, metavar="PMAX", help="Pick the lag order in 1..PMAX by BIC")
    parser.add_argument("--prune", type=nonnegative_float, default=0.05, metavar="EPS", help="Zero edges with |w| < EPS")
    parser.add_argument("--seed", type=int, help="Recorded in the result config")
    parser.add_argument("--threads", type=positive_int, default=1, help="Worker threads (speed only)")
    parser.add_argument("--delimiter", default=",")
    parser.add_argument("--no-header", action="store_true", help="First row is data, not names")
    parser.add_argument("--out", help="Write the result file here")
    parser.set_defaults(func=_handle)
