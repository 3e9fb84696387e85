import logging
from typing import Dict, Optional, Sequence

import numpy as np
import pandas as pd

from lookuplingam.commands.common import nonnegative_float, nonnegative_int, positive_int
from lookuplingam.commands.discover import run_discover
from lookuplingam.errors import LingamError
from lookuplingam.evaluation.metrics import binarize, f1, shd
from lookuplingam.evaluation.synthetic import default_density, generate_synthetic
from lookuplingam.models.ground_truth import NoiseFamily
from lookuplingam.schemas.benchmark import BENCHMARK_COLUMNS, PHASE_COLUMNS, BenchmarkGrid

logger = logging.getLogger(__name__)


def _failed_row(base: Dict, error: str) -> Dict:
    row = dict(base)
    row.update({col: np.nan for col in PHASE_COLUMNS})
    row.update({"f1": np.nan, "shd": np.nan, "status": "failed", "error": error})
    return row


# -----------------------------
# Sweep a (m, n, seed) grid over engines
# -----------------------------
def run_benchmark(grid: BenchmarkGrid, engines: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """One row per cell x engine x repeat. A failing cell is recorded, not raised."""
    engines = list(engines or grid.engines)
    rows = []
    for m in grid.m_values:
        for n in grid.n_values:
            for seed in grid.seeds:
                density = grid.density if grid.density is not None else default_density(m)
                cell = {"m": m, "n": n, "p": grid.p, "seed": seed}
                logger.info("benchmark cell m=%d n=%d seed=%d", m, n, seed)
                try:
                    data, truth = generate_synthetic(m, n, grid.p, density, grid.noise_family, seed)
                except LingamError as err:
                    logger.warning("cell m=%d n=%d seed=%d failed to generate: %s", m, n, seed, err)
                    for engine in engines:
                        for repeat in range(grid.repeats):
                            rows.append(_failed_row({"engine": engine, **cell, "repeat": repeat}, str(err)))
                    continue
                true_adj = binarize(truth.b0_true)

                for engine in engines:
                    for repeat in range(grid.repeats):
                        base = {"engine": engine, **cell, "repeat": repeat}
                        try:
                            result = run_discover(
                                data,
                                engine=engine,
                                lags=grid.p,
                                prune_eps=grid.prune_eps,
                                threads=grid.threads,
                                seed=seed,
                            )
                        except LingamError as err:
                            logger.warning("%s failed on m=%d n=%d seed=%d: %s", engine, m, n, seed, err)
                            rows.append(_failed_row(base, str(err)))
                            continue
                        est_adj = result.causal_graph().edges()
                        row = dict(base)
                        row.update({col: result.timings[key] for col, key in PHASE_COLUMNS.items()})
                        row.update({
                            "f1": f1(true_adj, est_adj),
                            "shd": shd(true_adj, est_adj),
                            "status": "ok",
                            "error": "",
                        })
                        rows.append(row)
    return pd.DataFrame(rows, columns=BENCHMARK_COLUMNS)


def summarize_benchmark(table: pd.DataFrame) -> pd.DataFrame:
    """Median over repeats per cell and engine (successful rows only)."""
    ok = table[table["status"] == "ok"]
    numeric = list(PHASE_COLUMNS) + ["f1", "shd"]
    return ok.groupby(["engine", "m", "n", "p", "seed"], as_index=False)[numeric].median()


def speedups(summary: pd.DataFrame) -> pd.DataFrame:
    """Baseline over heuristic time per cell, for total and search phases."""
    wide = summary.pivot_table(
        index=["m", "n", "p", "seed"], columns="engine", values=["total", "phase_search"]
    )
    out = pd.DataFrame(index=wide.index)
    out["baseline_total"] = wide[("total", "baseline")]
    out["heuristic_total"] = wide[("total", "heuristic")]
    out["speedup_total"] = out["baseline_total"] / out["heuristic_total"]
    out["speedup_search"] = wide[("phase_search", "baseline")] / wide[("phase_search", "heuristic")]
    return out.reset_index()


def fit_complexity(table: pd.DataFrame, engine: str = "heuristic") -> Dict[str, float]:
    """Compare least-squares fits of total time to c1*m^2*n + c2*m^3 and to c*m^3*n.

    Residuals are sums of squared errors on per-(m, n) medians; a ratio below
    1 favours the quadratic-plus-cubic shape.
    """
    ok = table[(table["status"] == "ok") & (table["engine"] == engine)]
    cells = ok.groupby(["m", "n"], as_index=False)["total"].median()
    m = cells["m"].to_numpy(dtype=np.float64)
    n = cells["n"].to_numpy(dtype=np.float64)
    y = cells["total"].to_numpy(dtype=np.float64)

    split = np.column_stack([m**2 * n, m**3])
    joint = (m**3 * n).reshape(-1, 1)
    c_split, *_ = np.linalg.lstsq(split, y, rcond=None)
    c_joint, *_ = np.linalg.lstsq(joint, y, rcond=None)
    res_split = float(np.sum((y - split @ c_split) ** 2))
    res_joint = float(np.sum((y - joint @ c_joint) ** 2))
    return {
        "c1": float(c_split[0]),
        "c2": float(c_split[1]),
        "c": float(c_joint[0]),
        "residual_split": res_split,
        "residual_joint": res_joint,
        "ratio": res_split / res_joint if res_joint > 0 else float("inf"),
    }


def _handle(args) -> int:
    grid = BenchmarkGrid(
        m_values=args.m,
        n_values=args.n,
        seeds=args.seeds,
        p=args.lags,
        density=args.density,
        noise_family=args.noise,
        prune_eps=args.prune,
        repeats=args.repeats,
        threads=args.threads,
        engines=args.engines,
    )
    table = run_benchmark(grid)
    table.to_csv(args.out, index=False)
    print(f"wrote {len(table)} rows to {args.out}")
    summary = summarize_benchmark(table)
    if set(grid.engines) == {"baseline", "heuristic"} and not summary.empty:
        print(speedups(summary).to_string(index=False))
    else:
        print(summary.to_string(index=False))
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("benchmark", help="Time and score both engines over a synthetic grid")
    parser.add_argument("--m", type=positive_int, nargs="+", required=True, help="Variable counts")
    parser.add_argument("--n", type=positive_int, nargs="+", required=True, help="Sample sizes")
    parser.add_argument("--seeds", type=int, nargs="+", default=[0])
    parser.add_argument("--lags", type=nonnegative_int, default=1)
    parser.add_argument("--density", type=float)
    parser.add_argument("--noise", choices=[f.value for f in NoiseFamily], default="uniform")
    parser.add_argument("--prune", type=nonnegative_float, default=0.05, metavar="EPS")
    parser.add_argument("--repeats", type=positive_int, default=3)
    parser.add_argument("--threads", type=positive_int, default=1)
    parser.add_argument("--engines", nargs="+", choices=["baseline", "heuristic"],
                        default=["baseline", "heuristic"])
    parser.add_argument("--out", default="benchmark.csv")
    parser.set_defaults(func=_handle)
