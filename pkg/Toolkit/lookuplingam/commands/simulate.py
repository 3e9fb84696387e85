import logging
from pathlib import Path

from lookuplingam.commands.common import nonnegative_int, positive_int
from lookuplingam.evaluation.synthetic import default_density, generate_synthetic
from lookuplingam.models.ground_truth import NoiseFamily
from lookuplingam.schemas.truth import GroundTruthFile
from lookuplingam.storage.csv_loader import write_csv
from lookuplingam.storage.result_file import write_truth

logger = logging.getLogger(__name__)


# -----------------------------
# Write a synthetic dataset and its ground truth
# -----------------------------
def run_simulate(out: str, m: int, n: int, p: int = 1, density=None,
                 noise_family: str = "uniform", seed: int = 0):
    density = default_density(m) if density is None else density
    data, truth = generate_synthetic(m, n, p, density, NoiseFamily(noise_family), seed)
    data_path = Path(f"{out}.csv")
    truth_path = Path(f"{out}.truth.json")
    write_csv(data, data_path)
    write_truth(GroundTruthFile.from_truth(truth, data.names), truth_path)
    logger.info("wrote %s and %s", data_path, truth_path)
    return data_path, truth_path


def _handle(args) -> int:
    data_path, truth_path = run_simulate(
        args.out, args.m, args.n, args.lags, args.density, args.noise, args.seed
    )
    print(f"data: {data_path}")
    print(f"truth: {truth_path}")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="Generate synthetic data with known structure")
    parser.add_argument("--m", type=positive_int, required=True, help="Number of variables")
    parser.add_argument("--n", type=positive_int, required=True, help="Number of samples")
    parser.add_argument("--lags", type=nonnegative_int, default=1, help="Lag order of the process")
    parser.add_argument("--density", type=float, help="Edge probability (default: 2/(m-1), capped at 1)")
    parser.add_argument("--noise", choices=[f.value for f in NoiseFamily], default="uniform")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", required=True, help="Output prefix; writes PREFIX.csv and PREFIX.truth.json")
    parser.set_defaults(func=_handle)
