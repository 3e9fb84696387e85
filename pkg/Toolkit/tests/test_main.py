import numpy as np
import pandas as pd
import pytest

from lookuplingam.config import get_settings
from lookuplingam.main import main
from lookuplingam.schemas.benchmark import BENCHMARK_COLUMNS
from lookuplingam.storage.result_file import load_result


@pytest.fixture
def simulated(tmp_path):
    prefix = tmp_path / "sim"
    assert main(["simulate", "--m", "4", "--n", "800", "--seed", "3", "--out", str(prefix)]) == 0
    return prefix


def test_simulate_writes_data_and_truth(simulated):
    assert simulated.with_suffix(".csv").exists()
    assert (simulated.parent / "sim.truth.json").exists()


def test_discover_and_eval(simulated, tmp_path, capsys):
    out = tmp_path / "result.json"
    assert main(["discover", str(simulated) + ".csv", "--seed", "3", "--out", str(out)]) == 0
    assert load_result(out).names == ["v0", "v1", "v2", "v3"]
    assert main(["eval", "--result", str(out), "--truth", str(simulated) + ".truth.json"]) == 0
    printed = capsys.readouterr().out
    assert "B0: SHD=" in printed
    assert "B1: SHD=" in printed


@pytest.mark.parametrize("engine", ["baseline", "heuristic"])
def test_byte_identical_across_runs_and_threads(simulated, tmp_path, engine):
    dumps = set()
    for threads in ("1", "8"):
        out = tmp_path / f"{engine}-{threads}.json"
        args = ["discover", str(simulated) + ".csv", "--engine", engine, "--seed", "3",
                "--threads", threads, "--out", str(out)]
        assert main(args) == 0
        dumps.add(out.read_bytes())
    assert len(dumps) == 1


def test_benchmark_csv(tmp_path):
    out = tmp_path / "bench.csv"
    args = ["benchmark", "--m", "3", "--n", "300", "--seeds", "0", "--repeats", "1", "--out", str(out)]
    assert main(args) == 0
    table = pd.read_csv(out)
    assert list(table.columns) == BENCHMARK_COLUMNS
    assert len(table) == 2


def test_usage_error_exits_1():
    with pytest.raises(SystemExit) as err:
        main(["discover", "x.csv", "--engine", "fastest"])
    assert err.value.code == 1
    with pytest.raises(SystemExit) as err:
        main(["discover", "x.csv", "--threads", "0"])
    assert err.value.code == 1


def test_data_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\n1,2\n3\n", encoding="utf-8")
    assert main(["discover", str(bad)]) == 2
    assert "[load]" in capsys.readouterr().err


def test_numerical_error_exits_3(tmp_path):
    path = tmp_path / "constant.csv"
    gen = np.random.default_rng(0)
    rows = ["a,b"] + [f"{v},{2 * v}" for v in gen.uniform(size=50)]
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    assert main(["discover", str(path)]) == 3


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("LOOKUPLINGAM_LOG_LEVEL", "debug")
    assert get_settings().log_level == "DEBUG"
    monkeypatch.delenv("LOOKUPLINGAM_LOG_LEVEL")
    assert get_settings().log_level == "WARNING"


def test_eval_with_adjacency_csv_truth(simulated, tmp_path, capsys):
    out = tmp_path / "result.json"
    assert main(["discover", str(simulated) + ".csv", "--seed", "3", "--out", str(out)]) == 0
    truth = tmp_path / "truth.csv"
    truth.write_text("v0,v1,v2,v3\n0,0,0,0\n1,0,0,0\n0,1,0,0\n0,0,1,0\n", encoding="utf-8")
    args = ["eval", "--result", str(out), "--truth", str(truth), "--truth-format", "csv"]
    assert main(args) == 0
    printed = capsys.readouterr().out
    assert "B0: SHD=" in printed
    assert "B1: SHD=" not in printed
