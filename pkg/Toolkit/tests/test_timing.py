import pytest

from lookuplingam.errors import ZeroVariance
from lookuplingam.timing import PHASES, PhaseTimer


def test_phases_accumulate_and_total():
    timer = PhaseTimer()
    with timer.phase("load"):
        pass
    with timer.phase("load"):
        pass
    timings = timer.finish()
    assert set(PHASES) <= set(timings)
    assert timings["total"] >= timings["load"] >= 0.0


def test_error_is_tagged_with_phase():
    timer = PhaseTimer()
    with pytest.raises(ZeroVariance) as err:
        with timer.phase("precompute"):
            raise ZeroVariance(3)
    assert err.value.phase == "precompute"
    assert str(err.value).startswith("[precompute]")
