import logging
import time
from contextlib import contextmanager
from typing import Dict, Iterator

from lookuplingam.errors import LingamError

logger = logging.getLogger(__name__)

PHASES = (
    "load",
    "var_fit",
    "standardize",
    "precompute",
    "ordering_search",
    "b0_estimation",
)


class PhaseTimer:
    """Accumulates wall-clock seconds per named phase on a monotonic clock.

    Errors raised inside a phase are tagged with the phase name.
    """

    def __init__(self):
        self.timings: Dict[str, float] = {phase: 0.0 for phase in PHASES}
        self._started = time.perf_counter()

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        except LingamError as err:
            if err.phase is None:
                err.phase = name
            raise
        finally:
            elapsed = time.perf_counter() - start
            self.timings[name] = self.timings.get(name, 0.0) + elapsed
            logger.info("phase %s took %.4f s", name, elapsed)

    def finish(self) -> Dict[str, float]:
        out = dict(self.timings)
        out["total"] = time.perf_counter() - self._started
        return out
