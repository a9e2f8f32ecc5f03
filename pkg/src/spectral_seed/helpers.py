"""Helper functions shared by the library and the command-line front-end."""

import logging
import os

from rich.logging import RichHandler

from spectral_seed.conf import settings

THREADS_ENV_VAR = "SPECTRAL_SEED_THREADS"

logger = logging.getLogger(__name__)


def setup_logging(log_level: str = "INFO") -> None:
    """Route log records through rich on stderr at the given level.

    Replaces any handlers already installed on the root logger, so calling it
    twice (once per CLI invocation in tests) does not duplicate output.

    Raises:
        ValueError: If log_level is not a standard level name.
    """
    level = logging.getLevelName(log_level.upper())
    if not isinstance(level, int):
        msg = f"Unknown log level {log_level!r}"
        raise ValueError(msg)
    handler = RichHandler(rich_tracebacks=True, markup=False, show_path=False)
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]", handlers=[handler], force=True)


def worker_count() -> int:
    """Return the number of FFT worker threads to use.

    The configured ``FFT_WORKERS`` setting is capped by the ``SPECTRAL_SEED_THREADS``
    environment variable when it is set to a positive integer. Transforms are
    deterministic for any worker count, so this only affects speed.

    Returns:
        A worker count of at least 1.
    """
    workers = max(1, int(settings.FFT_WORKERS))
    raw_cap = os.environ.get(THREADS_ENV_VAR)
    if raw_cap:
        try:
            cap = int(raw_cap)
        except ValueError:
            logger.warning("Ignoring non-integer %s=%r", THREADS_ENV_VAR, raw_cap)
        else:
            if cap >= 1:
                workers = min(workers, cap)
    return workers
