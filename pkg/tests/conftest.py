"""Shared pytest configuration and fixtures."""

from typing import TYPE_CHECKING

import pytest

from spectral_seed.conf import settings

if TYPE_CHECKING:
    from collections.abc import Generator


@pytest.fixture(autouse=True)
def configure_test_settings() -> Generator[None]:
    """Configure settings for each test and reset them after the test completes.

    Yields:
        None
    """
    settings.configure(
        EPSILON=0.01,
        MAX_ITER_BANDWIDTH=64,
        PEAK_THRESHOLD=0.1,
        GAP_FRACTION=0.05,
        SPACING_GAP_ORDER="largest",
        GRID_CAP=1024,
        GRID_MARGIN_PX=4,
        GRID_MARGIN_FRACTION=0.0,
        MIN_GRID_SIZE=8,
        FFT_PAD_SIGMAS=5.0,
        KMEANS_MAX_ITER=300,
        KMEANS_TOL=1e-6,
        ORACLE_TOLERANCE=1e-3,
        ORACLE_MAX_OCCUPIED=10000,
        SEED=0,
        FFT_WORKERS=1,
    )
    yield
    # Reset settings after test
    settings._wrapped = None
