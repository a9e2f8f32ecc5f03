"""Default settings for spectral-seed.

Users can override these in their project's settings.py file (or the module
named by ``SPECTRAL_SEED_SETTINGS_MODULE``).

Example:
    # In your project's settings.py:
    EPSILON = 0.005
    GRID_CAP = 2048
    LOG_LEVEL = "DEBUG"
"""

import os

# Bandwidth selection
EPSILON = 0.01
"""Convergence threshold on the change of correlation between two successive bandwidths."""

MAX_ITER_BANDWIDTH = 64
"""Maximum number of bandwidth iterations before giving up."""

# Peak detection
PEAK_THRESHOLD = 0.1
"""Normalized density floor below which smoothed values are zeroed before the peak search."""

# Smoothing
FFT_PAD_SIGMAS = 5.0
"""Zero border, in spatial standard deviations, added to each axis before the FFT; 0 keeps circular wrap-around."""

# Mesh generation
GAP_FRACTION = 0.05
"""Fraction of the points whose coordinate gaps are averaged to estimate the mesh spacing."""

SPACING_GAP_ORDER = "largest"
"""Which positive gaps are averaged: "largest", "smallest" or "leading" (coordinate order)."""

GRID_CAP = 1024
"""Maximum number of pixels per axis; the spacing is coarsened to respect it."""

GRID_MARGIN_PX = 4
"""Minimum empty border, in pixels, kept around the point bounding box."""

GRID_MARGIN_FRACTION = 0.0
"""Extra empty border on each side as a fraction of the larger bounding-box side."""

MIN_GRID_SIZE = 8
"""Minimum number of pixels per axis."""

# K-Means
KMEANS_MAX_ITER = 300
"""Maximum number of Lloyd iterations."""

KMEANS_TOL = 1e-6
"""Stop when no centroid moves farther than this (data units)."""

# Oracle check
ORACLE_TOLERANCE = 1e-3
"""Largest accepted interior deviation between FFT smoothing and direct summation."""

ORACLE_MAX_OCCUPIED = 10000
"""Largest number of occupied pixels the direct-summation oracle accepts."""

# Runtime
SEED = 0
"""Default seed for synthetic data generation."""

FFT_WORKERS = os.cpu_count() or 1
"""Worker threads handed to scipy.fft; capped by the SPECTRAL_SEED_THREADS environment variable."""

LOG_LEVEL = "INFO"
"""Default logging level for the command-line front-end."""
