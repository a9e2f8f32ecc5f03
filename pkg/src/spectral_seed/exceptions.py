"""Root exception for spectral-seed.

Each subpackage defines its own errors in its ``base`` module; they all derive
from :class:`SpectralSeedError` so the command-line front-end can report any
pipeline failure with a single ``except`` clause.
"""


class SpectralSeedError(Exception):
    """Base class for every error raised by the spectral-seed pipeline."""
