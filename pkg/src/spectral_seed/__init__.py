"""spectral-seed - cluster centroid estimation by Fourier-domain density smoothing.

Scattered 2-D points are mapped onto a square-pixel mesh, the resulting 0/1
raster is smoothed with a Gaussian filter in the frequency domain, the filter
width is chosen by a correlation convergence rule and the local maxima of the
smoothed density become the cluster centroids. Those centroids fix both k and
the initialization of K-Means.

Quick start:
    from spectral_seed import CentroidPipeline, generate, REFERENCE_CLUSTERS

    points = generate(REFERENCE_CLUSTERS, seed=1)
    pipeline = CentroidPipeline()
    detection = pipeline.detect(points)
    result = pipeline.cluster(points, detection.peaks)
    print(detection.peaks.k, result.centroids)

Customizing parameters:
    from spectral_seed.conf import settings

    settings.configure(EPSILON=0.005, PEAK_THRESHOLD=0.15)
"""

__version__ = "0.1.0"

from spectral_seed.conf import RunConfig
from spectral_seed.datagen import REFERENCE_CLUSTERS, ClusterSpec, generate
from spectral_seed.exceptions import SpectralSeedError
from spectral_seed.grid import PointSet
from spectral_seed.peaks import PeakSet, detect
from spectral_seed.pipeline import CentroidPipeline, Detection
from spectral_seed.seeding import KMeansResult, seed_and_cluster

__all__ = [
    "REFERENCE_CLUSTERS",
    "CentroidPipeline",
    "ClusterSpec",
    "Detection",
    "KMeansResult",
    "PeakSet",
    "PointSet",
    "RunConfig",
    "SpectralSeedError",
    "__version__",
    "detect",
    "generate",
    "seed_and_cluster",
]
