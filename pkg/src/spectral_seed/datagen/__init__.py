"""Synthetic anisotropic Gaussian cluster data."""

from spectral_seed.datagen.base import ClusterSpec, EmptySpecError, InvalidClusterSpecError
from spectral_seed.datagen.generator import REFERENCE_CLUSTERS, dump_cluster_specs, generate, load_cluster_specs

__all__ = [
    "REFERENCE_CLUSTERS",
    "ClusterSpec",
    "EmptySpecError",
    "InvalidClusterSpecError",
    "dump_cluster_specs",
    "generate",
    "load_cluster_specs",
]
