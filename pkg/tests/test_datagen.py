"""Unit tests for synthetic cluster generation."""

import json
import math
import tempfile
import unittest
from pathlib import Path

import numpy as np
import pytest

from spectral_seed.datagen import (
    REFERENCE_CLUSTERS,
    ClusterSpec,
    EmptySpecError,
    InvalidClusterSpecError,
    dump_cluster_specs,
    generate,
    load_cluster_specs,
)


class TestClusterSpec(unittest.TestCase):
    """Unit test class for ClusterSpec validation."""

    def test_rejects_non_positive_spread(self) -> None:
        """Test that zero or negative standard deviations are rejected."""
        with pytest.raises(InvalidClusterSpecError):
            ClusterSpec(mu_x=0.5, mu_y=0.5, sigma_x=0.0, sigma_y=0.1, count=10)
        with pytest.raises(InvalidClusterSpecError):
            ClusterSpec(mu_x=0.5, mu_y=0.5, sigma_x=0.1, sigma_y=-0.1, count=10)

    def test_rejects_bad_counts(self) -> None:
        """Test that the count must be a positive integer."""
        for count in (0, -3, True, 2.5):
            with pytest.raises(InvalidClusterSpecError):
                ClusterSpec(mu_x=0.5, mu_y=0.5, sigma_x=0.1, sigma_y=0.1, count=count)

    def test_rejects_non_finite_centre(self) -> None:
        """Test that NaN centres are rejected."""
        with pytest.raises(InvalidClusterSpecError):
            ClusterSpec(mu_x=math.nan, mu_y=0.5, sigma_x=0.1, sigma_y=0.1, count=10)

    def test_from_dict_accepts_integral_float_count(self) -> None:
        """Test that a JSON count like 650.0 is read as 650."""
        spec = ClusterSpec.from_dict({"mu_x": 0.1, "mu_y": 0.2, "sigma_x": 0.01, "sigma_y": 0.02, "count": 650.0})
        assert spec.count == 650
        assert isinstance(spec.count, int)

    def test_from_dict_missing_field(self) -> None:
        """Test that a missing field names the field."""
        with pytest.raises(InvalidClusterSpecError, match="sigma_y"):
            ClusterSpec.from_dict({"mu_x": 0.1, "mu_y": 0.2, "sigma_x": 0.01, "count": 5})

    def test_from_dict_malformed_field(self) -> None:
        """Test that a non-numeric value is rejected."""
        with pytest.raises(InvalidClusterSpecError):
            ClusterSpec.from_dict({"mu_x": "left", "mu_y": 0.2, "sigma_x": 0.01, "sigma_y": 0.02, "count": 5})

    def test_reference_table_total(self) -> None:
        """Test that the reference clusters hold 3350 points."""
        assert len(REFERENCE_CLUSTERS) == 6
        assert sum(spec.count for spec in REFERENCE_CLUSTERS) == 3350


class TestGenerate(unittest.TestCase):
    """Unit test class for generate."""

    def test_row_count_and_order(self) -> None:
        """Test that clusters are stacked in spec order with their counts."""
        points = generate(REFERENCE_CLUSTERS, seed=1)
        assert len(points) == 3350
        start = 0
        for spec in REFERENCE_CLUSTERS:
            block = points.coords[start : start + spec.count]
            assert abs(block[:, 0].mean() - spec.mu_x) < 4 * spec.sigma_x / math.sqrt(spec.count)
            assert abs(block[:, 1].mean() - spec.mu_y) < 4 * spec.sigma_y / math.sqrt(spec.count)
            assert block[:, 0].std() == pytest.approx(spec.sigma_x, rel=0.15)
            assert block[:, 1].std() == pytest.approx(spec.sigma_y, rel=0.15)
            start += spec.count

    def test_wide_clusters_at_reference_centroids(self) -> None:
        """Test that clusters with spreads between 0.02 and 0.05 keep their means near the centroids."""
        spreads = (0.02, 0.03, 0.05, 0.04, 0.025, 0.035)
        counts = (650, 550, 500, 600, 450, 600)
        specs = [
            ClusterSpec(mu_x=ref.mu_x, mu_y=ref.mu_y, sigma_x=sigma, sigma_y=sigma, count=count)
            for ref, sigma, count in zip(REFERENCE_CLUSTERS, spreads, counts, strict=True)
        ]
        points = generate(specs, seed=3)
        assert len(points) == 3350
        start = 0
        for spec in specs:
            block = points.coords[start : start + spec.count]
            assert abs(block[:, 0].mean() - spec.mu_x) < 4 * spec.sigma_x / math.sqrt(spec.count)
            assert abs(block[:, 1].mean() - spec.mu_y) < 4 * spec.sigma_y / math.sqrt(spec.count)
            start += spec.count

    def test_same_seed_same_points(self) -> None:
        """Test that a seed reproduces the sample bit for bit."""
        first = generate(REFERENCE_CLUSTERS, seed=42)
        second = generate(REFERENCE_CLUSTERS, seed=42)
        assert np.array_equal(first.coords, second.coords)

    def test_different_seeds_differ(self) -> None:
        """Test that different seeds give different samples."""
        first = generate(REFERENCE_CLUSTERS, seed=1)
        second = generate(REFERENCE_CLUSTERS, seed=2)
        assert not np.array_equal(first.coords, second.coords)

    def test_box_muller_branches(self) -> None:
        """Test that x takes the cosine branch and y the sine branch of one uniform pair."""
        spec = ClusterSpec(mu_x=1.0, mu_y=-2.0, sigma_x=0.5, sigma_y=0.25, count=3)
        points = generate([spec], seed=9)
        uniforms = np.random.Generator(np.random.Philox(9)).random((3, 2))
        for (x, y), (u1, u2) in zip(points.coords.tolist(), uniforms.tolist(), strict=True):
            radius = math.sqrt(-2.0 * math.log1p(-u1))
            assert x == pytest.approx(1.0 + 0.5 * radius * math.cos(2.0 * math.pi * u2), rel=1e-12)
            assert y == pytest.approx(-2.0 + 0.25 * radius * math.sin(2.0 * math.pi * u2), rel=1e-12)

    def test_default_seed_from_settings(self) -> None:
        """Test that the configured seed is used when none is given."""
        assert np.array_equal(generate(REFERENCE_CLUSTERS).coords, generate(REFERENCE_CLUSTERS, seed=0).coords)

    def test_empty_specs(self) -> None:
        """Test that generating zero clusters is rejected."""
        with pytest.raises(EmptySpecError):
            generate([])


class TestClusterSpecFiles(unittest.TestCase):
    """Unit test class for load_cluster_specs and dump_cluster_specs."""

    def setUp(self) -> None:
        """Create a scratch directory."""
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)
        self.tmp = Path(self._tmp.name)

    def test_dump_then_load(self) -> None:
        """Test that dumped specs load back unchanged."""
        path = self.tmp / "clusters.json"
        dump_cluster_specs(REFERENCE_CLUSTERS, path)
        assert load_cluster_specs(path) == list(REFERENCE_CLUSTERS)
        assert path.read_text().endswith("\n")

    def test_invalid_json(self) -> None:
        """Test that a malformed file raises InvalidClusterSpecError."""
        path = self.tmp / "broken.json"
        path.write_text("[{")
        with pytest.raises(InvalidClusterSpecError, match="not valid JSON"):
            load_cluster_specs(path)

    def test_not_a_list(self) -> None:
        """Test that a top-level object is rejected."""
        path = self.tmp / "object.json"
        path.write_text(json.dumps({"mu_x": 0.5}))
        with pytest.raises(InvalidClusterSpecError):
            load_cluster_specs(path)

    def test_empty_list(self) -> None:
        """Test that an empty list raises EmptySpecError."""
        path = self.tmp / "empty.json"
        path.write_text("[]")
        with pytest.raises(EmptySpecError):
            load_cluster_specs(path)
