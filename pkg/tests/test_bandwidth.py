"""Unit tests for correlation-driven bandwidth selection."""

import unittest

import numpy as np
import pytest

from spectral_seed.bandwidth import (
    BandwidthConvergedEvent,
    BandwidthConvergenceError,
    ConvergenceEntry,
    ConvergenceTrace,
    SmoothingPassEvent,
    ZeroVarianceError,
    pearson_correlation,
    select_bandwidth,
)
from spectral_seed.events import EventBus
from spectral_seed.spectral import smooth
from tests.factories import make_field, three_cluster_field
from tests.oracles import pearson_two_pass


class TestPearsonCorrelation(unittest.TestCase):
    """Unit test class for pearson_correlation."""

    def setUp(self) -> None:
        """Draw two reproducible 8 x 8 arrays."""
        rng = np.random.default_rng(17)
        self.a = rng.random((8, 8))
        self.b = self.a + 0.5 * rng.random((8, 8))

    def test_self_correlation_is_one(self) -> None:
        """Test that an array is perfectly correlated with itself."""
        assert pearson_correlation(self.a, self.a) == pytest.approx(1.0, abs=1e-12)

    def test_affine_invariance(self) -> None:
        """Test that a positive affine map keeps the correlation at one."""
        assert pearson_correlation(self.a, 3.0 * self.a + 2.0) == pytest.approx(1.0, abs=1e-12)

    def test_matches_two_pass_oracle(self) -> None:
        """Test that the correlation equals the explicit two-pass formula."""
        expected = pearson_two_pass(self.a.ravel().tolist(), self.b.ravel().tolist())
        assert pearson_correlation(self.a, self.b) == pytest.approx(expected, abs=1e-12)

    def test_constant_array(self) -> None:
        """Test that a constant operand raises ZeroVarianceError."""
        with pytest.raises(ZeroVarianceError, match="zero variance"):
            pearson_correlation(self.a, np.ones((8, 8)))

    def test_size_mismatch(self) -> None:
        """Test that arrays of different sizes are rejected."""
        with pytest.raises(ValueError, match="equal size"):
            pearson_correlation(self.a, np.ones((4, 4)))


class TestConvergenceTrace(unittest.TestCase):
    """Unit test class for ConvergenceTrace."""

    def test_entries_must_be_sequential(self) -> None:
        """Test that an entry skipping an iteration is refused."""
        trace = ConvergenceTrace(epsilon=0.01)
        trace.append(ConvergenceEntry(n=1, sigma_tilde=1.0, correlation=0.2))
        with pytest.raises(ValueError, match="expected iteration 2"):
            trace.append(ConvergenceEntry(n=3, sigma_tilde=3.0, correlation=0.4, delta=0.1))

    def test_serialization(self) -> None:
        """Test that the trace serializes its entries in order."""
        trace = ConvergenceTrace(epsilon=0.01)
        trace.append(ConvergenceEntry(n=1, sigma_tilde=1.0, correlation=0.2))
        trace.append(ConvergenceEntry(n=2, sigma_tilde=2.0, correlation=0.205, delta=0.005))
        trace.converged_n = 2
        data = trace.to_dict()
        assert data["converged_n"] == 2
        assert data["epsilon"] == 0.01
        assert data["entries"][0] == {"n": 1, "sigma_tilde": 1.0, "correlation": 0.2, "delta": None}
        assert data["entries"][1]["delta"] == 0.005
        assert trace.converged
        assert trace.last is not None
        assert trace.last.n == 2


class TestSelectBandwidth(unittest.TestCase):
    """Unit test class for select_bandwidth."""

    def setUp(self) -> None:
        """Rasterize three synthetic clusters and prepare an event bus."""
        self.field = three_cluster_field()
        self.bus = EventBus()
        self.passes: list[SmoothingPassEvent] = []
        self.converged: list[BandwidthConvergedEvent] = []
        self.bus.subscribe(SmoothingPassEvent, self.passes.append)
        self.bus.subscribe(BandwidthConvergedEvent, self.converged.append)

    def test_trace_is_complete(self) -> None:
        """Test that the trace lists n = 1..converged_n with the documented deltas."""
        smoothed, trace = select_bandwidth(self.field, epsilon=0.01)
        assert trace.converged_n is not None
        assert trace.converged_n >= 2
        assert [e.n for e in trace.entries] == list(range(1, trace.converged_n + 1))
        assert trace.entries[0].delta is None
        for previous, entry in zip(trace.entries, trace.entries[1:], strict=False):
            assert entry.delta == abs(entry.correlation - previous.correlation)
        assert trace.entries[-1].delta < 0.01
        assert all(e.delta >= 0.01 for e in trace.entries[1:-1])
        assert smoothed.sigma_tilde == trace.converged_n / self.field.grid.extent

    def test_schedule_is_linear_in_n(self) -> None:
        """Test that sigma_tilde_n = n / L for every iteration."""
        _, trace = select_bandwidth(self.field, epsilon=0.01)
        extent = self.field.grid.extent
        assert all(e.sigma_tilde == e.n / extent for e in trace.entries)

    def test_returned_field_is_normalized(self) -> None:
        """Test that the selected field is shift-normalized to [0, 1]."""
        smoothed, _ = select_bandwidth(self.field, epsilon=0.01)
        assert smoothed.normalized
        assert smoothed.values.min() == 0.0
        assert smoothed.values.max() == 1.0

    def test_deterministic(self) -> None:
        """Test that two runs on the same raster give identical traces."""
        _, first = select_bandwidth(self.field, epsilon=0.01)
        _, second = select_bandwidth(self.field, epsilon=0.01)
        assert first.to_list() == second.to_list()

    def test_matches_scripted_run(self) -> None:
        """Test that an explicit step-by-step loop stops at the same iteration."""
        _, trace = select_bandwidth(self.field, epsilon=0.01)
        extent = self.field.grid.extent
        raster = self.field.values.ravel().tolist()
        previous = None
        stopped_at = None
        for n in range(1, 65):
            smoothed = smooth(self.field, n / extent, normalize=False)
            corr = pearson_two_pass(raster, smoothed.values.ravel().tolist())
            if previous is not None and abs(corr - previous) < 0.01:
                stopped_at = n
                break
            previous = corr
        assert stopped_at == trace.converged_n

    def test_correlation_rises_with_n(self) -> None:
        """Test that less smoothing never lowers the correlation with the raster."""
        with pytest.raises(BandwidthConvergenceError) as excinfo:
            select_bandwidth(self.field, epsilon=1e-12, max_iter=12)
        correlations = [e.correlation for e in excinfo.value.trace.entries]
        assert all(b >= a - 1e-9 for a, b in zip(correlations, correlations[1:], strict=False))

    def test_one_pass_per_iteration(self) -> None:
        """Test that exactly converged_n smoothing passes are published."""
        _, trace = select_bandwidth(self.field, epsilon=0.01, event_bus=self.bus)
        assert len(self.passes) == trace.converged_n
        assert [p.n for p in self.passes] == [e.n for e in trace.entries]
        assert len(self.converged) == 1
        assert self.converged[0].n == trace.converged_n

    def test_earliest_stop_at_second_iteration(self) -> None:
        """Test that a loose epsilon stops after exactly two passes."""
        _, trace = select_bandwidth(self.field, epsilon=0.99, event_bus=self.bus)
        assert trace.converged_n == 2
        assert len(self.passes) == 2

    def test_non_convergence_carries_trace(self) -> None:
        """Test that hitting max_iter raises with the full trace attached."""
        with pytest.raises(BandwidthConvergenceError) as excinfo:
            select_bandwidth(self.field, epsilon=1e-12, max_iter=3)
        trace = excinfo.value.trace
        assert len(trace.entries) == 3
        assert not trace.converged

    def test_invalid_parameters(self) -> None:
        """Test that non-positive epsilon and max_iter are rejected."""
        with pytest.raises(ValueError, match="epsilon"):
            select_bandwidth(self.field, epsilon=0.0)
        with pytest.raises(ValueError, match="max_iter"):
            select_bandwidth(self.field, epsilon=0.01, max_iter=0)

    def test_empty_raster(self) -> None:
        """Test that an all-zero raster has no defined correlation."""
        with pytest.raises(ZeroVarianceError):
            select_bandwidth(make_field(np.zeros((16, 16))))
