"""Unit tests for the frequency-domain smoothing stage."""

import math
import unittest

import numpy as np
import pytest

from spectral_seed.conf import settings
from spectral_seed.peaks import strict_local_maxima
from spectral_seed.spectral import (
    InvalidBandwidthError,
    NonRealInverseError,
    OracleTooLargeError,
    SmoothedField,
    Spectrum,
    apply_gaussian_filter,
    forward_dft,
    gaussian_gain,
    inverse_dft,
    normalize_field,
    normalize_values,
    padded_shape,
    smooth,
    smooth_direct_oracle,
)
from tests.factories import make_field, pixel_field, random_pixel_field, three_cluster_field
from tests.oracles import filtered_spectrum_oracle, naive_dft, strict_maxima_scan


def interior_deviation(a: np.ndarray, b: np.ndarray, band: int) -> float:
    """Largest absolute difference away from a band of pixels along every edge."""
    return float(np.max(np.abs(a[band:-band, band:-band] - b[band:-band, band:-band])))


class TestForwardDft(unittest.TestCase):
    """Unit test class for forward_dft."""

    def test_all_zero_raster(self) -> None:
        """Test that an empty raster has an all-zero spectrum."""
        spec = forward_dft(make_field(np.zeros((8, 8))))
        assert np.all(spec.values == 0)

    def test_single_pixel_at_origin_is_flat(self) -> None:
        """Test that a single occupied pixel at (0, 0) has unit magnitude in every bin."""
        spec = forward_dft(pixel_field(8, [(0, 0)]))
        assert np.allclose(np.abs(spec.values), 1.0, atol=1e-12)

    def test_matches_direct_summation(self) -> None:
        """Test that the transform of a random raster equals the direct sum."""
        field = random_pixel_field(16, 60, seed=1)
        spec = forward_dft(field)
        assert np.max(np.abs(spec.values - naive_dft(field.values))) <= 1e-9

    def test_spectrum_keeps_grid(self) -> None:
        """Test that the spectrum carries the geometry of its raster."""
        field = pixel_field(8, [(2, 3)])
        assert forward_dft(field).grid == field.grid

    def test_padded_transform_extends_grid(self) -> None:
        """Test that a larger transform shape zero-pads the raster at the far ends."""
        field = random_pixel_field(16, 30, seed=5)
        spec = forward_dft(field, (24, 20))
        assert spec.values.shape == (24, 20)
        assert spec.grid.shape == (24, 20)
        assert spec.grid.dx == field.grid.dx
        padded = np.zeros((24, 20))
        padded[:16, :16] = field.values
        assert np.max(np.abs(spec.values - naive_dft(padded))) <= 1e-9

    def test_transform_shape_smaller_than_raster(self) -> None:
        """Test that a transform shape cutting into the raster is rejected."""
        with pytest.raises(ValueError, match="smaller than the raster"):
            forward_dft(random_pixel_field(16, 10, seed=5), (12, 16))


class TestPaddedShape(unittest.TestCase):
    """Unit test class for padded_shape."""

    def setUp(self) -> None:
        """Use a 64 x 64 mesh of unit extent."""
        self.grid = pixel_field(64, [(1, 1)]).grid

    def test_border_covers_requested_deviations(self) -> None:
        """Test that every axis grows by at least pad_sigmas spatial deviations."""
        # spatial deviation 64 / (8 pi) ~ 2.55 px
        n_x, n_y = padded_shape(self.grid, 4.0, 5.0)
        assert n_x >= 64 + 13
        assert n_y >= 64 + 13

    def test_default_comes_from_settings(self) -> None:
        """Test that the border defaults to FFT_PAD_SIGMAS."""
        settings.configure(FFT_PAD_SIGMAS=0.0)
        assert padded_shape(self.grid, 4.0) == (64, 64)

    def test_zero_pad_keeps_mesh(self) -> None:
        """Test that a zero border leaves the shape unchanged."""
        assert padded_shape(self.grid, 4.0, 0.0) == (64, 64)

    def test_negative_pad(self) -> None:
        """Test that a negative border is rejected."""
        with pytest.raises(ValueError, match="pad_sigmas"):
            padded_shape(self.grid, 4.0, -1.0)


class TestGaussianFilter(unittest.TestCase):
    """Unit test class for gaussian_gain and apply_gaussian_filter."""

    def setUp(self) -> None:
        """Build a 16 x 16 raster of unit extent."""
        self.field = random_pixel_field(16, 40, seed=4)
        self.spec = forward_dft(self.field)

    def test_zero_bin_is_prefactor(self) -> None:
        """Test that the zero-frequency gain is 1 / (2 pi sigma_tilde^2)."""
        gain = gaussian_gain(self.field.grid, 3.0)
        assert math.isclose(gain[0, 0], 1.0 / (2.0 * math.pi * 9.0), rel_tol=1e-15)

    def test_gain_at_two_sigma_squared(self) -> None:
        """Test that a bin with fx^2 + fy^2 = 2 sigma_tilde^2 is damped by exactly 1/e."""
        gain = gaussian_gain(self.field.grid, 1.0)
        # L = 1, so bin (1, 1) sits at frequency (1, 1)
        assert math.isclose(gain[1, 1] / gain[0, 0], math.exp(-1.0), rel_tol=1e-15)

    def test_negative_frequencies_mirror_positive(self) -> None:
        """Test that bins k and n - k get the same gain."""
        gain = gaussian_gain(self.field.grid, 2.0)
        assert np.allclose(gain[1:, :], gain[:0:-1, :], rtol=1e-15, atol=0.0)

    def test_without_prefactor(self) -> None:
        """Test that dropping the prefactor gives a unit zero-frequency gain."""
        assert gaussian_gain(self.field.grid, 3.0, include_prefactor=False)[0, 0] == 1.0

    def test_matches_per_bin_loop(self) -> None:
        """Test that the filtered spectrum equals the bin-by-bin computation."""
        filtered = apply_gaussian_filter(self.spec, 1.0)
        grid = self.field.grid
        expected = filtered_spectrum_oracle(self.spec.values, grid.L_x, grid.L_y, 1.0)
        assert np.max(np.abs(filtered.values - expected)) <= 1e-12

    def test_non_positive_sigma_tilde(self) -> None:
        """Test that zero, negative and NaN bandwidths are rejected."""
        for sigma_tilde in (0.0, -1.0, math.nan):
            with pytest.raises(InvalidBandwidthError):
                apply_gaussian_filter(self.spec, sigma_tilde)


class TestInverseDft(unittest.TestCase):
    """Unit test class for inverse_dft."""

    def test_round_trip_restores_raster(self) -> None:
        """Test that the inverse of the forward transform is the raster itself."""
        field = random_pixel_field(16, 50, seed=2)
        assert np.max(np.abs(inverse_dft(forward_dft(field)) - field.values)) <= 1e-9

    def test_zero_spectrum(self) -> None:
        """Test that a zero spectrum gives a zero field."""
        grid = make_field(np.zeros((8, 8))).grid
        result = inverse_dft(Spectrum(values=np.zeros((8, 8), dtype=np.complex128), grid=grid))
        assert np.all(result == 0)

    def test_asymmetric_spectrum_is_rejected(self) -> None:
        """Test that a spectrum without conjugate symmetry raises NonRealInverseError."""
        grid = make_field(np.zeros((8, 8))).grid
        values = np.zeros((8, 8), dtype=np.complex128)
        values[1, 0] = 1.0
        with pytest.raises(NonRealInverseError, match="non-real inverse"):
            inverse_dft(Spectrum(values=values, grid=grid))


class TestNormalize(unittest.TestCase):
    """Unit test class for the shift normalization."""

    def test_min_zero_max_one(self) -> None:
        """Test that normalized values span exactly [0, 1]."""
        values = normalize_values(np.array([[2.0, 3.0], [5.0, 4.0]]))
        assert values.min() == 0.0
        assert values.max() == 1.0

    def test_constant_field_maps_to_zeros(self) -> None:
        """Test that a constant field normalizes to all zeros."""
        assert np.all(normalize_values(np.full((4, 4), 7.0)) == 0.0)

    def test_idempotent(self) -> None:
        """Test that normalizing twice changes nothing."""
        field = smooth(random_pixel_field(32, 20, seed=6), 4.0, normalize=False)
        once = normalize_field(field)
        twice = normalize_field(once)
        assert twice is once
        assert np.array_equal(normalize_values(once.values), once.values)


class TestSmooth(unittest.TestCase):
    """Unit test class for the FFT smoothing path."""

    def setUp(self) -> None:
        """Place a single occupied pixel at the centre of a 64 x 64 unit-extent mesh."""
        self.centre = pixel_field(64, [(32, 32)])

    def test_single_point_recovers_gaussian(self) -> None:
        """Test that one point smooths into exp(-2 pi^2 sigma_tilde^2 r^2)."""
        sigma_tilde = 2.0
        smoothed = smooth(self.centre, sigma_tilde, normalize=False)
        xs, ys = self.centre.grid.axis_centers()
        r2 = (xs[:, np.newaxis] - xs[32]) ** 2 + (ys[np.newaxis, :] - ys[32]) ** 2
        analytic = np.exp(-2.0 * math.pi**2 * sigma_tilde**2 * r2)
        assert np.corrcoef(smoothed.values.ravel(), analytic.ravel())[0, 1] > 0.9999

    def test_single_point_unique_maximum(self) -> None:
        """Test that one point gives a unit maximum at its own pixel and decays away from it."""
        smoothed = smooth(self.centre, 2.0)
        assert smoothed.values[32, 32] == 1.0
        assert np.count_nonzero(smoothed.values == 1.0) == 1
        row = smoothed.values[32:48, 32]
        assert np.all(np.diff(row) < 0)

    def test_close_points_merge_into_one_maximum(self) -> None:
        """Test that two points closer than two spatial deviations give a single maximum."""
        field = pixel_field(64, [(28, 32), (36, 32)])
        smoothed = smooth(field, 2.0)
        # spatial deviation 64 / (4 pi) ~ 5.1 px, points 8 px apart
        maxima = {p for p in strict_maxima_scan(smoothed.values) if smoothed.values[p] > 1e-6}
        assert maxima == {(32, 32)}

    def test_far_points_keep_two_maxima(self) -> None:
        """Test that two points well beyond two spatial deviations keep separate maxima."""
        field = pixel_field(64, [(16, 32), (48, 32)])
        smoothed = smooth(field, 4.0)
        maxima = {p for p in strict_maxima_scan(smoothed.values) if smoothed.values[p] > 0.5}
        assert maxima == {(16, 32), (48, 32)}

    def test_zero_frequency_sum(self) -> None:
        """Test that the un-normalized field sums to the prefactor times the occupied count."""
        field = random_pixel_field(64, 30, seed=9)
        sigma_tilde = 4.0
        # circular convolution keeps the whole mass on the mesh
        smoothed = smooth(field, sigma_tilde, normalize=False, pad_sigmas=0.0)
        expected = 30 / (2.0 * math.pi * sigma_tilde**2)
        assert math.isclose(smoothed.values.sum(), expected, rel_tol=1e-9)

    def test_prefactor_cancels_after_normalization(self) -> None:
        """Test that the prefactor has no effect on the normalized field."""
        field = random_pixel_field(64, 30, seed=10)
        with_prefactor = smooth(field, 5.0)
        without = smooth(field, 5.0, include_prefactor=False)
        assert np.max(np.abs(with_prefactor.values - without.values)) <= 1e-12

    def test_result_metadata(self) -> None:
        """Test that the smoothed field records its bandwidth and normalization."""
        smoothed = smooth(self.centre, 2.0)
        assert isinstance(smoothed, SmoothedField)
        assert smoothed.sigma_tilde == 2.0
        assert smoothed.normalized
        assert math.isclose(smoothed.sigma_spatial, 1.0 / (4.0 * math.pi))

    def test_more_smoothing_never_adds_maxima(self) -> None:
        """Test that lowering sigma_tilde does not increase the number of thresholded maxima."""
        field = three_cluster_field()
        counts = []
        for n in (1, 2, 3, 4, 6):
            values = smooth(field, n / field.grid.extent).values
            thresholded = np.where(values < 0.1, 0.0, values)
            counts.append(int(np.count_nonzero(strict_local_maxima(thresholded))))
        assert counts == sorted(counts)
        assert counts[-1] == 3


class TestDirectOracle(unittest.TestCase):
    """Unit test class for smooth_direct_oracle."""

    def test_single_point_agrees_with_fft(self) -> None:
        """Test that one centred point gives the same normalized field on both paths."""
        field = pixel_field(64, [(32, 32)])
        fast = smooth(field, 4.0)
        direct = smooth_direct_oracle(field, 4.0)
        assert interior_deviation(fast.values, direct.values, 8) <= 1e-6

    def test_unnormalized_scale(self) -> None:
        """Test that the FFT field is dx^2 times the direct sum before normalization."""
        field = pixel_field(64, [(30, 33)])
        fast = smooth(field, 4.0, normalize=False)
        direct = smooth_direct_oracle(field, 4.0, normalize=False)
        dx = field.grid.dx
        assert math.isclose(fast.values[30, 33], dx**2 * direct.values[30, 33], rel_tol=1e-6)

    def test_random_fields_agree_away_from_edges(self) -> None:
        """Test that FFT and direct summation agree on random fields at several bandwidths."""
        rng = np.random.default_rng(2024)
        for trial in range(21):
            sigma_tilde = (2.0, 4.0, 8.0)[trial % 3]
            # keep occupied pixels three spatial deviations from the edges
            band = math.ceil(3.0 * 64 / (2.0 * math.pi * sigma_tilde))
            count = int(rng.integers(1, 31))
            field = random_pixel_field(64, count, seed=trial, border=band)
            fast = smooth(field, sigma_tilde)
            direct = smooth_direct_oracle(field, sigma_tilde)
            assert interior_deviation(fast.values, direct.values, band) <= 1e-3
            tops = np.sort(direct.values[strict_local_maxima(direct.values)])
            if tops.size < 2 or tops[-1] - tops[-2] > 2e-3:
                assert np.argmax(fast.values) == np.argmax(direct.values)

    def test_edge_points_agree_on_whole_mesh(self) -> None:
        """Test that points on opposite edges agree with direct summation at every pixel."""
        field = pixel_field(64, [(0, 0), (63, 63), (0, 40), (63, 10)])
        for sigma_tilde in (2.0, 4.0, 8.0):
            fast = smooth(field, sigma_tilde)
            direct = smooth_direct_oracle(field, sigma_tilde)
            assert np.max(np.abs(fast.values - direct.values)) <= 1e-3

    def test_circular_convolution_wraps_without_padding(self) -> None:
        """Test that mass at one edge reaches the opposite edge when padding is disabled."""
        field = pixel_field(64, [(0, 32)])
        wrapped = smooth(field, 4.0, normalize=False, pad_sigmas=0.0)
        padded = smooth(field, 4.0, normalize=False)
        assert math.isclose(wrapped.values[63, 32], wrapped.values[1, 32], rel_tol=1e-9)
        assert padded.values[63, 32] < 1e-12 * padded.values[1, 32]

    def test_empty_raster(self) -> None:
        """Test that an empty raster gives an all-zero field."""
        direct = smooth_direct_oracle(make_field(np.zeros((16, 16))), 2.0)
        assert np.all(direct.values == 0.0)

    def test_occupied_limit(self) -> None:
        """Test that the oracle refuses rasters with too many occupied pixels."""
        field = pixel_field(16, [(3, 3), (8, 8)])
        with pytest.raises(OracleTooLargeError):
            smooth_direct_oracle(field, 2.0, max_occupied=1)

    def test_invalid_bandwidth(self) -> None:
        """Test that the oracle validates sigma_tilde."""
        with pytest.raises(InvalidBandwidthError):
            smooth_direct_oracle(pixel_field(16, [(3, 3)]), 0.0)
