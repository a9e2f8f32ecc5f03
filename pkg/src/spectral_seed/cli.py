"""Command-line front-end.

Subcommands:
    generate      Draw synthetic Gaussian clusters into a points CSV.
    detect        Estimate cluster centroids of a points CSV.
    kmeans        Run K-Means seeded with the peaks written by detect.
    oracle-check  Compare FFT smoothing with direct Gaussian summation.

Every command returns 0 on success and 1 when the pipeline reports an error;
oracle-check returns 2 when the deviation exceeds the tolerance. JSON outputs
embed the effective configuration.
"""

import logging
from dataclasses import asdict
from pathlib import Path
from typing import TYPE_CHECKING, Annotated

import numpy as np
import typer
from rich.console import Console
from rich.table import Table

from spectral_seed.bandwidth import BandwidthConvergenceError, ConvergenceTrace, SmoothingPassEvent
from spectral_seed.conf import RunConfig, settings
from spectral_seed.datagen import REFERENCE_CLUSTERS, generate, load_cluster_specs
from spectral_seed.events import EventBus
from spectral_seed.exceptions import SpectralSeedError
from spectral_seed.grid import build_grid, estimate_spacing, rasterize
from spectral_seed.helpers import setup_logging
from spectral_seed.io import (
    RasterExporterRegistry,
    export_raster,
    read_json,
    read_peaks_json,
    read_points_csv,
    write_assignments_csv,
    write_json,
    write_points_csv,
)
from spectral_seed.pipeline import CentroidPipeline
from spectral_seed.spectral import padded_shape, smooth, smooth_direct_oracle

if TYPE_CHECKING:
    from spectral_seed.peaks import PeakSet

logger = logging.getLogger(__name__)

console = Console()

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Estimate 2-D cluster centroids by Fourier-domain density smoothing and seed K-Means with them.",
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ORACLE_MISMATCH = 2


def _trace_table(trace: ConvergenceTrace) -> Table:
    table = Table(title=f"Bandwidth trace (epsilon={trace.epsilon:g})")
    table.add_column("n", justify="right")
    table.add_column("sigma_tilde", justify="right")
    table.add_column("correlation", justify="right")
    table.add_column("delta", justify="right")
    for entry in trace.entries:
        delta = "" if entry.delta is None else f"{entry.delta:.6f}"
        table.add_row(str(entry.n), f"{entry.sigma_tilde:.6g}", f"{entry.correlation:.6f}", delta)
    return table


def _peaks_table(peaks: PeakSet) -> Table:
    table = Table(title=f"{peaks.k} centroid(s)")
    table.add_column("#", justify="right")
    table.add_column("x", justify="right")
    table.add_column("y", justify="right")
    table.add_column("density", justify="right")
    for i, peak in enumerate(peaks.peaks):
        table.add_row(str(i), f"{peak.x:.6f}", f"{peak.y:.6f}", f"{peak.value:.4f}")
    return table


def cmd_generate(spec_file: Path | None, out_csv: Path, seed: int | None = None) -> int:
    """Write synthetic cluster points to a CSV.

    Args:
        spec_file: JSON list of cluster specs; None uses the six reference clusters.
        out_csv: Destination CSV.
        seed: Generator seed. Defaults to settings.SEED.

    Returns:
        The exit code.
    """
    try:
        specs = load_cluster_specs(spec_file) if spec_file is not None else list(REFERENCE_CLUSTERS)
        points = generate(specs, seed)
        write_points_csv(points, out_csv)
    except (SpectralSeedError, OSError) as e:
        logger.error("generate failed: %s", e)  # noqa: TRY400
        return EXIT_ERROR
    console.print(f"Wrote {len(points)} points in {len(specs)} cluster(s) to {out_csv}")
    return EXIT_OK


def cmd_detect(
    in_csv: Path,
    out_json: Path,
    config: RunConfig,
    *,
    raster_format: str | None = None,
    raster_path: Path | None = None,
    trace_path: Path | None = None,
) -> int:
    """Detect cluster centroids and write them as JSON.

    Args:
        in_csv: Points CSV.
        out_json: Destination of the peaks, trace and grid metadata.
        config: Effective run configuration, embedded in the output.
        raster_format: Registered raster format to export the smoothed field in.
        raster_path: Raster destination; defaults to out_json with the format's suffix.
        trace_path: Optional separate destination for the convergence trace.

    Returns:
        The exit code.
    """
    if raster_format is not None and not RasterExporterRegistry.is_registered(raster_format):
        known = ", ".join(RasterExporterRegistry.get_all_names())
        logger.error("detect failed: unknown raster format '%s' (known: %s)", raster_format, known)
        return EXIT_ERROR

    bus = EventBus()
    bus.subscribe(
        SmoothingPassEvent,
        lambda e: logger.debug("pass n=%d sigma_tilde=%.6g corr=%.6f", e.n, e.sigma_tilde, e.correlation),
    )
    pipeline = CentroidPipeline(config, event_bus=bus)
    try:
        points = read_points_csv(in_csv)
        detection = pipeline.detect(points)
    except BandwidthConvergenceError as e:
        logger.error("detect failed: %s", e)  # noqa: TRY400
        console.print(_trace_table(e.trace))
        if trace_path is not None:
            write_json(e.trace.to_list(), trace_path)
        return EXIT_ERROR
    except (SpectralSeedError, OSError) as e:
        logger.error("detect failed: %s", e)  # noqa: TRY400
        return EXIT_ERROR

    grid = detection.field.grid
    result = {
        "config": config.to_dict(),
        **detection.peaks.to_dict(),
        "grid": {
            "dx": grid.dx,
            "requested_dx": grid.requested_dx,
            "n_x": grid.n_x,
            "n_y": grid.n_y,
            "origin_x": grid.origin_x,
            "origin_y": grid.origin_y,
        },
        "point_count": detection.field.point_count,
        "occupied_pixels": detection.field.occupied_count,
        "collapsed_points": detection.field.collapsed_count,
        "normalization": None if detection.normalization is None else asdict(detection.normalization),
        "trace": detection.trace.to_dict(),
    }
    try:
        write_json(result, out_json)
        if trace_path is not None:
            write_json(detection.trace.to_list(), trace_path)
        if raster_format is not None:
            target = raster_path if raster_path is not None else out_json.with_suffix(f".{raster_format}")
            export_raster(detection.smoothed, target, raster_format)
    except (SpectralSeedError, OSError) as e:
        logger.error("detect failed while writing outputs: %s", e)  # noqa: TRY400
        return EXIT_ERROR

    console.print(_trace_table(detection.trace))
    console.print(_peaks_table(detection.peaks))
    return EXIT_OK


def cmd_kmeans(
    in_csv: Path,
    peaks_json: Path,
    out_json: Path,
    *,
    assignments_path: Path | None = None,
    max_iter: int | None = None,
    tol: float | None = None,
) -> int:
    """Run K-Means seeded with detected peaks.

    Args:
        in_csv: Points CSV.
        peaks_json: Output of the detect command.
        out_json: Destination of the K-Means result.
        assignments_path: Optional CSV receiving the points with their cluster index.
        max_iter: Lloyd iteration limit. Defaults to settings.KMEANS_MAX_ITER.
        tol: Centroid shift tolerance. Defaults to settings.KMEANS_TOL.

    Returns:
        The exit code.
    """
    max_iter = settings.KMEANS_MAX_ITER if max_iter is None else max_iter
    tol = settings.KMEANS_TOL if tol is None else tol
    try:
        points = read_points_csv(in_csv)
        peaks = read_peaks_json(peaks_json)
        result = CentroidPipeline().cluster(points, peaks, max_iter=max_iter, tol=tol)
        detect_config = read_json(peaks_json).get("config")
        write_json(
            {"config": {"max_iter": max_iter, "tol": tol, "detect": detect_config}, **result.to_dict()},
            out_json,
        )
        if assignments_path is not None:
            write_assignments_csv(points, result.assignments, assignments_path)
    except (SpectralSeedError, OSError, ValueError) as e:
        logger.error("kmeans failed: %s", e)  # noqa: TRY400
        return EXIT_ERROR

    console.print(f"K-Means k={result.k}: inertia {result.inertia:.6g} after {result.iterations} iteration(s)")
    return EXIT_OK


def cmd_oracle_check(
    in_csv: Path,
    sigma_tilde: float | None = None,
    *,
    dx: float | None = None,
    gap_fraction: float | None = None,
    no_margin: bool = False,
    tolerance: float | None = None,
) -> int:
    """Compare FFT smoothing with direct Gaussian summation on a small input.

    Every pixel of the mesh is compared. With ``no_margin`` the grid margin and
    the zero padding of the transform are both disabled, which exposes the
    wrap-around of the circular convolution.

    Args:
        in_csv: Points CSV.
        sigma_tilde: Frequency-domain standard deviation; defaults to 4 / L.
        dx: Mesh spacing; estimated from the points when omitted.
        gap_fraction: Gap fraction for the spacing estimate.
        no_margin: Disable the grid margin and the transform padding.
        tolerance: Accepted deviation. Defaults to settings.ORACLE_TOLERANCE.

    Returns:
        0 when the deviation is within tolerance, 2 when it is not, 1 on errors.
    """
    tolerance = settings.ORACLE_TOLERANCE if tolerance is None else tolerance
    try:
        points = read_points_csv(in_csv)
        if dx is None:
            dx = estimate_spacing(points, gap_fraction)
        if no_margin:
            grid = build_grid(points, dx, margin_px=0, margin_fraction=0.0)
            pad_sigmas = 0.0
        else:
            grid = build_grid(points, dx)
            pad_sigmas = settings.FFT_PAD_SIGMAS
        if sigma_tilde is None:
            sigma_tilde = 4.0 / grid.extent
        field = rasterize(points, grid)
        fast = smooth(field, sigma_tilde, pad_sigmas=pad_sigmas)
        direct = smooth_direct_oracle(field, sigma_tilde)
    except (SpectralSeedError, OSError, ValueError) as e:
        logger.error("oracle-check failed: %s", e)  # noqa: TRY400
        return EXIT_ERROR

    deviation = float(np.max(np.abs(fast.values - direct.values)))
    padded = padded_shape(grid, sigma_tilde, pad_sigmas)

    table = Table(title="FFT smoothing vs direct summation")
    table.add_column("quantity")
    table.add_column("value", justify="right")
    table.add_row("grid", f"{grid.n_x}x{grid.n_y}, dx={grid.dx:.6g}")
    table.add_row("transform", f"{padded[0]}x{padded[1]}")
    table.add_row("sigma_tilde", f"{sigma_tilde:.6g}")
    table.add_row("occupied pixels", str(field.occupied_count))
    table.add_row("max deviation", f"{deviation:.3e}")
    table.add_row("tolerance", f"{tolerance:.3e}")
    console.print(table)

    if deviation > tolerance:
        logger.error("Deviation %.3e exceeds tolerance %.3e", deviation, tolerance)
        return EXIT_ORACLE_MISMATCH
    return EXIT_OK


@app.callback()
def main(
    log_level: Annotated[str | None, typer.Option("--log-level", help="DEBUG, INFO, WARNING or ERROR.")] = None,
) -> None:
    """Configure logging for every subcommand."""
    try:
        setup_logging(log_level or settings.LOG_LEVEL)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--log-level") from e


@app.command("generate")
def generate_command(
    output: Annotated[Path, typer.Option("--output", "-o", help="Destination points CSV.")],
    spec: Annotated[
        Path | None,
        typer.Option("--spec", "-s", help="JSON list of cluster specs (default: the six reference clusters)."),
    ] = None,
    seed: Annotated[int | None, typer.Option("--seed", help="Generator seed.")] = None,
) -> None:
    """Generate synthetic Gaussian clusters."""
    raise typer.Exit(cmd_generate(spec, output, seed))


@app.command("detect")
def detect_command(
    input_csv: Annotated[Path, typer.Option("--input", "-i", help="Points CSV.")],
    output: Annotated[Path, typer.Option("--output", "-o", help="Destination JSON.")],
    epsilon: Annotated[float | None, typer.Option("--epsilon", help="Bandwidth convergence threshold.")] = None,
    peak_threshold: Annotated[
        float | None, typer.Option("--peak-threshold", help="Density floor for valid maxima.")
    ] = None,
    gap_fraction: Annotated[float | None, typer.Option("--gap-fraction", help="Fraction of gaps for dx.")] = None,
    gap_order: Annotated[str | None, typer.Option("--gap-order", help="largest, smallest or leading.")] = None,
    grid_cap: Annotated[int | None, typer.Option("--grid-cap", help="Maximum pixels per axis.")] = None,
    max_iter: Annotated[int | None, typer.Option("--max-iter", help="Bandwidth iteration limit.")] = None,
    seed: Annotated[int | None, typer.Option("--seed", help="Recorded in the output config.")] = None,
    dx: Annotated[float | None, typer.Option("--dx", help="Fixed mesh spacing instead of the estimate.")] = None,
    normalize: Annotated[bool, typer.Option("--normalize", help="Min-max normalize the predictors first.")] = False,
    no_margin: Annotated[bool, typer.Option("--no-margin", help="Disable the grid margin (testing only).")] = False,
    emit_raster: Annotated[str | None, typer.Option("--emit-raster", help="Raster format: csv or pgm.")] = None,
    raster: Annotated[Path | None, typer.Option("--raster", help="Raster destination.")] = None,
    trace: Annotated[Path | None, typer.Option("--trace", help="Separate trace JSON destination.")] = None,
) -> None:
    """Detect cluster centroids of a point set."""
    margins = {"margin_px": 0, "margin_fraction": 0.0} if no_margin else {}
    config = RunConfig.from_settings(
        epsilon=epsilon,
        peak_threshold=peak_threshold,
        gap_fraction=gap_fraction,
        gap_order=gap_order,
        grid_cap=grid_cap,
        max_iter_bandwidth=max_iter,
        seed=seed,
        dx=dx,
        normalize=normalize,
        **margins,
    )
    raise typer.Exit(
        cmd_detect(input_csv, output, config, raster_format=emit_raster, raster_path=raster, trace_path=trace)
    )


@app.command("kmeans")
def kmeans_command(
    input_csv: Annotated[Path, typer.Option("--input", "-i", help="Points CSV.")],
    peaks: Annotated[Path, typer.Option("--peaks", "-p", help="JSON written by detect.")],
    output: Annotated[Path, typer.Option("--output", "-o", help="Destination JSON.")],
    assignments: Annotated[
        Path | None, typer.Option("--assignments", help="CSV of points with their cluster index.")
    ] = None,
    max_iter: Annotated[int | None, typer.Option("--max-iter", help="Lloyd iteration limit.")] = None,
    tol: Annotated[float | None, typer.Option("--tol", help="Centroid shift tolerance.")] = None,
) -> None:
    """Run K-Means seeded with detected peaks."""
    raise typer.Exit(cmd_kmeans(input_csv, peaks, output, assignments_path=assignments, max_iter=max_iter, tol=tol))


@app.command("oracle-check")
def oracle_check_command(
    input_csv: Annotated[Path, typer.Option("--input", "-i", help="Points CSV.")],
    sigma_tilde: Annotated[float | None, typer.Option("--sigma-tilde", help="Default: 4 / L.")] = None,
    dx: Annotated[float | None, typer.Option("--dx", help="Fixed mesh spacing.")] = None,
    gap_fraction: Annotated[float | None, typer.Option("--gap-fraction", help="Fraction of gaps for dx.")] = None,
    no_margin: Annotated[bool, typer.Option("--no-margin", help="Expose circular wrap-around.")] = False,
    tolerance: Annotated[float | None, typer.Option("--tolerance", help="Accepted deviation.")] = None,
) -> None:
    """Compare FFT smoothing against direct Gaussian summation."""
    raise typer.Exit(
        cmd_oracle_check(
            input_csv,
            sigma_tilde,
            dx=dx,
            gap_fraction=gap_fraction,
            no_margin=no_margin,
            tolerance=tolerance,
        )
    )
