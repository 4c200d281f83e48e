import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from trendcheck import PointSeries
from trendcheck.sampledata import write_hourly_temperatures, write_toy_series


@pytest.fixture
def toy_begin() -> PointSeries:
    return PointSeries(np.array([1.0, 2.0]), np.array([10.0, 12.0]))


@pytest.fixture
def toy_end() -> PointSeries:
    return PointSeries(np.array([3.0, 4.0]), np.array([11.0, 15.0]))


@pytest.fixture(scope="session")
def toy_csv(tmp_path_factory) -> Path:
    return write_toy_series(tmp_path_factory.mktemp("toy") / "toy.csv")


@pytest.fixture(scope="session")
def weather_csv(tmp_path_factory) -> Path:
    """Synthetic hourly city temperatures (45,253 rows, deterministic)."""
    return write_hourly_temperatures(tmp_path_factory.mktemp("weather") / "temperature.csv")


def make_lattice_instance(rng: np.random.Generator, max_points: int = 200, windowed: bool = False):
    """Random begin/end series on exactly representable lattices.

    x values sit on an integer grid (duplicates allowed) and y values on a
    quarter-integer grid, so float comparisons in any evaluation order agree
    with exact arithmetic and engine counts can be compared for equality.
    """
    n_b = int(rng.integers(1, max_points + 1))
    n_e = int(rng.integers(1, max_points + 1))
    begin = PointSeries(
        xs=np.sort(rng.integers(0, 60, size=n_b)).astype(float),
        ys=rng.integers(-80, 81, size=n_b) * 0.25,
    )
    end = PointSeries(
        xs=np.sort(rng.integers(0, 60, size=n_e)).astype(float),
        ys=rng.integers(-80, 81, size=n_e) * 0.25,
    )
    window = None
    if windowed:
        # pick a window realized by at least one pair so the space is non-empty
        deltas = np.unique(end.xs[np.newaxis, :] - begin.xs[:, np.newaxis])
        deltas = deltas[deltas > 0]
        if len(deltas) == 0:
            return make_lattice_instance(rng, max_points, windowed)
        window = float(rng.choice(deltas))
    return begin, end, window


def random_lattice_bounds(rng: np.random.Generator) -> tuple[float, float]:
    """Random [lo, hi] on the quarter-integer lattice, endpoints may be infinite."""
    lo = -np.inf if rng.random() < 0.25 else float(rng.integers(-90, 91)) * 0.25
    hi = np.inf if rng.random() < 0.25 else float(rng.integers(-90, 91)) * 0.25
    if np.isfinite(lo) and np.isfinite(hi) and lo > hi:
        lo, hi = hi, lo
    return lo, hi
