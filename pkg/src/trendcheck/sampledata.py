"""Deterministic synthetic datasets for demos and tests.

The hourly-temperature generator mimics the layout of public city-weather
archives: a ``datetime`` column of ``YYYY-MM-DD HH:MM:SS`` values plus one
Kelvin temperature column per city, built from an annual cycle, a diurnal
cycle, and Gaussian noise.  Values are reproducible for a fixed seed.
"""

from __future__ import annotations

import calendar
import csv
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

_YEAR_SECONDS = 365.25 * 86400.0
_HOUR = 3600.0
# Hour-to-hour persistence of the weather-system noise; 0.98 decorrelates
# over roughly two days, like passing fronts.
_NOISE_PHI = 0.98


@dataclass(frozen=True)
class CityClimate:
    """Parameters of one synthetic city's temperature process (Kelvin)."""

    name: str
    base: float
    annual_amp: float
    diurnal_amp: float
    noise_sd: float
    missing_rate: float = 0.0


DEFAULT_CITIES: tuple[CityClimate, ...] = (
    CityClimate("Detroit", base=283.5, annual_amp=13.5, diurnal_amp=4.5, noise_sd=4.5),
    CityClimate(
        "San Francisco", base=287.5, annual_amp=4.0, diurnal_amp=3.0, noise_sd=2.0,
        missing_rate=0.002,
    ),
    CityClimate("Phoenix", base=297.0, annual_amp=10.5, diurnal_amp=5.5, noise_sd=3.0),
)


def _epoch(stamp: str) -> float:
    return float(calendar.timegm(time.strptime(stamp, "%Y-%m-%d %H:%M:%S")))


def _weather_noise(rng: np.random.Generator, sd: float, n: int) -> np.ndarray:
    """AR(1) noise with the given stationary standard deviation."""
    shocks = rng.normal(0.0, sd * np.sqrt(1.0 - _NOISE_PHI**2), size=n)
    out = np.empty(n)
    state = rng.normal(0.0, sd)
    for i in range(n):
        state = _NOISE_PHI * state + shocks[i]
        out[i] = state
    return out


def write_hourly_temperatures(
    path: str | Path,
    cities: tuple[CityClimate, ...] = DEFAULT_CITIES,
    start: str = "2012-10-01 13:00:00",
    rows: int = 45_253,
    seed: int = 2012,
) -> Path:
    """Write an hourly temperature CSV and return its path.

    Annual peak is fixed in late July; the diurnal peak at 15:00 UTC.  A
    city with a non-zero ``missing_rate`` gets that fraction of its cells
    left empty, which downstream ingestion drops and counts.
    """
    path = Path(path)
    rng = np.random.default_rng(seed)
    t = _epoch(start) + _HOUR * np.arange(rows)
    annual_phase = 2.0 * np.pi * (t - _epoch("2013-07-20 00:00:00")) / _YEAR_SECONDS
    diurnal_phase = 2.0 * np.pi * ((t / _HOUR) % 24.0 - 15.0) / 24.0

    columns = []
    for city in cities:
        values = (
            city.base
            + city.annual_amp * np.cos(annual_phase)
            + city.diurnal_amp * np.cos(diurnal_phase)
            + _weather_noise(rng, city.noise_sd, rows)
        )
        cells = [f"{v:.3f}" for v in values]
        if city.missing_rate > 0:
            gaps = rng.random(rows) < city.missing_rate
            cells = ["" if gap else cell for cell, gap in zip(cells, gaps)]
        columns.append(cells)

    stamps = [
        time.strftime("%Y-%m-%d %H:%M:%S", time.gmtime(int(seconds))) for seconds in t
    ]
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["datetime", *[c.name for c in cities]])
        for i, stamp in enumerate(stamps):
            writer.writerow([stamp, *[col[i] for col in columns]])
    return path


def write_toy_series(path: str | Path) -> Path:
    """Tiny 4-point series used throughout the docs and tests."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["step", "value"])
        for x, y in [(1, 10), (2, 12), (3, 11), (4, 15)]:
            writer.writerow([x, y])
    return path
