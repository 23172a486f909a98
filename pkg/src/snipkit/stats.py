"""Distribution summaries and unit-bin histograms of indicator values."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

PERCENTILES = (25, 50, 75, 90, 99)


@dataclass(frozen=True)
class DistributionSummary:
    n: int
    mean: float
    std: float
    skewness: float
    percentiles: dict[int, float]


def distribution_summary(values) -> DistributionSummary:
    """Mean, sample std (n-1), moment skewness and linear-interpolated percentiles.

    None entries are dropped. Skewness is ``m3 / m2**1.5`` with population
    central moments, and 0 for constant data. Percentile p sits at 1-based
    rank ``1 + p/100 * (n-1)`` of the sorted values.
    """
    x = np.asarray([v for v in values if v is not None], dtype=float)
    n = len(x)
    if n == 0:
        raise ValueError("no values to summarize")
    if x.min() == x.max():
        # summing equal floats can leave rounding residue in the moments
        c = float(x[0])
        return DistributionSummary(n, c, 0.0, 0.0, {p: c for p in PERCENTILES})
    mean = float(x.mean())
    dev = x - mean
    m2 = float(np.mean(dev**2))
    m3 = float(np.mean(dev**3))
    std = float(np.sqrt(np.sum(dev**2) / (n - 1))) if n > 1 else 0.0
    skew = m3 / m2**1.5 if m2 > 0 else 0.0
    pct = np.percentile(x, PERCENTILES, method="linear")
    return DistributionSummary(n, mean, std, skew, {p: float(v) for p, v in zip(PERCENTILES, pct)})


def histogram(values) -> dict[float, float]:
    """Percentage of values per unit bin ``[k, k+1)``, keyed by midpoint ``k + 0.5``.

    Every bin from 0 up to the highest occupied one is present, empty bins
    included.
    """
    x = [v for v in values if v is not None]
    if not x:
        raise ValueError("no values to bin")
    if any(v < 0 for v in x):
        raise ValueError("histogram values must be non-negative")
    counts = Counter(math.floor(v) for v in x)
    top = max(counts)
    return {k + 0.5: 100.0 * counts.get(k, 0) / len(x) for k in range(top + 1)}
