"""Segmentation, distribution moments and density curves.

Moments use the population convention (divisor = segment length) and are
averaged over complete segments. Skewness and kurtosis of a constant
segment are undefined and reported as ``None``.
"""
import logging
import math
from typing import Dict, List, NamedTuple, Optional, Sequence

import numpy as np
from scipy.integrate import trapezoid
from scipy.stats import gaussian_kde, kurtosis, skew

from ..errors import ConfigError, ContractError, EmptyInputError
from ..tokenizer import WordLengthSeries
from .frequency import FrequencyTable, Gram

LOGGER = logging.getLogger(__name__)

DEFAULT_BLOCK_LEN = 1000
DEFAULT_GRID_SIZE = 512
MOMENT_FIELDS = ('mean', 'sd', 'skewness', 'kurtosis')


class SegmentView(NamedTuple):
    """A complete block of consecutive word lengths."""
    language: str
    index: int
    values: np.ndarray


class MomentSummary(NamedTuple):
    """First four moments of one segment, or their average over segments."""
    mean: float
    sd: float
    skewness: Optional[float]
    kurtosis: Optional[float]
    n_segments: int = 1

    def flatten(self) -> dict:
        return self._asdict()


class DensityCurve(NamedTuple):
    """Gaussian kernel density estimate on a uniform grid."""
    grid: np.ndarray
    density: np.ndarray
    bandwidth: float


def segment(series: WordLengthSeries,
            block_len: int = DEFAULT_BLOCK_LEN) -> List[SegmentView]:
    """Split a series into complete, disjoint, consecutive blocks."""
    if block_len < 2:
        raise ConfigError('block_len must be >= 2, got {}'.format(block_len))
    count = series.N // block_len
    dropped = series.N - count * block_len
    if dropped:
        LOGGER.debug(
            '%s: %d trailing words outside a complete segment',
            series.language, dropped
        )
    return [
        SegmentView(
            series.language, index,
            series.values[index * block_len:(index + 1) * block_len]
        )
        for index in range(count)
    ]


def moments(view: SegmentView) -> MomentSummary:
    """Mean, sd, skewness and kurtosis (non-excess) of one segment."""
    if not view.values.size:
        raise ContractError('cannot take moments of an empty segment')
    values = np.asarray(view.values, dtype=np.float64)
    mean = float(np.mean(values))
    sd = float(np.std(values))
    if sd == 0.0:
        return MomentSummary(mean, 0.0, None, None, 1)
    return MomentSummary(
        mean, sd,
        float(skew(values, bias=True)),
        float(kurtosis(values, fisher=False, bias=True)),
        1
    )


def _mean(values: Sequence[float]) -> Optional[float]:
    if not values:
        return None
    return math.fsum(values) / len(values)


def average_moments(per_segment: Sequence[MomentSummary]) -> MomentSummary:
    """Average per-segment moments; undefined ratios are left out."""
    if not per_segment:
        raise EmptyInputError('no complete segments')
    return MomentSummary(
        mean=_mean([summary.mean for summary in per_segment]),
        sd=_mean([summary.sd for summary in per_segment]),
        skewness=_mean([
            summary.skewness for summary in per_segment
            if summary.skewness is not None
        ]),
        kurtosis=_mean([
            summary.kurtosis for summary in per_segment
            if summary.kurtosis is not None
        ]),
        n_segments=len(per_segment),
    )


def whole_series_moments(series: WordLengthSeries) -> MomentSummary:
    """Moments of the unsegmented series."""
    if not series.N:
        raise EmptyInputError('empty series: {}'.format(series.language))
    return moments(SegmentView(series.language, 0, series.values))


def segmentation_effect(whole: MomentSummary,
                        averaged: MomentSummary) -> Dict[str, Optional[float]]:
    """Relative difference of segment-averaged against whole-series moments."""
    effect = {}
    for field in MOMENT_FIELDS:
        reference = getattr(whole, field)
        value = getattr(averaged, field)
        if reference is None or value is None or reference == 0:
            effect[field] = None
        else:
            effect[field] = abs(value - reference) / abs(reference)
    return effect


def moment_samples(per_segment: Sequence[MomentSummary]) -> Dict[str, List[float]]:
    """Defined per-segment values of each moment."""
    return {
        field: [
            getattr(summary, field) for summary in per_segment
            if getattr(summary, field) is not None
        ]
        for field in MOMENT_FIELDS
    }


def unigram_distribution(series: WordLengthSeries) -> FrequencyTable:
    """Word-length distribution of the full series."""
    if not series.N:
        raise EmptyInputError('empty series: {}'.format(series.language))
    return FrequencyTable.from_values(series.values, 1)


def silverman_bandwidth(samples: np.ndarray) -> float:
    """1.06 * sigma * n^(-1/5), sigma the sample standard deviation."""
    return 1.06 * float(np.std(samples, ddof=1)) * samples.size ** -0.2


def kde(samples: Sequence[float], grid_size: int = DEFAULT_GRID_SIZE) -> DensityCurve:
    """Gaussian KDE on a grid spanning [min - 3h, max + 3h]."""
    samples = np.asarray(samples, dtype=np.float64)
    if samples.size < 2:
        raise EmptyInputError('kde needs at least two samples')
    if grid_size < 2:
        raise ConfigError('grid_size must be >= 2')
    if float(np.ptp(samples)) == 0.0:
        raise ContractError('zero bandwidth')
    factor = 1.06 * samples.size ** -0.2
    estimator = gaussian_kde(samples, bw_method=factor)
    bandwidth = math.sqrt(float(estimator.covariance[0, 0]))
    grid = np.linspace(
        float(samples.min()) - 3 * bandwidth,
        float(samples.max()) + 3 * bandwidth,
        grid_size
    )
    density = estimator(grid)
    density = density / trapezoid(density, grid)
    return DensityCurve(grid, density, bandwidth)


__all__ = [
    'DEFAULT_BLOCK_LEN', 'DensityCurve', 'FrequencyTable', 'Gram',
    'MOMENT_FIELDS', 'MomentSummary', 'SegmentView', 'average_moments', 'kde',
    'moment_samples', 'moments', 'segment', 'segmentation_effect',
    'silverman_bandwidth', 'unigram_distribution', 'whole_series_moments',
]
