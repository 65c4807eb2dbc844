"""Gliding n-gram counts, block entropies and rank tables.

Block entropies are plug-in Shannon entropies in nats, computed per
segment and averaged. Rank tables come from whole-series counts.
"""
import logging
import math
from typing import Iterator, List, NamedTuple, Sequence, Tuple

import numpy as np

from ..errors import ContractError, EmptyInputError
from ..stats_moments import DEFAULT_BLOCK_LEN, FrequencyTable, Gram, SegmentView, segment
from ..tokenizer import WordLengthSeries

LOGGER = logging.getLogger(__name__)

DEFAULT_CHUNK = 1 << 20


class EntropyResult(NamedTuple):
    """Segment-averaged block entropy of one gram order."""
    n: int
    phi: float
    per_segment: Tuple[float, ...]
    n_segments: int

    def flatten(self) -> dict:
        return {
            'n': self.n,
            'phi': self.phi,
            'per_segment': list(self.per_segment),
            'n_segments': self.n_segments,
        }


class RankRow(NamedTuple):
    rank: int
    gram: Gram
    probability: float


class RankTable(NamedTuple):
    """Grams by descending probability; ties by ascending gram."""
    n: int
    rows: Tuple[RankRow, ...]


def count_ngrams(view: SegmentView, n: int) -> FrequencyTable:
    """Count the K = len - n + 1 overlapping grams of a segment."""
    if n < 1 or n > view.values.size:
        raise ContractError(
            'gram order {} outside 1..{}'.format(n, view.values.size)
        )
    return FrequencyTable.from_values(view.values, n)


def entropy_of_counts(counts: np.ndarray) -> float:
    """-sum p ln p over counts, summed exactly in the given order."""
    total = int(counts.sum())
    if not total:
        raise EmptyInputError('empty frequency table')
    probabilities = counts / total
    return 0.0 - math.fsum((probabilities * np.log(probabilities)).tolist())


def entropy(table: FrequencyTable) -> float:
    """Shannon entropy (nats) of a frequency table."""
    if not len(table):
        raise EmptyInputError('empty frequency table')
    return entropy_of_counts(table.counts)


def segment_entropy(values: np.ndarray, n: int) -> float:
    """Entropy of the n-gram table of one block of values."""
    return entropy(FrequencyTable.from_values(values, n))


def phi_n(series: WordLengthSeries, n: int,
          block_len: int = DEFAULT_BLOCK_LEN) -> EntropyResult:
    """Average n-gram block entropy over the complete segments of a series."""
    views = segment(series, block_len)
    if not views:
        raise EmptyInputError(
            'no complete segments: {} words, block_len {}'.format(
                series.N, block_len
            )
        )
    per_segment = tuple(entropy(count_ngrams(view, n)) for view in views)
    phi = math.fsum(per_segment) / len(per_segment)
    LOGGER.debug('%s: phi_%d = %.6f over %d segments',
                 series.language, n, phi, len(per_segment))
    return EntropyResult(n, phi, per_segment, len(per_segment))


def _chunks(values: np.ndarray, n: int, chunk: int) -> Iterator[np.ndarray]:
    # consecutive chunks overlap by n - 1 so every window is counted once
    step = max(chunk, n)
    start = 0
    while start + n <= values.size:
        yield values[start:start + step + n - 1]
        start += step


def corpus_table(series: WordLengthSeries, n: int,
                 chunk: int = DEFAULT_CHUNK) -> FrequencyTable:
    """Gliding n-gram table over the whole series, merged from chunks."""
    if series.N < n:
        raise EmptyInputError(
            '{}: {} words, cannot count {}-grams'.format(series.language, series.N, n)
        )
    table = None
    for part in _chunks(series.values, n, chunk):
        partial = FrequencyTable.from_values(part, n)
        table = partial if table is None else table.merge(partial)
    return table


def rank_table(table: FrequencyTable) -> RankTable:
    """Order grams by descending probability, ties by ascending gram."""
    if not len(table):
        raise EmptyInputError('empty frequency table')
    # keys are already in ascending gram order and the sort is stable
    order = np.argsort(-table.counts, kind='stable')
    probabilities = table.probabilities
    grams = table.keys.tolist()
    rows = tuple(
        RankRow(rank, tuple(grams[index]), float(probabilities[index]))
        for rank, index in enumerate(order.tolist(), start=1)
    )
    return RankTable(table.n, rows)


def format_gram(gram: Sequence[int]) -> str:
    """Render a gram as dash-separated lengths, e.g. ``3-5-2``."""
    return '-'.join(str(length) for length in gram)


def parse_gram(text: str) -> Gram:
    return tuple(int(part) for part in text.split('-'))


def rank_rows(table: RankTable) -> List[List[str]]:
    """CSV rows (rank, gram, probability) with round-trip exact floats."""
    return [
        [str(row.rank), format_gram(row.gram), repr(row.probability)]
        for row in table.rows
    ]


def rank_table_from_rows(rows: Sequence[Sequence[str]]) -> RankTable:
    """Inverse of :func:`rank_rows`."""
    parsed = tuple(
        RankRow(int(rank), parse_gram(gram), float(probability))
        for rank, gram, probability in rows
    )
    if not parsed:
        raise EmptyInputError('empty rank table')
    return RankTable(len(parsed[0].gram), parsed)
