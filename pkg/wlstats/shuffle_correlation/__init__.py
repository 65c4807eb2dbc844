"""Shuffled baselines and the short-range correlation metric C_n.

C_n = Φ_n(shuffled) - Φ_n(original). Every complete segment is shuffled on
its own, ``repeats`` times, each time with a seed derived from the base
seed, the repeat index and the segment index.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, NamedTuple, Sequence, Tuple

from ..errors import ConfigError, ContractError, EmptyInputError
from ..ngram_entropy import segment_entropy
from ..stats_moments import DEFAULT_BLOCK_LEN, SegmentView, segment
from ..tokenizer import WordLengthSeries
from .splitmix import GENERATOR, SEED_MIX, derive_seed, fisher_yates

LOGGER = logging.getLogger(__name__)

DEFAULT_REPEATS = 10


class CorrelationResult(NamedTuple):
    """C_n with the entropies and seeds it was computed from."""
    n: int
    c: float
    phi_original: float
    phi_shuffled_mean: float
    repeats: int
    base_seed: int
    per_repeat: Tuple[float, ...] = ()
    generator: str = GENERATOR
    seed_mix: str = SEED_MIX

    def flatten(self) -> dict:
        return {
            'n': self.n,
            'c': self.c,
            'phi_original': self.phi_original,
            'phi_shuffled_mean': self.phi_shuffled_mean,
            'repeats': self.repeats,
            'base_seed': self.base_seed,
            'per_repeat': list(self.per_repeat),
            'generator': self.generator,
            'seed_mix': self.seed_mix,
        }


def shuffle_segment(view: SegmentView, seed: int) -> SegmentView:
    """Seeded Fisher-Yates permutation of a segment's word lengths."""
    if not view.values.size:
        raise ContractError('cannot shuffle an empty segment')
    return SegmentView(view.language, view.index, fisher_yates(view.values, seed))


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)


def correlations(  # pylint: disable=too-many-arguments
        series: WordLengthSeries,
        orders: Sequence[int],
        block_len: int = DEFAULT_BLOCK_LEN,
        repeats: int = DEFAULT_REPEATS,
        base_seed: int = 0,
        workers: int = 1) -> Dict[int, CorrelationResult]:
    """C_n for several orders, sharing one shuffle per (repeat, segment)."""
    if repeats < 1:
        raise ConfigError('repeats must be >= 1, got {}'.format(repeats))
    if workers < 1:
        raise ConfigError('workers must be >= 1, got {}'.format(workers))
    if not 0 <= base_seed < 2 ** 64:
        raise ConfigError('base_seed must be a 64-bit unsigned integer')
    orders = tuple(sorted(set(orders)))
    if not orders or orders[0] < 1:
        raise ConfigError('orders must be >= 1')
    views = segment(series, block_len)
    if not views:
        raise EmptyInputError(
            'no complete segments: {} words, block_len {}'.format(
                series.N, block_len
            )
        )

    original = {
        n: _mean([segment_entropy(view.values, n) for view in views])
        for n in orders
    }

    def shuffled_entropies(task: Tuple[int, SegmentView]) -> List[float]:
        repeat, view = task
        seed = derive_seed(base_seed, repeat, view.index)
        values = shuffle_segment(view, seed).values
        return [segment_entropy(values, n) for n in orders]

    tasks = [(repeat, view) for repeat in range(repeats) for view in views]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(shuffled_entropies, tasks))
    else:
        results = [shuffled_entropies(task) for task in tasks]

    per_segment = len(views)
    correlation = {}
    for position, n in enumerate(orders):
        per_repeat = tuple(
            _mean([
                row[position]
                for row in results[repeat * per_segment:(repeat + 1) * per_segment]
            ])
            for repeat in range(repeats)
        )
        shuffled = _mean(per_repeat)
        correlation[n] = CorrelationResult(
            n=n,
            c=shuffled - original[n],
            phi_original=original[n],
            phi_shuffled_mean=shuffled,
            repeats=repeats,
            base_seed=base_seed,
            per_repeat=per_repeat,
        )
        LOGGER.debug('%s: C_%d = %.6f (%d segments x %d repeats)',
                     series.language, n, correlation[n].c, per_segment, repeats)
    return correlation


def c_n(  # pylint: disable=too-many-arguments
        series: WordLengthSeries,
        n: int,
        block_len: int = DEFAULT_BLOCK_LEN,
        repeats: int = DEFAULT_REPEATS,
        base_seed: int = 0,
        workers: int = 1) -> CorrelationResult:
    """C_n of one gram order."""
    return correlations(
        series, (n,), block_len=block_len, repeats=repeats,
        base_seed=base_seed, workers=workers
    )[n]


__all__ = [
    'CorrelationResult', 'GENERATOR', 'SEED_MIX', 'c_n', 'correlations',
    'derive_seed', 'fisher_yates', 'shuffle_segment',
]
