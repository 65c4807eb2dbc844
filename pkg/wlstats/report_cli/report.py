"""Per-language reports, error records and the cross-language summary."""
import json
from typing import Dict, List, Optional, Sequence

from .. import VERSION
from ..corpus_ingest import EUROPARL_LANGUAGES
from ..ngram_entropy import EntropyResult, RankTable
from ..schema import (
    ERROR_RECORD_SCHEMA, ERROR_TYPE, LANGUAGE_REPORT_SCHEMA, REPORT_TYPE,
    SUMMARY_TYPE
)
from ..shuffle_correlation import GENERATOR, SEED_MIX, CorrelationResult
from ..stats_moments import DensityCurve, FrequencyTable, MomentSummary

# pylint: disable=too-few-public-methods,too-many-instance-attributes


def rank_file(language: str, n: int) -> str:
    return '{}_rank_n{}.csv'.format(language, n)


class MissingMetric:
    """Why a configured metric is absent from a report."""

    __slots__ = ('metric', 'reason')

    def __init__(self, metric: str, reason: str):
        self.metric = metric
        self.reason = reason

    def flatten(self) -> dict:
        return {'metric': self.metric, 'reason': self.reason}


class LanguageReport:
    """Every metric computed for one language corpus."""

    __slots__ = (
        'language', 'word_count', 'min_length', 'max_length', 'moments',
        'whole_moments', 'segmentation_effect', 'per_segment_moments',
        'unigram', 'entropies', 'correlations', 'rank_tables', 'densities',
        'missing', 'config',
    )

    def __init__(  # pylint: disable=too-many-arguments
            self,
            language: str,
            word_count: int,
            moments: MomentSummary,
            per_segment_moments: Sequence[MomentSummary],
            *,
            min_length: int = 0,
            max_length: int = 0,
            whole_moments: MomentSummary = None,
            segmentation_effect: Dict[str, Optional[float]] = None,
            unigram: FrequencyTable = None,
            entropies: Dict[int, EntropyResult] = None,
            correlations: Dict[int, CorrelationResult] = None,
            rank_tables: Dict[int, RankTable] = None,
            densities: Dict[str, DensityCurve] = None,
            missing: Sequence[MissingMetric] = (),
            config: dict = None):
        self.language = language
        self.word_count = word_count
        self.min_length = min_length
        self.max_length = max_length
        self.moments = moments
        self.whole_moments = whole_moments or moments
        self.segmentation_effect = segmentation_effect or {}
        self.per_segment_moments = list(per_segment_moments)
        self.unigram = unigram
        self.entropies = dict(entropies or {})
        self.correlations = dict(correlations or {})
        self.rank_tables = dict(rank_tables or {})
        self.densities = dict(densities or {})
        self.missing = list(missing)
        self.config = config or {}

    @property
    def ok(self) -> bool:
        return True

    @property
    def n_segments(self) -> int:
        return self.moments.n_segments

    def metric(self, name: str) -> Optional[float]:
        """Summary metric by column name: mean, sd, skewness, kurtosis, phi<n>, c<n>."""
        if name in ('mean', 'sd', 'skewness', 'kurtosis'):
            return getattr(self.moments, name)
        if name.startswith('phi'):
            result = self.entropies.get(int(name[3:]))
            return result.phi if result else None
        if name.startswith('c'):
            result = self.correlations.get(int(name[1:]))
            return result.c if result else None
        raise KeyError(name)

    def flatten(self) -> dict:
        """Flatten into the published report layout."""
        language = EUROPARL_LANGUAGES.get(self.language)
        flat = {
            '@type': REPORT_TYPE,
            'tool_version': VERSION,
            'language': self.language,
            'word_count': self.word_count,
            'min_length': self.min_length,
            'max_length': self.max_length,
            'n_segments': self.n_segments,
            'moments': self.moments.flatten(),
            'whole_series_moments': self.whole_moments.flatten(),
            'segmentation_effect': {
                field: self.segmentation_effect.get(field)
                for field in ('mean', 'sd', 'skewness', 'kurtosis')
            },
            'per_segment_moments': [
                {
                    'mean': summary.mean,
                    'sd': summary.sd,
                    'skewness': summary.skewness,
                    'kurtosis': summary.kurtosis,
                }
                for summary in self.per_segment_moments
            ],
            'unigram': [
                {'length': gram[0], 'count': count, 'probability': probability}
                for gram, (count, probability) in self.unigram.entries.items()
            ] if self.unigram is not None else [],
            'entropies': [
                self.entropies[n].flatten() for n in sorted(self.entropies)
            ],
            'correlations': [
                self.correlations[n].flatten() for n in sorted(self.correlations)
            ],
            'rank_tables': [
                {
                    'n': n,
                    'file': rank_file(self.language, n),
                    'distinct': len(self.rank_tables[n].rows),
                }
                for n in sorted(self.rank_tables)
            ],
            'missing': [record.flatten() for record in self.missing],
            'config': self.config,
            'generator': GENERATOR,
            'seed_mix': SEED_MIX,
        }
        if language:
            flat['name'] = language.name
            flat['family'] = language.family
        return flat

    def to_json(self) -> str:
        """Validated, deterministic JSON text."""
        return json.dumps(
            LANGUAGE_REPORT_SCHEMA(self.flatten()), indent=2, sort_keys=True
        ) + '\n'

    @classmethod
    def from_dict(cls, flat: dict) -> 'LanguageReport':
        """Rebuild the metric part of a report from its flattened form."""
        flat = LANGUAGE_REPORT_SCHEMA(flat)
        return cls(
            flat['language'],
            flat['word_count'],
            MomentSummary(**flat['moments']),
            [
                MomentSummary(n_segments=1, **summary)
                for summary in flat['per_segment_moments']
            ],
            min_length=flat['min_length'],
            max_length=flat['max_length'],
            whole_moments=MomentSummary(**flat['whole_series_moments']),
            segmentation_effect=flat['segmentation_effect'],
            unigram=FrequencyTable.from_counts(1, {
                (row['length'],): row['count'] for row in flat['unigram']
            }),
            entropies={
                row['n']: EntropyResult(
                    row['n'], row['phi'], tuple(row['per_segment']),
                    row['n_segments']
                )
                for row in flat['entropies']
            },
            correlations={
                row['n']: CorrelationResult(
                    n=row['n'], c=row['c'],
                    phi_original=row['phi_original'],
                    phi_shuffled_mean=row['phi_shuffled_mean'],
                    repeats=row['repeats'], base_seed=row['base_seed'],
                    per_repeat=tuple(row['per_repeat']),
                    generator=row['generator'], seed_mix=row['seed_mix'],
                )
                for row in flat['correlations']
            },
            missing=[
                MissingMetric(row['metric'], row['reason'])
                for row in flat['missing']
            ],
            config=flat['config'],
        )


class ErrorRecord:
    """A language whose analysis failed."""

    __slots__ = ('language', 'kind', 'message')

    def __init__(self, language: str, kind: str, message: str):
        self.language = language
        self.kind = kind
        self.message = message

    @property
    def ok(self) -> bool:
        return False

    def flatten(self) -> dict:
        return {
            '@type': ERROR_TYPE,
            'tool_version': VERSION,
            'language': self.language,
            'kind': self.kind,
            'message': self.message,
        }

    def to_json(self) -> str:
        return json.dumps(
            ERROR_RECORD_SCHEMA(self.flatten()), indent=2, sort_keys=True
        ) + '\n'

    def __repr__(self):
        return 'ErrorRecord({!r}, {!r}, {!r})'.format(
            self.language, self.kind, self.message
        )


SUMMARY_COLUMNS = (
    'mean', 'sd', 'skewness', 'kurtosis', 'phi1', 'phi2', 'phi3', 'c2', 'c3'
)


class SummaryRow:
    """One language's metrics and their cross-language ranks."""

    __slots__ = ('language', 'name', 'family', 'values', 'ranks')

    def __init__(self, language: str, values: Dict[str, Optional[float]]):
        known = EUROPARL_LANGUAGES.get(language)
        self.language = language
        self.name = known.name if known else ''
        self.family = known.family if known else ''
        self.values = values
        self.ranks: Dict[str, Optional[int]] = {}

    def flatten(self) -> dict:
        flat = {
            'language': self.language,
            'name': self.name,
            'family': self.family,
        }
        for column in SUMMARY_COLUMNS:
            flat[column] = self.values.get(column)
        for column in SUMMARY_COLUMNS:
            flat[column + '_rank'] = self.ranks.get(column)
        return flat


class Summary:
    """Cross-language comparison table."""

    __slots__ = ('rows', 'orderings')

    def __init__(self, rows: List[SummaryRow], orderings: List[dict] = None):
        self.rows = rows
        self.orderings = orderings or []

    def row(self, language: str) -> Optional[SummaryRow]:
        for row in self.rows:
            if row.language == language:
                return row
        return None

    def column(self, name: str) -> Dict[str, Optional[float]]:
        return {row.language: row.values.get(name) for row in self.rows}

    def flatten(self) -> dict:
        return {
            '@type': SUMMARY_TYPE,
            'tool_version': VERSION,
            'rows': [row.flatten() for row in self.rows],
            'orderings': list(self.orderings),
        }

    def to_json(self) -> str:
        return json.dumps(self.flatten(), indent=2, sort_keys=True) + '\n'
