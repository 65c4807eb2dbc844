"""Schema helpers and the published language report schema."""
import logging

from voluptuous import (
    All, Any, In, Length, Match, Optional, Range, Required, Schema,
    PREVENT_EXTRA, REMOVE_EXTRA
)
from voluptuous.error import Invalid

from .errors import ReportValidationError

REPORT_TYPE = 'Word Length Statistics Language Report v1'
SUMMARY_TYPE = 'Word Length Statistics Summary v1'
ERROR_TYPE = 'Word Length Statistics Error v1'


def _dict_key_set(dct, prepend=''):
    key_set = set()
    for key in dct.keys():
        key_path = '.'.join([item for item in [prepend, str(key)] if item])
        key_set.add(key_path)
        if isinstance(dct[key], dict):
            key_set.update(_dict_key_set(dct[key], prepend=key_path))
    return key_set


class Should(Optional):  # pylint: disable=too-few-public-methods
    """Key that should be present; its absence is logged, not rejected."""

    @classmethod
    def find_in(cls, dct, path_prepend=''):
        """Recursively collect the paths of keys marked as 'Should'."""
        should_set = set()
        for key in dct.keys():
            key_path = '.'.join([
                item for item in [path_prepend, str(key)] if item
            ])
            if isinstance(key, cls):
                should_set.add(key_path)
            if isinstance(dct[key], dict):
                should_set.update(cls.find_in(dct[key], key_path))
        return should_set


class ReportSchema:  # pylint: disable=too-few-public-methods
    """
    Validate report dictionaries.

    With `allow_extra`, unknown keys are dropped from the validated copy and
    a warning is logged. Missing `Should` keys are logged as warnings.
    """
    __slots__ = ('schema', 'validator', 'extra')

    def __init__(self, schema, allow_extra=True):
        self.schema = schema
        self.extra = REMOVE_EXTRA if allow_extra else PREVENT_EXTRA
        self.validator = Schema(schema, extra=self.extra)

    def __call__(self, report: dict) -> dict:
        logger = logging.getLogger(__name__)
        try:
            validated = self.validator(dict(report))
        except Invalid as err:
            raise ReportValidationError(err) from err

        validated_key_set = _dict_key_set(validated)
        if self.extra == REMOVE_EXTRA:
            removed = _dict_key_set(report) - validated_key_set
            if removed:
                logger.warning(
                    'Unexpected report keys found: %s',
                    ', '.join(sorted(removed))
                )
        shoulds = Should.find_in(self.schema)
        missing = shoulds - (validated_key_set & shoulds)
        if missing:
            logger.warning(
                'SHOULD be present but are missing: %s',
                ', '.join(sorted(missing))
            )
        return validated


Real = Any(float, int)
MaybeReal = Any(float, int, None)
Count = All(int, Range(min=0))
Order = All(int, Range(min=1, max=8))

MOMENTS = {
    Required('mean'): Real,
    Required('sd'): All(Real, Range(min=0)),
    Required('skewness'): MaybeReal,
    Required('kurtosis'): MaybeReal,
    Required('n_segments'): All(int, Range(min=1)),
}

SEGMENT_MOMENTS = {
    Required('mean'): Real,
    Required('sd'): Real,
    Required('skewness'): MaybeReal,
    Required('kurtosis'): MaybeReal,
}

ENTROPY = {
    Required('n'): Order,
    Required('phi'): All(Real, Range(min=0)),
    Required('per_segment'): [Real],
    Required('n_segments'): All(int, Range(min=1)),
}

CORRELATION = {
    Required('n'): Order,
    Required('c'): Real,
    Required('phi_original'): Real,
    Required('phi_shuffled_mean'): Real,
    Required('repeats'): All(int, Range(min=1)),
    Required('base_seed'): All(int, Range(min=0, max=2 ** 64 - 1)),
    Required('per_repeat'): [Real],
    Required('generator'): str,
    Required('seed_mix'): str,
}

LANGUAGE_REPORT_SCHEMA = ReportSchema({
    Required('@type'): REPORT_TYPE,
    Required('tool_version'): Match(r'^\d+\.\d+\.\d+'),
    Required('language'): Match(r'^[a-z]{2}$'),
    Should('name'): str,
    Should('family'): str,
    Required('word_count'): Count,
    Required('min_length'): Count,
    Required('max_length'): Count,
    Required('n_segments'): All(int, Range(min=1)),
    Required('moments'): MOMENTS,
    Required('whole_series_moments'): MOMENTS,
    Required('segmentation_effect'): {
        Required(field): MaybeReal
        for field in ('mean', 'sd', 'skewness', 'kurtosis')
    },
    Required('per_segment_moments'): All([SEGMENT_MOMENTS], Length(min=1)),
    Required('unigram'): All([{
        Required('length'): All(int, Range(min=1)),
        Required('count'): All(int, Range(min=1)),
        Required('probability'): Real,
    }], Length(min=1)),
    Required('entropies'): [ENTROPY],
    Required('correlations'): [CORRELATION],
    Required('rank_tables'): [{
        Required('n'): Order,
        Required('file'): str,
        Required('distinct'): All(int, Range(min=1)),
    }],
    Required('missing'): [{
        Required('metric'): str,
        Required('reason'): str,
    }],
    Required('config'): dict,
    Required('generator'): str,
    Required('seed_mix'): str,
})

ERROR_RECORD_SCHEMA = ReportSchema({
    Required('@type'): ERROR_TYPE,
    Required('tool_version'): str,
    Required('language'): str,
    Required('kind'): In((
        'error', 'config', 'ingest', 'empty', 'contract', 'report', 'emit', 'io'
    )),
    Required('message'): str,
}, allow_extra=False)
