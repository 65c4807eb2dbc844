"""Pipeline orchestration and cross-language comparison."""
import asyncio
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Union

from ..config import AnalysisConfig
from ..corpus_ingest import LanguageCorpus, load_corpus, resolve_manifest
from ..errors import ContractError, EmptyInputError, WlstatsError
from ..ngram_entropy import corpus_table, phi_n, rank_table
from ..shuffle_correlation import correlations
from ..stats_moments import (
    average_moments, kde, moment_samples, moments, segment,
    segmentation_effect, unigram_distribution, whole_series_moments
)
from ..tokenizer import to_series
from .report import (
    SUMMARY_COLUMNS, ErrorRecord, LanguageReport, MissingMetric, Summary,
    SummaryRow
)

LOGGER = logging.getLogger(__name__)

# fewer segments than this makes segment averages noisy
MIN_RELIABLE_SEGMENTS = 100

Outcome = Union[LanguageReport, ErrorRecord]


def analyze_corpus(corpus: LanguageCorpus, config: AnalysisConfig) -> LanguageReport:
    """Run every metric on one language; raises on failure."""
    started = time.monotonic()
    series = to_series(load_corpus(corpus), corpus.code, config.tokenizer)
    corpus.word_count = series.N
    views = segment(series, config.block_len)
    if not views:
        raise EmptyInputError(
            'no complete segments: {} words, block_len {}'.format(
                series.N, config.block_len
            )
        )
    if len(views) < MIN_RELIABLE_SEGMENTS:
        LOGGER.warning(
            '%s: only %d complete segments of %d words',
            corpus.code, len(views), config.block_len
        )

    per_segment = [moments(view) for view in views]
    averaged = average_moments(per_segment)
    whole = whole_series_moments(series)
    missing = []
    densities = {}

    def density(metric: str, samples: Sequence[float]):
        try:
            densities[metric] = kde(samples, config.kde_grid_size)
        except (ContractError, EmptyInputError) as err:
            missing.append(MissingMetric('kde_' + metric, str(err)))

    for field, samples in moment_samples(per_segment).items():
        density(field, samples)

    entropies = {}
    rank_tables = {}
    orders = []
    for n in config.orders:
        if n > config.block_len:
            reason = 'order {} exceeds block_len {}'.format(n, config.block_len)
            missing.append(MissingMetric('phi{}'.format(n), reason))
            continue
        orders.append(n)
        entropies[n] = phi_n(series, n, config.block_len)
        rank_tables[n] = rank_table(corpus_table(series, n))
        density('phi{}'.format(n), entropies[n].per_segment)

    correlated = [n for n in orders if n >= 2]
    correlation = {}
    if correlated:
        correlation = correlations(
            series, correlated,
            block_len=config.block_len,
            repeats=config.repeats,
            base_seed=config.base_seed,
            workers=config.workers,
        )

    LOGGER.info(
        '%s: %d words, %d segments analyzed in %.1fs',
        corpus.code, series.N, len(views), time.monotonic() - started
    )
    return LanguageReport(
        corpus.code,
        series.N,
        averaged,
        per_segment,
        min_length=series.min_length,
        max_length=series.max_length,
        whole_moments=whole,
        segmentation_effect=segmentation_effect(whole, averaged),
        unigram=unigram_distribution(series),
        entropies=entropies,
        correlations=correlation,
        rank_tables=rank_tables,
        densities=densities,
        missing=missing,
        config=config.flatten(),
    )


def analyze_language(corpus: LanguageCorpus, config: AnalysisConfig) -> Outcome:
    """Analyze one language, turning its failure into an error record."""
    LOGGER.info('%s: analyzing %d files', corpus.code, len(corpus.paths))
    try:
        return analyze_corpus(corpus, config)
    except WlstatsError as err:
        LOGGER.error('%s: %s', corpus.code, err)
        return ErrorRecord(corpus.code, err.kind, str(err))
    except OSError as err:
        LOGGER.error('%s: %s', corpus.code, err)
        return ErrorRecord(corpus.code, 'io', str(err))
    except Exception as err:  # pylint: disable=broad-except
        LOGGER.exception('%s: unexpected failure', corpus.code)
        return ErrorRecord(corpus.code, 'error', '{}: {}'.format(
            type(err).__name__, err
        ))


async def analyze_async(config: AnalysisConfig) -> List[Outcome]:
    """Analyze all manifest languages concurrently, in manifest order."""
    corpora = resolve_manifest(config.languages, config.manifest_dir)
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        return list(await asyncio.gather(*[
            loop.run_in_executor(executor, analyze_language, corpus, config)
            for corpus in corpora
        ]))


def analyze(config: AnalysisConfig) -> List[Outcome]:
    """One report or error record per configured language."""
    return asyncio.run(analyze_async(config))


def _rank(values: Dict[str, Optional[float]]) -> Dict[str, Optional[int]]:
    # descending; ties and missing values fall back to language code order
    defined = sorted(
        (language for language, value in values.items() if value is not None),
        key=lambda language: (-values[language], language)
    )
    ranks = {language: rank for rank, language in enumerate(defined, start=1)}
    for language in values:
        ranks.setdefault(language, None)
    return ranks


def compare_languages(reports: Sequence[LanguageReport]) -> Summary:
    """One row per language with every summary metric and its rank."""
    if len(reports) < 2:
        raise ContractError('comparison needs at least two language reports')
    rows = [
        SummaryRow(report.language, {
            column: report.metric(column) for column in SUMMARY_COLUMNS
        })
        for report in sorted(reports, key=lambda report: report.language)
    ]
    for column in SUMMARY_COLUMNS:
        ranks = _rank({row.language: row.values[column] for row in rows})
        for row in rows:
            row.ranks[column] = ranks[row.language]
    summary = Summary(rows)
    summary.orderings = check_orderings(summary)
    return summary


GERMANIC = ('de', 'sv', 'nl')
ROMANCE_GREEK = ('fr', 'it', 'es', 'pt', 'el')


def _claim(name: str, passed: Optional[bool], detail: str) -> dict:
    status = 'n/a' if passed is None else ('pass' if passed else 'fail')
    return {'claim': name, 'status': status, 'detail': detail}


def _extreme(summary: Summary, column: str, language: str, highest: bool) -> dict:
    values = {
        code: value for code, value in summary.column(column).items()
        if value is not None
    }
    name = '{} {} is the {}'.format(
        language, column, 'maximum' if highest else 'minimum'
    )
    if language not in values or len(values) < 2:
        return _claim(name, None, 'needs {} and another language'.format(language))
    pick = max if highest else min
    extreme = pick(values, key=lambda code: (values[code], code))
    return _claim(name, extreme == language, '{} = {!r}'.format(extreme, values[extreme]))


def _groups(summary: Summary, column: str, upper: Sequence[str],
            lower: Sequence[str]) -> dict:
    values = summary.column(column)
    high = [values[code] for code in upper if values.get(code) is not None]
    low = [values[code] for code in lower if values.get(code) is not None]
    name = '{} of {} above {}'.format(column, '/'.join(upper), '/'.join(lower))
    if not high or not low:
        return _claim(name, None, 'needs a language from each group')
    return _claim(
        name, min(high) > max(low),
        'min upper {!r}, max lower {!r}'.format(min(high), max(low))
    )


def _between(summary: Summary, column: str, language: str,
             upper: Sequence[str], lower: Sequence[str]) -> dict:
    values = summary.column(column)
    high = [values[code] for code in upper if values.get(code) is not None]
    low = [values[code] for code in lower if values.get(code) is not None]
    name = '{} {} between {} and {}'.format(
        language, column, '/'.join(upper), '/'.join(lower)
    )
    if values.get(language) is None or not high or not low:
        return _claim(name, None, 'needs {} and both groups'.format(language))
    value = values[language]
    return _claim(name, max(low) <= value <= min(high), repr(value))


def _near(summary: Summary, column: str, language: str, target: float,
          tolerance: float) -> dict:
    value = summary.column(column).get(language)
    name = '{} {} = {} +/- {}'.format(language, column, target, tolerance)
    if value is None:
        return _claim(name, None, 'needs {}'.format(language))
    return _claim(name, abs(value - target) <= tolerance, repr(value))


def check_orderings(summary: Summary) -> List[dict]:
    """Evaluate the published cross-language orderings on a summary."""
    claims = [
        _extreme(summary, 'mean', 'en', highest=False),
        _extreme(summary, 'mean', 'fi', highest=True),
        _near(summary, 'mean', 'en', 4.9, 0.3),
        _near(summary, 'mean', 'fi', 8.0, 0.5),
        _extreme(summary, 'sd', 'fi', highest=True),
        _groups(summary, 'kurtosis', GERMANIC, ROMANCE_GREEK),
        _between(summary, 'kurtosis', 'en', GERMANIC, ROMANCE_GREEK),
        _extreme(summary, 'phi1', 'fi', highest=True),
    ]
    for column in ('c2', 'c3'):
        claims.append(_groups(
            summary, column, ROMANCE_GREEK + ('en',), GERMANIC + ('fi',)
        ))
    return claims


__all__ = [
    'AnalysisConfig', 'ErrorRecord', 'LanguageReport', 'Summary',
    'analyze', 'analyze_async', 'analyze_corpus', 'analyze_language',
    'check_orderings', 'compare_languages',
]
