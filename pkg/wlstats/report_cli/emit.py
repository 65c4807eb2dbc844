"""Writing reports, tables and plot data to disk, and reading reports back."""
import csv
import json
import logging
import os
import re
from typing import Iterable, List, Optional, Sequence

import semver

from .. import VERSION
from ..config import AnalysisConfig
from ..errors import EmitError, ReportValidationError
from ..ngram_entropy import RankTable, rank_rows, rank_table_from_rows
from ..stats_moments import DensityCurve, MOMENT_FIELDS, MomentSummary
from .report import (
    SUMMARY_COLUMNS, ErrorRecord, LanguageReport, Summary, rank_file
)

LOGGER = logging.getLogger(__name__)

NA = 'NA'
REPORT_NAME = re.compile(r'^[a-z]{2}\.json$')


def _cell(value) -> str:
    if value is None:
        return NA
    if isinstance(value, float):
        return repr(value)
    return str(value)


class Emitter:
    """Single writer for one output directory."""

    def __init__(self, out_dir: str):
        self.out_dir = out_dir
        self.written: List[str] = []
        try:
            os.makedirs(out_dir, exist_ok=True)
        except OSError as err:
            raise EmitError('Cannot create output directory {}: {}'.format(
                out_dir, err
            )) from err
        if not os.access(out_dir, os.W_OK):
            raise EmitError('Output directory not writable: {}'.format(out_dir))

    def path(self, name: str) -> str:
        return os.path.join(self.out_dir, name)

    def text(self, name: str, content: str):
        path = self.path(name)
        try:
            with open(path, 'w', encoding='utf-8', newline='') as out_file:
                out_file.write(content)
        except OSError as err:
            raise EmitError('Cannot write {}: {}'.format(path, err)) from err
        self.written.append(path)
        LOGGER.debug('Wrote %s', path)

    def table(self, name: str, header: Sequence[str], rows: Iterable[Sequence]):
        path = self.path(name)
        try:
            with open(path, 'w', encoding='utf-8', newline='') as out_file:
                writer = csv.writer(out_file, lineterminator='\n')
                writer.writerow(header)
                writer.writerows([_cell(value) for value in row] for row in rows)
        except OSError as err:
            raise EmitError('Cannot write {}: {}'.format(path, err)) from err
        self.written.append(path)
        LOGGER.debug('Wrote %s', path)


def _moment_row(label, summary: MomentSummary) -> list:
    return [label] + [getattr(summary, field) for field in MOMENT_FIELDS]


def moment_rows(report: LanguageReport) -> List[list]:
    """Per-segment rows, then the segment average and the whole series."""
    rows = [
        _moment_row(index, summary)
        for index, summary in enumerate(report.per_segment_moments)
    ]
    rows.append(_moment_row('average', report.moments))
    rows.append(_moment_row('whole', report.whole_moments))
    return rows


def density_rows(curve: DensityCurve) -> List[list]:
    return [
        [float(x), float(y)]
        for x, y in zip(curve.grid.tolist(), curve.density.tolist())
    ]


def write_language(emitter: Emitter, report: LanguageReport,
                   config: AnalysisConfig):
    """All files of one language report."""
    code = report.language
    if config.wants_json:
        emitter.text('{}.json'.format(code), report.to_json())
    if not config.wants_csv:
        return
    emitter.table(
        '{}_moments.csv'.format(code), ('segment',) + MOMENT_FIELDS,
        moment_rows(report)
    )
    emitter.table(
        '{}_unigram.csv'.format(code), ('length', 'count', 'probability'),
        [
            [gram[0], count, probability]
            for gram, (count, probability) in report.unigram.entries.items()
        ]
    )
    orders = sorted(report.entropies)
    emitter.table(
        '{}_entropy.csv'.format(code),
        ['segment'] + ['phi{}'.format(n) for n in orders],
        [
            [index] + [report.entropies[n].per_segment[index] for n in orders]
            for index in range(report.n_segments)
        ]
    )
    for n in sorted(report.rank_tables):
        emitter.table(
            rank_file(code, n), ('rank', 'gram', 'probability'),
            rank_rows(report.rank_tables[n])
        )
    for metric in sorted(report.densities):
        emitter.table(
            '{}_kde_{}.csv'.format(code, metric), ('grid', 'density'),
            density_rows(report.densities[metric])
        )


def write_summary(emitter: Emitter, summary: Summary, config: AnalysisConfig):
    if config.wants_json:
        emitter.text('summary.json', summary.to_json())
    if config.wants_csv:
        header = ['language', 'name', 'family'] + list(SUMMARY_COLUMNS) + [
            column + '_rank' for column in SUMMARY_COLUMNS
        ]
        emitter.table('summary.csv', header, [
            [row.flatten()[column] for column in header]
            for row in summary.rows
        ])
        emitter.table('orderings.csv', ('claim', 'status', 'detail'), [
            [claim['claim'], claim['status'], claim['detail']]
            for claim in summary.orderings
        ])


def emit_report(outcomes: Sequence, summary: Optional[Summary],
                config: AnalysisConfig) -> List[str]:
    """Write every outcome and the summary; returns the written paths."""
    emitter = Emitter(config.out)
    for outcome in outcomes:
        if isinstance(outcome, ErrorRecord):
            emitter.text('{}.error.json'.format(outcome.language), outcome.to_json())
        else:
            write_language(emitter, outcome, config)
    if summary is not None:
        write_summary(emitter, summary, config)
    LOGGER.info('Wrote %d files to %s', len(emitter.written), config.out)
    return emitter.written


def load_rank_table(path: str) -> RankTable:
    """Read a rank-table CSV written by :func:`emit_report`."""
    with open(path, encoding='utf-8', newline='') as in_file:
        reader = csv.reader(in_file)
        next(reader, None)
        return rank_table_from_rows(list(reader))


def check_version(flat: dict, source: str):
    """Reject reports written by an incompatible tool version."""
    try:
        theirs = semver.VersionInfo.parse(flat.get('tool_version', ''))
    except (TypeError, ValueError) as err:
        raise EmitError('{}: bad tool_version {!r}'.format(
            source, flat.get('tool_version')
        )) from err
    ours = semver.VersionInfo.parse(VERSION)
    if theirs.major != ours.major:
        raise EmitError('{}: report version {} incompatible with {}'.format(
            source, theirs, ours
        ))


def load_report(path: str) -> LanguageReport:
    """Read and validate one language report JSON file."""
    try:
        with open(path, encoding='utf-8') as in_file:
            flat = json.load(in_file)
    except (OSError, json.JSONDecodeError) as err:
        raise EmitError('Cannot read report {}: {}'.format(path, err)) from err
    if not isinstance(flat, dict):
        raise EmitError('{}: not a report object'.format(path))
    check_version(flat, path)
    try:
        return LanguageReport.from_dict(flat)
    except ReportValidationError as err:
        LOGGER.error('%s: %s', path, err)
        raise


def find_reports(paths: Sequence[str]) -> List[str]:
    """Expand directories to the language report files they hold."""
    found = []
    for path in paths:
        if os.path.isdir(path):
            found.extend(sorted(
                os.path.join(path, name) for name in os.listdir(path)
                if REPORT_NAME.match(name)
            ))
        else:
            found.append(path)
    return found


def load_reports(paths: Sequence[str]) -> List[LanguageReport]:
    """Load every report named by paths, expanding directories."""
    return [load_report(path) for path in find_reports(paths)]
