"""Command line entry point: ``wlstats analyze | compare | tokens``."""
import argparse
import logging
import sys
from typing import List, Sequence

from .. import VERSION
from ..config import AnalysisConfig, FORMATS
from ..corpus_ingest import LanguageCorpus, load_corpus, resolve_manifest
from ..errors import ConfigError, WlstatsError
from ..tokenizer import audit
from . import analyze, compare_languages
from .emit import emit_report, load_reports

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def _orders(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(
            'orders must be a comma separated list of integers'
        ) from err


def _add_run_options(parser: argparse.ArgumentParser):
    parser.add_argument('--manifest', '-m', help='TOML analysis manifest')
    parser.add_argument('--out', '-o', help='output directory')
    parser.add_argument(
        '--format', dest='formats', choices=FORMATS, help='output formats'
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='wlstats',
        description='Word-length statistics of multilingual text corpora.'
    )
    parser.add_argument('--version', action='version', version=VERSION)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument(
        '-v', '--verbose', action='store_true', help='debug logging'
    )
    verbosity.add_argument(
        '-q', '--quiet', action='store_true', help='warnings and errors only'
    )
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    run = commands.add_parser('analyze', help='analyze the manifest corpora')
    _add_run_options(run)
    run.add_argument('--block-len', type=int, help='words per segment')
    run.add_argument('--orders', type=_orders, help='n-gram orders, e.g. 1,2,3')
    run.add_argument('--repeats', type=int, help='shuffles per segment')
    run.add_argument('--seed', type=int, help='base seed of the shuffles')
    run.add_argument('--cap', type=int, help='drop words longer than CAP')
    run.add_argument('--workers', type=int, help='worker threads')

    compare = commands.add_parser('compare', help='compare language reports')
    compare.add_argument(
        'reports', nargs='+', help='report JSON files or directories'
    )
    _add_run_options(compare)

    tokens = commands.add_parser('tokens', help='dump tokens with lengths')
    tokens.add_argument('files', nargs='*', help='corpus files to read')
    tokens.add_argument('--manifest', '-m', help='TOML analysis manifest')
    tokens.add_argument('--language', '-l', help='manifest language code')
    tokens.add_argument('--limit', '-k', type=int, default=50)
    tokens.add_argument('--cap', type=int, help='drop words longer than CAP')
    return parser


def configure_logging(args: argparse.Namespace):
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(
        level=level, format='%(levelname)s %(name)s: %(message)s'
    )


def overrides_from(args: argparse.Namespace) -> dict:
    """Flags given on the command line, shaped like the config table."""
    overrides = {
        'out': getattr(args, 'out', None),
        'formats': getattr(args, 'formats', None),
        'block_len': getattr(args, 'block_len', None),
        'orders': getattr(args, 'orders', None),
        'repeats': getattr(args, 'repeats', None),
        'base_seed': getattr(args, 'seed', None),
        'workers': getattr(args, 'workers', None),
    }
    overrides = {key: value for key, value in overrides.items() if value is not None}
    if getattr(args, 'cap', None) is not None:
        overrides['tokenizer'] = {'max_word_length': args.cap}
    return overrides


def run_analyze(args: argparse.Namespace) -> int:
    config = AnalysisConfig.load(args.manifest, overrides_from(args))
    if not config.languages:
        raise ConfigError('No languages configured')
    outcomes = analyze(config)
    reports = [outcome for outcome in outcomes if outcome.ok]
    summary = compare_languages(reports) if len(reports) >= 2 else None
    emit_report(outcomes, summary, config)
    failed = [outcome.language for outcome in outcomes if not outcome.ok]
    if failed:
        LOGGER.error('Failed languages: %s', ', '.join(failed))
        return EXIT_FAILED
    return EXIT_OK


def run_compare(args: argparse.Namespace) -> int:
    config = AnalysisConfig.load(args.manifest, overrides_from(args))
    summary = compare_languages(load_reports(args.reports))
    emit_report([], summary, config)
    return EXIT_OK


def run_tokens(args: argparse.Namespace, out=None) -> int:
    out = out or sys.stdout
    config = AnalysisConfig.load(args.manifest, overrides_from(args))
    if args.files:
        corpus = LanguageCorpus(args.language or 'xx', args.files)
    else:
        corpora = {
            corpus.code: corpus
            for corpus in resolve_manifest(config.languages, config.manifest_dir)
        }
        if args.language not in corpora:
            raise ConfigError(
                'Language {!r} not in manifest'.format(args.language)
            )
        corpus = corpora[args.language]
    for token, length in audit(load_corpus(corpus), config.tokenizer, args.limit):
        out.write('{}\t{}\n'.format(token, length))
    return EXIT_OK


COMMANDS = {
    'analyze': run_analyze,
    'compare': run_compare,
    'tokens': run_tokens,
}


def main(argv: Sequence[str] = None) -> int:
    """Run the command line; returns the process exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as err:
        LOGGER.error('%s', err)
        return EXIT_CONFIG
    except WlstatsError as err:
        LOGGER.error('%s', err)
        return EXIT_FAILED
