"""Corpus ingestion.

Europarl files carry line-delimited markup (``<CHAPTER>``, ``<SPEAKER>``,
``<P>``). Any line whose first non-whitespace character is ``<`` is dropped;
everything else is yielded unchanged apart from its line terminator.
"""
import glob
import logging
import os
import re
from collections import namedtuple
from typing import Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from ..errors import ConfigError, IngestError

LOGGER = logging.getLogger(__name__)

LANGUAGE_CODE = re.compile(r'^[a-z]{2}$')
BOM = '\ufeff'

EuroparlLanguage = namedtuple('EuroparlLanguage', 'code, name, family, words')

# Full-corpus word totals of the ten parallel Europarl languages analyzed.
EUROPARL_LANGUAGES = {
    lang.code: lang for lang in (
        EuroparlLanguage('fi', 'Finnish', 'Uralic', 10_150_000),
        EuroparlLanguage('de', 'German', 'Germanic', 14_680_000),
        EuroparlLanguage('sv', 'Swedish', 'Germanic', 14_230_000),
        EuroparlLanguage('nl', 'Dutch', 'Germanic', 16_230_000),
        EuroparlLanguage('en', 'English', 'Germanic', 15_980_000),
        EuroparlLanguage('it', 'Italian', 'Romance', 15_570_000),
        EuroparlLanguage('fr', 'French', 'Romance', 17_550_000),
        EuroparlLanguage('es', 'Spanish', 'Romance', 16_220_000),
        EuroparlLanguage('pt', 'Portuguese', 'Romance', 16_060_000),
        EuroparlLanguage('el', 'Greek', 'Hellenic', 15_850_000),
    )
}


class LanguageCorpus:
    """Input files of one language, read in lexicographic path order."""

    __slots__ = ('code', 'paths', 'word_count')

    def __init__(self, code: str, paths: Sequence[str], word_count: int = 0):
        if not LANGUAGE_CODE.match(code or ''):
            raise ConfigError('Invalid language code: {!r}'.format(code))
        self.code = code
        self.paths = sorted(paths)
        self.word_count = word_count

    def __repr__(self):
        return 'LanguageCorpus({!r}, {} files, {} words)'.format(
            self.code, len(self.paths), self.word_count
        )


def is_markup(line: str) -> bool:
    """Line-delimited markup starts with '<' after leading whitespace."""
    return line.lstrip().startswith('<')


def _check_paths(corpus: LanguageCorpus):
    if not corpus.paths:
        raise IngestError('empty corpus: {}'.format(corpus.code))
    for path in corpus.paths:
        if not os.path.isfile(path):
            raise IngestError('Corpus file not found', path=path)
        if not os.access(path, os.R_OK):
            raise IngestError('Corpus file not readable', path=path)


def _read_lines(path: str) -> Iterator[str]:
    offset = 0
    with open(path, 'rb') as corpus_file:
        for raw in corpus_file:
            try:
                line = raw.decode('utf-8')
            except UnicodeDecodeError as err:
                raise IngestError(
                    'Undecodable UTF-8', path=path, offset=offset + err.start
                ) from err
            if offset == 0 and line.startswith(BOM):
                line = line[1:]
            offset += len(raw)
            yield line.rstrip('\r\n')


def load_corpus(corpus: LanguageCorpus) -> Iterator[str]:
    """Yield the clean text lines of a corpus in file order."""
    _check_paths(corpus)
    dropped = 0
    for path in corpus.paths:
        LOGGER.debug('Reading %s for %s', path, corpus.code)
        for line in _read_lines(path):
            if is_markup(line):
                dropped += 1
                continue
            yield line
    LOGGER.debug('%s: %d markup lines dropped', corpus.code, dropped)


def strip_markup(lines: Iterable[str]) -> Iterator[str]:
    """Apply the markup rule to an in-memory line stream."""
    return (line for line in lines if not is_markup(line))


def resolve_manifest(
        languages: Union[Mapping[str, Sequence[str]],
                         Iterable[Tuple[str, Sequence[str]]]],
        base_dir: str = '.') -> List[LanguageCorpus]:
    """Expand language globs into corpora, one per language code."""
    if isinstance(languages, Mapping):
        languages = languages.items()
    corpora = []
    seen = set()
    for code, patterns in languages:
        if code in seen:
            raise ConfigError('Duplicate language code: {}'.format(code))
        seen.add(code)
        paths = set()
        for pattern in patterns:
            if not os.path.isabs(pattern):
                pattern = os.path.join(base_dir, pattern)
            matches = glob.glob(pattern)
            if not matches and not glob.has_magic(pattern):
                # a literal path: keep it so ingestion names it as missing
                matches = [pattern]
            paths.update(matches)
        corpora.append(LanguageCorpus(code, sorted(paths)))
    return corpora
