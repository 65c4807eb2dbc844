"""Text to word-length series.

A word is a maximal run of letters (a letter plus any combining marks it
carries), optionally joined by internal apostrophes or hyphens. Its length
is the number of letter grapheme clusters it contains.
"""
import logging
import unicodedata
from itertools import islice
from typing import Iterable, Iterator, List, Tuple

import numpy as np
import regex

from ..errors import ContractError

LOGGER = logging.getLogger(__name__)

# apostrophe, right single quotation mark, hyphen-minus, hyphen
JOINERS = "'’-‐"

_LETTER_UNIT = r'\p{L}\p{M}*'
_ALNUM_UNIT = r'[\p{L}\p{Nd}]\p{M}*'
_TOKEN_TEMPLATE = r'(?:{unit})+(?:[{joiners}](?:{unit})+)*'
_JOINER_CLASS = ''.join(regex.escape(char) for char in JOINERS)

WORD_PATTERN = regex.compile(
    _TOKEN_TEMPLATE.format(unit=_LETTER_UNIT, joiners=_JOINER_CLASS)
)
ALNUM_WORD_PATTERN = regex.compile(
    _TOKEN_TEMPLATE.format(unit=_ALNUM_UNIT, joiners=_JOINER_CLASS)
)
# ASCII lines take a fast path: one code point per cluster, joiners ' and -
ASCII_WORD_PATTERN = regex.compile(
    _TOKEN_TEMPLATE.format(unit=r'[A-Za-z]', joiners=r"'\-")
)
ASCII_ALNUM_WORD_PATTERN = regex.compile(
    _TOKEN_TEMPLATE.format(unit=r'[A-Za-z0-9]', joiners=r"'\-")
)
ASCII_LETTER = regex.compile(r'[A-Za-z]')
GRAPHEME = regex.compile(r'\X')
HAS_LETTER = regex.compile(r'\p{L}')


class TokenizerOptions:
    """Word boundary and counting options.

    ``max_word_length`` of 0 disables the cap. Words longer than an enabled
    cap are dropped, never clipped.
    """

    __slots__ = ('max_word_length', 'count_joiners', 'digits_in_words')

    def __init__(
            self,
            max_word_length: int = 0,
            count_joiners: bool = False,
            digits_in_words: bool = False):
        if max_word_length < 0:
            raise ContractError('max_word_length must be >= 0')
        self.max_word_length = max_word_length
        self.count_joiners = count_joiners
        self.digits_in_words = digits_in_words

    @property
    def capped(self) -> bool:
        return self.max_word_length > 0

    def flatten(self) -> dict:
        return {
            'max_word_length': self.max_word_length,
            'count_joiners': self.count_joiners,
            'digits_in_words': self.digits_in_words,
        }

    def __eq__(self, other):
        return isinstance(other, TokenizerOptions) and \
            self.flatten() == other.flatten()

    def __repr__(self):
        return 'TokenizerOptions({})'.format(', '.join(
            '{}={!r}'.format(key, value) for key, value in self.flatten().items()
        ))


DEFAULT_OPTIONS = TokenizerOptions()


class WordLengthSeries:
    """Word lengths of one language in reading order."""

    __slots__ = ('language', 'values')

    def __init__(self, language: str, values):
        self.language = language
        self.values = np.asarray(values, dtype=np.int64)
        if self.values.ndim != 1:
            raise ContractError('a series is one-dimensional')
        if self.values.size and int(self.values.min()) < 1:
            raise ContractError('word lengths must be >= 1')

    @property
    def N(self) -> int:  # pylint: disable=invalid-name
        """Series length."""
        return int(self.values.size)

    def __len__(self):
        return self.N

    @property
    def min_length(self) -> int:
        return int(self.values.min()) if self.N else 0

    @property
    def max_length(self) -> int:
        return int(self.values.max()) if self.N else 0

    def __repr__(self):
        return 'WordLengthSeries({!r}, N={})'.format(self.language, self.N)


def _counted(cluster: str, options: TokenizerOptions) -> bool:
    base = cluster[0]
    category = unicodedata.category(base)
    if category.startswith('L'):
        return True
    if options.digits_in_words and category == 'Nd':
        return True
    return options.count_joiners and base in JOINERS


def word_length(token: str, options: TokenizerOptions = DEFAULT_OPTIONS) -> int:
    """Count the letter grapheme clusters of a word token."""
    if token.isascii():
        # one code point per cluster
        if token.isalpha():
            return len(token)
        if not any(char.isalpha() for char in token):
            raise ContractError('token has no letter: {!r}'.format(token))
        return sum(
            1 for char in token
            if char.isalpha()
            or (options.digits_in_words and char.isdigit())
            or (options.count_joiners and char in JOINERS)
        )

    token = unicodedata.normalize('NFC', token)
    if not HAS_LETTER.search(token):
        raise ContractError('token has no letter: {!r}'.format(token))
    return sum(
        1 for cluster in GRAPHEME.findall(token) if _counted(cluster, options)
    )


def _ascii_tokens_with_lengths(
        line: str,
        options: TokenizerOptions) -> Iterator[Tuple[str, int]]:
    if options.digits_in_words:
        pattern = ASCII_ALNUM_WORD_PATTERN
    else:
        pattern = ASCII_WORD_PATTERN
    cap = options.max_word_length
    for token in pattern.findall(line):
        if options.digits_in_words and not ASCII_LETTER.search(token):
            continue
        length = len(token)
        if not options.count_joiners:
            length -= token.count("'") + token.count('-')
        if cap and length > cap:
            continue
        yield token, length


def tokens_with_lengths(
        line: str,
        options: TokenizerOptions = DEFAULT_OPTIONS
) -> Iterator[Tuple[str, int]]:
    """Yield (token, length) for each word of a clean line."""
    if line.isascii():
        yield from _ascii_tokens_with_lengths(line, options)
        return
    pattern = ALNUM_WORD_PATTERN if options.digits_in_words else WORD_PATTERN
    cap = options.max_word_length
    for match in pattern.finditer(line):
        token = match.group()
        if options.digits_in_words and not HAS_LETTER.search(token):
            continue
        length = word_length(token, options)
        if cap and length > cap:
            continue
        yield token, length


def tokenize(line: str, options: TokenizerOptions = DEFAULT_OPTIONS) -> List[str]:
    """Split a clean line into word tokens."""
    return [token for token, _length in tokens_with_lengths(line, options)]


def to_series(
        lines: Iterable[str],
        language: str,
        options: TokenizerOptions = DEFAULT_OPTIONS) -> WordLengthSeries:
    """Map a line stream to its word-length series, preserving order."""
    lengths = (
        length
        for line in lines
        for _token, length in tokens_with_lengths(line, options)
    )
    series = WordLengthSeries(language, np.fromiter(lengths, dtype=np.int64))
    LOGGER.debug(
        'Tokenized %s: %d words, lengths %d..%d',
        language, series.N, series.min_length, series.max_length
    )
    return series


def audit(
        lines: Iterable[str],
        options: TokenizerOptions = DEFAULT_OPTIONS,
        limit: int = 50) -> List[Tuple[str, int]]:
    """First ``limit`` tokens with their lengths, for tokenizer audits."""
    pairs = (
        pair for line in lines for pair in tokens_with_lengths(line, options)
    )
    return list(islice(pairs, limit))
