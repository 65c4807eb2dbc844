"""Corpus ingestion tests."""

import os

import pytest

from reporting import meta
from ..errors import ConfigError, IngestError
from . import (
    EUROPARL_LANGUAGES, LanguageCorpus, load_corpus, resolve_manifest,
    strip_markup
)


@meta(module='corpus_ingest', criterion='markup', name='markup-lines-dropped')
def test_markup_lines_dropped(write_corpus):
    """Lines starting with '<' after whitespace are removed, others kept."""
    path = write_corpus('en.txt', (
        '<CHAPTER ID=1>\n'
        '  <SPEAKER ID=2 NAME="Chair">\n'
        'Resumption of the session\n'
        'a < b holds\n'
        '<P>\n'
    ))
    lines = list(load_corpus(LanguageCorpus('en', [path])))
    assert lines == ['Resumption of the session', 'a < b holds']


@meta(module='corpus_ingest', criterion='markup', name='strip-markup-in-memory')
def test_strip_markup():
    """The markup rule applies to in-memory streams too."""
    assert list(strip_markup(['<P>', 'text', '\t<X>'])) == ['text']


@meta(module='corpus_ingest', criterion='decoding', name='bom-and-crlf')
def test_bom_and_line_endings(write_corpus):
    """A leading BOM and CRLF terminators are not part of the text."""
    path = write_corpus('en.txt', '\ufefffirst line\r\nsecond\r\n'.encode('utf-8'))
    assert list(load_corpus(LanguageCorpus('en', [path]))) == [
        'first line', 'second'
    ]


@meta(module='corpus_ingest', criterion='errors', name='missing-file')
def test_missing_file_names_path(tmp_path):
    """A missing file raises IngestError carrying its path."""
    path = str(tmp_path / 'nope.txt')
    with pytest.raises(IngestError) as err:
        list(load_corpus(LanguageCorpus('de', [path])))
    assert err.value.path == path
    assert path in str(err.value)


@meta(module='corpus_ingest', criterion='errors', name='undecodable-offset')
def test_undecodable_bytes_offset(write_corpus):
    """Invalid UTF-8 reports the byte offset of the first bad byte."""
    path = write_corpus('fi.txt', b'good line\nbad \xff here\n')
    with pytest.raises(IngestError) as err:
        list(load_corpus(LanguageCorpus('fi', [path])))
    assert err.value.offset == len(b'good line\n') + len(b'bad ')
    assert 'byte offset 14' in str(err.value)


@meta(module='corpus_ingest', criterion='errors', name='empty-corpus')
def test_empty_corpus():
    """A language without files fails on read."""
    with pytest.raises(IngestError, match='empty corpus'):
        list(load_corpus(LanguageCorpus('sv', [])))


@meta(module='corpus_ingest', criterion='ordering', name='lexicographic-file-order')
def test_files_read_in_path_order(tmp_path, write_corpus):
    """Files are concatenated in lexicographic path order."""
    write_corpus('en/b.txt', 'second\n')
    write_corpus('en/a.txt', 'first\n')
    corpora = resolve_manifest({'en': ['en/*.txt']}, str(tmp_path))
    assert [os.path.basename(path) for path in corpora[0].paths] == [
        'a.txt', 'b.txt'
    ]
    assert list(load_corpus(corpora[0])) == ['first', 'second']


@meta(module='corpus_ingest', criterion='determinism', name='reload-identical')
def test_reload_identical(write_corpus):
    """Reading the same corpus twice yields the same lines."""
    path = write_corpus('el.txt', 'Καλημέρα σας\n<P>\nκαί τα λοιπά\n')
    corpus = LanguageCorpus('el', [path])
    assert list(load_corpus(corpus)) == list(load_corpus(corpus))


@meta(module='corpus_ingest', criterion='manifest', name='literal-missing-path-kept')
def test_resolve_keeps_literal_missing_path(tmp_path):
    """Non-glob paths that do not exist are kept so reading names them."""
    corpora = resolve_manifest([('nl', ['missing.txt'])], str(tmp_path))
    assert corpora[0].paths == [str(tmp_path / 'missing.txt')]
    with pytest.raises(IngestError, match='not found'):
        list(load_corpus(corpora[0]))


@meta(module='corpus_ingest', criterion='manifest', name='unmatched-glob-empty')
def test_resolve_unmatched_glob(tmp_path):
    """A glob matching nothing leaves the language empty."""
    corpora = resolve_manifest({'pt': ['pt/*.txt']}, str(tmp_path))
    assert corpora[0].paths == []
    with pytest.raises(IngestError, match='empty corpus: pt'):
        list(load_corpus(corpora[0]))


@meta(module='corpus_ingest', criterion='manifest', name='duplicate-and-bad-codes')
def test_resolve_rejects_bad_codes(tmp_path):
    """Duplicate or malformed language codes are configuration errors."""
    with pytest.raises(ConfigError, match='Duplicate'):
        resolve_manifest([('en', []), ('en', [])], str(tmp_path))
    with pytest.raises(ConfigError, match='Invalid language code'):
        resolve_manifest({'eng': []}, str(tmp_path))


@meta(module='corpus_ingest', criterion='languages', name='europarl-languages')
def test_europarl_languages():
    """The ten analyzed languages and their families."""
    assert len(EUROPARL_LANGUAGES) == 10
    assert EUROPARL_LANGUAGES['fi'].family == 'Uralic'
    assert EUROPARL_LANGUAGES['el'].family == 'Hellenic'
    assert {
        code for code, lang in EUROPARL_LANGUAGES.items()
        if lang.family == 'Germanic'
    } == {'de', 'sv', 'nl', 'en'}


@meta(module='corpus_ingest', criterion='markup', name='reingest-idempotent')
def test_reingest_idempotent(write_corpus):
    """Feeding the yielded lines back removes nothing more and never grows."""
    text = (
        '<CHAPTER ID=1>\n'
        'Resumption of the session\r\n'
        '   <SPEAKER ID=1>\n'
        'x <y> z\n'
        '\n'
        'Ende.\n'
    )
    first = list(load_corpus(LanguageCorpus('en', [write_corpus('a.txt', text)])))
    again = list(load_corpus(LanguageCorpus(
        'en', [write_corpus('b.txt', ''.join(line + '\n' for line in first))]
    )))
    assert again == first
    assert sum(len(line) for line in first) <= len(text)
