"""Shared fixtures: seeded generators and on-disk fixture corpora."""
import os

import numpy as np
import pytest
import toml

LETTERS = 'abcdefghijklmnopqrstuvwxyz'


def words_text(lengths, per_line: int = 12) -> str:
    """Text whose words have exactly the given lengths, in order."""
    words = [
        ''.join(LETTERS[(index + offset) % 26] for offset in range(length))
        for index, length in enumerate(lengths)
    ]
    lines = [
        ' '.join(words[start:start + per_line]) + '.'
        for start in range(0, len(words), per_line)
    ]
    return '\n'.join(lines) + '\n'


@pytest.fixture
def rng():
    """Seeded generator; every test sees the same stream."""
    return np.random.default_rng(20140101)


@pytest.fixture
def write_corpus(tmp_path):
    """Factory writing text or bytes under the test's tmp dir."""
    def _write(name: str, content) -> str:
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(content, bytes):
            path.write_bytes(content)
        else:
            path.write_text(content, encoding='utf-8')
        return str(path)
    return _write


@pytest.fixture
def two_language_manifest(tmp_path, write_corpus):
    """Short-word English-like and long-word Finnish-like corpora.

    Both use 50-word segments so each language has 60 of them.
    """
    generator = np.random.default_rng(7)
    short = generator.choice([1, 2, 3, 4, 5, 6, 7], size=3000,
                             p=[.05, .2, .25, .2, .15, .1, .05])
    long_ = generator.integers(3, 16, size=3000)
    write_corpus('corpora/en/ep-00-01.txt',
                 '<CHAPTER ID=1>\n' + words_text(short[:1500].tolist()))
    write_corpus('corpora/en/ep-00-02.txt', words_text(short[1500:].tolist()))
    write_corpus('corpora/fi/ep-00-01.txt',
                 '<SPEAKER ID=1>\n' + words_text(long_.tolist()))
    manifest = {
        'config': {
            'block_len': 50,
            'orders': [1, 2, 3],
            'repeats': 2,
            'base_seed': 42,
            'out': str(tmp_path / 'results'),
            'formats': 'both',
            'kde_grid_size': 64,
            'languages': {
                'en': ['corpora/en/*.txt'],
                'fi': ['corpora/fi/*.txt'],
            },
        }
    }
    path = tmp_path / 'manifest.toml'
    path.write_text(toml.dumps(manifest), encoding='utf-8')
    return str(path)


@pytest.fixture
def europarl_manifest(config):
    """Manifest of real Europarl corpora, when the suite config names one."""
    manifest = config.get('europarl_manifest')
    if not manifest or not os.path.isfile(manifest):
        pytest.skip('europarl_manifest not configured')
    return manifest


@pytest.fixture
def performance(config):
    if not config.get('performance'):
        pytest.skip('performance tests disabled')
