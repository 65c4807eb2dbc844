"""Configuration layering tests."""

import pytest
import toml

from reporting import meta
from .config import AnalysisConfig, default, env_overrides, load_config, merge
from .errors import ConfigError
from .tokenizer import TokenizerOptions


@pytest.fixture
def manifest(tmp_path):
    path = tmp_path / 'manifest.toml'
    path.write_text(toml.dumps({'config': {
        'block_len': 500,
        'repeats': 3,
        'tokenizer': {'max_word_length': 20},
        'languages': {'en': 'en/*.txt', 'fi': ['fi/a.txt', 'fi/b.txt']},
    }}))
    return str(path)


@meta(module='config', criterion='layering', name='defaults')
def test_defaults():
    """Without manifest or overrides the documented defaults apply."""
    config = AnalysisConfig.load(environ={})
    assert config.block_len == 1000
    assert config.orders == (1, 2, 3)
    assert config.repeats == 10
    assert config.base_seed == 20140101
    assert config.formats == 'both'
    assert config.tokenizer == TokenizerOptions()
    assert config.wants_json and config.wants_csv


@meta(module='config', criterion='layering', name='manifest-env-flags')
def test_layering_precedence(manifest, tmp_path):
    """Manifest over defaults, environment over manifest, flags over all."""
    config = AnalysisConfig.load(
        manifest,
        overrides={'repeats': 5},
        environ={'WLSTATS_REPEATS': '4', 'WLSTATS_ORDERS': '3,1',
                 'WLSTATS_CAP': '12', 'WLSTATS_FORMAT': 'csv'},
    )
    assert config.block_len == 500
    assert config.repeats == 5
    assert config.orders == (1, 3)
    assert config.tokenizer.max_word_length == 12
    assert config.tokenizer.count_joiners is False
    assert config.wants_csv and not config.wants_json
    assert config.languages == {
        'en': ('en/*.txt',), 'fi': ('fi/a.txt', 'fi/b.txt')
    }
    assert config.manifest_dir == str(tmp_path)


@meta(module='config', criterion='validation', name='invalid-options')
def test_invalid_options_rejected():
    """Every broken option is reported."""
    with pytest.raises(ConfigError) as err:
        AnalysisConfig.load(
            overrides={'block_len': 1, 'orders': [9], 'formats': 'xml'},
            environ={}
        )
    message = str(err.value)
    assert 'block_len' in message
    assert 'formats' in message
    with pytest.raises(ConfigError, match='WLSTATS_SEED'):
        env_overrides({'WLSTATS_SEED': 'abc'})
    with pytest.raises(ConfigError, match='EN'):
        AnalysisConfig.load(overrides={'languages': {'EN': ['x']}}, environ={})


@meta(module='config', criterion='validation', name='manifest-errors')
def test_manifest_errors(tmp_path):
    """Missing files, bad TOML and a missing [config] table are errors."""
    with pytest.raises(ConfigError, match='not found'):
        load_config(str(tmp_path / 'absent.toml'))
    bad = tmp_path / 'bad.toml'
    bad.write_text('[config\n')
    with pytest.raises(ConfigError, match='not valid TOML'):
        load_config(str(bad))
    bare = tmp_path / 'bare.toml'
    bare.write_text('[other]\nkey = 1\n')
    with pytest.raises(ConfigError, match='no \\[config\\] table'):
        load_config(str(bare))


@meta(module='config', criterion='layering', name='merge-nested')
def test_merge_nested():
    """Nested tables merge key by key; None leaves a value alone."""
    merged = merge(default(), {
        'tokenizer': {'count_joiners': True}, 'out': None
    })
    assert merged['tokenizer'] == {
        'max_word_length': 0, 'count_joiners': True, 'digits_in_words': False
    }
    assert merged['out'] == 'results'


@meta(module='config', criterion='echo', name='workers-not-echoed')
def test_flatten_excludes_workers():
    """The config echo does not depend on thread count."""
    assert AnalysisConfig(workers=1).flatten() == AnalysisConfig(workers=8).flatten()
    assert 'out' not in AnalysisConfig().flatten()
