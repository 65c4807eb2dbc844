"""Analysis configuration.

Options are layered from lowest to highest precedence: built-in defaults,
the ``[config]`` table of a TOML manifest, ``WLSTATS_*`` environment
variables and finally command line flags.
"""
import copy
import logging
import os
from typing import Mapping, Optional, Tuple

import toml
from voluptuous import (
    All, Any, In, Length, Match, Range, Required, Schema, ALLOW_EXTRA,
    PREVENT_EXTRA
)
from voluptuous.error import Invalid

from .errors import ConfigError
from .tokenizer import TokenizerOptions

LOGGER = logging.getLogger(__name__)

ENV_PREFIX = 'WLSTATS_'
FORMATS = ('json', 'csv', 'both')
MAX_ORDER = 8


def load_config(config_file: str) -> dict:
    """Load configuration from toml file."""
    try:
        loaded = toml.load(config_file)
    except FileNotFoundError as err:
        raise ConfigError('Manifest not found: {}'.format(config_file)) from err
    except toml.TomlDecodeError as err:
        raise ConfigError(
            'Manifest is not valid TOML: {}: {}'.format(config_file, err)
        ) from err
    if 'config' not in loaded:
        raise ConfigError(
            'Manifest has no [config] table: {}'.format(config_file)
        )
    return loaded['config']


def default() -> dict:
    """Return a default config dictionary."""
    return {
        'block_len': 1000,
        'orders': [1, 2, 3],
        'repeats': 10,
        'base_seed': 20140101,
        'out': 'results',
        'formats': 'both',
        'workers': 1,
        'kde_grid_size': 512,
        'tokenizer': {
            'max_word_length': 0,
            'count_joiners': False,
            'digits_in_words': False,
        },
        'languages': {},
    }


def _int(value):
    return int(str(value).strip(), 0)


def _orders(value):
    return [_int(item) for item in str(value).split(',') if item.strip()]


# env suffix -> (config key path, parser)
ENV_OVERRIDES = {
    'BLOCK_LEN': (('block_len',), _int),
    'ORDERS': (('orders',), _orders),
    'REPEATS': (('repeats',), _int),
    'SEED': (('base_seed',), _int),
    'CAP': (('tokenizer', 'max_word_length'), _int),
    'FORMAT': (('formats',), str),
    'OUT': (('out',), str),
    'WORKERS': (('workers',), _int),
}


def _set_path(dct: dict, path: Tuple[str, ...], value):
    for key in path[:-1]:
        dct = dct.setdefault(key, {})
    dct[path[-1]] = value


def env_overrides(environ: Mapping[str, str] = None) -> dict:
    """Collect overrides from ``WLSTATS_*`` environment variables."""
    environ = os.environ if environ is None else environ
    overrides = {}
    for suffix, (path, parse) in ENV_OVERRIDES.items():
        name = ENV_PREFIX + suffix
        if name not in environ:
            continue
        try:
            _set_path(overrides, path, parse(environ[name]))
        except ValueError as err:
            raise ConfigError(
                'Bad value for {}: {!r}'.format(name, environ[name])
            ) from err
        LOGGER.debug('Override from %s', name)
    return overrides


def merge(base: dict, overrides: dict) -> dict:
    """Recursively merge overrides into a copy of base."""
    merged = copy.deepcopy(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge(merged[key], value)
        elif value is not None:
            merged[key] = value
    return merged


CONFIG_SCHEMA = Schema({
    Required('block_len'): All(int, Range(min=2)),
    Required('orders'): All(
        [All(int, Range(min=1, max=MAX_ORDER))], Length(min=1)
    ),
    Required('repeats'): All(int, Range(min=1)),
    Required('base_seed'): All(int, Range(min=0, max=2 ** 64 - 1)),
    Required('out'): str,
    Required('formats'): In(FORMATS),
    Required('workers'): All(int, Range(min=1)),
    Required('kde_grid_size'): All(int, Range(min=2)),
    Required('tokenizer'): {
        Required('max_word_length'): All(int, Range(min=0)),
        Required('count_joiners'): bool,
        Required('digits_in_words'): bool,
    },
    # language codes are checked strictly even though other keys may be extra
    Required('languages'): Schema(
        {Match(r'^[a-z]{2}$'): Any(str, [str])}, extra=PREVENT_EXTRA
    ),
}, extra=ALLOW_EXTRA)


class AnalysisConfig:
    """Validated options for one analysis run."""

    __slots__ = (
        'manifest', 'block_len', 'orders', 'repeats', 'base_seed', 'out',
        'formats', 'workers', 'kde_grid_size', 'tokenizer', 'languages',
    )

    def __init__(  # pylint: disable=too-many-arguments
            self,
            *,
            manifest: Optional[str] = None,
            block_len: int = 1000,
            orders: Tuple[int, ...] = (1, 2, 3),
            repeats: int = 10,
            base_seed: int = 20140101,
            out: str = 'results',
            formats: str = 'both',
            workers: int = 1,
            kde_grid_size: int = 512,
            tokenizer: TokenizerOptions = None,
            languages: Mapping[str, Tuple[str, ...]] = None):
        self.manifest = manifest
        self.block_len = block_len
        self.orders = tuple(sorted(set(orders)))
        self.repeats = repeats
        self.base_seed = base_seed
        self.out = out
        self.formats = formats
        self.workers = workers
        self.kde_grid_size = kde_grid_size
        self.tokenizer = tokenizer or TokenizerOptions()
        self.languages = dict(languages or {})

    @classmethod
    def from_dict(cls, options: dict, manifest: str = None):
        """Validate a merged option dictionary."""
        try:
            valid = CONFIG_SCHEMA(options)
        except Invalid as err:
            raise ConfigError.from_invalid(err) from err
        languages = {
            code: tuple([globs] if isinstance(globs, str) else globs)
            for code, globs in valid['languages'].items()
        }
        return cls(
            manifest=manifest,
            block_len=valid['block_len'],
            orders=tuple(valid['orders']),
            repeats=valid['repeats'],
            base_seed=valid['base_seed'],
            out=valid['out'],
            formats=valid['formats'],
            workers=valid['workers'],
            kde_grid_size=valid['kde_grid_size'],
            tokenizer=TokenizerOptions(**valid['tokenizer']),
            languages=languages,
        )

    @classmethod
    def load(cls, manifest: str = None, overrides: dict = None,
             environ: Mapping[str, str] = None):
        """Build the layered configuration for a run."""
        options = default()
        if manifest:
            options = merge(options, load_config(manifest))
        options = merge(options, env_overrides(environ))
        options = merge(options, overrides or {})
        return cls.from_dict(options, manifest=manifest)

    @property
    def manifest_dir(self) -> str:
        """Directory that relative globs resolve against."""
        if self.manifest:
            return os.path.dirname(os.path.abspath(self.manifest))
        return os.getcwd()

    @property
    def wants_json(self) -> bool:
        return self.formats in ('json', 'both')

    @property
    def wants_csv(self) -> bool:
        return self.formats in ('csv', 'both')

    def flatten(self) -> dict:
        """Config echo written into every report."""
        return {
            'block_len': self.block_len,
            'orders': list(self.orders),
            'repeats': self.repeats,
            'base_seed': self.base_seed,
            'formats': self.formats,
            'kde_grid_size': self.kde_grid_size,
            'tokenizer': self.tokenizer.flatten(),
        }
