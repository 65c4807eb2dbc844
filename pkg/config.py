"""Test suite config."""
from wlstats.config import load_config as load_manifest_config


def load_config(config_file: str):
    """Load suite configuration from toml file."""
    return {**default(), **load_manifest_config(config_file)}


def default():
    """Return a default suite config dictionary."""
    return {
        # manifest of the full Europarl corpora; enables the reproduction test
        'europarl_manifest': '',
        # enables throughput tests on synthetic corpora
        'performance': False,
        'tests': []
    }
