"""Acceptance profile for the wlstats test suite."""
import datetime
import json
from collections import OrderedDict
from typing import Dict, List, Sequence

from wlstats import VERSION

# pylint: disable=too-few-public-methods


def meta(module: str = None, criterion: str = None, name: str = None):
    """Tag a test with the module and acceptance criterion it covers."""
    def _meta(func):
        func.meta_set = True
        func.module = module
        func.criterion = criterion
        func.name = name
        return func
    return _meta


class TestFunction:
    """A tagged test."""

    __slots__ = ('module', 'criterion', 'name', 'description')

    def __init__(self, module: str, criterion: str, name: str, description: str):
        self.module = module
        self.criterion = criterion
        self.name = name
        self.description = description

    @classmethod
    def from_function(cls, func):
        return cls(func.module, func.criterion, func.name, func.__doc__)

    @property
    def flat_name(self) -> str:
        """module,criterion,name"""
        return ','.join([self.module, self.criterion, self.name])

    def flatten(self) -> dict:
        return {'name': self.flat_name, 'description': self.description}

    def __hash__(self):
        return hash(self.flat_name)

    def __eq__(self, other):
        return isinstance(other, TestFunction) and \
            self.flat_name == other.flat_name


class TestReport:
    """Outcome of one tagged test."""

    __slots__ = ('function', 'passed')

    def __init__(self, function: TestFunction, passed: bool):
        self.function = function
        self.passed = passed

    @property
    def key(self) -> str:
        return '{},{}'.format(self.function.module, self.function.criterion)

    def flatten(self) -> dict:
        flat = self.function.flatten()
        if not flat['description']:
            del flat['description']
        flat['pass'] = self.passed
        return flat


class AcceptanceProfile:
    """Pass counts per acceptance criterion plus every test result."""
    TYPE = 'Word Length Statistics Acceptance Profile v1'

    _session = None

    def __init__(self, config: dict):
        self.test_time = '{:%Y-%m-%dT%H:%M:%S}'.format(datetime.datetime.utcnow())
        self.manifest = config.get('europarl_manifest', '')
        self.available: List[TestFunction] = []
        self.reports: List[TestReport] = []
        self.notes: Dict[str, List[str]] = {}

    @classmethod
    def of(cls, config: dict) -> 'AcceptanceProfile':
        """The profile of the running session."""
        if cls._session is None:
            cls._session = cls(config)
        return cls._session

    def add_test(self, test_fn: TestFunction):
        self.available.append(test_fn)

    def add_report(self, report: TestReport):
        self.reports.append(report)

    def add_notes(self, test_fn: TestFunction, notes: Sequence[str]):
        if notes:
            self.notes.setdefault(test_fn.flat_name, []).extend(notes)

    def criteria(self) -> Dict[str, dict]:
        totals = OrderedDict()
        for report in sorted(self.reports, key=lambda report: report.key):
            entry = totals.setdefault(report.key, {'passed': 0, 'total': 0})
            entry['passed'] += int(report.passed)
            entry['total'] += 1
        return totals

    def flatten(self) -> dict:
        return {
            '@type': self.TYPE,
            'suite_version': VERSION,
            'europarl_manifest': self.manifest,
            'test_time': self.test_time,
            'criteria': self.criteria(),
            'results': [report.flatten() for report in self.reports],
        }

    def to_json(self) -> str:
        return json.dumps(self.flatten(), indent=2)

    def available_tests_json(self) -> str:
        return json.dumps([test.flatten() for test in self.available], indent=2)

    def notes_json(self) -> str:
        return json.dumps(self.notes, indent=2)

    def save(self, path: str):
        with open(path, 'w') as out_file:
            out_file.write(self.to_json() + '\n')
