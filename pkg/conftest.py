""" Pytest behavior customizations.

Tests carry ``@meta(module, criterion, name)``; results are gathered into an
acceptance profile printed at the end of the session.
"""

import logging
import os
import re

import pytest

from config import load_config, default
from reporting import AcceptanceProfile, TestFunction, TestReport
from wlstats.errors import ConfigError

SUITE_OPTIONS = (
    (('--sc', '--suite-config'), dict(
        dest='suite_config', metavar='SUITE_CONFIG',
        help='Load suite configuration from SUITE_CONFIG (a [config] table '
             'with europarl_manifest, performance and tests).')),
    (('-S', '--select'), dict(
        dest='select', metavar='SELECT_REGEX',
        help='Run tests whose meta name matches SELECT_REGEX. '
             'Overrides tests selected in configuration.')),
    (('-O', '--output'), dict(
        dest='save_path', metavar='PATH',
        help='Save acceptance profile to PATH.')),
    (('-L', '--list'), dict(
        dest='list_tests', action='store_true',
        help='List available tests.')),
    (('--show-dev-notes',), dict(
        dest='dev_notes', action='store_true',
        help='Output warnings logged during tests.')),
)


def pytest_addoption(parser):
    """ Suite options. """
    group = parser.getgroup(
        'wlstats', 'Word Length Statistics Test Suite', after='general'
    )
    for names, options in SUITE_OPTIONS:
        group.addoption(*names, **options)


def _suite_config(config) -> dict:
    path = config.getoption('suite_config')
    if path:
        return load_config(os.path.join(os.getcwd(), path))
    try:
        return load_config(os.path.join(os.getcwd(), 'config.toml'))
    except ConfigError:
        return default()


@pytest.hookimpl(trylast=True)
def pytest_configure(config):
    """ Load Test Suite Configuration. """
    config.suite_config = _suite_config(config)
    config.suite_config['save_path'] = config.getoption('save_path')
    select = config.getoption('select')
    config.select_regex = re.compile(select) if select else None
    config.tests_regex = [re.compile(test) for test in config.suite_config['tests']]


def _meta_name(item) -> str:
    func = getattr(item, '_obj', None)
    if callable(func) and hasattr(func, 'meta_set'):
        return TestFunction.from_function(func).flat_name
    return item.nodeid


def _wanted(config, name: str) -> bool:
    if config.select_regex:
        return bool(config.select_regex.match(name))
    if config.tests_regex:
        return any(regex.match(name) for regex in config.tests_regex)
    return True


def pytest_collection_modifyitems(session, config, items):
    """Register meta tests and apply the -S / configured selection."""
    # pylint: disable=protected-access
    profile = AcceptanceProfile.of(session.config.suite_config)
    remaining, deselected = [], []
    for item in items:
        item.meta_name = _meta_name(item)
        if hasattr(getattr(item, '_obj', None), 'meta_set'):
            profile.add_test(TestFunction.from_function(item._obj))
        (remaining if _wanted(config, item.meta_name) else deselected).append(item)
    if deselected:
        config.hook.pytest_deselected(items=deselected)
    items[:] = remaining


@pytest.hookimpl()
def pytest_report_collectionfinish(config, items):
    """Print available tests if option set."""
    if not config.getoption('list_tests'):
        return None
    reporter = config.pluginmanager.get_plugin('terminalreporter')
    reporter.write_sep('-', 'Available Tests', yellow=True)
    return AcceptanceProfile.of(config.suite_config).available_tests_json()


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """ Keep each phase's report on the item. """
    outcome = yield
    report = outcome.get_result()
    setattr(item, 'report_' + report.when, report)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Write the acceptance profile to the terminal summary."""
    if config.getoption('collectonly'):
        return
    profile = AcceptanceProfile.of(config.suite_config)
    sections = [('Acceptance Profile', profile.to_json())]
    if config.getoption('dev_notes'):
        sections.insert(0, ('Developer Notes', profile.notes_json()))
    for title, body in sections:
        terminalreporter.write('\n')
        terminalreporter.write_sep('=', title, bold=True)
        terminalreporter.write('\n' + body + '\n')


@pytest.fixture(scope='session')
def config(pytestconfig):
    """ Suite configuration. """
    yield pytestconfig.suite_config


@pytest.fixture(scope='session')
def report(config):
    """Session acceptance profile, saved with -O."""
    profile = AcceptanceProfile.of(config)
    yield profile
    if config.get('save_path'):
        profile.save(config['save_path'])


@pytest.fixture
def report_on_test(request, caplog, report):
    """Record the outcome and warnings of every meta test."""
    yield
    if not hasattr(request.function, 'meta_set'):
        return
    call = getattr(request.node, 'report_call', None)
    test_fn = TestFunction.from_function(request.function)
    report.add_report(TestReport(test_fn, bool(call and call.passed)))
    report.add_notes(test_fn, [
        record.getMessage()
        for when in ('setup', 'call', 'teardown')
        for record in caplog.get_records(when)
        if record.levelno >= logging.WARNING
    ])
