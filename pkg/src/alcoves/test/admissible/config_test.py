from unittest.mock import create_autospec, MagicMock
from pathlib import Path

from pytest import raises, fixture

from alcoves.admissible.config import AdmissibleConfig, AdmissibleConfigError
from alcoves.admissible.core.admissible import VerificationMode
from alcoves.test.admissible.test_utils import assert_exception_correct


def mock_file(path, contents):
    f = MagicMock()
    f.name = path
    f.__enter__.return_value = f
    f.__iter__.return_value = contents
    return f


def mock_path_to_file(path, contents, is_file=True) -> Path:
    p = create_autospec(Path, spec_set=True, instance=True)
    p.__str__.return_value = path
    p.is_file.return_value = is_file
    p.open.return_value = mock_file(path, contents)
    return p


@fixture
def no_env(monkeypatch):
    monkeypatch.delenv(AdmissibleConfig.ENV_VAR_ADMISSIBLE, raising=False)


def assert_defaults(c):
    assert c.mode is VerificationMode.FULL
    assert c.depth_margin == 2
    assert c.cache_size == 200000
    assert c.max_weyl_order == 1000000
    assert c.render_scale == 60
    assert c.log_level == 'WARNING'


def test_config_defaults(no_env):
    assert_defaults(AdmissibleConfig())


def test_config_get_env(monkeypatch):
    c = AdmissibleConfig(mock_path_to_file('path', ['[admissible]']))

    monkeypatch.setenv('ADMISSIBLE_CONFIG', 'some/path')
    assert c._get_cfg_from_env() == Path('some/path')

    monkeypatch.setenv('ADMISSIBLE_CONFIG', '')
    assert c._get_cfg_from_env() is None

    monkeypatch.delenv('ADMISSIBLE_CONFIG')
    assert c._get_cfg_from_env() is None


def test_config_from_env(monkeypatch, tmp_path):
    cfg = tmp_path / 'adm.cfg'
    cfg.write_text('[admissible]\nverification-mode=fast\nrender-scale=30\n')
    monkeypatch.setenv('ADMISSIBLE_CONFIG', str(cfg))

    c = AdmissibleConfig()
    assert c.mode is VerificationMode.FAST
    assert c.render_scale == 30
    assert c.depth_margin == 2


def test_config_path_overrides_env(monkeypatch, tmp_path):
    monkeypatch.setenv('ADMISSIBLE_CONFIG', str(tmp_path / 'nothere.cfg'))
    c = AdmissibleConfig(mock_path_to_file('path', ['[admissible]', 'log-level=info']))
    assert c.log_level == 'INFO'


def test_config_minimal():
    assert_defaults(AdmissibleConfig(mock_path_to_file('path', ['[admissible]'])))


def test_config_whitespace():
    c = AdmissibleConfig(mock_path_to_file('path', [
        '[admissible]',
        'verification-mode=   \t   ',
        'depth-margin=   \t   ',
        'bruhat-cache-size=',
        'max-weyl-order=   ',
        'render-scale=  ',
        'log-level=   \t ']))
    assert_defaults(c)


def test_config_maximal():
    c = AdmissibleConfig(mock_path_to_file('path', [
        '[admissible]',
        'verification-mode=  fast  ',
        'depth-margin=  5  ',
        'bruhat-cache-size=1000',
        'max-weyl-order=51840',
        'render-scale=25',
        'log-level= debug ',
        'some-other-key=whee']))
    assert c.mode is VerificationMode.FAST
    assert c.depth_margin == 5
    assert c.cache_size == 1000
    assert c.max_weyl_order == 51840
    assert c.render_scale == 25
    assert c.log_level == 'DEBUG'


def test_config_fail_not_file():
    fail_config(mock_path_to_file('path/2/whee', [], False), AdmissibleConfigError(
        'path/2/whee does not exist or is not a file'))


def test_config_fail_corrupt():
    # one of the many ways a file can be corrupt per configparser
    fail_config(mock_path_to_file('path/2/whee', ['whee'], True), AdmissibleConfigError(
        'Error parsing config file path/2/whee: File contains no section headers.\n' +
        "file: 'path/2/whee', line: 1\n" +
        "'whee'"))


def test_config_fail_no_section():
    fail_config(mock_path_to_file('path/2/whee', ['[sec]'], True), AdmissibleConfigError(
        'No section admissible found in config file path/2/whee'))


def test_config_fail_mode():
    fail_config(mock_path_to_file('path/2/whee', ['[admissible]', 'verification-mode=slow']),
                AdmissibleConfigError(
                    'Parameter verification-mode in configuration file path/2/whee, section ' +
                    'admissible, is invalid: Unknown verification mode: slow'))


def test_config_fail_ints():
    for key in ['depth-margin', 'bruhat-cache-size', 'max-weyl-order', 'render-scale']:
        fail_config(mock_path_to_file('path/2/whee', ['[admissible]', key + '=2.5']),
                    AdmissibleConfigError(
                        'Parameter {} in configuration file path/2/whee, section '.format(key) +
                        'admissible, is not an integer: 2.5'))
        for val in ['0', '-3']:
            fail_config(mock_path_to_file('path/2/whee', ['[admissible]', key + '=' + val]),
                        AdmissibleConfigError(
                            'Parameter {} in configuration file path/2/whee, section '.format(
                                key) + 'admissible, must be at least 1'))


def test_config_fail_log_level():
    fail_config(mock_path_to_file('path/2/whee', ['[admissible]', 'log-level=loud']),
                AdmissibleConfigError(
                    'Parameter log-level in configuration file path/2/whee, section ' +
                    'admissible, is not one of DEBUG, INFO, WARNING, ERROR, CRITICAL'))


def fail_config(path: Path, expected: Exception):
    with raises(Exception) as got:
        AdmissibleConfig(path)
    assert_exception_correct(got.value, expected)
