from pytest import raises, fixture

from alcoves.admissible.builder import AdmissibleBuilder, AdmissibleBuildException
from alcoves.admissible.core.admissible import VerificationMode
from alcoves.admissible.core.errors import IllegalParameterError, NotDominantError, \
    UnsupportedCartanTypeError, UnsupportedOperationError
from alcoves.admissible.core.root_datum import Coweight
from alcoves.test.admissible.test_utils import assert_exception_correct


@fixture
def no_env(monkeypatch):
    monkeypatch.delenv('ADMISSIBLE_CONFIG', raising=False)


@fixture
def cfg(tmp_path):
    p = tmp_path / 'adm.cfg'
    p.write_text('\n'.join([
        '[admissible]',
        'verification-mode=fast',
        'depth-margin=3',
        'bruhat-cache-size=500',
        'max-weyl-order=5',
    ]) + '\n')
    return p


def test_build_root_datum(no_env):
    b = AdmissibleBuilder()
    rd = b.build_root_datum('A2')
    assert rd.cartan_type == 'A2'
    assert b.build_root_datum('a2') is rd
    assert b.build_root_datum('C2') is not rd


def test_build_root_datum_fail():
    fail_build_root_datum('X2', UnsupportedCartanTypeError('Type X'))
    fail_build_root_datum('G3', UnsupportedCartanTypeError(
        'Type G requires rank between 2 and 2, got 3'))
    fail_build_root_datum('2A', IllegalParameterError(
        'Cartan type 2A is not a letter followed by a rank'))


def fail_build_root_datum(label, expected):
    with raises(Exception) as got:
        AdmissibleBuilder().build_root_datum(label)
    assert_exception_correct(got.value, expected)


def test_build_groups(no_env):
    b = AdmissibleBuilder()
    w = b.build_weyl_group('A2')
    assert w.root_datum is b.build_root_datum('A2')
    assert b.build_weyl_group('A2') is w
    g = b.build_affine_group('A2')
    assert g.weyl is w
    assert b.build_affine_group('A2') is g
    assert len(w.elements()) == 6


def test_build_case_defaults(no_env):
    b = AdmissibleBuilder()
    c = b.build_case('A2', Coweight([2, 0]))
    assert c.group is b.build_affine_group('A2')
    assert c.mu == Coweight([2, 0])
    assert c.mode is VerificationMode.FULL
    assert c.depth_margin == 2
    assert b.cfg.render_scale == 60
    # cases of one type share the group
    assert b.build_case('A2', Coweight([1, 1])).group is c.group


def test_build_case_config(cfg):
    b = AdmissibleBuilder()
    c = b.build_case('A1', Coweight([1]), cfg)
    assert c.mode is VerificationMode.FAST
    assert c.depth_margin == 3
    assert len(c.adm) == 3
    # reaching into the implementation, there's no public accessor for the memo size
    assert c.adm._cache_size == 500
    assert b.get_cfg() is b.cfg


def test_config_memoized(cfg, tmp_path):
    b = AdmissibleBuilder()
    c1 = b.get_cfg(cfg)
    assert b.get_cfg(tmp_path / 'nothere.cfg') is c1
    assert b.get_cfg() is c1


def test_max_weyl_order(cfg):
    b = AdmissibleBuilder()
    w = b.build_weyl_group('A2', cfg)
    with raises(Exception) as got:
        w.elements()
    assert_exception_correct(got.value, UnsupportedOperationError(
        'W0 of type A2 has 6 elements, more than the maximum of 5'))


def test_build_fail_config(tmp_path):
    p = tmp_path / 'nothere.cfg'
    with raises(Exception) as got:
        AdmissibleBuilder().build_case('A2', Coweight([1, 0]), p)
    assert_exception_correct(got.value, AdmissibleBuildException(
        '{} does not exist or is not a file'.format(p)))

    with raises(Exception) as got:
        AdmissibleBuilder().get_cfg(p)
    assert_exception_correct(got.value, AdmissibleBuildException(
        '{} does not exist or is not a file'.format(p)))


def test_build_case_fail(no_env):
    b = AdmissibleBuilder()
    with raises(Exception) as got:
        b.build_case('A2', Coweight([1, -1]))
    assert_exception_correct(got.value, NotDominantError('[1,-1] in type A2'))

    with raises(Exception) as got:
        b.build_case('A2', None)
    assert_exception_correct(got.value, TypeError('mu cannot be None'))
