from pytest import raises, mark

from alcoves.admissible.core.case import AdmissibleCase
from alcoves.admissible.core.errors import DegenerateInputError, IllegalParameterError, \
    InvariantViolationError
from alcoves.admissible.core.face_map import FaceDecomposition
from alcoves.admissible.core.root_datum import Coweight
from alcoves.admissible.verification.report import CheckStatus
from alcoves.admissible.verification.suites import ALL, SUITES, lemma_a1a2, run_suite, \
    suite_names, verify_characterization, verify_fibers
from alcoves.test.admissible.test_utils import assert_exception_correct, affine_group, case, \
    weyl_group


def test_suite_names():
    assert suite_names() == [
        'maxwell', 'hh', 'main1', 'main2', 'characterization', 'lemmas', 'all']
    assert ALL == 'all'
    assert list(SUITES) == suite_names()[:-1]


@mark.parametrize('label, mu', [('A1', [1]), ('A2', [2, 0]), ('A2', [1, 1]), ('C2', [1, 0]),
                                       ('C2', [0, 1])])
def test_all_pass(label, mu):
    r = run_suite(case(label, *mu), 'all')
    assert r.case == case(label, *mu).label
    assert r.failures() == []
    assert r.passed is True
    prefixes = [c.name.split('.')[0] for c in r.checks]
    assert sorted(set(prefixes), key=prefixes.index) == list(SUITES)


def test_maxwell_checks():
    r = run_suite(case('A2', 2, 0), 'maxwell')
    assert [c.name for c in r.checks] == [
        'maxwell.face-count', 'maxwell.vertex-faces', 'maxwell.containment',
        'maxwell.intersections', 'maxwell.smallest-face', 'maxwell.reduced-dimension']
    assert all(c.status is CheckStatus.PASS for c in r.checks)


def test_main2_c2():
    r = verify_fibers(case('C2', 0, 1))
    assert r.passed is True
    assert [c.name for c in r.checks] == [
        'main2.face-map', 'main2.partition', 'main2.fibers', 'main2.surjective',
        'main2.centers', 'main2.non-injective']


def test_non_injective_info():
    r = run_suite(case('A2', 2, 0), 'main2')
    assert r.checks[-1].status is CheckStatus.INFO
    assert r.checks[-1].witness == 'F_{s1*s2,{1}} has 3 interior elements'

    r = run_suite(case('A1', 1), 'main2')
    assert r.checks[-1].witness == 'none'


def test_characterization():
    r = verify_characterization(case('A2', 1, 1))
    assert r.passed is True
    assert [c.name for c in r.checks] == [
        'characterization.face-map', 'characterization.order-reversing',
        'characterization.centers', 'characterization.reconstruction']


def test_face_map_failure(monkeypatch):
    def fail(self, w):
        raise InvariantViolationError('broken')

    monkeypatch.setattr(FaceDecomposition, 'face_map', fail)
    c = AdmissibleCase(affine_group('A2'), Coweight([1, 0]))
    r = run_suite(c, 'main2')
    assert r.passed is False
    assert [c.to_dict() for c in r.checks] == [{
        'name': 'main2.face-map', 'status': 'fail',
        'witness': '60000 Invariant violated: broken'}]


@mark.parametrize('label', ['A2', 'A3', 'B3', 'C3', 'C2', 'G2'])
def test_lemma_a1a2(label):
    assert lemma_a1a2(weyl_group(label)) is None


def test_lemma_a1a2_fail():
    with raises(Exception) as got:
        lemma_a1a2(None)
    assert_exception_correct(got.value, TypeError('weyl cannot be None'))


def test_run_suite_fail():
    c = case('A2', 2, 0)
    with raises(Exception) as got:
        run_suite(c, 'maxwel')
    assert_exception_correct(got.value, IllegalParameterError(
        'Unknown suite maxwel, expected one of maxwell, hh, main1, main2, characterization, ' +
        'lemmas, all'))

    with raises(Exception) as got:
        run_suite(case('A2', 0, 0), 'all')
    assert_exception_correct(got.value, DegenerateInputError(
        'Verification needs a nonzero coweight'))

    with raises(Exception) as got:
        run_suite(None, 'all')
    assert_exception_correct(got.value, TypeError('case cannot be None'))
