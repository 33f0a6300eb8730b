from pytest import raises, mark

from alcoves.admissible.core.errors import IllegalParameterError, MismatchedRootDataError, \
    MissingParameterError, NotMinimalRepresentativeError, UnsupportedOperationError, \
    NotDominantError
from alcoves.admissible.core.finite_weyl import FiniteWeylGroup, format_indices, reflection
from alcoves.admissible.core.root_datum import Coweight, Root, build_root_datum
from alcoves.test.admissible.test_utils import assert_exception_correct, weyl_group


def test_elements_a2():
    w = weyl_group('A2')
    assert [str(z) for z in w.elements()] == ['e', 's1', 's2', 's1*s2', 's2*s1', 's1*s2*s1']
    assert [z.length for z in w.elements()] == [0, 1, 1, 2, 2, 3]
    assert str(w.longest_element()) == 's1*s2*s1'
    assert w.identity().is_identity()
    assert not w.simple_reflection(0).is_identity()


@mark.parametrize('label, order, longest', [
    ('A1', 2, 1),
    ('A2', 6, 3),
    ('A3', 24, 6),
    ('B2', 8, 4),
    ('C2', 8, 4),
    ('B3', 48, 9),
    ('C3', 48, 9),
    ('D2', 4, 2),
    ('G2', 12, 6),
])
def test_orders(label, order, longest):
    w = weyl_group(label)
    assert len(w.elements()) == order
    assert w.order() == order
    assert len(set(w.elements())) == order
    assert w.longest_element().length == longest
    for z in w.elements():
        assert z.inversion_count() == z.length
        assert (z * z.inverse()).is_identity()
        assert z.inverse().length == z.length


def test_word_and_parse():
    w = weyl_group('A2')
    z = w.parse('s2*s1*s2')
    assert z.word == (0, 1, 0)
    assert str(z) == 's1*s2*s1'
    assert repr(z) == 'FiniteWeylElt(A2, s1*s2*s1)'
    assert w.parse('e') == w.identity()
    assert str(w.parse('s1*s1')) == 'e'
    assert w.parse('s1*s2').inverse() == w.parse('s2*s1')


def test_parse_fail():
    w = weyl_group('A2')
    fail_parse(w, None, MissingParameterError('Weyl group element'))
    fail_parse(w, 'x1', IllegalParameterError('Illegal character in Weyl group element x1: x'))
    fail_parse(w, 's1**s2', IllegalParameterError(
        'Illegal letter  in Weyl group element s1**s2'))
    fail_parse(w, 'se', IllegalParameterError('Illegal letter se in Weyl group element se'))
    fail_parse(w, 's3', IllegalParameterError('No simple reflection s3 in type A2'))
    fail_parse(w, 's0', IllegalParameterError('No simple reflection s0 in type A2'))


def fail_parse(w, text, expected):
    with raises(Exception) as got:
        w.parse(text)
    assert_exception_correct(got.value, expected)


def test_actions():
    w = weyl_group('A2')
    s1, s2 = w.simple_reflections()
    assert s2.act_root(Root([1, 0])) == Root([1, 1])
    assert s1.act_root(Root([1, 0])) == Root([-1, 0])
    assert (s1 * s2).act_inverse_root(Root([0, 1])) == Root([1, 0])
    assert s1.act(Coweight([2, 0])) == Coweight([-2, 2])
    assert s2.act(Coweight([2, 0])) == Coweight([2, 0])
    assert s1.inverts(Root([1, 0]))
    assert not s1.inverts(Root([1, 1]))
    assert (s1 * s2).left_descents() == {0}
    assert (s1 * s2).right_descents() == {1}
    assert w.longest_element().left_descents() == {0, 1}
    assert (s1 * s2).support() == {0, 1}


def test_reflections():
    w = weyl_group('A2')
    assert w.parse('s1*s2*s1').root_of_reflection() == Root([1, 1])
    assert w.parse('s2').root_of_reflection() == Root([0, 1])
    assert w.parse('s1*s2').root_of_reflection() is None
    assert w.identity().root_of_reflection() is None
    assert reflection(w.root_datum, Root([1, 1])) == w.parse('s1*s2*s1')
    assert w.reflection(Root([-1, -1])) == w.parse('s1*s2*s1')
    c2 = weyl_group('C2')
    assert c2.reflection(Root([2, 1])) == c2.parse('s1*s2*s1')
    assert c2.parse('s2*s1*s2').root_of_reflection() == Root([1, 1])


@mark.parametrize('label', ['A2', 'C2', 'G2', 'A3'])
def test_is_reflection(label):
    w = weyl_group(label)
    refl = [z for z in w.elements() if z.is_reflection()]
    # one reflection per positive root
    assert len(refl) == len(w.root_datum.pos_roots)
    assert {z.root_of_reflection() for z in refl} == set(w.root_datum.pos_roots)
    assert all(s.is_reflection() for s in w.simple_reflections())
    assert w.identity().is_reflection() is False
    # w0 is -1 in C2 and G2 and an even permutation in A3
    assert w.longest_element().is_reflection() is (label == 'A2')


def test_parabolics_and_cosets():
    w = weyl_group('A2')
    s1, s2 = w.simple_reflections()
    assert w.parabolic([0]) == {w.identity(), s1}
    assert w.parabolic([]) == {w.identity()}
    assert w.parabolic([0, 1]) == set(w.elements())
    assert w.in_parabolic(s1, {0})
    assert not w.in_parabolic(s1 * s2, {0})
    assert [str(a) for a in w.min_coset_reps({0})] == ['e', 's2', 's1*s2']
    assert [str(a) for a in w.min_coset_reps(set())] == [str(z) for z in w.elements()]
    assert [str(a) for a in w.min_coset_reps({0, 1})] == ['e']
    assert w.is_min_coset_rep(s2, {0})
    assert not w.is_min_coset_rep(s1, {0})
    assert w.double_coset(s2, {0}, {1}) == {w.identity(), s2, s2 * s1, s2 * s1 * s2}
    assert w.double_coset(w.identity(), set(), set()) == {w.identity()}


@mark.parametrize('label', ['A3', 'B3', 'C3'])
def test_min_coset_reps_count(label):
    w = weyl_group(label)
    for i in range(w.rank):
        reps = w.min_coset_reps({i})
        assert len(reps) * 2 == w.order()
        # every element factors uniquely as a * u
        assert {a * u for a in reps for u in w.parabolic({i})} == set(w.elements())


def test_double_coset_fail():
    w = weyl_group('A2')
    with raises(Exception) as got:
        w.double_coset(w.simple_reflection(0), {0}, {1})
    assert_exception_correct(got.value, NotMinimalRepresentativeError(
        's1 is not in W^I for I = {1}'))
    with raises(Exception) as got:
        w.double_coset(w.identity(), {3}, {1})
    assert_exception_correct(got.value, IllegalParameterError(
        'No simple root with index 3 in type A2'))
    with raises(Exception) as got:
        w.double_coset(None, {0}, {1})
    assert_exception_correct(got.value, TypeError('a cannot be None'))


def test_orbits():
    w = weyl_group('A2')
    assert w.weyl_orbit(Coweight([2, 0])) == {Coweight([2, 0]), Coweight([-2, 2]),
                                              Coweight([0, -2])}
    assert len(w.weyl_orbit(Coweight([1, 1]))) == 6
    assert w.weyl_orbit(Coweight([0, 0])) == {Coweight([0, 0])}
    assert w.stabilizer(Coweight([2, 0])) == {w.identity(), w.simple_reflection(1)}
    c2 = weyl_group('C2')
    assert c2.weyl_orbit(Coweight([1, 0])) == {Coweight([1, 0]), Coweight([-1, 2]),
                                               Coweight([1, -2]), Coweight([-1, 0])}
    with raises(Exception) as got:
        w.weyl_orbit(Coweight([-1, 0]))
    assert_exception_correct(got.value, NotDominantError('[-1,0] in type A2'))


def test_mismatched_root_data():
    with raises(Exception) as got:
        weyl_group('A2').simple_reflection(0) * weyl_group('C2').simple_reflection(0)
    assert_exception_correct(got.value, MismatchedRootDataError('A2 vs. C2'))


def test_max_order():
    w = FiniteWeylGroup(build_root_datum('B3'), max_order=10)
    with raises(Exception) as got:
        w.elements()
    assert_exception_correct(got.value, UnsupportedOperationError(
        'W0 of type B3 has 48 elements, more than the maximum of 10'))


def test_equality():
    a2 = weyl_group('A2')
    other = FiniteWeylGroup(build_root_datum('A2'))
    assert a2.parse('s1*s2') == other.parse('s1*s2')
    assert hash(a2.parse('s1*s2')) == hash(other.parse('s1*s2'))
    assert a2.parse('s1') != weyl_group('B2').parse('s1')
    assert a2.parse('s1') != 's1'


def test_format_indices():
    assert format_indices({1, 0}) == '{1,2}'
    assert format_indices(set()) == '{}'
