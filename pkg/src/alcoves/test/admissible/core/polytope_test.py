from pytest import raises, mark

from alcoves.admissible.core.errors import DegenerateInputError, IllegalParameterError, \
    MismatchedRootDataError, NotDominantError, NotInOrbitError, NotMinimalRepresentativeError
from alcoves.admissible.core.polytope import FacePoset, pair_key
from alcoves.admissible.core.root_datum import Coweight
from alcoves.test.admissible.test_utils import assert_exception_correct, weyl_group

_POSETS = {}


def poset(label, *mu):
    key = (label, mu)
    if key not in _POSETS:
        _POSETS[key] = FacePoset(weyl_group(label), Coweight(mu))
    return _POSETS[key]


def test_pair_key():
    w = weyl_group('A2')
    e, s1, s2 = w.identity(), w.simple_reflection(0), w.simple_reflection(1)
    pairs = [(s2, frozenset()), (e, frozenset({1})), (s1, frozenset()), (e, frozenset({0, 1})),
             (e, frozenset({0})), (e, frozenset())]
    assert sorted(pairs, key=pair_key) == [
        (e, frozenset()), (e, frozenset({0})), (e, frozenset({1})), (e, frozenset({0, 1})),
        (s1, frozenset()), (s2, frozenset())]


@mark.parametrize('label, mu, by_dim', [
    ('A2', [2, 0], [3, 3, 1]),
    ('A2', [0, 1], [3, 3, 1]),
    ('A2', [1, 1], [6, 6, 1]),
    ('C2', [1, 0], [4, 4, 1]),
    ('C2', [0, 1], [4, 4, 1]),
    ('C2', [1, 1], [8, 8, 1]),
    ('G2', [1, 1], [12, 12, 1]),
    ('A3', [1, 0, 0], [4, 6, 4, 1]),
    ('A3', [0, 1, 0], [6, 12, 8, 1]),
    ('D2', [1, 0], [2, 1]),
])
def test_face_counts(label, mu, by_dim):
    p = poset(label, *mu)
    assert len(p) == sum(by_dim)
    assert [len(p.faces_of_dim(d)) for d in range(len(by_dim))] == by_dim
    assert len(p.vertex_faces()) == len(p.orbit)
    assert p.top.vertices == p.orbit
    assert p.top.dim == len(by_dim) - 1
    assert list(p) == p.faces
    # sorted by dimension first
    assert [f.dim for f in p] == sorted(f.dim for f in p)


def test_a2_faces():
    p = poset('A2', 2, 0)
    assert p.mu == Coweight([2, 0])
    assert p.j_mu == frozenset({1})
    assert p.orbit == {Coweight([2, 0]), Coweight([-2, 2]), Coweight([0, -2])}
    assert [str(f) for f in p] == [
        'F_{s1,{}}', 'F_{s2*s1,{}}', 'F_{e,{}}',
        'F_{s1*s2,{1}}', 'F_{e,{1}}', 'F_{s2,{1}}',
        'F_{e,{1,2}}']
    assert [f.sorted_vertices() for f in p.vertex_faces()] == [
        [Coweight([-2, 2])], [Coweight([0, -2])], [Coweight([2, 0])]]
    edge = p.faces[4]
    assert edge.sorted_vertices() == [Coweight([-2, 2]), Coweight([2, 0])]
    assert edge.dim == 1
    w = p.weyl
    assert edge.coset == {w.parse('e'), w.parse('s1'), w.parse('s2'), w.parse('s1*s2')}
    assert edge.canonical_pair == (w.identity(), frozenset({0}))
    assert repr(edge) == 'FaceHandle(F_{e,{1}})'


def test_vertex_face():
    p = poset('A2', 2, 0)
    assert str(p.vertex_face(Coweight([2, 0]))) == 'F_{e,{}}'
    assert str(p.vertex_face(Coweight([0, -2]))) == 'F_{s2*s1,{}}'

    with raises(Exception) as got:
        p.vertex_face(Coweight([1, 0]))
    assert_exception_correct(got.value, NotInOrbitError(
        '[1,0] is not in the Weyl orbit of [2,0]'))


def test_find():
    p = poset('A2', 2, 0)
    w = p.weyl
    assert p.find(w.parse('s2'), [0]) == p.faces[5]
    assert p.find(w.identity(), [0, 1]) == p.top
    # a non canonical pair of the vertex mu
    assert p.find(w.parse('s2'), []) == p.faces[2]

    with raises(Exception) as got:
        p.find(w.parse('s1'), [0])
    assert_exception_correct(got.value, NotMinimalRepresentativeError(
        's1 is not in W^I for I = {1}'))


def test_pairs():
    p = poset('A2', 2, 0)
    w = p.weyl
    e, s2 = w.identity(), w.simple_reflection(1)
    assert p.pairs(p.faces[2]) == [(e, frozenset()), (e, frozenset({1})), (s2, frozenset())]
    assert p.pairs(p.top) == [(e, frozenset({0, 1}))]
    # a copy
    p.pairs(p.top).clear()
    assert len(p.pairs(p.top)) == 1


@mark.parametrize('label, mu', [
    ('A2', [2, 0]), ('A2', [1, 1]), ('C2', [1, 0]), ('C2', [0, 1]), ('A3', [0, 1, 0]),
    ('D2', [1, 0])
])
def test_reduced_pair_dimension(label, mu):
    p = poset(label, *mu)
    for f in p:
        a, indices = p.reduced_pair(f)
        assert len(indices) == f.dim
        assert p.find(a, indices) == f


def test_reduced_pair_skips_stabilizer_components():
    p = poset('D2', 1, 0)
    w = p.weyl
    e, s2 = w.identity(), w.simple_reflection(1)
    assert p.pairs(p.top) == [
        (e, frozenset({0})), (e, frozenset({0, 1})), (s2, frozenset({0}))]
    assert p.reduced_pair(p.top) == (e, frozenset({0}))
    assert str(p.top) == 'F_{e,{1}}'


def test_face_leq():
    p = poset('A2', 2, 0)
    mu_face, edge = p.faces[2], p.faces[4]
    assert p.face_leq(mu_face, edge) is True
    assert p.face_leq(edge, mu_face) is False
    assert p.face_leq(p.faces[1], edge) is False
    assert p.face_leq(edge, edge) is True
    assert p.face_less(edge, edge) is False
    assert p.face_less(mu_face, edge) is True
    assert all(p.face_leq(f, p.top) for f in p)


def test_face_leq_fail():
    p = poset('A2', 2, 0)
    other = poset('A2', 1, 1)
    for f1, f2 in [(other.top, p.top), (p.top, other.top)]:
        with raises(Exception) as got:
            p.face_leq(f1, f2)
        assert_exception_correct(got.value, MismatchedRootDataError(
            'F_{e,{1,2}} is not a face of the polytope of [2,0]'))

    with raises(Exception) as got:
        p.face_leq(None, p.top)
    assert_exception_correct(got.value, TypeError('face cannot be None'))


def test_face_intersection():
    p = poset('A2', 2, 0)
    w = p.weyl
    f1 = p.find(w.identity(), [0])
    f2 = p.find(w.parse('s2'), [0])
    assert p.face_intersection(f1, f2) == p.find(w.identity(), [])
    assert str(p.face_intersection(f1, f2)) == 'F_{e,{}}'
    assert p.face_intersection(f1, p.top) == f1
    assert p.face_intersection(p.faces[0], p.faces[1]) is None

    with raises(Exception) as got:
        p.face_intersection(f1, poset('A2', 1, 1).top)
    assert_exception_correct(got.value, MismatchedRootDataError(
        'F_{e,{1,2}} is not a face of the polytope of [2,0]'))


def test_smallest_face_containing():
    p = poset('A2', 2, 0)
    mu, s1mu, s2s1mu = Coweight([2, 0]), Coweight([-2, 2]), Coweight([0, -2])
    assert str(p.smallest_face_containing([mu, s1mu])) == 'F_{e,{1}}'
    assert str(p.smallest_face_containing([mu, s2s1mu])) == 'F_{s2,{1}}'
    assert p.smallest_face_containing([mu, s1mu, s2s1mu]) == p.top
    assert p.smallest_face_containing([mu, mu]) == p.faces[2]
    # single pass iterables
    assert str(p.smallest_face_containing(v for v in [mu, s1mu])) == 'F_{e,{1}}'
    assert p.smallest_face_containing(iter([s2s1mu])) == p.faces[1]


def test_smallest_face_containing_c2():
    p = poset('C2', 1, 0)
    # opposite vertices span the whole square
    assert p.smallest_face_containing([Coweight([1, 0]), Coweight([-1, 0])]) == p.top
    for f in p:
        assert p.smallest_face_containing(f.vertices) == f


def test_smallest_face_containing_fail():
    p = poset('A2', 2, 0)
    with raises(Exception) as got:
        p.smallest_face_containing([])
    assert_exception_correct(got.value, IllegalParameterError('At least one vertex is required'))

    with raises(Exception) as got:
        p.smallest_face_containing([Coweight([2, 0]), Coweight([1, 1]), Coweight([0, 1])])
    assert_exception_correct(got.value, NotInOrbitError(
        '[0,1] is not in the Weyl orbit of [2,0]'))

    with raises(Exception) as got:
        p.smallest_face_containing([Coweight([2, 0]), None])
    assert_exception_correct(got.value, TypeError('None item in vertices'))

    with raises(Exception) as got:
        p.smallest_face_containing(None)
    assert_exception_correct(got.value, TypeError('vertices cannot be None'))

    with raises(Exception) as got:
        p.smallest_face_containing(v for v in [])
    assert_exception_correct(got.value, IllegalParameterError('At least one vertex is required'))


def test_hasse_edges():
    p = poset('A2', 2, 0)
    edges = p.hasse_edges()
    assert len(edges) == 9
    assert all(f2.dim == f1.dim + 1 for f1, f2 in edges)
    assert (p.faces[2], p.faces[4]) in edges
    assert (p.faces[2], p.top) not in edges
    assert edges == sorted(edges, key=lambda e: (p.faces.index(e[0]), p.faces.index(e[1])))

    assert len(poset('A2', 1, 1).hasse_edges()) == 18
    assert len(poset('D2', 1, 0).hasse_edges()) == 2


def test_construct_fail():
    w = weyl_group('A2')
    with raises(Exception) as got:
        FacePoset(w, Coweight([0, 0]))
    assert_exception_correct(got.value, DegenerateInputError(
        'The polytope of the zero coweight is a point'))

    with raises(Exception) as got:
        FacePoset(w, Coweight([1, -1]))
    assert_exception_correct(got.value, NotDominantError('[1,-1] in type A2'))

    with raises(Exception) as got:
        FacePoset(None, Coweight([1, 0]))
    assert_exception_correct(got.value, TypeError('weyl cannot be None'))

    with raises(Exception) as got:
        FacePoset(w, None)
    assert_exception_correct(got.value, TypeError('mu cannot be None'))
