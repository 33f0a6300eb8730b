from pytest import raises, mark

from alcoves.admissible.core.case import AdmissibleCase
from alcoves.admissible.core.errors import IllegalParameterError, MissingParameterError, \
    NotAdmissibleError, NotMinimalRepresentativeError
from alcoves.admissible.core.root_datum import Coweight
from alcoves.admissible.export.serialization import enumerate_document, enumerate_text, \
    face_document, face_id, face_map_document, faces_document, format_coweights, parse_face, \
    sorted_strs, to_json
from alcoves.test.admissible.test_utils import assert_exception_correct, affine_group, case


def test_format_coweights():
    assert format_coweights([Coweight([2, 0]), Coweight([0, -2]), Coweight([-2, 2])]) == [
        '[-2,2]', '[0,-2]', '[2,0]']
    assert format_coweights([]) == []


def test_face_id():
    p = case('A2', 2, 0).poset
    assert face_id(p.top) == {'a': 'e', 'I': [1, 2]}
    assert face_id(p.faces[1]) == {'a': 's2*s1', 'I': []}
    assert face_id(p.faces[5]) == {'a': 's2', 'I': [1]}

    with raises(Exception) as got:
        face_id(None)
    assert_exception_correct(got.value, TypeError('face cannot be None'))


@mark.parametrize('text, expected', [
    ('s2:1', 'F_{s2,{1}}'),
    ('e:', 'F_{e,{}}'),
    ('e:1,2', 'F_{e,{1,2}}'),
    (' s1*s2 : 1 ', 'F_{s1*s2,{1}}'),
    ('s2 :', 'F_{e,{}}'),
    # a non canonical pair
    ('e:2', 'F_{e,{}}'),
])
def test_parse_face(text, expected):
    assert str(parse_face(case('A2', 2, 0).poset, text)) == expected


@mark.parametrize('text, expected', [
    (None, MissingParameterError('face')),
    ('   ', MissingParameterError('face')),
    ('s2', IllegalParameterError('Face s2 is not of the form WORD:INDICES')),
    ('s2:1:2', IllegalParameterError('Face s2:1:2 is not of the form WORD:INDICES')),
    ('s2:x', IllegalParameterError('Illegal character in face s2:x: x')),
    ('s2:3', IllegalParameterError('Illegal simple root index 3 in face s2:3')),
    ('s2:0', IllegalParameterError('Illegal simple root index 0 in face s2:0')),
    ('s2:1 2', IllegalParameterError('Illegal simple root index 1 2 in face s2:1 2')),
    ('s3:1', IllegalParameterError('No simple reflection s3 in type A2')),
    (' :1', MissingParameterError('Weyl group element')),
    ('s1:1', NotMinimalRepresentativeError('s1 is not in W^I for I = {1}')),
])
def test_parse_face_fail(text, expected):
    with raises(Exception) as got:
        parse_face(case('A2', 2, 0).poset, text)
    assert_exception_correct(got.value, expected)


def test_enumerate_text():
    c = case('A1', 1)
    tau = str(c.adm.tau)
    assert enumerate_text(c) == '{}\t0\nt[-1]\t1\nt[1]\t1\ncount: 3\nmaximal: 2\n'.format(tau)


def test_enumerate_document():
    c = case('A1', 1)
    tau = str(c.adm.tau)
    assert enumerate_document(c) == {
        'case': 'A1 mu=[1]',
        'count': 3,
        'maximal': 2,
        'tau': tau,
        'elements': [{'element': tau, 'length': 0},
                     {'element': 't[-1]', 'length': 1},
                     {'element': 't[1]', 'length': 1}]}


def test_enumerate_document_a2():
    c = case('A2', 1, 0)
    doc = enumerate_document(c)
    assert doc['count'] == 7
    assert doc['maximal'] == 3
    assert [e['length'] for e in doc['elements']] == [0, 1, 1, 1, 2, 2, 2]
    assert [e['element'] for e in doc['elements'][-3:]] == ['t[-1,1]', 't[0,-1]', 't[1,0]']


def test_faces_document():
    c = AdmissibleCase(affine_group('A2'), Coweight([2, 0]))
    doc = faces_document(c)
    assert doc['case'] == 'A2 mu=[2,0]'
    assert len(doc['faces']) == 7
    assert doc['faces'][2] == {'face': {'a': 'e', 'I': []}, 'vertices': ['[2,0]'], 'dim': 0}
    assert doc['faces'][6] == {'face': {'a': 'e', 'I': [1, 2]},
                               'vertices': ['[-2,2]', '[0,-2]', '[2,0]'], 'dim': 2}

    # decomposed cases include interiors and centers
    c.decomposition
    doc = faces_document(c)
    assert doc['faces'][2] == {'face': {'a': 'e', 'I': []}, 'vertices': ['[2,0]'], 'dim': 0,
                               'interior': ['t[2,0]'], 'center': 't[2,0]'}
    assert len(doc['faces'][4]['interior']) == 3
    assert doc['faces'][6]['center'] == str(c.adm.tau)
    assert face_document(c, c.poset.faces[2]) == doc['faces'][2]


def test_face_map_document():
    c = case('A2', 2, 0)
    assert face_map_document(c, c.group.parse('t[2,0]')) == {
        'element': 't[2,0]',
        'face': {'a': 'e', 'I': []},
        'vertices': ['[2,0]'],
        'lambda': ['[2,0]']}
    assert face_map_document(c, c.adm.tau) == {
        'element': str(c.adm.tau),
        'face': {'a': 'e', 'I': [1, 2]},
        'vertices': ['[-2,2]', '[0,-2]', '[2,0]'],
        'lambda': ['[-2,2]', '[0,-2]', '[2,0]']}

    with raises(Exception) as got:
        face_map_document(c, c.group.parse('t[1,0]'))
    assert_exception_correct(got.value, NotAdmissibleError(
        't[1,0] is not in Adm([2,0]) of type A2'))


def test_sorted_strs():
    c = case('A2', 2, 0)
    g = c.group
    assert sorted_strs(c, [g.parse('t[2,0]'), c.adm.tau, g.parse('t[-2,2]')]) == [
        str(c.adm.tau), 't[-2,2]', 't[2,0]']


def test_to_json():
    assert to_json({'b': [1], 'a': 'x'}) == '{\n  "b": [\n    1\n  ],\n  "a": "x"\n}\n'
