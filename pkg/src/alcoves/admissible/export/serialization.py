"""
Serialization of elements, faces and cases to text and JSON documents.

Elements serialize as 't[2,0]*s1*s2', faces as {"a": "s1*s2", "I": [1]} with 1-based simple
root indices, and faces given on the command line as 'WORD:INDICES', e.g. 's2:1' or 'e:'.
"""
import json
from typing import Any, Dict, Iterable, List, Set

from alcoves.admissible.core.admissible import lambda_set
from alcoves.admissible.core.affine_weyl import ExtAffineElt
from alcoves.admissible.core.arg_check import check_string, not_none
from alcoves.admissible.core.case import AdmissibleCase
from alcoves.admissible.core.errors import IllegalParameterError
from alcoves.admissible.core.polytope import FaceHandle, FacePoset
from alcoves.admissible.core.root_datum import Coweight


def format_coweights(coweights: Iterable[Coweight]) -> List[str]:
    """ Serialize coweights in sorted order. """
    return [str(c) for c in sorted(coweights, key=lambda c: c.coords)]


def face_id(face: FaceHandle) -> Dict[str, Any]:
    """ The identifier {"a": word, "I": 1-based indices} of the canonical pair of a face. """
    not_none(face, 'face')
    return {'a': str(face.a), 'I': [i + 1 for i in sorted(face.indices)]}


def parse_face(poset: FacePoset, text: str) -> FaceHandle:
    """
    Parse a face given as 'WORD:INDICES', e.g. 's2:1' for F_{s2,{alpha_1}} or 'e:' for a
    vertex face.

    :raises IllegalParameterError: if the string is malformed.
    :raises NotMinimalRepresentativeError: if the word is not in W^I.
    """
    not_none(poset, 'poset')
    check_string(text, 'face', 'se0-9*:, ')
    if text.count(':') != 1:
        raise IllegalParameterError('Face {} is not of the form WORD:INDICES'.format(text))
    word, idx = text.split(':')
    a = poset.weyl.parse(word.strip())
    indices: Set[int] = set()
    for i in idx.split(','):
        if not i.strip():
            continue
        if not i.strip().isdigit() or not 1 <= int(i) <= poset.weyl.rank:
            raise IllegalParameterError('Illegal simple root index {} in face {}'.format(
                i.strip(), text))
        indices.add(int(i) - 1)
    return poset.find(a, indices)


def face_document(case: AdmissibleCase, face: FaceHandle) -> Dict[str, Any]:
    """ A face with its vertices and dimension, plus interior and center if decomposed. """
    doc: Dict[str, Any] = {
        'face': face_id(face),
        'vertices': format_coweights(face.vertices),
        'dim': face.dim,
    }
    if case.has_decomposition():
        af = case.decomposition.adm_face_for(face)
        doc['interior'] = sorted_strs(case, af.interior)
        doc['center'] = str(af.center)
    return doc


def faces_document(case: AdmissibleCase) -> Dict[str, Any]:
    return {'case': case.label, 'faces': [face_document(case, f) for f in case.poset]}


def sorted_strs(case: AdmissibleCase, elements: Iterable[ExtAffineElt]) -> List[str]:
    """ Serialize elements ordered by length and then serialized form. """
    return [str(w) for w in sorted(elements, key=case.group.sort_key)]


def enumerate_document(case: AdmissibleCase) -> Dict[str, Any]:
    adm = case.adm
    return {
        'case': case.label,
        'count': len(adm),
        'maximal': len(adm.maxima),
        'tau': str(adm.tau),
        'elements': [{'element': str(w), 'length': case.group.length(w)}
                     for w in adm.sorted_elements()],
    }


def enumerate_text(case: AdmissibleCase) -> str:
    """ One '<element>\\t<length>' line per element, then the counts. """
    lines = ['{}\t{}'.format(w, case.group.length(w)) for w in case.adm.sorted_elements()]
    lines.append('count: {}'.format(len(case.adm)))
    lines.append('maximal: {}'.format(len(case.adm.maxima)))
    return '\n'.join(lines) + '\n'


def face_map_document(case: AdmissibleCase, w: ExtAffineElt) -> Dict[str, Any]:
    """
    The face map value of an element.

    :raises NotAdmissibleError: if w is not in Adm(mu).
    """
    lam = lambda_set(w, case.adm)
    face = case.poset.smallest_face_containing(lam)
    return {
        'element': str(w),
        'face': face_id(face),
        'vertices': format_coweights(face.vertices),
        'lambda': format_coweights(lam),
    }


def to_json(doc: Dict[str, Any]) -> str:
    """ Deterministic JSON text for a document. """
    return json.dumps(doc, indent=2) + '\n'
