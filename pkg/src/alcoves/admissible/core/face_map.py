"""
The faces Adm(mu)_F of the admissible set indexed by the faces F of the coweight polytope,
their interiors and centers, and the face map w -> the smallest face containing Lambda(w).
"""
import logging
from typing import Dict, FrozenSet, List, Optional

from alcoves.admissible.core.admissible import (
    AdmissibleSet, VerificationMode, adm_face, lambda_set, sub_length
)
from alcoves.admissible.core.affine_weyl import ExtAffineElt
from alcoves.admissible.core.arg_check import not_none
from alcoves.admissible.core.errors import InvariantViolationError, MismatchedRootDataError
from alcoves.admissible.core.polytope import FaceHandle, FacePoset
from alcoves.admissible.core.subsystem import SubRootSystem


def _log(msg, *args):
    logging.getLogger(__name__).info(msg, *args)


class AdmFace:
    """
    The face Adm(mu)_F.

    :ivar face: the polytope face F.
    :ivar elements: Adm(mu)_F.
    :ivar interior: Adm(mu)_F minus the union of Adm(mu)_F' over all faces F' < F.
    :ivar boundary: elements minus interior.
    :ivar center: c_F, the unique Bruhat minimal element of Adm(mu)_F.
    :ivar subsystem: the root subsystem of the canonical pair of F.
    """

    def __init__(
            self,
            face: FaceHandle,
            elements: FrozenSet[ExtAffineElt],
            interior: FrozenSet[ExtAffineElt],
            center: ExtAffineElt,
            subsystem: SubRootSystem
            ) -> None:
        self.face = face
        self.elements = elements
        self.interior = interior
        self.boundary = elements - interior
        self.center = center
        self.subsystem = subsystem

    def __str__(self):
        return 'Adm_{}'.format(self.face)


class FaceDecomposition:
    """
    The decomposition of Adm(mu) into the interiors of its faces, and the face map.

    :ivar adm: the admissible set.
    :ivar poset: the face poset of the coweight polytope.
    :ivar adm_faces: one AdmFace per polytope face, in the order of the poset.
    """

    def __init__(
            self,
            adm: AdmissibleSet,
            poset: FacePoset,
            mode: VerificationMode=VerificationMode.FULL
            ) -> None:
        '''
        Compute every face Adm(mu)_F with its interior and center.

        :param adm: the admissible set.
        :param poset: the face poset for the same coweight.
        :param mode: the verification mode. In FULL mode each face is also recomputed from an
            alternative generating pair when one exists.
        :raises MismatchedRootDataError: if adm and poset belong to different coweights.
        :raises InvariantViolationError: if any consistency check fails.
        '''
        not_none(adm, 'adm')
        not_none(poset, 'poset')
        if adm.mu != poset.mu or adm.root_datum != poset.weyl.root_datum:
            raise MismatchedRootDataError('{} vs. polytope of {}'.format(adm, poset.mu))
        self.adm = adm
        self.poset = poset
        self.mode = mode
        elements = {f: self._elements(f) for f in poset.faces}
        self.adm_faces: List[AdmFace] = []
        self._by_face: Dict[FaceHandle, AdmFace] = {}
        for f in poset.faces:
            lower: set = set()
            for g in poset.faces:
                if poset.face_less(g, f):
                    lower |= elements[g]
            interior = elements[f] - lower
            sub = self._subsystem(f)
            af = AdmFace(f, elements[f], frozenset(interior), self._center(f, elements[f], sub),
                         sub)
            self.adm_faces.append(af)
            self._by_face[f] = af
        self._face_of: Dict[ExtAffineElt, FaceHandle] = {}
        for af in self.adm_faces:
            for w in af.interior:
                if w in self._face_of:
                    raise InvariantViolationError('{} lies in the interiors of {} and {}'.format(
                        w, self._face_of[w], af.face))
                self._face_of[w] = af.face
        if len(self._face_of) != len(adm):
            missing = min((w for w in adm.elements if w not in self._face_of),
                          key=adm.group.sort_key)
            raise InvariantViolationError('{} lies in no face interior'.format(missing))
        _log('Decomposed %s into %s face interiors', adm, len(self.adm_faces))

    def _subsystem(self, face: FaceHandle) -> SubRootSystem:
        return SubRootSystem(self.adm.weyl, face.a, face.indices)

    def _elements(self, face: FaceHandle) -> FrozenSet[ExtAffineElt]:
        pairs = self.poset.pairs(face)
        a, indices = pairs[0]
        elements = adm_face(self.adm, a, indices, self.mode)
        if self.mode is VerificationMode.FULL and len(pairs) > 1:
            alt_a, alt_indices = pairs[-1]
            if adm_face(self.adm, alt_a, alt_indices, VerificationMode.FAST) != elements:
                raise InvariantViolationError('Adm({})_F depends on the pair chosen for {}'
                                              .format(self.adm.mu, face))
        return elements

    def _center(
            self,
            face: FaceHandle,
            elements: FrozenSet[ExtAffineElt],
            subsystem: SubRootSystem
            ) -> ExtAffineElt:
        g = self.adm.group
        shortest = min(g.length(w) for w in elements)
        minima = [w for w in elements if g.length(w) == shortest and
                  all(g.bruhat_leq(w, v) for v in elements)]
        if len(minima) != 1:
            raise InvariantViolationError('Adm({})_{} has {} Bruhat minimal elements'.format(
                self.adm.mu, face, len(minima)))
        center = minima[0]
        if sub_length(self.adm, center, subsystem):
            raise InvariantViolationError('The center {} of {} has nonzero subsystem length'
                                          .format(center, face))
        return center

    def adm_face_for(self, face: FaceHandle) -> AdmFace:
        """
        :raises MismatchedRootDataError: if face is not a face of the polytope.
        """
        not_none(face, 'face')
        af = self._by_face.get(face)
        if af is None:
            raise MismatchedRootDataError('{} is not a face of the polytope of {}'.format(
                face, self.adm.mu))
        return af

    def face_map(self, w: ExtAffineElt) -> FaceHandle:
        """
        The smallest face of the polytope containing Lambda(w).

        :raises NotAdmissibleError: if w is not in Adm(mu).
        """
        return self.poset.smallest_face_containing(lambda_set(w, self.adm))

    def face_of(self, w: ExtAffineElt) -> FaceHandle:
        """
        The unique face whose interior contains w.

        :raises NotAdmissibleError: if w is not in Adm(mu).
        """
        self.adm.check_contains(w)
        return self._face_of[w]

    def decomposition(self) -> Dict[FaceHandle, FrozenSet[ExtAffineElt]]:
        """ The interiors, keyed by face. They are disjoint and cover Adm(mu). """
        return {af.face: af.interior for af in self.adm_faces}

    def centers(self) -> Dict[FaceHandle, ExtAffineElt]:
        return {af.face: af.center for af in self.adm_faces}

    def non_injectivity_witness(self) -> Optional[AdmFace]:
        """ The first face whose interior has at least two elements, if any. """
        for af in self.adm_faces:
            if len(af.interior) >= 2:
                return af
        return None
