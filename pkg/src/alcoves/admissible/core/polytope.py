"""
The face poset of the coweight polytope P_mu, the convex hull of W0(mu).

The faces are the convex hulls F_{a,I} of a W_I(mu) for I a subset of the simple roots and
a in W^I, and F_{a,I} -> a W_I W_{J_mu} is an isomorphism of posets onto the double cosets
ordered by inclusion.
"""
import itertools
import logging
from functools import reduce
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx
from sympy import Matrix

from alcoves.admissible.core.arg_check import not_none, no_Nones_in_iterable
from alcoves.admissible.core.errors import (
    DegenerateInputError, IllegalParameterError, InvariantViolationError,
    MismatchedRootDataError, NotInOrbitError
)
from alcoves.admissible.core.finite_weyl import FiniteWeylGroup, FiniteWeylElt, format_indices
from alcoves.admissible.core.root_datum import Coweight

Pair = Tuple[FiniteWeylElt, FrozenSet[int]]
""" A generating pair (a, I) of a face, with I as 0-based simple root indices. """


def _log(msg, *args):
    logging.getLogger(__name__).info(msg, *args)


def pair_key(pair: Pair):
    """ The ordering of generating pairs: by l(a), the word of a, |I| and then sorted I. """
    a, indices = pair
    return (a.length, a.word, len(indices), sorted(indices))


class FaceHandle:
    """
    A face of the coweight polytope.

    :ivar mu: the dominant coweight of the polytope.
    :ivar coset: the double coset a W_I W_{J_mu}.
    :ivar a: the a of the canonical pair.
    :ivar indices: the I of the canonical pair.
    :ivar vertices: the vertices a W_I(mu).
    :ivar dim: the dimension of the face.
    """

    def __init__(
            self,
            mu: Coweight,
            coset: FrozenSet[FiniteWeylElt],
            canonical_pair: Pair,
            vertices: FrozenSet[Coweight],
            dim: int
            ) -> None:
        self.mu = mu
        self.coset = coset
        self.a, self.indices = canonical_pair
        self.vertices = vertices
        self.dim = dim

    @property
    def canonical_pair(self) -> Pair:
        return (self.a, self.indices)

    def sorted_vertices(self) -> List[Coweight]:
        return sorted(self.vertices, key=lambda v: v.coords)

    def sort_key(self):
        return (self.dim, [v.coords for v in self.sorted_vertices()])

    def __eq__(self, other):
        if type(other) is type(self):
            return other.mu == self.mu and other.coset == self.coset
        return False

    def __hash__(self):
        return hash((self.mu, self.coset))

    def __str__(self):
        return 'F_{{{},{}}}'.format(self.a, format_indices(self.indices))

    def __repr__(self):
        return 'FaceHandle({})'.format(self)


class FacePoset:
    """
    All faces of the coweight polytope of a nonzero dominant coweight.

    :ivar weyl: the finite Weyl group.
    :ivar mu: the dominant coweight.
    :ivar j_mu: the simple roots orthogonal to mu, as 0-based indices.
    :ivar orbit: W0(mu).
    :ivar faces: the faces ordered by dimension and then sorted vertices.
    """

    def __init__(self, weyl: FiniteWeylGroup, mu: Coweight) -> None:
        '''
        Enumerate the faces.

        :param weyl: the finite Weyl group.
        :param mu: a nonzero dominant coweight.
        :raises NotDominantError: if mu is not dominant.
        :raises DegenerateInputError: if mu is zero.
        '''
        not_none(weyl, 'weyl')
        not_none(mu, 'mu')
        self.weyl = weyl
        self.mu = mu
        self.j_mu = weyl.root_datum.j_mu(mu)
        if mu.is_zero():
            raise DegenerateInputError('The polytope of the zero coweight is a point')
        self.orbit = weyl.weyl_orbit(mu)
        self._pairs: Dict[FrozenSet[FiniteWeylElt], List[Pair]] = {}
        for n in range(weyl.rank + 1):
            for combo in itertools.combinations(range(weyl.rank), n):
                indices = frozenset(combo)
                for a in weyl.min_coset_reps(indices):
                    coset = weyl.double_coset(a, indices, self.j_mu)
                    self._pairs.setdefault(coset, []).append((a, indices))
        faces = []
        for coset, pairs in self._pairs.items():
            pairs.sort(key=pair_key)
            vertices = frozenset(z.act(mu) for z in coset)
            faces.append(FaceHandle(mu, coset, pairs[0], vertices, self._dimension(vertices)))
        self.faces: List[FaceHandle] = sorted(faces, key=FaceHandle.sort_key)
        self._by_coset = {f.coset: f for f in self.faces}
        self._by_vertices = {f.vertices: f for f in self.faces}
        if len(self._by_vertices) != len(self.faces):
            raise InvariantViolationError('Distinct double cosets share a vertex set for {}'
                                          .format(mu))
        _log('Polytope of %s in type %s: %s faces', mu, weyl.root_datum.cartan_type,
             len(self.faces))

    @staticmethod
    def _dimension(vertices: FrozenSet[Coweight]) -> int:
        vs = sorted(vertices, key=lambda v: v.coords)
        if len(vs) < 2:
            return 0
        base = vs[0].coords
        return Matrix([[x - b for x, b in zip(v.coords, base)] for v in vs[1:]]).rank()

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    @property
    def top(self) -> FaceHandle:
        """ The polytope itself. """
        return self.faces[-1]

    def vertex_faces(self) -> List[FaceHandle]:
        return [f for f in self.faces if f.dim == 0]

    def vertex_face(self, vertex: Coweight) -> FaceHandle:
        """
        The zero dimensional face {vertex}.

        :raises NotInOrbitError: if vertex is not in W0(mu).
        """
        return self.smallest_face_containing([vertex])

    def faces_of_dim(self, dim: int) -> List[FaceHandle]:
        return [f for f in self.faces if f.dim == dim]

    def _check(self, face: FaceHandle) -> None:
        not_none(face, 'face')
        if face.mu != self.mu or self._by_coset.get(face.coset) is None:
            raise MismatchedRootDataError('{} is not a face of the polytope of {}'.format(
                face, self.mu))

    def find(self, a: FiniteWeylElt, indices: Iterable[int]) -> FaceHandle:
        """
        The face F_{a,I}.

        :raises NotMinimalRepresentativeError: if a is not in W^I.
        """
        coset = self.weyl.double_coset(a, indices, self.j_mu)
        return self._by_coset[coset]

    def pairs(self, face: FaceHandle) -> List[Pair]:
        """ All generating pairs (a, I) of the face, canonical pair first. """
        self._check(face)
        return list(self._pairs[face.coset])

    def reduced_pair(self, face: FaceHandle) -> Pair:
        """
        The first generating pair (a, I) such that no connected component of I lies inside
        J_mu. For such pairs the dimension of the face is |I|.
        """
        for a, indices in self.pairs(face):
            comps = self.weyl.root_datum.components(indices)
            if not any(c <= self.j_mu for c in comps):
                return (a, indices)
        raise InvariantViolationError('{} has no reduced generating pair'.format(face))

    def face_leq(self, f1: FaceHandle, f2: FaceHandle) -> bool:
        """
        Face inclusion, decided both by vertex containment and by double coset containment.

        :raises MismatchedRootDataError: if either face is not a face of this polytope.
        :raises InvariantViolationError: if the two answers differ.
        """
        self._check(f1)
        self._check(f2)
        by_vertices = f1.vertices <= f2.vertices
        if by_vertices != (f1.coset <= f2.coset):
            raise InvariantViolationError(
                'Vertex and coset containment disagree for {} and {}'.format(f1, f2))
        return by_vertices

    def face_less(self, f1: FaceHandle, f2: FaceHandle) -> bool:
        return f1 != f2 and self.face_leq(f1, f2)

    def face_intersection(self, f1: FaceHandle, f2: FaceHandle) -> Optional[FaceHandle]:
        """
        The intersection of two faces, or None if they are disjoint.

        :raises MismatchedRootDataError: if either face is not a face of this polytope.
        :raises InvariantViolationError: if the coset intersection is not a face.
        """
        self._check(f1)
        self._check(f2)
        inter = f1.coset & f2.coset
        if not inter:
            return None
        face = self._by_coset.get(inter)
        if face is None:
            raise InvariantViolationError(
                'The intersection of {} and {} is not a double coset'.format(f1, f2))
        return face

    def smallest_face_containing(self, vertices: Iterable[Coweight]) -> FaceHandle:
        """
        The smallest face whose vertex set contains the given coweights.

        :raises IllegalParameterError: if no coweights are given.
        :raises NotInOrbitError: if a coweight is not in W0(mu).
        :raises InvariantViolationError: if the smallest face is not the intersection of all
            faces containing the coweights.
        """
        not_none(vertices, 'vertices')
        s = frozenset(vertices)
        no_Nones_in_iterable(s, 'vertices')
        if not s:
            raise IllegalParameterError('At least one vertex is required')
        outside = s - self.orbit
        if outside:
            raise NotInOrbitError('{} is not in the Weyl orbit of {}'.format(
                min(outside, key=lambda v: v.coords), self.mu))
        candidates = [f for f in self.faces if s <= f.vertices]
        smallest = min(candidates, key=lambda f: (len(f.vertices), f.sort_key()))
        meet = reduce(self.face_intersection, candidates)
        if meet != smallest:
            raise InvariantViolationError(
                'The smallest face containing {} is not the intersection of its faces'.format(
                    sorted(str(v) for v in s)))
        return smallest

    def hasse_edges(self) -> List[Tuple[FaceHandle, FaceHandle]]:
        """ The cover relations (F, F') of the face poset, via a transitive reduction. """
        g = networkx.DiGraph()
        g.add_nodes_from(range(len(self.faces)))
        for i, f1 in enumerate(self.faces):
            for j, f2 in enumerate(self.faces):
                if i != j and self.face_leq(f1, f2):
                    g.add_edge(i, j)
        red = networkx.transitive_reduction(g)
        return [(self.faces[i], self.faces[j]) for i, j in sorted(red.edges())]
