"""
The finite Weyl group W0 of a root datum, its parabolic subgroups W_I, minimal coset
representatives W^I and double cosets a W_I W_J.

Subsets of simple roots are passed around as collections of 0-based simple root indices.
"""
import logging
import re
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from alcoves.admissible.core.arg_check import not_none, check_string
from alcoves.admissible.core.errors import (
    IllegalParameterError, MismatchedRootDataError, NotMinimalRepresentativeError,
    UnsupportedOperationError
)
from alcoves.admissible.core.root_datum import RootDatum, Coweight, Root

Action = Tuple[Tuple[int, ...], ...]

DEFAULT_MAX_ORDER = 1000000
""" The largest W0 that will be enumerated by default. """


def _log(msg, *args):
    logging.getLogger(__name__).info(msg, *args)


class FiniteWeylElt:
    """
    An element z of W0, stored canonically as the images z(omega_i^vee) of the fundamental
    coweights.

    :ivar root_datum: the root datum the element acts on.
    :ivar action: the tuple of image coordinates, one entry per fundamental coweight.
    """

    __slots__ = ['root_datum', 'action', '_word', '_inverse', '_hash']

    def __init__(self, root_datum: RootDatum, action: Action) -> None:
        '''
        Create an element from its action. No check is made that the action is in W0; use
        :class:`FiniteWeylGroup` to obtain elements.

        :param root_datum: the root datum.
        :param action: the images of the fundamental coweights.
        '''
        not_none(root_datum, 'root_datum')
        not_none(action, 'action')
        self.root_datum = root_datum
        self.action = action
        self._word: Optional[Tuple[int, ...]] = None
        self._inverse: Optional['FiniteWeylElt'] = None
        self._hash = hash((root_datum.cartan_type, action))

    def _check(self, other: 'FiniteWeylElt') -> None:
        if other.root_datum is not self.root_datum and other.root_datum != self.root_datum:
            raise MismatchedRootDataError('{} vs. {}'.format(
                self.root_datum.cartan_type, other.root_datum.cartan_type))

    def act_vector(self, v: Sequence) -> tuple:
        """ Apply the element to a vector of V in fundamental coweight coordinates. """
        res = [0] * len(self.action)
        for c, img in zip(v, self.action):
            if c:
                for j, x in enumerate(img):
                    res[j] += c * x
        return tuple(res)

    def act(self, lam: Coweight) -> Coweight:
        """ Returns z(lambda). """
        return Coweight._of(self.act_vector(lam.coords))

    def act_point(self, v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """ Returns z(v) for a rational point v. """
        return tuple(Fraction(x) for x in self.act_vector(v))

    def act_inverse_root(self, alpha: Root) -> Root:
        """ Returns z^-1(alpha). Cheaper than :meth:`act_root` since it needs no inverse. """
        # <omega_j, z^-1 alpha> = <z omega_j, alpha>
        return Root._of(tuple(sum(a * b for a, b in zip(img, alpha.coords))
                              for img in self.action))

    def act_root(self, alpha: Root) -> Root:
        """ Returns z(alpha). """
        return self.inverse().act_inverse_root(alpha)

    def inverts(self, alpha: Root) -> bool:
        """ Returns True if z^-1(alpha) is a negative root. alpha must be a root. """
        for img in self.action:
            c = sum(a * b for a, b in zip(img, alpha.coords))
            if c:
                return c < 0
        raise IllegalParameterError('{} is not a root'.format(alpha))  # pragma: no cover

    def __mul__(self, other: 'FiniteWeylElt') -> 'FiniteWeylElt':
        self._check(other)
        return FiniteWeylElt(self.root_datum,
                             tuple(self.act_vector(img) for img in other.action))

    def is_identity(self) -> bool:
        return all(img[i] == 1 and sum(map(abs, img)) == 1 for i, img in enumerate(self.action))

    def left_descents(self) -> FrozenSet[int]:
        """ The indices i with l(s_i z) < l(z), i.e. z^-1(alpha_i) negative. """
        # z^-1(alpha_i) has coordinates action[j][i]
        ret = set()
        for i in range(len(self.action)):
            for img in self.action:
                if img[i]:
                    if img[i] < 0:
                        ret.add(i)
                    break
        return frozenset(ret)

    def right_descents(self) -> FrozenSet[int]:
        """ The indices i with l(z s_i) < l(z), i.e. z(alpha_i) negative. """
        return self.inverse().left_descents()

    @property
    def word(self) -> Tuple[int, ...]:
        """
        A reduced word (i_1, ..., i_k) with z = s_{i_1} ... s_{i_k}, found by greedy left
        descent taking the smallest index each time.
        """
        if self._word is None:
            word = []
            z = self
            while True:
                d = z.left_descents()
                if not d:
                    break
                i = min(d)
                word.append(i)
                z = _simple(self.root_datum, i) * z
            self._word = tuple(word)
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    def inversion_count(self) -> int:
        """ |{alpha > 0 : z^-1(alpha) < 0}|, which equals the length. """
        return sum(1 for a in self.root_datum.pos_roots if self.inverts(a))

    def inverse(self) -> 'FiniteWeylElt':
        if self._inverse is None:
            inv = identity(self.root_datum)
            for i in self.word:
                inv = _simple(self.root_datum, i) * inv
            inv._inverse = self
            self._inverse = inv
        return self._inverse

    def support(self) -> FrozenSet[int]:
        """ The set of simple reflections occurring in a reduced word. """
        return frozenset(self.word)

    def is_reflection(self) -> bool:
        return self.root_of_reflection() is not None

    def root_of_reflection(self) -> Optional[Root]:
        """ Returns the positive root alpha if this element is the reflection s_alpha. """
        if self.is_identity() or not (self * self).is_identity():
            return None
        for alpha in self.root_datum.pos_roots:
            if reflection(self.root_datum, alpha) == self:
                return alpha
        return None

    def __eq__(self, other):
        if type(other) is type(self):
            return (other._hash == self._hash and other.action == self.action and
                    other.root_datum == self.root_datum)
        return False

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self.word:
            return 'e'
        return '*'.join('s' + str(i + 1) for i in self.word)

    def __repr__(self):
        return 'FiniteWeylElt({}, {})'.format(self.root_datum.cartan_type, self)


_SIMPLE_CACHE: Dict[Tuple[str, int], FiniteWeylElt] = {}


def identity(rd: RootDatum) -> FiniteWeylElt:
    """ The identity of W0. """
    return FiniteWeylElt(rd, tuple(w.coords for w in rd.fundamental_coweights))


def _simple(rd: RootDatum, i: int) -> FiniteWeylElt:
    key = (rd.cartan_type, i)
    s = _SIMPLE_CACHE.get(key)
    if s is None:
        s = FiniteWeylElt(rd, tuple(rd.reflect_coweight(i, w).coords
                                    for w in rd.fundamental_coweights))
        s._word = (i,)
        s._inverse = s
        _SIMPLE_CACHE[key] = s
    return s


def reflection(rd: RootDatum, alpha: Root) -> FiniteWeylElt:
    """
    The reflection s_alpha: lambda -> lambda - <lambda, alpha> alpha^vee.

    :raises IllegalParameterError: if alpha is not a root.
    """
    cor = rd.coroot(alpha)
    return FiniteWeylElt(rd, tuple(
        tuple(int(i == j) - alpha.coords[i] * c for j, c in enumerate(cor.coords))
        for i in range(rd.rank)))


_WORD = re.compile(r'^s(\d+)$')


class FiniteWeylGroup:
    """
    The finite Weyl group W0 of a root datum. The group is enumerated on first use and cached.

    :ivar root_datum: the root datum.
    """

    def __init__(self, root_datum: RootDatum, max_order: int=DEFAULT_MAX_ORDER) -> None:
        '''
        Create the group.

        :param root_datum: the root datum.
        :param max_order: the largest group order that may be enumerated.
        '''
        not_none(root_datum, 'root_datum')
        self.root_datum = root_datum
        self._max_order = max_order
        self._elements: Optional[List[FiniteWeylElt]] = None
        self._parabolics: Dict[FrozenSet[int], FrozenSet[FiniteWeylElt]] = {}
        self._min_reps: Dict[FrozenSet[int], List[FiniteWeylElt]] = {}

    @property
    def rank(self) -> int:
        return self.root_datum.rank

    def identity(self) -> FiniteWeylElt:
        return identity(self.root_datum)

    def simple_reflection(self, i: int) -> FiniteWeylElt:
        """ The simple reflection s_i, for a 0-based index i. """
        if not 0 <= i < self.rank:
            raise IllegalParameterError('No simple reflection s{} in type {}'.format(
                i + 1, self.root_datum.cartan_type))
        return _simple(self.root_datum, i)

    def simple_reflections(self) -> List[FiniteWeylElt]:
        return [_simple(self.root_datum, i) for i in range(self.rank)]

    def reflection(self, alpha: Root) -> FiniteWeylElt:
        return reflection(self.root_datum, alpha)

    def check_indices(self, indices: Iterable[int]) -> FrozenSet[int]:
        not_none(indices, 'simple root subset')
        s = frozenset(indices)
        for i in s:
            if type(i) is not int or not 0 <= i < self.rank:
                raise IllegalParameterError('No simple root with index {} in type {}'.format(
                    i, self.root_datum.cartan_type))
        return s

    def _generate(self, gens: Sequence[FiniteWeylElt]) -> List[FiniteWeylElt]:
        seen = {self.identity()}
        frontier = list(seen)
        while frontier:
            nxt = []
            for z in frontier:
                for s in gens:
                    sz = s * z
                    if sz not in seen:
                        seen.add(sz)
                        nxt.append(sz)
            frontier = nxt
        return sorted(seen, key=lambda z: (z.length, z.word))

    def order(self) -> int:
        return self.root_datum.weyl_group_order()

    def elements(self) -> List[FiniteWeylElt]:
        """
        All elements of W0, ordered by length and then reduced word.

        :raises UnsupportedOperationError: if the group is larger than the configured maximum.
        """
        if self._elements is None:
            if self.order() > self._max_order:
                raise UnsupportedOperationError(
                    'W0 of type {} has {} elements, more than the maximum of {}'.format(
                        self.root_datum.cartan_type, self.order(), self._max_order))
            self._elements = self._generate(self.simple_reflections())
            _log('Enumerated W0 of type %s: %s elements', self.root_datum.cartan_type,
                 len(self._elements))
        return self._elements

    def longest_element(self) -> FiniteWeylElt:
        return self.elements()[-1]

    def parabolic(self, indices: Iterable[int]) -> FrozenSet[FiniteWeylElt]:
        """ The parabolic subgroup W_I generated by the simple reflections in I. """
        key = self.check_indices(indices)
        if key not in self._parabolics:
            self._parabolics[key] = frozenset(
                self._generate([_simple(self.root_datum, i) for i in sorted(key)]))
        return self._parabolics[key]

    def in_parabolic(self, z: FiniteWeylElt, indices: Iterable[int]) -> bool:
        """ Returns True if z is in W_I, i.e. supp(z) is contained in I. """
        return z.support() <= frozenset(indices)

    def is_min_coset_rep(self, a: FiniteWeylElt, indices: Iterable[int]) -> bool:
        """ Returns True if a is in W^I, i.e. a(alpha) is positive for every alpha in I. """
        return not (a.right_descents() & frozenset(indices))

    def min_coset_reps(self, indices: Iterable[int]) -> List[FiniteWeylElt]:
        """ W^I, the minimal length representatives of the left cosets z W_I. """
        key = self.check_indices(indices)
        if key not in self._min_reps:
            self._min_reps[key] = [a for a in self.elements() if self.is_min_coset_rep(a, key)]
        return self._min_reps[key]

    def double_coset(
            self,
            a: FiniteWeylElt,
            indices_i: Iterable[int],
            indices_j: Iterable[int]
            ) -> FrozenSet[FiniteWeylElt]:
        """
        The double coset a W_I W_J as a set of elements.

        :raises NotMinimalRepresentativeError: if a is not in W^I.
        """
        not_none(a, 'a')
        i = self.check_indices(indices_i)
        j = self.check_indices(indices_j)
        self.check_min_coset_rep(a, i)
        wj = self.parabolic(j)
        return frozenset(a * u * v for u in self.parabolic(i) for v in wj)

    def check_min_coset_rep(self, a: FiniteWeylElt, indices: FrozenSet[int]) -> None:
        """
        :raises NotMinimalRepresentativeError: if a is not in W^I.
        """
        if not self.is_min_coset_rep(a, indices):
            raise NotMinimalRepresentativeError('{} is not in W^I for I = {}'.format(
                a, format_indices(indices)))

    def weyl_orbit(self, mu: Coweight) -> FrozenSet[Coweight]:
        """
        The orbit W0(mu) of a dominant coweight.

        :raises NotDominantError: if mu is not dominant.
        """
        self.root_datum.check_dominant(mu)
        seen = {mu}
        frontier = [mu]
        while frontier:
            nxt = []
            for lam in frontier:
                for i in range(self.rank):
                    nl = self.root_datum.reflect_coweight(i, lam)
                    if nl not in seen:
                        seen.add(nl)
                        nxt.append(nl)
            frontier = nxt
        return frozenset(seen)

    def stabilizer(self, mu: Coweight) -> FrozenSet[FiniteWeylElt]:
        """ W_{J_mu}, the stabilizer of a dominant coweight. """
        return self.parabolic(self.root_datum.j_mu(mu))

    def parse(self, text: str) -> FiniteWeylElt:
        """
        Parse a word such as 's1*s2*s1' (1-based indices) or 'e'.

        :raises IllegalParameterError: if the word is malformed.
        """
        check_string(text, 'Weyl group element', 'se0-9*')
        z = self.identity()
        if text.strip() == 'e':
            return z
        for letter in text.strip().split('*'):
            m = _WORD.match(letter)
            if not m:
                raise IllegalParameterError('Illegal letter {} in Weyl group element {}'.format(
                    letter, text))
            z = z * self.simple_reflection(int(m.group(1)) - 1)
        return z


def format_indices(indices: Iterable[int]) -> str:
    """ Format a set of 0-based simple root indices the way they are printed, e.g. '{1,2}'. """
    return '{' + ','.join(str(i + 1) for i in sorted(indices)) + '}'
