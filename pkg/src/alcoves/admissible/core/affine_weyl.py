"""
The extended affine Weyl group W~ = X_* x| W0, its length function, affine roots and
reflections, alcoves, the Bruhat order and combinatorial obtuse cones.

An element t^lambda z acts on V by v -> z(v) + lambda. The base alcove is
{v | 0 < <v, alpha> < 1 for all positive roots alpha}, and the affine root (alpha, k) has the
hyperplane {v | k + <v, alpha> = 0}.

The same machinery serves the extended affine Weyl group X_* x| W_{a,I} of a root subsystem:
its length function, simple reflections and alcove are those of Phi_{a,I}, while X_* is
unchanged.
"""
import logging
import math
import re
from fractions import Fraction
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from cacheout.lru import LRUCache

from alcoves.admissible.core.arg_check import not_none, check_string
from alcoves.admissible.core.errors import (
    DepthInsufficiencyError, IllegalParameterError, NotInSubsystemError
)
from alcoves.admissible.core.finite_weyl import FiniteWeylGroup, FiniteWeylElt, reflection
from alcoves.admissible.core.root_datum import Coweight, Root, Point
from alcoves.admissible.core.subsystem import SubRootSystem, full_system

DEFAULT_CACHE_SIZE = 200000
""" The default size of the Bruhat order and length memo tables. """


def _log(msg, *args):
    logging.getLogger(__name__).info(msg, *args)


class ExtAffineElt:
    """
    An element w = t^lambda z of the extended affine Weyl group.

    :ivar lam: the translation part lambda.
    :ivar z: the finite part z.
    """

    __slots__ = ['lam', 'z', '_hash']

    def __init__(self, lam: Coweight, z: FiniteWeylElt) -> None:
        '''
        Create an element.

        :param lam: the translation part.
        :param z: the finite part.
        :raises TypeError: if either argument is None.
        '''
        not_none(lam, 'lam')
        not_none(z, 'z')
        self.lam = lam
        self.z = z
        self._hash = hash((lam.coords, z.action))

    def __mul__(self, other: 'ExtAffineElt') -> 'ExtAffineElt':
        # (t^l z)(t^l' z') = t^{l + z(l')} z z'
        return ExtAffineElt(self.lam + self.z.act(other.lam), self.z * other.z)

    def inverse(self) -> 'ExtAffineElt':
        zi = self.z.inverse()
        return ExtAffineElt(-zi.act(self.lam), zi)

    def act_point(self, v: Sequence[Fraction]) -> Point:
        """ The affine action v -> z(v) + lambda. """
        return tuple(x + c for x, c in zip(self.z.act_point(v), self.lam.coords))

    def is_translation(self) -> bool:
        return self.z.is_identity()

    def __eq__(self, other):
        if type(other) is type(self):
            return other._hash == self._hash and other.lam == self.lam and other.z == self.z
        return False

    def __hash__(self):
        return self._hash

    def __str__(self):
        s = 't' + str(self.lam)
        if not self.z.is_identity():
            s += '*' + str(self.z)
        return s

    def __repr__(self):
        return 'ExtAffineElt({})'.format(self)


class AffineRoot:
    """
    An affine root (alpha, k), the affine function v -> k + <v, alpha>.

    :ivar alpha: the gradient root.
    :ivar k: the constant term.
    """

    __slots__ = ['alpha', 'k']

    def __init__(self, alpha: Root, k: int) -> None:
        not_none(alpha, 'alpha')
        not_none(k, 'k')
        self.alpha = alpha
        self.k = k

    def is_positive(self) -> bool:
        """ Positive means positive on the base alcove: k > 0, or k = 0 and alpha > 0. """
        return self.k > 0 or (self.k == 0 and self.alpha.is_positive())

    def __neg__(self) -> 'AffineRoot':
        return AffineRoot(-self.alpha, -self.k)

    def normalized(self) -> 'AffineRoot':
        """ The positive one of +-(alpha, k); both have the same hyperplane. """
        return self if self.is_positive() else -self

    def value(self, v: Sequence[Fraction]) -> Fraction:
        """ Evaluate k + <v, alpha> at a rational point. """
        return self.k + sum((Fraction(x) * a for x, a in zip(v, self.alpha.coords)),
                            Fraction(0))

    def __eq__(self, other):
        if type(other) is type(self):
            return other.alpha == self.alpha and other.k == self.k
        return False

    def __hash__(self):
        return hash((self.alpha, self.k))

    def __str__(self):
        return '({},{})'.format(self.alpha, self.k)

    def __repr__(self):
        return 'AffineRoot({})'.format(self)


class Alcove:
    """
    An alcove w(a) of the base alcove a.

    :ivar owner: the element w.
    :ivar barycenter: the barycenter of the alcove.
    :ivar vertices: the vertices of the alcove.
    """

    def __init__(self, owner: ExtAffineElt, barycenter: Point, vertices: List[Point]) -> None:
        self.owner = owner
        self.barycenter = barycenter
        self.vertices = vertices


_ELEMENT = re.compile(r'^t\[(-?\d+(?:,-?\d+)*)\](?:\*(.+))?$')


class ExtendedAffineWeylGroup:
    """
    The extended affine Weyl group X_* x| W0, or X_* x| W_{a,I} for a root subsystem.

    The simple affine reflections are numbered s_1, ..., s_r for the simple roots of the
    (sub)system followed by one reflection t^{theta^vee} s_theta per highest root theta.

    :ivar weyl: the finite Weyl group.
    :ivar root_datum: the root datum.
    :ivar subsystem: the root subsystem whose length function and Bruhat order are used.
    """

    def __init__(
            self,
            weyl: FiniteWeylGroup,
            subsystem: SubRootSystem=None,
            cache_size: int=DEFAULT_CACHE_SIZE
            ) -> None:
        '''
        Create the group.

        :param weyl: the finite Weyl group.
        :param subsystem: a root subsystem, or None for the full root system.
        :param cache_size: the size of the memo tables.
        '''
        not_none(weyl, 'weyl')
        self.weyl = weyl
        self.root_datum = weyl.root_datum
        self.subsystem = subsystem if subsystem else full_system(weyl)
        self._pos = list(self.subsystem.positives)
        self._simple_roots = ([AffineRoot(b, 0) for b in self.subsystem.base] +
                              [AffineRoot(-t, 1) for t in self.subsystem.highest_roots()])
        self._simple = [self.affine_reflection(r) for r in self._simple_roots]
        e = self.root_datum.barycenter()
        self._denom = 1
        for x in e:
            self._denom = self._denom * x.denominator // math.gcd(self._denom, x.denominator)
        self._e_scaled = tuple(int(x * self._denom) for x in e)
        self._bruhat = LRUCache(maxsize=cache_size)
        self._lengths = LRUCache(maxsize=cache_size)

    def identity(self) -> ExtAffineElt:
        return ExtAffineElt(Coweight._of((0,) * self.root_datum.rank), self.weyl.identity())

    def translation(self, lam: Coweight) -> ExtAffineElt:
        """ Returns t^lambda. """
        return ExtAffineElt(lam, self.weyl.identity())

    def from_finite(self, z: FiniteWeylElt) -> ExtAffineElt:
        return ExtAffineElt(Coweight._of((0,) * self.root_datum.rank), z)

    def contains(self, w: ExtAffineElt) -> bool:
        """ Returns True if w is in X_* x| W_{a,I}. """
        return self.subsystem.is_full() or self.subsystem.weyl_contains(w.z)

    def check_contains(self, w: ExtAffineElt) -> None:
        """
        :raises NotInSubsystemError: if w is not in this group.
        """
        if not self.contains(w):
            raise NotInSubsystemError('{} is not in the extended affine Weyl group of {}'
                                      .format(w, self.subsystem))

    def length(self, w: ExtAffineElt) -> int:
        """
        The length
        sum_{alpha > 0, z^-1 alpha > 0} |<lambda, alpha>| +
        sum_{alpha > 0, z^-1 alpha < 0} |<lambda, alpha> - 1|,
        with alpha running over the positive roots of the (sub)system.
        """
        n = self._lengths.get(w)
        if n is None:
            n = 0
            lam = w.lam.coords
            for alpha in self._pos:
                p = sum(a * b for a, b in zip(lam, alpha.coords))
                n += abs(p - 1) if w.z.inverts(alpha) else abs(p)
            self._lengths.set(w, n)
        return n

    def _scaled_point(self, w: ExtAffineElt) -> Tuple[int, ...]:
        # D * w(e) for the barycenter e of the base alcove, D its common denominator
        zv = w.z.act_vector(self._e_scaled)
        return tuple(x + self._denom * c for x, c in zip(zv, w.lam.coords))

    def barycenter(self) -> Point:
        return self.root_datum.barycenter()

    def simple_affine_roots(self) -> List[AffineRoot]:
        return list(self._simple_roots)

    def simple_reflections(self) -> List[ExtAffineElt]:
        """ The simple affine reflections, all of length one. """
        return list(self._simple)

    def affine_reflection(self, ar: AffineRoot) -> ExtAffineElt:
        """ The reflection s_alpha t^{k alpha^vee} = t^{-k alpha^vee} s_alpha in H_(alpha,k). """
        not_none(ar, 'ar')
        cor = self.root_datum.coroot(ar.alpha)
        return ExtAffineElt(cor.scale(-ar.k), reflection(self.root_datum, ar.alpha))

    def as_affine_reflection(self, t: ExtAffineElt) -> Optional[AffineRoot]:
        """ Returns the positive affine root gamma~ if t is the reflection s_gamma~. """
        alpha = t.z.root_of_reflection()
        if alpha is None:
            return None
        p = self.root_datum.pairing(t.lam, alpha)
        if p % 2:
            return None
        k = -p // 2
        if t.lam != self.root_datum.coroot(alpha).scale(-k):
            return None
        return AffineRoot(alpha, k).normalized()

    def is_affine_reflection(self, t: ExtAffineElt) -> bool:
        return self.as_affine_reflection(t) is not None

    def left_descents(self, w: ExtAffineElt) -> List[int]:
        """
        The indices i of the simple affine reflections with l(s_i w) < l(w), that is the walls
        of the base alcove separating it from w(a).
        """
        p = self._scaled_point(w)
        ret = []
        for i, ar in enumerate(self._simple_roots):
            if self._denom * ar.k + sum(a * b for a, b in zip(p, ar.alpha.coords)) < 0:
                ret.append(i)
        return ret

    def _first_descent(self, w: ExtAffineElt) -> Optional[int]:
        p = self._scaled_point(w)
        for i, ar in enumerate(self._simple_roots):
            if self._denom * ar.k + sum(a * b for a, b in zip(p, ar.alpha.coords)) < 0:
                return i
        return None

    def reduced_word(self, w: ExtAffineElt) -> Tuple[List[int], ExtAffineElt]:
        """
        Write w = s_{i_1} ... s_{i_k} tau with tau of length zero, by greedy left descent
        taking the smallest index each time.

        :returns: the 0-based indices (i_1, ..., i_k) and tau.
        """
        word = []
        while True:
            i = self._first_descent(w)
            if i is None:
                return word, w
            word.append(i)
            w = self._simple[i] * w

    def length_zero_rep(self, w: ExtAffineElt) -> ExtAffineElt:
        """ The unique tau of length zero with w in W_aff tau. """
        return self.reduced_word(w)[1]

    def bruhat_leq(self, x: ExtAffineElt, y: ExtAffineElt) -> bool:
        """
        The Bruhat order: x <= y iff both lie in the same W_aff-coset W_aff tau and
        x tau^-1 <= y tau^-1 in the Coxeter group W_aff. Different cosets are never comparable,
        which falls out of the recursion ending at two distinct length zero elements.
        """
        path = []
        while True:
            lx = self.length(x)
            ly = self.length(y)
            if lx >= ly:
                res = x == y
                break
            cached = self._bruhat.get((x, y))
            if cached is not None:
                res = cached
                break
            path.append((x, y))
            # for a left descent s of y: x <= y iff min(x, sx) <= sy
            s = self._simple[self._first_descent(y)]
            sx = s * x
            if self.length(sx) < lx:
                x = sx
            y = s * y
        for key in path:
            self._bruhat.set(key, res)
        return res

    def bruhat_less(self, x: ExtAffineElt, y: ExtAffineElt) -> bool:
        return x != y and self.bruhat_leq(x, y)

    def lower_ideal(self, w: ExtAffineElt) -> FrozenSet[ExtAffineElt]:
        """ {v | v <= w}, by closing the subwords of one reduced word of w under products. """
        word, tau = self.reduced_word(w)
        ideal = {tau}
        for i in reversed(word):
            s = self._simple[i]
            ideal |= {s * v for v in ideal}
        _log('Lower ideal of %s: %s elements', w, len(ideal))
        return frozenset(ideal)

    def separating_hyperplanes(self, w: ExtAffineElt) -> Set[AffineRoot]:
        """
        The positive affine roots of the (sub)system whose hyperplanes separate the base
        alcove from w(a), found by comparing signs at the two barycenters.
        """
        p = self._scaled_point(w)
        ret = set()
        for alpha in self._pos:
            x = sum(a * b for a, b in zip(p, alpha.coords))
            # <w(e), alpha> = x / D is never an integer, <e, alpha> lies in (0, 1)
            levels = range(1, x // self._denom + 1) if x > 0 else range(x // self._denom + 1, 1)
            for j in levels:
                # the hyperplane <v, alpha> = j
                ret.add(AffineRoot(alpha, -j).normalized())
        return ret

    def covers_below(self, w: ExtAffineElt) -> Set[ExtAffineElt]:
        """ The elements v with v < w and l(v) = l(w) - 1. """
        lw = self.length(w)
        ret = set()
        for ar in self.separating_hyperplanes(w):
            v = self.affine_reflection(ar) * w
            if self.length(v) == lw - 1:
                ret.add(v)
        return ret

    def lower_ideal_by_covers(self, w: ExtAffineElt) -> FrozenSet[ExtAffineElt]:
        """ {v | v <= w}, by breadth first search down the cover relations. """
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for v in frontier:
                for c in self.covers_below(v):
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(seen)

    def bounded_coset_slice(self, tau: ExtAffineElt, max_length: int) -> FrozenSet[ExtAffineElt]:
        """ {w in W_aff tau | l(w) <= max_length}. """
        seen = {tau}
        frontier = [tau]
        while frontier:
            nxt = []
            for v in frontier:
                for s in self._simple:
                    sv = s * v
                    if sv not in seen and self.length(sv) <= max_length:
                        seen.add(sv)
                        nxt.append(sv)
            frontier = nxt
        return frozenset(seen)

    def obtuse_cone_member(
            self,
            w: ExtAffineElt,
            w_prime: ExtAffineElt,
            z: FiniteWeylElt,
            depth: int
            ) -> bool:
        """
        Decide whether w is in the combinatorial obtuse cone O(w', z), i.e. whether
        w(a) <=_b w'(a) for an alcove b deep inside the Weyl chamber z(C^-).

        The alcove is b = t^{-z(nu)}(a) with nu = depth * sum omega_i^vee, and the order based
        at b is the Bruhat order after translating by b^-1. The comparison is repeated at
        depth + 1 and both answers must agree.

        :param depth: the depth of the alcove b, e.g. <mu, 2 rho> + 2.
        :raises DepthInsufficiencyError: if the answers at depth and depth + 1 differ.
        """
        if self.length_zero_rep(w) != self.length_zero_rep(w_prime):
            return False
        shallow = self._leq_from_chamber(w, w_prime, z, depth)
        deep = self._leq_from_chamber(w, w_prime, z, depth + 1)
        if shallow != deep:
            raise DepthInsufficiencyError(
                'O({}, {}) membership of {} differs between depths {} and {}'.format(
                    w_prime, z, w, depth, depth + 1))
        return shallow

    def _leq_from_chamber(self, w, w_prime, z, depth) -> bool:
        nu = Coweight._of((-depth,) * self.root_datum.rank)
        b_inv = self.translation(z.act(nu)).inverse()
        return self.bruhat_leq(b_inv * w, b_inv * w_prime)

    def alcove(self, w: ExtAffineElt) -> Alcove:
        """ The alcove w(a) with exact barycenter and vertices. """
        return Alcove(w, w.act_point(self.barycenter()),
                      [w.act_point(v) for v in self.root_datum.base_alcove_vertices()])

    def parse(self, text: str) -> ExtAffineElt:
        """
        Parse an element such as 't[2,0]*s1*s2', 't[2,0]', 's1*s2' or 'e'.

        :raises IllegalParameterError: if the string is malformed.
        """
        check_string(text, 'element', 'te0-9,*\\[\\]\\- s')
        text = text.replace(' ', '')
        m = _ELEMENT.match(text)
        if m:
            coords = [int(c) for c in m.group(1).split(',')]
            if len(coords) != self.root_datum.rank:
                raise IllegalParameterError('Element {} needs {} translation coordinates'.format(
                    text, self.root_datum.rank))
            z = self.weyl.parse(m.group(2)) if m.group(2) else self.weyl.identity()
            return ExtAffineElt(Coweight(coords), z)
        if text.startswith('t'):
            raise IllegalParameterError('Illegal element {}'.format(text))
        return self.from_finite(self.weyl.parse(text))

    def sort_key(self, w: ExtAffineElt):
        """ Sort by length, then by serialized form. """
        return (self.length(w), str(w))
