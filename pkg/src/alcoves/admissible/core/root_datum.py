"""
Reduced based root data of the classical and exceptional Cartan types.

Roots are stored in the basis of simple roots and coweights in the basis of fundamental
coweights, so the pairing between X_* and X^* is the dot product of coordinate vectors.
Simple roots are numbered as in Bourbaki: the last simple root is short in type B_n and long in
type C_n, and alpha_1 is the short simple root of G_2.
"""
import logging
import math
import re
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix

from alcoves.admissible.core.arg_check import not_none, check_string, check_int_vector
from alcoves.admissible.core.errors import (
    UnsupportedCartanTypeError, MismatchedRootDataError, NotDominantError, IllegalParameterError
)

Point = Tuple[Fraction, ...]
""" A rational point of V = X_* (x) R in fundamental coweight coordinates. """


def _log(msg, *args):
    logging.getLogger(__name__).info(msg, *args)


class Coweight:
    """
    An element of the coweight lattice X_*, in the basis of fundamental coweights.

    :ivar coords: the coordinates of the coweight.
    """

    __slots__ = ['coords']

    def __init__(self, coords: Sequence[int]) -> None:
        '''
        Create a coweight.

        :param coords: the integer coordinates in the fundamental coweight basis.
        :raises TypeError: if coords is None or contains None.
        :raises IllegalParameterError: if coords contains non-integers.
        '''
        self.coords = check_int_vector(coords, 'coords')

    @classmethod
    def _of(cls, coords: Tuple[int, ...]) -> 'Coweight':
        # unchecked constructor for internal arithmetic
        c = cls.__new__(cls)
        c.coords = coords
        return c

    def __add__(self, other: 'Coweight') -> 'Coweight':
        return Coweight._of(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: 'Coweight') -> 'Coweight':
        return Coweight._of(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> 'Coweight':
        return Coweight._of(tuple(-a for a in self.coords))

    def scale(self, k: int) -> 'Coweight':
        """ Returns k times this coweight. """
        return Coweight._of(tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        if type(other) is type(self):
            return other.coords == self.coords
        return False

    def __hash__(self):
        return hash((self.coords,))

    def __str__(self):
        return '[' + ','.join(str(c) for c in self.coords) + ']'

    def __repr__(self):
        return 'Coweight({})'.format(list(self.coords))


class Root:
    """
    A root, or more generally an element of the root lattice, in the basis of simple roots.

    :ivar coords: the coordinates of the root.
    """

    __slots__ = ['coords']

    def __init__(self, coords: Sequence[int]) -> None:
        '''
        Create a root.

        :param coords: the integer coordinates in the simple root basis.
        :raises TypeError: if coords is None or contains None.
        :raises IllegalParameterError: if coords contains non-integers.
        '''
        self.coords = check_int_vector(coords, 'coords')

    @classmethod
    def _of(cls, coords: Tuple[int, ...]) -> 'Root':
        r = cls.__new__(cls)
        r.coords = coords
        return r

    def __add__(self, other: 'Root') -> 'Root':
        return Root._of(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: 'Root') -> 'Root':
        return Root._of(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> 'Root':
        return Root._of(tuple(-a for a in self.coords))

    def is_positive(self) -> bool:
        """
        Returns True if the root is a nonnegative combination of the simple roots. For a root
        of the root system this is the same as any coordinate being positive.
        """
        return any(c > 0 for c in self.coords) and all(c >= 0 for c in self.coords)

    def height(self) -> int:
        return sum(self.coords)

    def support(self) -> FrozenSet[int]:
        """ Returns the indices of the simple roots with nonzero coefficients. """
        return frozenset(i for i, c in enumerate(self.coords) if c)

    def __eq__(self, other):
        if type(other) is type(self):
            return other.coords == self.coords
        return False

    def __hash__(self):
        return hash(('root', self.coords))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                coef = '' if abs(c) == 1 else str(abs(c))
                terms.append(('-' if c < 0 else '+') + coef + 'a' + str(i + 1))
        s = ''.join(terms)
        return s[1:] if s.startswith('+') else s

    def __repr__(self):
        return 'Root({})'.format(list(self.coords))


def _kac_matrix(letter: str, rank: int) -> List[List[int]]:
    # a[i][j] = <alpha_i^vee, alpha_j>
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if letter in 'ABC':
        for i in range(rank - 1):
            link(i, i + 1)
        if letter == 'B':
            link(rank - 2, rank - 1, -1, -2)
        elif letter == 'C':
            link(rank - 2, rank - 1, -2, -1)
    elif letter == 'D':
        for i in range(rank - 3):
            link(i, i + 1)
        if rank >= 3:
            link(rank - 3, rank - 2)
            link(rank - 3, rank - 1)
    elif letter == 'E':
        link(0, 2)
        link(1, 3)
        for i in range(2, rank - 1):
            link(i, i + 1)
    elif letter == 'F':
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif letter == 'G':
        link(0, 1, -3, -1)
    return a


_RANKS = {'A': range(1, 9), 'B': range(2, 9), 'C': range(2, 9), 'D': range(2, 9),
          'E': range(6, 9), 'F': range(4, 5), 'G': range(2, 3)}

_LABEL = re.compile(r'^([A-Za-z])(\d+)$')


def parse_cartan_type(label: str) -> Tuple[str, int]:
    """
    Parse a Cartan type label such as 'A2', 'c3' or 'G2'.

    :param label: the label, case-insensitive, with no separator between letter and rank.
    :returns: a tuple of the upper case type letter and the rank.
    :raises MissingParameterError: if the label is None or whitespace only.
    :raises IllegalParameterError: if the label is malformed.
    :raises UnsupportedCartanTypeError: if the type or rank is not supported.
    """
    check_string(label, 'Cartan type', 'a-zA-Z0-9', 4)
    m = _LABEL.match(label.strip())
    if not m:
        raise IllegalParameterError('Cartan type {} is not a letter followed by a rank'
                                    .format(label))
    letter, rank = m.group(1).upper(), int(m.group(2))
    if letter not in _RANKS:
        raise UnsupportedCartanTypeError('Type {}'.format(letter))
    if rank not in _RANKS[letter]:
        r = _RANKS[letter]
        raise UnsupportedCartanTypeError('Type {} requires rank between {} and {}, got {}'
                                         .format(letter, r[0], r[-1], rank))
    return letter, rank


def parse_coweight(text: str, rank: int) -> Coweight:
    """
    Parse a comma separated list of fundamental coweight coordinates, e.g. '2,0'.

    :param text: the string to parse.
    :param rank: the required number of coordinates.
    :raises MissingParameterError: if the text is None or whitespace only.
    :raises IllegalParameterError: if the text is malformed.
    """
    check_string(text, 'coweight', '0-9, \\-')
    try:
        coords = [int(c) for c in text.split(',')]
    except ValueError as e:
        raise IllegalParameterError('Coweight {} is not a list of integers'.format(text)) from e
    return Coweight(check_int_vector(coords, 'coweight ' + text, rank))


class RootDatum:
    """
    A reduced based root datum with X_* the full coweight lattice.

    :ivar cartan_type: the Cartan type label, e.g. 'C2'.
    :ivar letter: the type letter.
    :ivar rank: the rank.
    :ivar cartan_matrix: the matrix whose (i, j) entry is <alpha_j^vee, alpha_i>.
    :ivar simple_roots: the simple roots.
    :ivar simple_coroots: the simple coroots, as coweights.
    :ivar pos_roots: the positive roots, ordered by height and then coordinates.
    :ivar pos_coroots: the coroots of pos_roots, in the same order.
    :ivar fundamental_coweights: the basis of X_*.
    """

    def __init__(self, letter: str, rank: int) -> None:
        '''
        Build a root datum. Prefer :func:`build_root_datum`, which parses and validates labels.

        :param letter: the type letter.
        :param rank: the rank.
        '''
        not_none(letter, 'letter')
        self.letter = letter
        self.rank = rank
        self.cartan_type = letter + str(rank)
        self._a = _kac_matrix(letter, rank)
        self.cartan_matrix: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(self._a[j][i] for j in range(rank)) for i in range(rank))
        self.simple_roots = [Root._of(tuple(int(i == j) for j in range(rank)))
                             for i in range(rank)]
        self.simple_coroots = [Coweight._of(tuple(self._a[i])) for i in range(rank)]
        self.fundamental_coweights = [Coweight._of(tuple(int(i == j) for j in range(rank)))
                                      for i in range(rank)]
        self._coroots = self._enumerate_roots()
        self.pos_roots = sorted((r for r in self._coroots if r.is_positive()),
                                key=lambda r: (r.height(), r.coords))
        self.pos_coroots = [self._coroots[r] for r in self.pos_roots]
        inv = Matrix(self.cartan_matrix).inv()
        self._inv_cartan = tuple(tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q))
                                       for j in range(rank)) for i in range(rank))
        self._components = self._find_components()
        _log('Built root datum %s with %s positive roots', self.cartan_type, len(self.pos_roots))

    def _enumerate_roots(self) -> Dict[Root, Coweight]:
        roots = {r: c for r, c in zip(self.simple_roots, self.simple_coroots)}
        queue = list(roots)
        while queue:
            beta = queue.pop()
            for i in range(self.rank):
                nb = self.reflect_root(i, beta)
                if nb not in roots:
                    roots[nb] = self.reflect_coweight(i, roots[beta])
                    queue.append(nb)
        return roots

    def _find_components(self, indices: Iterable[int]=None) -> List[FrozenSet[int]]:
        nodes = set(range(self.rank) if indices is None else indices)
        seen: set = set()
        comps = []
        for start in sorted(nodes):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(self.rank):
                    if j in nodes and j not in comp and self._a[i][j]:
                        comp.add(j)
                        stack.append(j)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def reflect_root(self, i: int, beta: Root) -> Root:
        """ Returns s_i(beta) = beta - <alpha_i^vee, beta> alpha_i. """
        p = sum(b * a for b, a in zip(beta.coords, self._a[i]))
        if not p:
            return beta
        c = list(beta.coords)
        c[i] -= p
        return Root._of(tuple(c))

    def reflect_coweight(self, i: int, lam: Coweight) -> Coweight:
        """ Returns s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^vee. """
        p = lam.coords[i]
        if not p:
            return lam
        return Coweight._of(tuple(x - p * a for x, a in zip(lam.coords, self._a[i])))

    def pairing(self, lam: Coweight, alpha: Root) -> int:
        """
        The natural pairing <lambda, alpha> between X_* and X^*.

        :raises MismatchedRootDataError: if either argument has the wrong number of coordinates.
        """
        if len(lam.coords) != self.rank or len(alpha.coords) != self.rank:
            raise MismatchedRootDataError('Expected coordinates of length {} for type {}'
                                          .format(self.rank, self.cartan_type))
        return sum(a * b for a, b in zip(lam.coords, alpha.coords))

    def is_root(self, alpha: Root) -> bool:
        return alpha in self._coroots

    def roots(self) -> List[Root]:
        """ All roots, positive ones first. """
        return self.pos_roots + [-r for r in self.pos_roots]

    def coroot(self, alpha: Root) -> Coweight:
        """
        Returns the coroot alpha^vee of a root.

        :raises IllegalParameterError: if alpha is not a root.
        """
        c = self._coroots.get(alpha)
        if c is None:
            raise IllegalParameterError('{} is not a root of {}'.format(alpha, self.cartan_type))
        return c

    def is_dominant(self, mu: Coweight) -> bool:
        return all(c >= 0 for c in mu.coords)

    def check_dominant(self, mu: Coweight) -> None:
        """
        :raises MismatchedRootDataError: if mu has the wrong number of coordinates.
        :raises NotDominantError: if mu is not dominant.
        """
        not_none(mu, 'mu')
        if len(mu.coords) != self.rank:
            raise MismatchedRootDataError('Coweight {} does not belong to type {}'.format(
                mu, self.cartan_type))
        if not self.is_dominant(mu):
            raise NotDominantError('{} in type {}'.format(mu, self.cartan_type))

    def j_mu(self, mu: Coweight) -> FrozenSet[int]:
        """
        The simple roots orthogonal to a dominant coweight, as 0-based indices.

        :raises NotDominantError: if mu is not dominant.
        """
        self.check_dominant(mu)
        return frozenset(i for i, c in enumerate(mu.coords) if c == 0)

    def rho_pairing(self, mu: Coweight) -> int:
        """ Returns <mu, 2 rho>. """
        return sum(self.pairing(mu, a) for a in self.pos_roots)

    def components(self, indices: Iterable[int]=None) -> List[FrozenSet[int]]:
        """
        The connected components of the Dynkin diagram, or of the subdiagram on the given simple
        root indices, ordered by smallest index.
        """
        if indices is None:
            return list(self._components)
        return self._find_components(indices)

    def highest_roots(self) -> List[Root]:
        """ One highest root per connected component of the Dynkin diagram. """
        ret = []
        for comp in self._components:
            ret.append(max((r for r in self.pos_roots if r.support() <= comp),
                           key=lambda r: (r.height(), r.coords)))
        return ret

    def to_coroot_basis(self, v: Sequence) -> Tuple[Fraction, ...]:
        """
        Express a vector of V, given in fundamental coweight coordinates, in the basis of
        simple coroots.
        """
        return tuple(sum((m * Fraction(x) for m, x in zip(row, v)), Fraction(0))
                     for row in self._inv_cartan)

    def base_alcove_vertices(self) -> List[Point]:
        """
        The vertices of the base alcove. For an irreducible component with highest root
        sum(c_i alpha_i) they are 0 and omega_i^vee / c_i; the base alcove of a reducible root
        system is the product of the component alcoves.
        """
        verts: List[List[Fraction]] = [[Fraction(0)] * self.rank]
        for comp, theta in zip(self._components, self.highest_roots()):
            new = []
            for v in verts:
                new.append(list(v))
                for i in sorted(comp):
                    nv = list(v)
                    nv[i] = Fraction(1, theta.coords[i])
                    new.append(nv)
            verts = new
        return [tuple(v) for v in verts]

    def barycenter(self) -> Point:
        """ The barycenter of the base alcove. """
        coords = [Fraction(0)] * self.rank
        for comp, theta in zip(self._components, self.highest_roots()):
            for i in comp:
                coords[i] = Fraction(1, (len(comp) + 1) * theta.coords[i])
        return tuple(coords)

    def weyl_group_order(self) -> int:
        """ The order of W0 from the classical formulas. """
        n = self.rank
        if self.letter == 'A':
            return math.factorial(n + 1)
        if self.letter in 'BC':
            return 2 ** n * math.factorial(n)
        if self.letter == 'D':
            return 2 ** (n - 1) * math.factorial(n)
        return {'E6': 51840, 'E7': 2903040, 'E8': 696729600, 'F4': 1152, 'G2': 12}[
            self.cartan_type]

    def check_same(self, other: Optional['RootDatum']) -> None:
        """
        :raises MismatchedRootDataError: if other is a different root datum.
        """
        if other != self:
            raise MismatchedRootDataError('{} vs. {}'.format(
                self.cartan_type, other.cartan_type if other else None))

    def __eq__(self, other):
        if type(other) is type(self):
            return other.cartan_type == self.cartan_type
        return False

    def __hash__(self):
        return hash((self.cartan_type,))

    def __repr__(self):
        return 'RootDatum({})'.format(self.cartan_type)


def build_root_datum(type_label: str, rank: int=None) -> RootDatum:
    """
    Build a root datum.

    :param type_label: either a full label such as 'A2', or a type letter if rank is given.
    :param rank: the rank, if not part of type_label.
    :raises MissingParameterError: if the label is missing.
    :raises IllegalParameterError: if the label is malformed.
    :raises UnsupportedCartanTypeError: if the type or rank is not supported.
    """
    if rank is not None:
        check_string(type_label, 'Cartan type', 'a-zA-Z', 1)
        type_label = type_label + str(rank)
    letter, r = parse_cartan_type(type_label)
    return RootDatum(letter, r)
