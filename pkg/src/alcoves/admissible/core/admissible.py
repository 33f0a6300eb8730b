"""
The mu-admissible set Adm(mu), the sets Lambda(w), and the faces Adm(mu)_{a,I}.
"""
import logging
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Tuple

from alcoves.admissible.core.affine_weyl import (
    ExtendedAffineWeylGroup, ExtAffineElt, DEFAULT_CACHE_SIZE
)
from alcoves.admissible.core.arg_check import not_none
from alcoves.admissible.core.errors import (
    IllegalParameterError, InvariantViolationError, NotAdmissibleError
)
from alcoves.admissible.core.finite_weyl import FiniteWeylElt, format_indices
from alcoves.admissible.core.root_datum import Coweight
from alcoves.admissible.core.subsystem import SubRootSystem


def _log(msg, *args):
    logging.getLogger(__name__).info(msg, *args)


class VerificationMode(Enum):
    """
    How much cross checking face computations do.

    :ivar mode: the name of the mode as used in configuration files.
    """

    FULL = 'full'
    """ Compute faces by both definitions and require them to agree. """

    FAST = 'fast'
    """ Compute faces by filtering the admissible set only. """

    def __init__(self, mode):
        self.mode = mode

    @classmethod
    def from_string(cls, mode: str) -> 'VerificationMode':
        '''
        :raises IllegalParameterError: if the mode is not known.
        '''
        for m in cls:
            if m.mode == mode:
                return m
        raise IllegalParameterError('Unknown verification mode: {}'.format(mode))


class AdmissibleSet:
    """
    The mu-admissible set {w | w <= t^mu' for some mu' in W0(mu)}.

    :ivar group: the extended affine Weyl group.
    :ivar mu: the dominant coweight.
    :ivar orbit: W0(mu).
    :ivar elements: the elements of Adm(mu).
    :ivar maxima: a map from each mu' in W0(mu) to the maximal element t^mu'.
    :ivar tau: tau_mu, the unique element of length zero.
    """

    def __init__(
            self,
            group: ExtendedAffineWeylGroup,
            mu: Coweight,
            elements: FrozenSet[ExtAffineElt],
            maxima: Dict[Coweight, ExtAffineElt],
            tau: ExtAffineElt
            ) -> None:
        self.group = group
        self.mu = mu
        self.orbit = frozenset(maxima)
        self.elements = elements
        self.maxima = maxima
        self.tau = tau
        self._cache_size = DEFAULT_CACHE_SIZE
        self._sub_groups: Dict[SubRootSystem, ExtendedAffineWeylGroup] = {}

    @property
    def weyl(self):
        return self.group.weyl

    @property
    def root_datum(self):
        return self.group.root_datum

    def __contains__(self, w: ExtAffineElt) -> bool:
        return w in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def contains(self, w: ExtAffineElt) -> bool:
        return w in self.elements

    def check_contains(self, w: ExtAffineElt) -> None:
        """
        :raises TypeError: if w is None.
        :raises NotAdmissibleError: if w is not in Adm(mu).
        """
        not_none(w, 'w')
        if w not in self.elements:
            raise NotAdmissibleError('{} is not in Adm({}) of type {}'.format(
                w, self.mu, self.root_datum.cartan_type))

    def sorted_elements(self) -> List[ExtAffineElt]:
        """ The elements ordered by length and then serialized form. """
        return sorted(self.elements, key=self.group.sort_key)

    def sorted_maxima(self) -> List[ExtAffineElt]:
        return sorted(self.maxima.values(), key=self.group.sort_key)

    def hasse_edges(self) -> List[Tuple[ExtAffineElt, ExtAffineElt]]:
        """
        The cover relations (w, w') with w < w' and l(w') = l(w) + 1, ordered by w' and then w.
        Adm(mu) is a lower ideal, so these are the covers of the Bruhat order itself.
        """
        edges = []
        for w in self.sorted_elements():
            for v in sorted(self.group.covers_below(w), key=self.group.sort_key):
                edges.append((v, w))
        return edges

    def set_cache_size(self, cache_size: int) -> None:
        """ Set the memo table size of subsystem groups created from now on. """
        self._cache_size = cache_size

    def sub_group(self, subsystem: SubRootSystem) -> ExtendedAffineWeylGroup:
        """ The extended affine Weyl group X_* x| W_{a,I} of a subsystem, cached. """
        not_none(subsystem, 'subsystem')
        if subsystem.is_full():
            return self.group
        g = self._sub_groups.get(subsystem)
        if g is None:
            g = ExtendedAffineWeylGroup(self.weyl, subsystem, self._cache_size)
            self._sub_groups[subsystem] = g
        return g

    def __str__(self):
        return 'Adm({}) in type {}'.format(self.mu, self.root_datum.cartan_type)


def admissible_set(group: ExtendedAffineWeylGroup, mu: Coweight) -> AdmissibleSet:
    """
    Materialize Adm(mu) as the union of the lower ideals of the translations t^mu'.

    :param group: the extended affine Weyl group of the full root system.
    :param mu: a dominant coweight.
    :raises NotDominantError: if mu is not dominant.
    :raises MismatchedRootDataError: if mu has the wrong number of coordinates.
    """
    not_none(group, 'group')
    not_none(mu, 'mu')
    orbit = group.weyl.weyl_orbit(mu)
    maxima = {m: group.translation(m) for m in orbit}
    elements: set = set()
    for t in maxima.values():
        elements |= group.lower_ideal(t)
    tau = group.length_zero_rep(maxima[mu])
    _log('Adm(%s) in type %s: %s elements, %s maxima', mu, group.root_datum.cartan_type,
         len(elements), len(maxima))
    return AdmissibleSet(group, mu, frozenset(elements), maxima, tau)


def lambda_set(w: ExtAffineElt, adm: AdmissibleSet) -> FrozenSet[Coweight]:
    """
    Lambda(w) = {mu' in W0(mu) | w <= t^mu'}.

    :raises NotAdmissibleError: if w is not in Adm(mu).
    """
    not_none(adm, 'adm')
    adm.check_contains(w)
    return frozenset(m for m, t in adm.maxima.items() if adm.group.bruhat_leq(w, t))


def sub_root_system(adm: AdmissibleSet, a: FiniteWeylElt, indices: Iterable[int]) -> SubRootSystem:
    """
    The subsystem Phi_{a,I} with base {a(alpha) | alpha in I}.

    :raises NotMinimalRepresentativeError: if a is not in W^I.
    """
    not_none(adm, 'adm')
    return SubRootSystem(adm.weyl, a, indices)


def in_sub_coset(w: ExtAffineElt, subsystem: SubRootSystem, mu_vertex: Coweight) -> bool:
    """
    Returns True if w is in W_{a,I,aff} t^{mu_vertex}: writing w t^{-mu_vertex} = t^nu z, z is in
    W_{a,I} and nu is in the coroot lattice of Phi_{a,I}.
    """
    not_none(w, 'w')
    not_none(subsystem, 'subsystem')
    not_none(mu_vertex, 'mu_vertex')
    if not subsystem.weyl_contains(w.z):
        return False
    # w t^{-m} = t^{lambda - z(m)} z
    return subsystem.lattice_contains(w.lam - w.z.act(mu_vertex))


def sub_admissible_set(
        adm: AdmissibleSet,
        subsystem: SubRootSystem
        ) -> FrozenSet[ExtAffineElt]:
    """
    The a(mu)-admissible set of X_* x| W_{a,I} with respect to its own Bruhat order: the union
    of the lower ideals of t^{au(mu)} for u in W_I.
    """
    g = adm.sub_group(subsystem)
    a = subsystem.a
    ret: set = set()
    for u in adm.weyl.parabolic(subsystem.indices):
        ret |= g.lower_ideal(g.translation((a * u).act(adm.mu)))
    return frozenset(ret)


def adm_face(
        adm: AdmissibleSet,
        a: FiniteWeylElt,
        indices: Iterable[int],
        mode: VerificationMode=VerificationMode.FULL
        ) -> FrozenSet[ExtAffineElt]:
    """
    The face Adm(mu)_{a,I}.

    In FAST mode this is Adm(mu) intersected with W_{a,I,aff} t^{a(mu)}. In FULL mode the
    a(mu)-admissible set of X_* x| W_{a,I} is computed as well and both must agree.

    :param adm: the admissible set.
    :param a: an element of W^I.
    :param indices: I, as 0-based simple root indices.
    :param mode: the verification mode.
    :raises NotMinimalRepresentativeError: if a is not in W^I.
    :raises InvariantViolationError: if the two computations disagree.
    """
    subsystem = sub_root_system(adm, a, indices)
    vertex = a.act(adm.mu)
    filtered = frozenset(w for w in adm.elements if in_sub_coset(w, subsystem, vertex))
    if mode is VerificationMode.FULL:
        enumerated = sub_admissible_set(adm, subsystem)
        if enumerated != filtered:
            diff = sorted(str(w) for w in enumerated ^ filtered)
            raise InvariantViolationError(
                'Adm({})_{{{},{}}} differs between subsystem enumeration and coset '
                'filtering at {}'.format(adm.mu, a, format_indices(subsystem.indices), diff[0]))
    _log('Adm(%s)_{%s,%s}: %s elements', adm.mu, a, format_indices(subsystem.indices),
         len(filtered))
    return filtered


def sub_bruhat_leq(
        adm: AdmissibleSet,
        w1: ExtAffineElt,
        w2: ExtAffineElt,
        subsystem: SubRootSystem
        ) -> bool:
    """
    The Bruhat order of X_* x| W_{a,I}.

    :raises NotInSubsystemError: if w1 or w2 is not in the group.
    """
    g = adm.sub_group(subsystem)
    g.check_contains(w1)
    g.check_contains(w2)
    return g.bruhat_leq(w1, w2)


def sub_length(adm: AdmissibleSet, w: ExtAffineElt, subsystem: SubRootSystem) -> int:
    """
    The length function of X_* x| W_{a,I}.

    :raises NotInSubsystemError: if w is not in the group.
    """
    g = adm.sub_group(subsystem)
    g.check_contains(w)
    return g.length(w)
