"""
Root subsystems Phi_{a,I} = a(Phi_I) with base Delta_{a,I} = {a(alpha) | alpha in I}, for a
in W^I.
"""
from typing import Dict, FrozenSet, Iterable, List

from alcoves.admissible.core.arg_check import not_none
from alcoves.admissible.core.finite_weyl import (
    FiniteWeylGroup, FiniteWeylElt, reflection, format_indices
)
from alcoves.admissible.core.root_datum import Coweight, Root


class SubRootSystem:
    """
    The root subsystem Phi_{a,I}. The full root system is the subsystem with a = e and
    I = Delta_0.

    :ivar weyl: the ambient finite Weyl group.
    :ivar a: the minimal coset representative a.
    :ivar indices: I, as 0-based simple root indices.
    :ivar base: Delta_{a,I}, ordered by the indices in I.
    :ivar positives: Phi_{a,I} intersected with the positive roots of Phi.
    :ivar roots: Phi_{a,I}.
    :ivar coroot_lattice_basis: the coroots of the base, a basis of Z Phi_{a,I}^vee.
    """

    def __init__(self, weyl: FiniteWeylGroup, a: FiniteWeylElt, indices: Iterable[int]) -> None:
        '''
        Create the subsystem.

        :param weyl: the finite Weyl group.
        :param a: an element of W^I.
        :param indices: the subset I of the simple roots.
        :raises NotMinimalRepresentativeError: if a is not in W^I.
        '''
        not_none(weyl, 'weyl')
        not_none(a, 'a')
        self.weyl = weyl
        rd = weyl.root_datum
        rd.check_same(a.root_datum)
        self.indices = weyl.check_indices(indices)
        weyl.check_min_coset_rep(a, self.indices)
        self.a = a
        self._local: Dict[Root, Root] = {}
        for gamma in rd.pos_roots:
            if gamma.support() <= self.indices:
                self._local[a.act_root(gamma)] = gamma
        self.positives: List[Root] = sorted(self._local, key=lambda r: (
            self._local[r].height(), self._local[r].coords))
        self.roots: FrozenSet[Root] = frozenset(self.positives + [-r for r in self.positives])
        self.base = [a.act_root(rd.simple_roots[i]) for i in sorted(self.indices)]
        self.coroot_lattice_basis = [rd.coroot(b) for b in self.base]

    @property
    def root_datum(self):
        return self.weyl.root_datum

    @property
    def rank(self) -> int:
        return len(self.indices)

    def is_full(self) -> bool:
        return self.rank == self.weyl.rank

    def contains_root(self, beta: Root) -> bool:
        return beta in self.roots

    def highest_roots(self) -> List[Root]:
        """
        One highest root per connected component of Phi_{a,I}, with respect to the base
        Delta_{a,I}. These are the images under a of the highest roots of the components of I.
        """
        ret = []
        for comp in self.root_datum.components(self.indices):
            gamma = max((g for g in self._local.values() if g.support() <= comp),
                        key=lambda g: (g.height(), g.coords))
            ret.append(self.a.act_root(gamma))
        return ret

    def simple_reflections(self) -> List[FiniteWeylElt]:
        """ The reflections in the base, generating W_{a,I} = a W_I a^-1. """
        return [reflection(self.root_datum, b) for b in self.base]

    def weyl_contains(self, z: FiniteWeylElt) -> bool:
        """ Returns True if z lies in W_{a,I}. """
        return (self.a.inverse() * z * self.a).support() <= self.indices

    def lattice_contains(self, nu: Coweight) -> bool:
        """ Returns True if nu lies in the coroot lattice Z Phi_{a,I}^vee. """
        # nu = a(sum c_i alpha_i^vee) with c_i integral and supported on I
        coords = self.root_datum.to_coroot_basis(self.a.inverse().act(nu).coords)
        for i, c in enumerate(coords):
            if c.denominator != 1 or (c and i not in self.indices):
                return False
        return True

    def __eq__(self, other):
        if type(other) is type(self):
            return other.a == self.a and other.indices == self.indices
        return False

    def __hash__(self):
        return hash((self.a, self.indices))

    def __str__(self):
        return 'Phi_{{{},{}}}'.format(self.a, format_indices(self.indices))


def full_system(weyl: FiniteWeylGroup) -> SubRootSystem:
    """ The root system Phi as the subsystem with a = e and I = Delta_0. """
    return SubRootSystem(weyl, weyl.identity(), range(weyl.rank))
