"""
A case: a root datum and a dominant coweight together with everything computed from them.
"""
from typing import Optional

from alcoves.admissible.core.admissible import AdmissibleSet, VerificationMode, admissible_set
from alcoves.admissible.core.affine_weyl import ExtendedAffineWeylGroup
from alcoves.admissible.core.arg_check import not_none
from alcoves.admissible.core.errors import IllegalParameterError
from alcoves.admissible.core.face_map import FaceDecomposition
from alcoves.admissible.core.polytope import FacePoset
from alcoves.admissible.core.root_datum import Coweight

DEFAULT_DEPTH_MARGIN = 2
""" The default margin added to <mu, 2 rho> to get the depth of obtuse cone comparisons. """


class AdmissibleCase:
    """
    Adm(mu) with its face poset and face decomposition. The poset and decomposition are
    computed on first use.

    :ivar group: the extended affine Weyl group.
    :ivar mu: the dominant coweight.
    :ivar mode: the verification mode.
    :ivar depth_margin: the margin used for obtuse cone depths.
    :ivar adm: the admissible set.
    """

    def __init__(
            self,
            group: ExtendedAffineWeylGroup,
            mu: Coweight,
            mode: VerificationMode=VerificationMode.FULL,
            depth_margin: int=DEFAULT_DEPTH_MARGIN
            ) -> None:
        '''
        Create the case and materialize Adm(mu).

        :param group: the extended affine Weyl group of the full root system.
        :param mu: a dominant coweight.
        :param mode: the verification mode.
        :param depth_margin: the obtuse cone depth margin, at least 1.
        :raises NotDominantError: if mu is not dominant.
        :raises IllegalParameterError: if the depth margin is less than 1.
        '''
        not_none(group, 'group')
        not_none(mode, 'mode')
        if depth_margin < 1:
            raise IllegalParameterError('depth margin must be at least 1')
        self.group = group
        self.mu = mu
        self.mode = mode
        self.depth_margin = depth_margin
        self.adm: AdmissibleSet = admissible_set(group, mu)
        self._poset: Optional[FacePoset] = None
        self._decomposition: Optional[FaceDecomposition] = None

    @property
    def root_datum(self):
        return self.group.root_datum

    @property
    def weyl(self):
        return self.group.weyl

    @property
    def label(self) -> str:
        """ The case label, e.g. 'A2 mu=[2,0]'. """
        return '{} mu={}'.format(self.root_datum.cartan_type, self.mu)

    @property
    def depth(self) -> int:
        """ The depth N = <mu, 2 rho> + margin of obtuse cone comparisons. """
        return self.root_datum.rho_pairing(self.mu) + self.depth_margin

    @property
    def poset(self) -> FacePoset:
        """
        :raises DegenerateInputError: if mu is zero.
        """
        if self._poset is None:
            self._poset = FacePoset(self.weyl, self.mu)
        return self._poset

    @property
    def decomposition(self) -> FaceDecomposition:
        """
        :raises DegenerateInputError: if mu is zero.
        :raises InvariantViolationError: if the decomposition is inconsistent.
        """
        if self._decomposition is None:
            self._decomposition = FaceDecomposition(self.adm, self.poset, self.mode)
        return self._decomposition

    def has_decomposition(self) -> bool:
        return self._decomposition is not None
