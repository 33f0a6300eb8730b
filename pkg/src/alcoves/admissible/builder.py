"""
Contains code for building root data, Weyl groups and admissible set cases given a
configuration.
"""
from pathlib import Path

from cacheout.lru import LRUCache

from alcoves.admissible.config import AdmissibleConfig, AdmissibleConfigError
from alcoves.admissible.core.affine_weyl import ExtendedAffineWeylGroup
from alcoves.admissible.core.arg_check import not_none
from alcoves.admissible.core.case import AdmissibleCase
from alcoves.admissible.core.finite_weyl import FiniteWeylGroup
from alcoves.admissible.core.root_datum import Coweight, RootDatum, build_root_datum, \
    parse_cartan_type


class AdmissibleBuildException(Exception):
    """ Thrown when the build fails. """


class AdmissibleBuilder:
    """
    Contains methods for building the objects the command line tools work on. Root data and
    groups are cached per Cartan type, so cases of the same type share Bruhat order memo tables.

    :ivar cfg: the build configuration. This is set after completing the first build, and future
        configurations are ignored.
    """

    # the number of Cartan types with cached groups
    _TYPE_CACHE_SIZE = 20

    def __init__(self) -> None:
        """
        Create a builder.
        """
        self._root_data = LRUCache(maxsize=self._TYPE_CACHE_SIZE)
        self._weyl_groups = LRUCache(maxsize=self._TYPE_CACHE_SIZE)
        self._affine_groups = LRUCache(maxsize=self._TYPE_CACHE_SIZE)

    def _set_cfg(self, cfgpath) -> AdmissibleConfig:
        if not hasattr(self, 'cfg'):
            try:
                self.cfg = AdmissibleConfig(cfgpath)
            except AdmissibleConfigError as e:
                raise AdmissibleBuildException(str(e)) from e
        return self.cfg

    def get_cfg(self, cfgpath: Path=None) -> AdmissibleConfig:
        """
        Get the system configuration.

        :param cfgpath: the the path to the build configuration file. The configuration is memoized
            and used in any future builds, and any other configurations are ignored.
        :raises AdmissibleBuildException: if the configuration is invalid.
        """
        return self._set_cfg(cfgpath)

    def build_root_datum(self, type_label: str) -> RootDatum:
        """
        Build the root datum of a Cartan type.

        :param type_label: the Cartan type, e.g. 'A2'.
        :raises IllegalParameterError: if the label is malformed.
        :raises UnsupportedCartanTypeError: if the type is not supported.
        """
        key = parse_cartan_type(type_label)
        rd = self._root_data.get(key)
        if rd is None:
            rd = build_root_datum(*key)
            self._root_data.set(key, rd)
        return rd

    def build_weyl_group(self, type_label: str, cfgpath: Path=None) -> FiniteWeylGroup:
        """
        Build the finite Weyl group of a Cartan type.

        :param type_label: the Cartan type, e.g. 'A2'.
        :param cfgpath: the the path to the build configuration file.
        :raises IllegalParameterError: if the label is malformed.
        :raises UnsupportedCartanTypeError: if the type is not supported.
        :raises AdmissibleBuildException: if the configuration is invalid.
        """
        rd = self.build_root_datum(type_label)
        weyl = self._weyl_groups.get(rd.cartan_type)
        if weyl is None:
            weyl = FiniteWeylGroup(rd, self._set_cfg(cfgpath).max_weyl_order)
            self._weyl_groups.set(rd.cartan_type, weyl)
        return weyl

    def build_affine_group(self, type_label: str, cfgpath: Path=None
                           ) -> ExtendedAffineWeylGroup:
        """
        Build the extended affine Weyl group of a Cartan type.

        :param type_label: the Cartan type, e.g. 'A2'.
        :param cfgpath: the the path to the build configuration file.
        :raises IllegalParameterError: if the label is malformed.
        :raises UnsupportedCartanTypeError: if the type is not supported.
        :raises AdmissibleBuildException: if the configuration is invalid.
        """
        weyl = self.build_weyl_group(type_label, cfgpath)
        cartan_type = weyl.root_datum.cartan_type
        group = self._affine_groups.get(cartan_type)
        if group is None:
            group = ExtendedAffineWeylGroup(weyl, cache_size=self._set_cfg(cfgpath).cache_size)
            self._affine_groups.set(cartan_type, group)
        return group

    def build_case(self, type_label: str, mu: Coweight, cfgpath: Path=None) -> AdmissibleCase:
        """
        Build a case and compute Adm(mu). The face poset and decomposition are computed on
        first use.

        :param type_label: the Cartan type, e.g. 'A2'.
        :param mu: the dominant coweight.
        :param cfgpath: the the path to the build configuration file.
        :raises IllegalParameterError: if the label is malformed.
        :raises MismatchedRootDataError: if mu has the wrong number of coordinates.
        :raises UnsupportedCartanTypeError: if the type is not supported.
        :raises NotDominantError: if mu is not dominant.
        :raises AdmissibleBuildException: if the configuration is invalid.
        """
        not_none(mu, 'mu')
        cfg = self._set_cfg(cfgpath)
        group = self.build_affine_group(type_label, cfgpath)
        case = AdmissibleCase(group, mu, cfg.mode, cfg.depth_margin)
        case.adm.set_cache_size(cfg.cache_size)
        return case
