"""
Configuration handlers for the admissible set tools.
"""
from typing import Dict, Optional
from pathlib import Path
import os
import configparser
import logging

from alcoves.admissible.core.admissible import VerificationMode
from alcoves.admissible.core.affine_weyl import DEFAULT_CACHE_SIZE
from alcoves.admissible.core.case import DEFAULT_DEPTH_MARGIN
from alcoves.admissible.core.errors import IllegalParameterError
from alcoves.admissible.core.finite_weyl import DEFAULT_MAX_ORDER
from alcoves.admissible.export.svg import DEFAULT_SCALE


class AdmissibleConfigError(Exception):
    """ Thrown when there's an error in the configuration. """
    pass


class AdmissibleConfig:
    """
    Loads a configuration from an ini file. The configuration is contained in the `admissible`
    section of the config file. Every key is optional.

    The keys are:
    verification-mode
    depth-margin
    bruhat-cache-size
    max-weyl-order
    render-scale
    log-level

    :ivar mode: the verification mode. In full mode faces of Adm(mu) are computed both as
        sub-admissible sets and by filtering, and the results are compared.
    :ivar depth_margin: the margin added to <mu, 2 rho> to get the depth of obtuse cones.
    :ivar cache_size: the size of the Bruhat order and length memo tables.
    :ivar max_weyl_order: the largest finite Weyl group that may be enumerated.
    :ivar render_scale: SVG pixels per unit length.
    :ivar log_level: the name of the logging level.
    """

    ENV_VAR_ADMISSIBLE = 'ADMISSIBLE_CONFIG'
    """ The environment variable where the system will look for the path to the config file. """

    CFG_SEC = 'admissible'
    """ The section of the config file where the configuration is located. """

    _TEMP_KEY_CFG_FILE = 'temp-key-config-file'

    KEY_MODE = 'verification-mode'
    """ The key corresponding to the verification mode, 'full' or 'fast'. """

    KEY_DEPTH_MARGIN = 'depth-margin'
    """ The key corresponding to the obtuse cone depth margin, at least 1. """

    KEY_CACHE_SIZE = 'bruhat-cache-size'
    """ The key corresponding to the size of the Bruhat order memo tables. """

    KEY_MAX_WEYL_ORDER = 'max-weyl-order'
    """ The key corresponding to the largest finite Weyl group order to enumerate. """

    KEY_RENDER_SCALE = 'render-scale'
    """ The key corresponding to the number of SVG pixels per unit length. """

    KEY_LOG_LEVEL = 'log-level'
    """ The key corresponding to the logging level name, e.g. INFO. """

    _LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']

    def __init__(self, cfgfile: Path=None) -> None:
        """
        Load the configuration.

        :param cfgfile: the path to the configuration file. If not provided, the path will be
            looked up in the ADMISSIBLE_CONFIG environment variable. If neither is set, the
            defaults are used.
        :raises AdmissibleConfigError: if the configuration is invalid.
        """
        if not cfgfile:
            cfgfile = self._get_cfg_from_env()
        cfg = self._get_cfg(cfgfile) if cfgfile else {self._TEMP_KEY_CFG_FILE: '<defaults>'}
        mode = self._get_string(self.KEY_MODE, cfg)
        try:
            self.mode = VerificationMode.from_string(mode) if mode else VerificationMode.FULL
        except IllegalParameterError as e:
            raise AdmissibleConfigError(self._err(
                'Parameter {} in configuration file {}, section {}, is invalid: {}',
                self.KEY_MODE, cfg, e.message)) from e
        self.depth_margin = self._get_int(self.KEY_DEPTH_MARGIN, cfg, DEFAULT_DEPTH_MARGIN)
        self.cache_size = self._get_int(self.KEY_CACHE_SIZE, cfg, DEFAULT_CACHE_SIZE)
        self.max_weyl_order = self._get_int(self.KEY_MAX_WEYL_ORDER, cfg, DEFAULT_MAX_ORDER)
        self.render_scale = self._get_int(self.KEY_RENDER_SCALE, cfg, DEFAULT_SCALE)
        level = self._get_string(self.KEY_LOG_LEVEL, cfg)
        self.log_level = level.upper() if level else logging.getLevelName(logging.WARNING)
        if self.log_level not in self._LEVELS:
            raise AdmissibleConfigError(self._err(
                'Parameter {} in configuration file {}, section {}, is not one of {}',
                self.KEY_LOG_LEVEL, cfg, ', '.join(self._LEVELS)))

    def _err(self, template: str, param_name: str, config: Dict[str, str], *args) -> str:
        return template.format(param_name, config[self._TEMP_KEY_CFG_FILE], self.CFG_SEC, *args)

    def _get_cfg(self, cfgfile: Path) -> Dict[str, str]:
        if not cfgfile.is_file():
            raise AdmissibleConfigError('{} does not exist or is not a file'.format(cfgfile))
        config = configparser.ConfigParser()
        with cfgfile.open() as cfg:
            try:
                config.read_file(cfg)
            except configparser.Error as e:
                raise AdmissibleConfigError('Error parsing config file {}: {}'.format(
                    cfgfile, e)) from e
        if self.CFG_SEC not in config:
            raise AdmissibleConfigError('No section {} found in config file {}'.format(
                self.CFG_SEC, cfgfile))
        sec = config[self.CFG_SEC]
        # a section is not a real map and is missing methods
        c = {x: sec[x] for x in sec.keys()}
        c[self._TEMP_KEY_CFG_FILE] = str(cfgfile)
        return c

    def _get_cfg_from_env(self) -> Optional[Path]:
        if os.environ.get(self.ENV_VAR_ADMISSIBLE):
            return Path(os.environ[self.ENV_VAR_ADMISSIBLE])
        return None

    def _get_string(self, param_name: str, config: Dict[str, str]) -> Optional[str]:
        s = config.get(param_name)
        if s and s.strip():
            return s.strip()
        return None

    def _get_int(self, param_name: str, config: Dict[str, str], default: int) -> int:
        s = self._get_string(param_name, config)
        if s is None:
            return default
        try:
            i = int(s)
        except ValueError as e:
            raise AdmissibleConfigError(self._err(
                'Parameter {} in configuration file {}, section {}, is not an integer: {}',
                param_name, config, s)) from e
        if i < 1:
            raise AdmissibleConfigError(self._err(
                'Parameter {} in configuration file {}, section {}, must be at least 1',
                param_name, config))
        return i
