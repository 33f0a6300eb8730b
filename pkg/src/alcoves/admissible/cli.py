"""
CLI tools for admissible sets and the face map.
"""

from typing import IO, List, Optional
import argparse
import json
import logging
import sys
import time
import traceback
from logging import Formatter, StreamHandler
from pathlib import Path

from alcoves.admissible.builder import AdmissibleBuilder, AdmissibleBuildException
from alcoves.admissible.core.arg_check import not_none, no_Nones_in_iterable
from alcoves.admissible.core.case import AdmissibleCase
from alcoves.admissible.core.errors import AdmissibleError, IllegalParameterError, \
    MismatchedRootDataError, MissingParameterError, UnsupportedCartanTypeError
from alcoves.admissible.core.root_datum import parse_coweight
from alcoves.admissible.export.dot import admissible_dot, faces_dot
from alcoves.admissible.export.serialization import enumerate_document, enumerate_text, \
    face_map_document, faces_document, parse_face, to_json
from alcoves.admissible.export.svg import render_svg
from alcoves.admissible.verification.suites import ALL, run_suite, suite_names

_LOGGER_ROOT = 'alcoves'

# errors in the command line input rather than in the mathematics
_USAGE_ERRORS = (MissingParameterError, IllegalParameterError, UnsupportedCartanTypeError,
                 MismatchedRootDataError)


class JSONLogFormatter(Formatter):
    """ A JSON formatter for CLI logs. """

    def __init__(self, prog_name):
        super().__init__()
        self.prog_name = prog_name

    def format(self, record):
        log = {'prog': self.prog_name,
               'level': record.levelname,
               'time': int(time.time() * 1000),
               'source': record.name,
               'msg': record.getMessage()
               }
        if record.exc_info and record.exc_info != (None, None, None):
            log['excep'] = ''.join(traceback.format_exception(*record.exc_info))
        return json.dumps(log)


_handler: Optional[StreamHandler] = None


def _configure_loggers(logstream: IO[str], level: str):
    global _handler
    logger = logging.getLogger(_LOGGER_ROOT)
    if _handler:
        logger.removeHandler(_handler)
    _handler = StreamHandler(logstream)
    _handler.setFormatter(JSONLogFormatter(AdmissibleCLI.PROG))
    logger.addHandler(_handler)
    logger.setLevel(level)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    # reports usage errors to the caller instead of exiting

    def error(self, message):
        raise _UsageError(message)


class AdmissibleCLI:
    """
    The main CLI class.

    Exit codes are 0 on success, 1 when a verification check fails or the input is outside the
    domain of the command, and 2 for usage errors.
    """

    PROG = 'adm_faces'

    _ENUMERATE = 'enumerate'
    _FACES = 'faces'
    _FACE_MAP = 'face-map'
    _VERIFY = 'verify'
    _RENDER = 'render'

    _TEXT = 'text'
    _JSON = 'json'
    _DOT = 'dot'

    EXIT_OK = 0
    EXIT_FAIL = 1
    EXIT_USAGE = 2

    def __init__(
            self,
            builder: AdmissibleBuilder,
            args: List[str],
            stdout: IO[str],
            stderr: IO[str]
            ) -> None:
        """
        Create the CLI.

        :param builder: the builder for cases.
        :param args: the command line arguments without the program name.
        :param stdout: the standard out stream.
        :param stderr: the standard error stream.
        :raises TypeError: if any of the arguments are None.
        """
        not_none(builder, 'builder')
        no_Nones_in_iterable(args, 'args')
        not_none(stdout, 'stdout')
        not_none(stderr, 'stderr')
        self._builder = builder
        self._args = args
        self._stdout = stdout
        self._stderr = stderr

    def execute(self) -> int:
        """
        Run the CLI with the given arguments.

        :returns: the exit code for the program.
        """
        try:
            a = self._parse_args()
        except _UsageError as e:
            self._stderr.write('Error: {}\n'.format(e.args[0]))
            return self.EXIT_USAGE
        except SystemExit as e:
            # --help
            return e.code if isinstance(e.code, int) else self.EXIT_USAGE
        if not a.command:
            self._stderr.write('Error: a command is required: {}\n'.format(', '.join(
                [self._ENUMERATE, self._FACES, self._FACE_MAP, self._VERIFY, self._RENDER])))
            return self.EXIT_USAGE
        try:
            cfgpath = Path(a.config) if a.config else None
            cfg = self._builder.get_cfg(cfgpath)
            _configure_loggers(self._stderr, 'INFO' if a.verbose else cfg.log_level)
            rd = self._builder.build_root_datum(a.type)
            case = self._builder.build_case(a.type, parse_coweight(a.mu, rd.rank), cfgpath)
            if a.command == self._ENUMERATE:
                return self._enumerate(case, a.format)
            if a.command == self._FACES:
                return self._faces(case, a.format)
            if a.command == self._FACE_MAP:
                return self._face_map(case, a.element)
            if a.command == self._VERIFY:
                return self._verify(case, a.suite, a.out)
            return self._render(case, a, a.scale or cfg.render_scale)
        except _USAGE_ERRORS as e:
            self._handle_error(e, a.verbose)
            return self.EXIT_USAGE
        except (AdmissibleError, AdmissibleBuildException, OSError) as e:
            self._handle_error(e, a.verbose)
            return self.EXIT_FAIL

    def _write(self, text: str, out: Optional[str]=None):
        if out:
            Path(out).write_text(text)
        else:
            self._stdout.write(text)

    def _enumerate(self, case: AdmissibleCase, fmt: str) -> int:
        if fmt == self._JSON:
            self._write(to_json(enumerate_document(case)))
        elif fmt == self._DOT:
            self._write(admissible_dot(case))
        else:
            self._write(enumerate_text(case))
        return self.EXIT_OK

    def _faces(self, case: AdmissibleCase, fmt: str) -> int:
        if fmt == self._DOT:
            self._write(faces_dot(case))
        else:
            self._write(to_json(faces_document(case)))
        return self.EXIT_OK

    def _face_map(self, case: AdmissibleCase, element: str) -> int:
        w = case.group.parse(element)
        self._write(to_json(face_map_document(case, w)))
        return self.EXIT_OK

    def _verify(self, case: AdmissibleCase, suite: str, out: Optional[str]) -> int:
        report = run_suite(case, suite)
        self._write(to_json(report.to_dict()), out)
        for c in report.failures():
            self._stderr.write('Check {} failed: {}\n'.format(c.name, c.witness))
        return self.EXIT_OK if report.passed else self.EXIT_FAIL

    def _render(
            self,
            case: AdmissibleCase,
            args: argparse.Namespace,
            scale: int):
        f = parse_face(case.poset, args.face) if args.face else None
        dark = [parse_face(case.poset, t) for t in args.dark_face or []]
        light = [parse_face(case.poset, t) for t in args.light_face or []]
        self._write(render_svg(case, scale, f, args.boundary, dark, light), args.out)
        return self.EXIT_OK

    def _parse_args(self) -> argparse.Namespace:
        common = _ArgumentParser(add_help=False)
        common.add_argument('--type', required=True,
                            help='The Cartan type and rank, e.g. A2, C2 or G2.')
        common.add_argument('--mu', required=True,
                            help='The dominant coweight in fundamental coweight coordinates, ' +
                            'comma separated, e.g. 2,0.')
        common.add_argument('--config',
                            help='The location of the configuration file. If absent, the ' +
                            'ADMISSIBLE_CONFIG environment variable is consulted, and ' +
                            'otherwise the defaults are used.')
        common.add_argument('--verbose', action='store_true',
                            help='Log at INFO level and print stack trace on error.')

        parser = _ArgumentParser(description='Admissible sets and the face map', prog=self.PROG,
                                 formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        sub = parser.add_subparsers(dest='command', parser_class=_ArgumentParser)

        enum = sub.add_parser(self._ENUMERATE, parents=[common],
                              help='List Adm(mu) by length.')
        enum.add_argument('--format', choices=[self._TEXT, self._JSON, self._DOT],
                          default=self._TEXT,
                          help='The output format. DOT output is the Hasse diagram of ' +
                          'Adm(mu) colored by the face map.')

        faces = sub.add_parser(self._FACES, parents=[common],
                               help='List the faces of the coweight polytope.')
        faces.add_argument('--format', choices=[self._JSON, self._DOT], default=self._JSON,
                           help='The output format. DOT output is the Hasse diagram of the ' +
                           'face poset.')

        fmap = sub.add_parser(self._FACE_MAP, parents=[common],
                              help='The face map value of an element of Adm(mu).')
        fmap.add_argument('--element', required=True,
                          help="The element, e.g. 't[2,0]*s1' or 's1*s2'.")

        verify = sub.add_parser(self._VERIFY, parents=[common],
                                help='Run verification suites and write a JSON report.')
        verify.add_argument('--suite', choices=suite_names(), default=ALL,
                            help='The suite to run.')
        verify.add_argument('--out', help='The report file. Standard out if absent.')

        render = sub.add_parser(self._RENDER, parents=[common],
                                help='Draw Adm(mu) of a rank 2 type as SVG.')
        render.add_argument('--out', help='The SVG file. Standard out if absent.')
        render.add_argument('--face',
                            help="A face to shade, as 'WORD:INDICES', e.g. 's2:1' for the " +
                            'face of s2 and the first simple root.')
        render.add_argument('--dark-face', action='append',
                            help='A face whose whole part of Adm(mu) is shaded dark. ' +
                            'May be repeated.')
        render.add_argument('--light-face', action='append',
                            help='A face whose whole part of Adm(mu) is shaded light. ' +
                            'May be repeated. Dark shading wins where faces meet.')
        render.add_argument('--boundary', action='store_true',
                            help='Shade the boundary of Adm(mu) and the centers of its edges.')
        render.add_argument('--scale', type=int,
                            help='Pixels per unit length. Defaults to the configured scale.')
        return parser.parse_args(self._args)

    def _handle_error(self, exception, verbose=False):
        self._stderr.write('Error: {}\n'.format(exception))
        if verbose:
            self._stderr.write(traceback.format_exc() + '\n')


def main() -> int:
    return AdmissibleCLI(AdmissibleBuilder(), sys.argv[1:], sys.stdout, sys.stderr).execute()


if __name__ == '__main__':
    exit(main())
