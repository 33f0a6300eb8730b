"""
Structured pass / fail records of verification checks.
"""
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from alcoves.admissible.core.arg_check import check_string, not_none
from alcoves.admissible.core.errors import AdmissibleError


class CheckStatus(Enum):
    """
    The outcome of a check.

    :ivar status: the status as written to reports.
    """

    PASS = 'pass'
    FAIL = 'fail'
    INFO = 'info'
    """ The check records an observation and can't fail. """

    def __init__(self, status):
        self.status = status


class CheckResult:
    """
    The result of one check.

    :ivar name: the name of the check, e.g. 'maxwell.face-count'.
    :ivar status: the outcome.
    :ivar witness: for failed checks, the offending element or face serialized, and for
        informational checks the observation. None otherwise.
    """

    def __init__(self, name: str, status: CheckStatus, witness: str=None) -> None:
        check_string(name, 'check name')
        not_none(status, 'status')
        self.name = name
        self.status = status
        self.witness = witness

    def to_dict(self) -> Dict[str, Any]:
        d = {'name': self.name, 'status': self.status.status}
        if self.witness is not None:
            d['witness'] = self.witness
        return d

    def __eq__(self, other):
        if type(other) is type(self):
            return (other.name == self.name and other.status == self.status and
                    other.witness == self.witness)
        return False

    def __hash__(self):
        return hash((self.name, self.status, self.witness))

    def __repr__(self):
        return 'CheckResult({}, {}, {})'.format(self.name, self.status.status, self.witness)


class Report:
    """
    The checks run against one case, in the order they were run.

    :ivar case: the case label.
    :ivar checks: the check results.
    """

    def __init__(self, case: str) -> None:
        check_string(case, 'case')
        self.case = case
        self.checks: List[CheckResult] = []

    def add(self, name: str, witness: Optional[str]) -> CheckResult:
        """ Record a check that passed if witness is None and failed with the witness otherwise. """
        res = CheckResult(name, CheckStatus.PASS if witness is None else CheckStatus.FAIL,
                          witness)
        self.checks.append(res)
        return res

    def info(self, name: str, observation: str) -> CheckResult:
        res = CheckResult(name, CheckStatus.INFO, observation)
        self.checks.append(res)
        return res

    def run(self, name: str, check: Callable[[], Optional[str]]) -> CheckResult:
        """
        Run a check function that returns a witness on failure and None on success. Errors
        raised by the check fail it, with the error message as the witness.
        """
        try:
            witness = check()
        except AdmissibleError as e:
            witness = str(e)
        return self.add(name, witness)

    @property
    def passed(self) -> bool:
        return all(c.status is not CheckStatus.FAIL for c in self.checks)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    def to_dict(self) -> Dict[str, Any]:
        return {'case': self.case, 'checks': [c.to_dict() for c in self.checks]}
