"""
Exceptions thrown by the admissible set and face map code.
"""
from enum import Enum


class ErrorType(Enum):
    """
    The type of an error, consisting of an error code and a brief string describing the type.

    :ivar error_code: an integer error code.
    :ivar error_type: a brief string describing the error type.
    """

    MISSING_PARAMETER =           (30000, "Missing input parameter")  # noqa: E222 @IgnorePep8
    """ A required input parameter was not provided. """

    ILLEGAL_PARAMETER =           (30001, "Illegal input parameter")  # noqa: E222 @IgnorePep8
    """ An input parameter had an illegal value, for instance an unparseable element string. """

    UNSUPPORTED_CARTAN_TYPE =     (30010, "Unsupported Cartan type")  # noqa: E222 @IgnorePep8
    """ The Cartan type or rank is not supported. """

    MISMATCHED_ROOT_DATA =        (30020, "Mismatched root data")  # noqa: E222 @IgnorePep8
    """ Objects built from different root data or coweights were combined. """

    NOT_DOMINANT =                (40000, "Coweight not dominant")  # noqa: E222 @IgnorePep8
    """ A dominant coweight was required. """

    NOT_MINIMAL_REPRESENTATIVE =  (40010, "Not a minimal coset rep")  # noqa: E222 @IgnorePep8
    """ An element is not the minimal representative of its left coset. """

    NOT_ADMISSIBLE =              (40020, "Element not admissible")  # noqa: E222 @IgnorePep8
    """ An element is not in the admissible set. """

    NOT_IN_SUBSYSTEM =            (40030, "Element outside subgroup")  # noqa: E222 @IgnorePep8
    """ An element does not lie in the extended affine Weyl group of a root subsystem. """

    NOT_IN_ORBIT =                (40040, "Coweight outside Weyl orbit")  # noqa: E222 @IgnorePep8
    """ A coweight is not a vertex of the coweight polytope. """

    DEGENERATE_INPUT =            (40050, "Degenerate input")  # noqa: E222 @IgnorePep8
    """ The input has no meaningful answer, e.g. the polytope of the zero coweight. """

    DEPTH_INSUFFICIENT =          (50000, "Insufficient chamber depth")  # noqa: E222 @IgnorePep8
    """ An obtuse cone comparison did not stabilize between two depths. """

    INVARIANT_VIOLATION =         (60000, "Invariant violated")  # noqa: E222 @IgnorePep8
    """ Two independent computations of the same object disagree. """

    UNSUPPORTED_OP =              (70000, "Unsupported operation")  # noqa: E222 @IgnorePep8
    """ The requested operation is not supported. """

    def __init__(self, error_code, error_type):
        self.error_code = error_code
        self.error_type = error_type


class AdmissibleError(Exception):
    """
    The super class of all admissible set related errors.

    :ivar error_type: the error type of this error.
    :ivar message: the message for this error.
    """

    def __init__(self, error_type: ErrorType, message: str=None) -> None:
        '''
        Create an admissible set error.

        :param error_type: the error type of this error.
        :param message: an error message.
        :raises TypeError: if error_type is None
        '''
        if not error_type:  # don't use not_none here, causes circular import
            raise TypeError('error_type cannot be None')
        msg = '{} {}'.format(error_type.error_code, error_type.error_type)
        message = message.strip() if message and message.strip() else None
        if message:
            msg += ': ' + message
        super().__init__(msg)
        self.error_type = error_type
        self.message = message


class MissingParameterError(AdmissibleError):
    """
    An error thrown when a required parameter is missing.
    """

    def __init__(self, message: str=None) -> None:
        super().__init__(ErrorType.MISSING_PARAMETER, message)


class IllegalParameterError(AdmissibleError):
    """
    An error thrown when a provided parameter is illegal.
    """

    def __init__(self, message: str=None) -> None:
        super().__init__(ErrorType.ILLEGAL_PARAMETER, message)


class UnsupportedCartanTypeError(AdmissibleError):
    """
    An error thrown when a root datum of an unsupported type or rank is requested.
    """

    def __init__(self, message: str=None) -> None:
        super().__init__(ErrorType.UNSUPPORTED_CARTAN_TYPE, message)


class MismatchedRootDataError(AdmissibleError):
    """
    An error thrown when objects from different root data, or faces of different polytopes,
    are combined.
    """

    def __init__(self, message: str=None) -> None:
        super().__init__(ErrorType.MISMATCHED_ROOT_DATA, message)


class DomainError(AdmissibleError):
    """
    An error thrown when an input is well formed but lies outside the domain of an operation.
    """

    def __init__(self, error_type: ErrorType, message: str) -> None:
        super().__init__(error_type, message)


class NotDominantError(DomainError):
    """
    An error thrown when a coweight is not dominant.
    """

    def __init__(self, message: str) -> None:
        super().__init__(ErrorType.NOT_DOMINANT, message)


class NotMinimalRepresentativeError(DomainError):
    """
    An error thrown when an element of W0 is not in W^I.
    """

    def __init__(self, message: str) -> None:
        super().__init__(ErrorType.NOT_MINIMAL_REPRESENTATIVE, message)


class NotAdmissibleError(DomainError):
    """
    An error thrown when an element is not in Adm(mu).
    """

    def __init__(self, message: str) -> None:
        super().__init__(ErrorType.NOT_ADMISSIBLE, message)


class NotInSubsystemError(DomainError):
    """
    An error thrown when an element is not in the extended affine Weyl group of a subsystem.
    """

    def __init__(self, message: str) -> None:
        super().__init__(ErrorType.NOT_IN_SUBSYSTEM, message)


class NotInOrbitError(DomainError):
    """
    An error thrown when a coweight is not in the Weyl orbit W0(mu).
    """

    def __init__(self, message: str) -> None:
        super().__init__(ErrorType.NOT_IN_ORBIT, message)


class DegenerateInputError(DomainError):
    """
    An error thrown when faces of the polytope of the zero coweight are requested.
    """

    def __init__(self, message: str) -> None:
        super().__init__(ErrorType.DEGENERATE_INPUT, message)


class DepthInsufficiencyError(AdmissibleError):
    """
    An error thrown when an obtuse cone membership test gives different answers at two
    successive depths.
    """

    def __init__(self, message: str=None) -> None:
        super().__init__(ErrorType.DEPTH_INSUFFICIENT, message)


class InvariantViolationError(AdmissibleError):
    """
    An error thrown when two independent computations of the same object disagree.
    """

    def __init__(self, message: str=None) -> None:
        super().__init__(ErrorType.INVARIANT_VIOLATION, message)


class UnsupportedOperationError(AdmissibleError):
    """
    An error thrown when an operation is not supported for the given input.
    """

    def __init__(self, message: str=None) -> None:
        super().__init__(ErrorType.UNSUPPORTED_OP, message)
