"""
Checks for arguments arriving from callers and from the command line.
"""
import re
from functools import lru_cache
from typing import Any, Iterable, Optional, Pattern, Sequence, Tuple

from alcoves.admissible.core.errors import MissingParameterError, IllegalParameterError


def not_none(obj: object, name: str):
    """
    :param obj: the object to check.
    :param name: the name of the object to use in error messages.
    :raises TypeError: if the object is None.
    """
    if obj is None:
        raise TypeError(name + ' cannot be None')


@lru_cache(maxsize=None)
def _illegal_chars(legal_characters: str) -> Pattern:
    return re.compile('[^' + legal_characters + ']')


def check_string(
        string: Optional[str],
        name: str,
        legal_characters: str=None,
        max_len: int=None
        ) -> None:
    '''
    Check that a string is present and, optionally, short enough and drawn from a character
    class.

    :param string: the string to test. Leading and trailing whitespace counts against the
        length and the character class.
    :param name: the name of the string to be used in error messages.
    :param legal_characters: the body of a regex character class, e.g. 'se0-9*' for Weyl group
        words.
    :param max_len: the maximum length of the string.
    :raises MissingParameterError: if the string is None or whitespace only.
    :raises IllegalParameterError: if the string is too long or contains illegal characters.
    '''
    if string is None or not string.strip():
        raise MissingParameterError(name)
    if max_len and len(string) > max_len:
        raise IllegalParameterError('{} {} exceeds maximum length of {}'.format(
            name, string, max_len))
    if not legal_characters:
        return
    bad = _illegal_chars(legal_characters).search(string)
    if bad:
        raise IllegalParameterError('Illegal character in {} {}: {}'.format(
            name, string, bad.group()))


def no_Nones_in_iterable(iterable: Iterable[Any], name: str) -> None:
    '''
    :raises TypeError: if the iterable is None or contains None.
    '''
    not_none(iterable, name)
    if any(item is None for item in iterable):
        raise TypeError('None item in ' + name)


def check_int_vector(values: Sequence[int], name: str, length: int=None) -> Tuple[int, ...]:
    '''
    Check that a sequence is a vector of integers, optionally of a given length.

    :param values: the sequence to check.
    :param name: the name of the vector to be used in error messages.
    :param length: the required length of the vector.
    :returns: the vector as a tuple.
    :raises TypeError: if the sequence is None or contains None.
    :raises IllegalParameterError: if the sequence contains non-integers or has the wrong length.
    '''
    vec = tuple(values) if values is not None else None
    no_Nones_in_iterable(vec, name)
    for v in vec:
        # rejects bools too
        if type(v) is not int:
            raise IllegalParameterError('{} must contain only integers, got {!r}'.format(name, v))
    if length is not None and len(vec) != length:
        raise IllegalParameterError('{} must have length {}, got {}'.format(
            name, length, len(vec)))
    return vec
