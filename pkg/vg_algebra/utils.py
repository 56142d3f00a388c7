"""Utility functions."""

import hashlib
import json
import logging
import os
import re
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterator, Sequence, Tuple

from vg_algebra.errors import UsageException
from vg_algebra.keys import EnvDefs

log = logging.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")

SIGN_CHARS = {1: "+", -1: "-", 0: "0"}


def parse_rational(value: Any) -> Fraction:
    """Convert an integer or a 'p/q' string to an exact rational.

    Args:
        value: value to convert

    Returns:
        Fraction: the exact value

    Raises:
        UsageException: if the value is a float, a bool or not a rational literal
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise UsageException(f"not an exact rational: {value!r}")

    if isinstance(value, int):
        return Fraction(value)

    if isinstance(value, Fraction):
        return value

    if not isinstance(value, str) or not RATIONAL_PATTERN.match(value):
        raise UsageException(f"not an exact rational: {value!r}")

    try:
        return Fraction(value.replace(" ", ""))
    except ZeroDivisionError as error:
        raise UsageException(f"zero denominator in {value!r}") from error


def is_rational_literal(value: Any) -> bool:
    """Check whether a JSON value is an accepted exact rational literal."""
    try:
        parse_rational(value)
    except UsageException:
        return False
    return True


def format_rational(value: Any) -> str:
    """Format an exact value as 'p' or 'p/q'."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(value: Any) -> int:
    """Sign of an exact number as -1, 0 or 1."""
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def sign_vector_str(signs: Sequence[int]) -> str:
    """Render a sign vector as a string over '+', '-', '0'."""
    return "".join(SIGN_CHARS[s] for s in signs)


def parse_sign_vector(text: str) -> Tuple[int, ...]:
    """Inverse of sign_vector_str."""
    lookup = {char: value for value, char in SIGN_CHARS.items()}
    try:
        return tuple(lookup[char] for char in text)
    except KeyError as error:
        raise UsageException(f"invalid sign vector {text!r}") from error


def size_lex_subsets(n: int, min_size: int, max_size: int) -> Iterator[Tuple[int, ...]]:
    """Subsets of range(n) ordered by size, then lexicographically."""
    for size in range(min_size, max_size + 1):
        yield from combinations(range(n), size)


def canonical_hash(document: Any) -> str:
    """Stable sha256 of a JSON-serializable document."""
    text = json.dumps(document, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def default_seed() -> int:
    """Seed taken from the environment, 0 when unset.

    Raises:
        UsageException: if the variable is set but is not an integer
    """
    raw = os.environ.get(EnvDefs.SEED)
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError as error:
        raise UsageException(
            f"{EnvDefs.SEED} must be an integer, got {raw!r}") from error
