import re
from fractions import Fraction

from circpeak.exceptions import ParseError

_SEPARATORS = re.compile(r"[\s,]+")


def parse_set_spec(text: str) -> list[int]:
    """
    Parses a comma-separated set spec such as "3, 5,8" into a sorted list of integers.

    Args:
        text (str): The set spec. The empty string (or only whitespace/braces) is the empty set.

    Returns:
        list[int]: The sorted, duplicate-free elements.
    """
    stripped = text.strip().strip("{}").strip()
    if not stripped:
        return []
    try:
        elements = [int(token) for token in stripped.split(",") if token.strip()]
    except ValueError:
        raise ParseError(value=text, message=f"Unparsable set spec: {text!r}")
    if len(set(elements)) != len(elements):
        raise ParseError(value=text, message=f"Set spec has duplicate elements: {text!r}")
    return sorted(elements)


def parse_permutation(text: str) -> list[int]:
    """
    Parses one-line notation separated by spaces or commas, e.g. "4 8 3 6" or "4,8,3,6".

    A bare digit string such as "14253" is read letter by letter.
    """
    stripped = text.strip().strip("()").strip()
    if not stripped:
        return []
    tokens = [token for token in _SEPARATORS.split(stripped) if token]
    if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise ParseError(value=text, message=f"Unparsable permutation: {text!r}")


def format_set(elements) -> str:
    return "{" + ", ".join(str(e) for e in elements) + "}"


def format_rational(value: Fraction | int) -> str:
    """Integers print without a denominator, everything else as p/q."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
