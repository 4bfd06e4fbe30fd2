"""Exact scalars: arbitrary-precision rationals plus a distinguished infinity.

Every number the library emits is a ``fractions.Fraction`` or the sentinel
``INF``; floats never appear, so all outputs are bit-reproducible.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidParameterError


class Infinity:
    """Point at infinity on the parameter line; compares above every rational."""

    _singleton = None

    def __new__(cls) -> "Infinity":
        if cls._singleton is None:
            cls._singleton = super().__new__(cls)
        return cls._singleton

    def __repr__(self) -> str:
        return "inf"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash(("minitwistor", "inf"))

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True


INF = Infinity()

Scalar = Fraction | Infinity


def parse_scalar(text: str) -> Scalar:
    """Parse "p/q", "p" or "inf" into an exact scalar."""
    t = text.strip()
    if t == "inf":
        return INF
    try:
        if "/" in t:
            num, den = t.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(t))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"cannot parse rational {text!r}") from exc


def format_scalar(value: Scalar | int) -> str:
    """Render an exact scalar as reduced "p/q", a plain integer, or "inf"."""
    if isinstance(value, Infinity):
        return "inf"
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
