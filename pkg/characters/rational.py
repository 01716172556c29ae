"""Exact rational and complex-rational arithmetic.

``fractions.Fraction`` already stores numerator/denominator reduced with a
positive denominator, so it is used directly as the toolkit's rational type.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from characters.errors import ValidationError

# a [num, den] pair is the JSON form of a rational
RationalLike = Union[int, str, Fraction, List[int], Tuple[int, int]]


def to_fraction(value: RationalLike, field: str = "value") -> Fraction:
    """Coerce ints, ``Fraction``s, ``"num/den"`` strings and ``[num, den]`` pairs to ``Fraction``.

    Floats are refused: every symbolic module works in exact arithmetic.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"expected an exact rational, got {value!r}", field=field)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"not a rational: {value!r}", field=field) from exc
    if isinstance(value, (list, tuple)) and len(value) == 2:
        num, den = value
        if not isinstance(num, int) or not isinstance(den, int) or den == 0:
            raise ValidationError(f"bad [num, den] pair {value!r}", field=field)
        return Fraction(num, den)
    raise ValidationError(f"not a rational: {value!r}", field=field)


def is_integer(q: Fraction) -> bool:
    return q.denominator == 1


def fraction_pair(q: Fraction) -> List[int]:
    return [q.numerator, q.denominator]


def fraction_str(q: Fraction) -> str:
    """Render as ``"num/den"`` (always with a denominator, for JSON stability)."""
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, order=True)
class ComplexRational:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", to_fraction(self.re, "re"))
        object.__setattr__(self, "im", to_fraction(self.im, "im"))

    @classmethod
    def of(cls, value: "ComplexRational | RationalLike") -> "ComplexRational":
        if isinstance(value, ComplexRational):
            return value
        return cls(to_fraction(value))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other: "ComplexRational | RationalLike") -> "ComplexRational":
        other = ComplexRational.of(other)
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "ComplexRational | RationalLike") -> "ComplexRational":
        other = ComplexRational.of(other)
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexRational":
        return ComplexRational(-self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def to_quad(self) -> List[int]:
        """``[re_num, re_den, im_num, im_den]`` as used in multiset JSON."""
        return fraction_pair(self.re) + fraction_pair(self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"
