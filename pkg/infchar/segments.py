"""Infinitesimal characters as exact multisets of complex rationals.

A segment of length p centred at s is {s + (p-1)/2, s + (p-3)/2, ..., s - (p-1)/2};
a generalized segment only asks for integral consecutive differences.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from characters.character import Character
from characters.errors import UnsupportedFieldError, ValidationError
from characters.field import FieldKind
from characters.rational import ComplexRational, RationalLike, is_integer
from reducibility.criteria import check_domain

logger = logging.getLogger(__name__)

READINGS = ("derived", "swapped")


@dataclass(frozen=True)
class CNumberMultiset:
    """A multiset of complex rationals kept as a canonical sorted tuple.

    Two multisets are equal exactly when they have the same entries with the
    same multiplicities.
    """

    entries: Tuple[ComplexRational, ...] = ()

    def __post_init__(self) -> None:
        canonical = tuple(sorted((ComplexRational.of(e) for e in self.entries), key=ComplexRational.sort_key))
        object.__setattr__(self, "entries", canonical)

    @classmethod
    def of(cls, values: Iterable[Union[ComplexRational, RationalLike]]) -> "CNumberMultiset":
        return cls(tuple(ComplexRational.of(v) for v in values))

    def union(self, other: "CNumberMultiset") -> "CNumberMultiset":
        return CNumberMultiset(self.entries + other.entries)

    __or__ = union

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_json(self) -> List[List[int]]:
        return [e.to_quad() for e in self.entries]

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in reversed(self.entries)) + "}"


@dataclass(frozen=True)
class SegmentDesc:
    """The segment of length ``length`` centred at ``center``."""

    center: ComplexRational
    length: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", ComplexRational.of(self.center))
        if not isinstance(self.length, int) or self.length < 1:
            raise ValidationError(f"segment length must be a positive integer, got {self.length!r}", field="length")


def expand_segment(seg: SegmentDesc) -> CNumberMultiset:
    half = Fraction(seg.length - 1, 2)
    return CNumberMultiset(tuple(seg.center + (half - j) for j in range(seg.length)))


def _sorted_real_parts(ms: CNumberMultiset) -> List[Fraction]:
    if len(ms) == 0:
        raise ValidationError("segment tests need a non-empty multiset", field="multiset")
    if len({e.im for e in ms}) > 1:
        return []
    return [e.re for e in ms.entries]


def is_segment(ms: CNumberMultiset) -> bool:
    """True when the entries sort into a chain with consecutive gaps exactly 1."""
    reals = _sorted_real_parts(ms)
    if not reals:
        return False
    return all(b - a == 1 for a, b in zip(reals, reals[1:]))


def is_generalized_segment(ms: CNumberMultiset) -> bool:
    """True when all consecutive gaps (zero allowed) are integers."""
    reals = _sorted_real_parts(ms)
    if not reals:
        return False
    return all(is_integer(b - a) for a, b in zip(reals, reals[1:]))


def _block_union(p1: int, p2: int, center: ComplexRational, reading: str) -> CNumberMultiset:
    if reading == "swapped":
        return expand_segment(SegmentDesc(ComplexRational(), p1)) | expand_segment(SegmentDesc(center, p2))
    return expand_segment(SegmentDesc(center, p1)) | expand_segment(SegmentDesc(ComplexRational(), p2))


def infchar_of(
    field: "FieldKind | str", n: int, p1: int, chi: Character, reading: str = "derived"
) -> Union[CNumberMultiset, Tuple[CNumberMultiset, CNumberMultiset]]:
    """Infinitesimal character of chi x 1 over R (a multiset) or C (a pair).

    Args:
        field: ``R`` or ``C``.
        n: Size of GL_n.
        p1: Block carrying chi.
        chi: Inducing character on GL_{p1}.
        reading: ``"derived"`` attaches chi's exponent to its own block,
            xi_{p1}^s u xi_{p2}^0; ``"swapped"`` swaps the block sizes,
            xi_{p1}^0 u xi_{p2}^s.

    Raises:
        UnsupportedFieldError: for non-archimedean fields.
    """
    field = FieldKind.parse(field)
    if not field.is_archimedean:
        raise UnsupportedFieldError("infinitesimal characters are defined for archimedean fields only")
    if reading not in READINGS:
        raise ValidationError(f"reading must be one of {READINGS}, got {reading!r}", field="reading")
    check_domain(field, n, p1, chi)
    p2 = n - p1
    s = chi.nu_exp
    if field is FieldKind.REAL:
        result = _block_union(p1, p2, s, reading)
        logger.debug("infchar %s x 1 on GL_%d(R): %s", chi, n, result)
        return result
    k = chi.alpha_exp
    return _block_union(p1, p2, s + k, reading), _block_union(p1, p2, s - k, reading)
