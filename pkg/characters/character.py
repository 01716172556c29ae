"""Characters of GL_p(F) described by exact exponents.

Over R a character in scope is eps^a * nu^s, over C it is alpha^k * nu^s, and
over a non-archimedean field it is an unramified twist nu^s unless the
``ramified`` flag is set.  The exponent s is a complex rational; its real part
is s(chi), the exponent of |chi|.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Tuple

from characters.errors import ValidationError
from characters.field import FieldKind
from characters.rational import ComplexRational, RationalLike


@dataclass(frozen=True)
class Character:
    """A character of GL_p(F); ``p = 0`` is the empty character.

    Attributes:
        field: The local field.
        p: Size of GL_p.
        sign_exp: Exponent of eps mod 2 (real field only, else ``None``).
        alpha_exp: Exponent of alpha = det|det|^-1 (complex field only, else ``None``).
        nu_exp: Exponent s of nu^s.
        ramified: Non-archimedean characters that are not a power of nu.
    """

    field: FieldKind
    p: int
    sign_exp: Optional[int] = None
    alpha_exp: Optional[int] = None
    nu_exp: ComplexRational = dc_field(default_factory=ComplexRational)
    ramified: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "field", FieldKind.parse(self.field))
        object.__setattr__(self, "nu_exp", ComplexRational.of(self.nu_exp))
        if not isinstance(self.p, int) or self.p < 0:
            raise ValidationError(f"GL size must be a non-negative integer, got {self.p!r}", field="p")
        if (self.sign_exp is not None) != (self.field is FieldKind.REAL):
            raise ValidationError("eps exponent is present exactly for real characters", field="sign_exp")
        if (self.alpha_exp is not None) != (self.field is FieldKind.COMPLEX):
            raise ValidationError("alpha exponent is present exactly for complex characters", field="alpha_exp")
        if self.sign_exp is not None:
            object.__setattr__(self, "sign_exp", int(self.sign_exp) % 2)
        if self.alpha_exp is not None:
            object.__setattr__(self, "alpha_exp", int(self.alpha_exp))
        if self.ramified and self.field is not FieldKind.NON_ARCHIMEDEAN:
            raise ValidationError("only non-archimedean characters can be ramified", field="ramified")

    @property
    def is_empty(self) -> bool:
        return self.p == 0

    @property
    def is_nu_power(self) -> bool:
        """True when the character is exactly nu^s (trivial eps/alpha part, unramified)."""
        return not self.ramified and not self.sign_exp and not self.alpha_exp

    def with_p(self, p: int) -> "Character":
        return Character(self.field, p, self.sign_exp, self.alpha_exp, self.nu_exp, self.ramified)

    def __str__(self) -> str:
        from characters.codec import format_character

        return format_character(self)


def make_character(
    field: "FieldKind | str",
    p: int,
    sign_exp: Optional[int] = None,
    alpha_exp: Optional[int] = None,
    nu_exp: "ComplexRational | RationalLike" = 0,
    ramified: bool = False,
) -> Character:
    """Build a validated character of GL_p(F).

    Missing eps/alpha exponents default to 0 on the field that carries them.

    Raises:
        ValidationError: naming the offending field, e.g. an alpha exponent on a
            real character.
    """
    field = FieldKind.parse(field)
    if not isinstance(p, int) or p < 1:
        raise ValidationError(f"GL size must be a positive integer, got {p!r}", field="p")
    if field is FieldKind.REAL and sign_exp is None:
        sign_exp = 0
    if field is FieldKind.COMPLEX and alpha_exp is None:
        alpha_exp = 0
    return Character(field, p, sign_exp, alpha_exp, ComplexRational.of(nu_exp), ramified)


def nu_power(field: "FieldKind | str", p: int, s: "ComplexRational | RationalLike") -> Character:
    """nu^s on GL_p(F)."""
    return make_character(field, p, nu_exp=s)


def trivial_character(field: "FieldKind | str", p: int) -> Character:
    return make_character(field, p)


def s_of(chi: Character) -> Fraction:
    """The real number s(chi) with |chi| = nu^{s(chi)}."""
    return chi.nu_exp.re


def restrict(chi: Character) -> Character:
    """chi' : the same exponents on GL_{p-1}.

    Raises:
        ValidationError: when restricting the empty character.
    """
    if chi.p == 0:
        raise ValidationError("cannot restrict the empty character", field="p")
    return chi.with_p(chi.p - 1)


def invert(chi: Character) -> Character:
    """chi^-1: every exponent negated (eps is its own inverse)."""
    alpha = None if chi.alpha_exp is None else -chi.alpha_exp
    return Character(chi.field, chi.p, chi.sign_exp, alpha, -chi.nu_exp, chi.ramified)


def divide(chi1: Character, chi2: Character) -> Character:
    """chi1 * chi2^-1 by exponent subtraction, kept on chi1's GL size.

    The quotient is flagged ramified as soon as either factor is.
    """
    if chi1.field is not chi2.field:
        raise ValidationError("characters live over different fields", field="field")
    sign = None if chi1.sign_exp is None else chi1.sign_exp - chi2.sign_exp
    alpha = None if chi1.alpha_exp is None else chi1.alpha_exp - chi2.alpha_exp
    return Character(
        chi1.field,
        chi1.p,
        sign,
        alpha,
        chi1.nu_exp - chi2.nu_exp,
        chi1.ramified or chi2.ramified,
    )


def modular_character(
    p1: int, p2: int, field: "FieldKind | str" = FieldKind.NON_ARCHIMEDEAN
) -> Tuple[Character, Character]:
    """The modular function of P_{p1,p2}: (nu^{p2} on GL_{p1}, nu^{-p1} on GL_{p2})."""
    return nu_power(field, p1, p2), nu_power(field, p2, -p1)
