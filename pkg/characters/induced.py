from dataclasses import dataclass
from typing import Tuple

from characters.character import Character, divide, trivial_character
from characters.errors import ValidationError
from characters.field import FieldKind


@dataclass(frozen=True)
class InducedRepDesc:
    """The degenerate principal series chi1 x chi2 of GL_n(F).

    Induced from the maximal parabolic P_{p1,p2}; r = min(p1, p2) is derived.
    """

    field: FieldKind
    n: int
    p1: int
    p2: int
    chi1: Character
    chi2: Character

    def __post_init__(self) -> None:
        object.__setattr__(self, "field", FieldKind.parse(self.field))
        if self.p1 < 1 or self.p2 < 1:
            raise ValidationError("both blocks of the parabolic must be non-empty", field="p1")
        if self.p1 + self.p2 != self.n:
            raise ValidationError(f"p1 + p2 = {self.p1 + self.p2} differs from n = {self.n}", field="n")
        if self.chi1.p != self.p1:
            raise ValidationError(f"chi1 lives on GL_{self.chi1.p}, expected GL_{self.p1}", field="chi1")
        if self.chi2.p != self.p2:
            raise ValidationError(f"chi2 lives on GL_{self.chi2.p}, expected GL_{self.p2}", field="chi2")
        if self.chi1.field is not self.field or self.chi2.field is not self.field:
            raise ValidationError("characters and descriptor disagree on the field", field="field")

    @property
    def r(self) -> int:
        return min(self.p1, self.p2)

    def __str__(self) -> str:
        return f"{self.chi1} x {self.chi2} on GL_{self.n}({self.field.value})"


def induced_from(field: "FieldKind | str", n: int, p1: int, chi: Character) -> InducedRepDesc:
    """The descriptor chi x 1 with chi on GL_{p1}."""
    field = FieldKind.parse(field)
    return InducedRepDesc(field, n, p1, n - p1, chi, trivial_character(field, n - p1))


def normalize(rep: InducedRepDesc) -> Tuple[Character, bool]:
    """Twist chi1 x chi2 to chi x 1 with chi = chi1 * chi2^-1 on GL_{p1}.

    Twisting by a character of GL_n does not change reducibility or the shape
    of the composition series.  The flag is always ``False``; it mirrors the
    side translations done for cosine transforms.
    """
    return divide(rep.chi1, rep.chi2), False
