"""Closed-form reducibility criteria for chi x 1 and finite-dimensional constituents.

Every comparison is exact: exponents are ``Fraction``s and integrality is
tested on the reduced denominator.
"""

import logging
from dataclasses import dataclass, field as dc_field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from characters.character import Character, invert, nu_power
from characters.errors import DomainError, ValidationError
from characters.field import FieldKind
from characters.rational import is_integer

logger = logging.getLogger(__name__)

RAMIFIED_NOTE = "ramified character: irreducible by literal reading of the unramified criterion"


class ConditionTag(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


class Method(str, Enum):
    CLOSED_FORM = "ClosedForm"
    RECURSIVE = "Recursive"


class Side(str, Enum):
    SUBMODULE = "Submodule"
    QUOTIENT = "Quotient"


@dataclass(frozen=True)
class ConditionMatch:
    """One matched reducibility condition.

    Attributes:
        tag: Which condition matched.
        k: The witnessing integer (the alpha exponent for condition IV).
        sign: +1 or -1, the branch of the ``±`` in the condition; for
            condition IV, -1 means the match was found on chi^-1.
        l: Second witness (complex field only), ``None`` elsewhere.
    """

    tag: ConditionTag
    k: int
    sign: int = 1
    l: Optional[int] = None

    def to_json(self) -> dict:
        return {"tag": self.tag.value, "k": self.k, "l": self.l, "sign": self.sign}


@dataclass(frozen=True)
class FiniteDimWitness:
    """A finite-dimensional submodule or quotient of chi x 1 (or of a Φ-descendant).

    ``character_of_psi`` is set when the constituent is one-dimensional.
    ``depth`` counts the Φ-steps taken before the witness was found.
    """

    side: Side
    k: int = 0
    l: Optional[int] = None
    character_of_psi: Optional[Character] = None
    depth: int = 0

    def to_json(self) -> dict:
        return {
            "side": self.side.value,
            "k": self.k,
            "l": self.l,
            "psi": None if self.character_of_psi is None else str(self.character_of_psi),
            "psi_gl": None if self.character_of_psi is None else self.character_of_psi.p,
            "depth": self.depth,
        }


@dataclass(frozen=True)
class ReducibilityVerdict:
    reducible: bool
    method: Method
    matched_conditions: Tuple[ConditionMatch, ...] = ()
    witness: Optional[FiniteDimWitness] = None
    notes: Tuple[str, ...] = dc_field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "reducible": self.reducible,
            "method": self.method.value,
            "conditions": [m.to_json() for m in self.matched_conditions],
            "witness": None if self.witness is None else self.witness.to_json(),
            "notes": list(self.notes),
        }


def check_domain(field: FieldKind, n: int, p1: int, chi: Character) -> int:
    """Validate the inputs shared by every criterion and return r = min(p1, n - p1).

    Raises:
        DomainError: if p1 is not in [1, n - 1].
        ValidationError: if chi does not live on GL_{p1}(F).
    """
    field = FieldKind.parse(field)
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")
    if not isinstance(p1, int) or not 1 <= p1 <= n - 1:
        raise DomainError(f"p1 = {p1!r} is outside [1, {n - 1}]")
    if chi.field is not field:
        raise ValidationError(f"character is over {chi.field.value}, expected {field.value}", field="chi")
    if chi.p != p1:
        raise ValidationError(f"character lives on GL_{chi.p}, expected GL_{p1}", field="chi")
    return min(p1, n - p1)


def _as_int(q: Fraction) -> Optional[int]:
    return q.numerator if is_integer(q) else None


def _condition_one(chi: Character, n: int, r: int) -> List[ConditionMatch]:
    # chi = nu^{±(k - n/2)}, 0 <= k <= r - 1
    if not chi.is_nu_power or not chi.nu_exp.is_real:
        return []
    s = chi.nu_exp.re
    half_n = Fraction(n, 2)
    matches = []
    for sign in (1, -1):
        k = _as_int(sign * s + half_n)
        if k is not None and 0 <= k <= r - 1:
            match = ConditionMatch(ConditionTag.I, k, sign)
            if all(m.k != k for m in matches):
                matches.append(match)
    return matches


def _condition_two(chi: Character, n: int, r: int) -> List[ConditionMatch]:
    # chi = eps^{k+1} nu^{±(k - r + n/2)}, k >= 1
    if not chi.nu_exp.is_real:
        return []
    s = chi.nu_exp.re
    matches = []
    for sign in (1, -1):
        k = _as_int(sign * s + r - Fraction(n, 2))
        if k is not None and k >= 1 and chi.sign_exp == (k + 1) % 2:
            if all(m.k != k for m in matches):
                matches.append(ConditionMatch(ConditionTag.II, k, sign))
    return matches


def _condition_three(chi: Character, n: int, r: int) -> List[ConditionMatch]:
    # r > 1, chi = eps^{0 or 1} nu^{±(k - r + n/2 + 1)}, k >= 1
    if r <= 1 or not chi.nu_exp.is_real:
        return []
    s = chi.nu_exp.re
    matches = []
    for sign in (1, -1):
        k = _as_int(sign * s + r - Fraction(n, 2) - 1)
        if k is not None and k >= 1 and all(m.k != k for m in matches):
            matches.append(ConditionMatch(ConditionTag.III, k, sign))
    return matches


def _condition_four(chi: Character, n: int, r: int) -> List[ConditionMatch]:
    # chi or chi^-1 = alpha^k nu^s with s - n/2 integral, s ± k > n/2 - r
    if not chi.nu_exp.is_real:
        return []
    bound = Fraction(n, 2) - r
    matches = []
    for sign in (1, -1):
        k = sign * chi.alpha_exp
        s = sign * chi.nu_exp.re
        if is_integer(s - Fraction(n, 2)) and s + k > bound and s - k > bound:
            matches.append(ConditionMatch(ConditionTag.IV, k, sign))
    return matches


def matched_conditions(field: FieldKind, n: int, p1: int, chi: Character) -> List[ConditionMatch]:
    """Every reducibility condition satisfied by chi x 1, in tag order."""
    r = check_domain(field, n, p1, chi)
    if chi.ramified:
        return []
    matches = _condition_one(chi, n, r)
    if chi.field is FieldKind.REAL:
        matches += _condition_two(chi, n, r) + _condition_three(chi, n, r)
    elif chi.field is FieldKind.COMPLEX:
        matches += _condition_four(chi, n, r)
    return matches


def is_reducible_closed(field: "FieldKind | str", n: int, p1: int, chi: Character) -> ReducibilityVerdict:
    """Decide reducibility of chi x 1 on GL_n(F) by the closed-form conditions.

    Args:
        field: The local field.
        n: Size of GL_n.
        p1: Size of the first Levi block; chi lives on GL_{p1}.
        chi: The inducing character, already normalized so that chi2 = 1.

    Returns:
        A verdict listing every matched condition with its witnesses.

    Example:
        >>> is_reducible_closed("R", 3, 1, parse_character("eps*nu^{5/2}", "R", 1)).reducible
        True
    """
    field = FieldKind.parse(field)
    matches = matched_conditions(field, n, p1, chi)
    notes: Tuple[str, ...] = ()
    if chi.ramified:
        logger.warning("%s on GL_%d: %s", chi, n, RAMIFIED_NOTE)
        notes = (RAMIFIED_NOTE,)
    logger.debug("closed form %s x 1 on GL_%d(%s): %s", chi, n, field.value, [m.tag.value for m in matches])
    return ReducibilityVerdict(bool(matches), Method.CLOSED_FORM, tuple(matches), notes=notes)


def _submodule_witness(field: FieldKind, n: int, p1: int, chi: Character, side: Side) -> Optional[FiniteDimWitness]:
    # chi here is already the character whose submodule is sought
    if chi.ramified or not chi.nu_exp.is_real:
        return None
    s = chi.nu_exp.re
    half_n = Fraction(n, 2)
    p2 = n - p1

    def psi() -> Character:
        # the one-dimensional constituent, a character of GL_n
        if side is Side.SUBMODULE:
            return nu_power(field, n, Fraction(-p2, 2))
        return nu_power(field, n, Fraction(p1, 2))

    if field is FieldKind.NON_ARCHIMEDEAN:
        if s == -half_n:
            return FiniteDimWitness(side, 0, None, psi())
        return None
    if field is FieldKind.REAL:
        k = _as_int(-s - half_n)
        if k is None or k < 0 or chi.sign_exp != k % 2:
            return None
        return FiniteDimWitness(side, k, None, psi() if k == 0 else None)
    # complex: chi = alpha^{(l-k)/2} nu^{-(k+l+n)/2}
    u = _as_int(-s - half_n)
    a = chi.alpha_exp
    if u is None or u < abs(a):
        return None
    k, l = u - a, u + a
    return FiniteDimWitness(side, k, l, psi() if k == l == 0 else None)


def finite_dim_submodule(field: "FieldKind | str", n: int, p1: int, chi: Character) -> Optional[FiniteDimWitness]:
    """The finite-dimensional submodule of chi x 1, if there is one.

    Real: chi = eps^k nu^{-k-n/2} with k >= 0. Complex: chi =
    alpha^{(l-k)/2} nu^{-(k+l+n)/2} with k, l >= 0 of equal parity.
    Non-archimedean: chi = nu^{-n/2} only.
    """
    field = FieldKind.parse(field)
    check_domain(field, n, p1, chi)
    return _submodule_witness(field, n, p1, chi, Side.SUBMODULE)


def finite_dim_quotient(field: "FieldKind | str", n: int, p1: int, chi: Character) -> Optional[FiniteDimWitness]:
    """Quotients of chi x 1 are the duals of submodules of chi^-1 x 1."""
    field = FieldKind.parse(field)
    check_domain(field, n, p1, chi)
    return _submodule_witness(field, n, p1, invert(chi), Side.QUOTIENT)


def length_upper_bound(field: "FieldKind | str", n: int, p1: int, chi: Character) -> int:
    """Upper bound on the length of chi x 1.

    Non-archimedean representations have length 1 or 2, exactly. Archimedean
    constituents have pairwise distinct ranks in {0, ..., r}.
    """
    field = FieldKind.parse(field)
    r = check_domain(field, n, p1, chi)
    if not is_reducible_closed(field, n, p1, chi).reducible:
        return 1
    return 2 if field is FieldKind.NON_ARCHIMEDEAN else r + 1
