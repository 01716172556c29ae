"""Exceptional exponents: the alpha at which the normalized cosine transform
S_alpha on Gr_i(R^n) fails to be invertible.

With r = min(i, n - i) and k a non-negative integer, alpha is exceptional when

    (a) alpha = 2k,
    (b) alpha = -n - 2k,
    (c) r > 1 and alpha = 1 - r + k,
    (d) r > 1 and alpha = r - n - 1 - k.

S_alpha is the standard intertwining operator of nu^{(n-i)/2} x nu^{-alpha-i/2};
twisting, it is invertible exactly when nu^{alpha+n/2} x 1 on GL_n(R), with
the character on GL_i, is irreducible.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import List, Set, Tuple

from characters.character import nu_power
from characters.errors import DomainError
from characters.field import FieldKind
from characters.rational import RationalLike, is_integer, to_fraction
from reducibility.criteria import is_reducible_closed

logger = logging.getLogger(__name__)


def _rank(n: int, i: int) -> int:
    if not isinstance(n, int) or not isinstance(i, int) or not 1 <= i <= n - 1:
        raise DomainError(f"need 1 <= i <= n - 1, got n = {n!r}, i = {i!r}")
    return min(i, n - i)


def exceptional_clauses(n: int, i: int, alpha0: RationalLike) -> List[Tuple[str, int]]:
    """Every clause (a)-(d) matched by alpha0, with its k."""
    r = _rank(n, i)
    alpha0 = to_fraction(alpha0, "alpha0")
    if not is_integer(alpha0):
        return []
    a = alpha0.numerator
    hits = []
    if a >= 0 and a % 2 == 0:
        hits.append(("a", a // 2))
    if -n - a >= 0 and (-n - a) % 2 == 0:
        hits.append(("b", (-n - a) // 2))
    if r > 1 and a - (1 - r) >= 0:
        hits.append(("c", a - (1 - r)))
    if r > 1 and (r - n - 1) - a >= 0:
        hits.append(("d", (r - n - 1) - a))
    return hits


def exceptional_alphas(n: int, i: int, lo: RationalLike, hi: RationalLike) -> Set[Fraction]:
    """All exceptional alpha in [lo, hi]; every one of them is an integer.

    Example:
        >>> sorted(int(a) for a in exceptional_alphas(4, 1, -10, 6))
        [-10, -8, -6, -4, 0, 2, 4, 6]
    """
    _rank(n, i)
    lo, hi = to_fraction(lo, "lo"), to_fraction(hi, "hi")
    if lo > hi:
        raise DomainError(f"empty range [{lo}, {hi}]")
    return {Fraction(a) for a in range(ceil(lo), floor(hi) + 1) if exceptional_clauses(n, i, a)}


@dataclass(frozen=True)
class InvertibilityReport:
    """Invertibility of S_alpha0 on Gr_i(R^n), with its translation cross-check.

    Attributes:
        invertible: No clause (a)-(d) matches.
        clauses: Matched clauses with their k.
        translated_reducible: Closed-form reducibility of nu^{alpha0+n/2} x 1.
        consistent: invertible == not translated_reducible.
    """

    n: int
    i: int
    alpha0: Fraction
    invertible: bool
    clauses: Tuple[Tuple[str, int], ...]
    translated_reducible: bool
    consistent: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "i": self.i,
            "alpha0": f"{self.alpha0.numerator}/{self.alpha0.denominator}",
            "invertible": self.invertible,
            "clauses": [{"clause": c, "k": k} for c, k in self.clauses],
            "translated_reducible": self.translated_reducible,
            "consistent": self.consistent,
        }


def invertibility_crosscheck(n: int, i: int, alpha0: RationalLike) -> InvertibilityReport:
    """Decide invertibility of S_alpha0 and compare with the reducibility criterion."""
    _rank(n, i)
    alpha0 = to_fraction(alpha0, "alpha0")
    clauses = tuple(exceptional_clauses(n, i, alpha0))
    chi = nu_power(FieldKind.REAL, i, alpha0 + Fraction(n, 2))
    reducible = is_reducible_closed(FieldKind.REAL, n, i, chi).reducible
    invertible = not clauses
    consistent = invertible != reducible
    if not consistent:
        logger.warning(
            "consistency alarm: S_alpha at n=%d i=%d alpha=%s is %s but %s x 1 is %s",
            n, i, alpha0, "invertible" if invertible else "singular", chi, "reducible" if reducible else "irreducible",
        )
    return InvertibilityReport(n, i, alpha0, invertible, clauses, reducible, consistent)


def s_alpha_invertible(n: int, i: int, alpha0: RationalLike) -> bool:
    """True iff alpha0 matches none of the exceptional clauses."""
    return invertibility_crosscheck(n, i, alpha0).invertible
