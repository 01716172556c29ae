"""Laurent germs of Gamma/Beta expressions at a rational point alpha0.

A germ c (alpha - alpha0)^e + O((alpha - alpha0)^{e+1}) is stored as the pair
(e, c).  Orders are decided exactly from the integrality of Gamma arguments;
leading coefficients carry an exact rational factor wherever one is available.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

from scipy.special import gamma, rgamma

from characters.rational import RationalLike, is_integer, to_fraction

Number = Union[Fraction, float, complex]


@dataclass(frozen=True)
class MeroValue:
    """Germ of a meromorphic function of alpha at alpha0.

    Attributes:
        pole_order: Positive for a pole of that order, negative for a zero of
            that order, 0 for a finite non-zero value.  Ignored when
            ``exact_zero`` is set.
        leading: Leading Laurent coefficient (0 exactly when ``exact_zero``).
        exact_zero: The leading-order terms cancel exactly; at a finite point
            the value itself is zero.
    """

    pole_order: int
    leading: complex
    exact_zero: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "leading", complex(self.leading))
        if self.exact_zero:
            object.__setattr__(self, "leading", 0j)
        elif self.leading == 0:
            raise ValueError("a non-zero germ needs a non-zero leading coefficient")

    @property
    def laurent_exponent(self) -> Union[int, float]:
        """-pole_order, or +inf for an exact zero."""
        return float("inf") if self.exact_zero else -self.pole_order

    def value(self) -> complex:
        """Value at alpha0: 0 at zeros, inf at poles."""
        if self.exact_zero or self.pole_order < 0:
            return 0j
        if self.pole_order > 0:
            return complex(float("inf"), 0)
        return self.leading

    def to_json(self) -> dict:
        return {
            "pole_order": self.pole_order,
            "leading_re": self.leading.real,
            "leading_im": self.leading.imag,
            "exact_zero": self.exact_zero,
        }


@dataclass(frozen=True)
class Germ:
    """c (alpha - alpha0)^e; ``order`` is e (positive at zeros)."""

    order: int
    leading: Number

    def __mul__(self, other: "Germ") -> "Germ":
        return Germ(self.order + other.order, self.leading * other.leading)

    def inverse(self) -> "Germ":
        return Germ(-self.order, 1 / self.leading)


def linear_germ(slope: Fraction, alpha0: Fraction, offset: Fraction) -> Germ:
    """Germ of slope * alpha + offset at alpha0 (exact)."""
    at = slope * alpha0 + offset
    return Germ(1, slope) if at == 0 else Germ(0, at)


def _nonpositive_int(x: Fraction) -> bool:
    return is_integer(x) and x <= 0


def gamma_germ(x0: Fraction, slope: Fraction = Fraction(1, 2)) -> Germ:
    """Germ of Gamma(x) where x = x0 + slope (alpha - alpha0).

    At x0 = -N, Gamma(x) ~ (-1)^N / (N! (x - x0)), a simple pole in alpha.
    """
    if _nonpositive_int(x0):
        big_n = -x0.numerator
        return Germ(-1, Fraction((-1) ** big_n, factorial(big_n)) / slope)
    return Germ(0, float(gamma(float(x0))))


def rgamma_germ(x0: Fraction, slope: Fraction = Fraction(1, 2)) -> Germ:
    """Germ of 1/Gamma(x); at x0 = -M it is (-1)^M M! (x - x0), a simple zero."""
    if _nonpositive_int(x0):
        big_m = -x0.numerator
        return Germ(1, Fraction((-1) ** big_m * factorial(big_m)) * slope)
    return Germ(0, float(rgamma(float(x0))))


def beta_germ(x0: Fraction, b: Fraction) -> Germ:
    """Germ of B(x, b) = Gamma(x) Gamma(b) / Gamma(x + b), x = (alpha + 1 + 2j) / 2, b > 0 fixed."""
    return gamma_germ(x0) * Germ(0, float(gamma(float(b)))) * rgamma_germ(x0 + b)


def half_beta_mero(alpha0: RationalLike, j: int, n: int) -> MeroValue:
    """Germ at alpha0 of the integral over [-1, 1] of |t|^alpha t^{2j} (1 - t^2)^{(n-3)/2} dt.

    The integral equals B((alpha + 2j + 1) / 2, (n - 1) / 2) and is continued
    meromorphically through Gamma.  A pole of Gamma((alpha + 2j + 1)/2) gives
    a simple pole; a pole of Gamma((alpha + 2j + n)/2) in the denominator
    cancels it or produces a simple zero.

    Example:
        >>> half_beta_mero(-1, 0, 3).pole_order
        1
    """
    alpha0 = to_fraction(alpha0, "alpha0")
    germ = beta_germ((alpha0 + 2 * j + 1) / 2, Fraction(n - 1, 2))
    return MeroValue(-germ.order, complex(germ.leading))
