"""Eigenvalues of the i = 1 cosine transform on even spherical harmonics.

On harmonics of degree 2m in R^n the transform acts by

    lambda_{alpha,2m} = sum_j c_{2j} B(x + j, b) / (C_{2m}(1) B(1/2, b)),

x = (alpha + 1) / 2, b = (n - 1) / 2, with c_{2j} the monomial coefficients
of the Gegenbauer polynomial C_{2m}^{((n-2)/2)}.  Writing
B(x + j, b) = B(x, b) (x)_j / (x + b)_j reduces every summand to one common
Beta germ times an exact rational germ, so cancellations are decided exactly.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from scipy.special import beta, gamma

from characters.errors import DomainError
from characters.rational import RationalLike, to_fraction
from spectral.gegenbauer import gegenbauer_at_one, gegenbauer_even_coeffs
from spectral.germs import Germ, MeroValue, beta_germ, linear_germ

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"the spherical model needs n >= 3, got {n!r}")


def _pochhammer_ratio_germs(n: int, alpha0: Fraction, m: int) -> List[Germ]:
    """Exact germs of (x)_j / (x + b)_j for j = 0..m."""
    germs = [Germ(0, Fraction(1))]
    for i in range(m):
        up = linear_germ(HALF, alpha0, Fraction(1 + 2 * i, 2))
        down = linear_germ(HALF, alpha0, Fraction(n + 2 * i, 2))
        germs.append(germs[-1] * up * down.inverse())
    return germs


def _normalizer(n: int, m: int) -> float:
    return float(gegenbauer_at_one(n, 2 * m)) * float(beta(0.5, (n - 1) / 2))


@lru_cache(maxsize=16384)
def _eigenvalue_mero(n: int, alpha0: Fraction, m: int) -> MeroValue:
    coeffs = gegenbauer_even_coeffs(n, m)
    ratios = _pochhammer_ratio_germs(n, alpha0, m)
    terms: List[Tuple[Fraction, Germ]] = [
        (coeffs[2 * j], ratios[j]) for j in range(m + 1) if coeffs[2 * j] != 0
    ]
    lowest = min(g.order for _, g in terms)
    exact_sum = sum((c * g.leading for c, g in terms if g.order == lowest), Fraction(0))
    if exact_sum == 0:
        return MeroValue(0, 0, exact_zero=True)
    b_germ = beta_germ((alpha0 + 1) / 2, Fraction(n - 1, 2))
    order = b_germ.order + lowest
    leading = float(b_germ.leading) * float(exact_sum) / _normalizer(n, m)
    return MeroValue(-order, leading)


def eigenvalue_mero(n: int, alpha0: RationalLike, m: int) -> MeroValue:
    """Laurent germ of lambda_{alpha,2m}(n) at alpha = alpha0.

    Args:
        n: Ambient dimension, n >= 3.
        alpha0: Exact rational point of expansion.
        m: Half-degree of the harmonic.

    Returns:
        The germ; ``exact_zero`` marks an exact cancellation of the
        leading-order sum (for alpha0 = 2k this happens for every m > k).
    """
    _check_n(n)
    if m < 0:
        raise DomainError(f"harmonic half-degree must be non-negative, got {m}")
    return _eigenvalue_mero(n, to_fraction(alpha0, "alpha0"), m)


def product_formula_mero(n: int, alpha0: RationalLike, m: int) -> MeroValue:
    """The same eigenvalue from the closed product

        lambda_{alpha,2m} = lambda_{alpha,0} prod_{k<m} (alpha - 2k) / (alpha + n + 2k),
        lambda_{alpha,0} = Gamma(n/2) Gamma((alpha+1)/2) / (sqrt(pi) Gamma((alpha+n)/2)).

    Unlike ``eigenvalue_mero`` it reports the true order of vanishing at the
    points where the leading sum cancels.
    """
    _check_n(n)
    alpha0 = to_fraction(alpha0, "alpha0")
    germ = beta_germ((alpha0 + 1) / 2, Fraction(n - 1, 2)) * Germ(0, 1 / float(beta(0.5, (n - 1) / 2)))
    for k in range(m):
        germ = germ * linear_germ(Fraction(1), alpha0, Fraction(-2 * k))
        germ = germ * linear_germ(Fraction(1), alpha0, Fraction(n + 2 * k)).inverse()
    return MeroValue(-germ.order, complex(germ.leading))


def eigenvalue_float(n: int, alpha: float, m: int) -> float:
    """lambda_{alpha,2m}(n) at a real alpha away from poles, from the product formula."""
    _check_n(n)
    value = gamma(n / 2) * gamma((alpha + 1) / 2) / (math.sqrt(math.pi) * gamma((alpha + n) / 2))
    for k in range(m):
        value *= (alpha - 2 * k) / (alpha + n + 2 * k)
    return float(value)
