"""Exact Gegenbauer polynomials C_k^{(lam)} with lam = (n - 2) / 2.

Built from the three-term recurrence

    (k + 1) C_{k+1} = 2 (k + lam) t C_k - (k + 2 lam - 1) C_{k-1}

on ``Fraction`` coefficient lists (index = power of t).  For n = 3 these are
the Legendre polynomials.
"""

from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from characters.errors import DomainError


def _lam(n: int) -> Fraction:
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"Gegenbauer parameter needs n >= 3, got {n!r}")
    return Fraction(n - 2, 2)


@lru_cache(maxsize=None)
def _coeffs(n: int, degree: int) -> Tuple[Fraction, ...]:
    lam = _lam(n)
    prev: List[Fraction] = [Fraction(1)]
    if degree == 0:
        return tuple(prev)
    cur: List[Fraction] = [Fraction(0), 2 * lam]
    for k in range(1, degree):
        nxt = [Fraction(0)] * (k + 2)
        for power, c in enumerate(cur):
            nxt[power + 1] += 2 * (k + lam) * c
        for power, c in enumerate(prev):
            nxt[power] -= (k + 2 * lam - 1) * c
        prev, cur = cur, [c / (k + 1) for c in nxt]
    return tuple(cur)


def gegenbauer_coeffs(n: int, degree: int) -> List[Fraction]:
    """Monomial coefficients c_0..c_degree of C_degree^{((n-2)/2)}."""
    if degree < 0:
        raise DomainError(f"degree must be non-negative, got {degree}")
    return list(_coeffs(n, degree))


def gegenbauer_even_coeffs(n: int, m: int) -> List[Fraction]:
    """Coefficients c_0, ..., c_{2m} of the even polynomial C_{2m}; odd entries are 0.

    Example:
        >>> [str(c) for c in gegenbauer_even_coeffs(3, 1)]
        ['-1/2', '0', '3/2']
    """
    return gegenbauer_coeffs(n, 2 * m)


def gegenbauer_at_one(n: int, degree: int) -> Fraction:
    """C_degree(1), the normalization making the eigenvalue at alpha = 0 equal 1."""
    return sum(_coeffs(n, degree), Fraction(0))
