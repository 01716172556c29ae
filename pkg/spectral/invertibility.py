"""Spectral test of invertibility for the i = 1 cosine transform.

Near alpha0 every eigenvalue behaves like c_m (alpha - alpha0)^{e_m}.  With
k0 = min e_m, the normalized operator S_alpha0 acts on degree-2m harmonics by
the coefficient of (alpha - alpha0)^{k0}; it is invertible on the truncated
range when every row has e_m = k0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from characters.errors import DomainError, PreconditionError
from characters.rational import RationalLike, fraction_str, to_fraction
from spectral.eigenvalues import eigenvalue_mero
from spectral.exceptional import exceptional_clauses
from spectral.germs import MeroValue

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION = 40


@dataclass(frozen=True)
class SpectralTable:
    """Germs of lambda_{alpha,2m}(n) at alpha0 for 0 <= m <= M."""

    n: int
    alpha0: Fraction
    M: int
    rows: Dict[int, MeroValue]

    def k0(self) -> int:
        """Lowest Laurent exponent over the rows that are not exact zeros."""
        return min(-row.pole_order for row in self.rows.values() if not row.exact_zero)

    def s_eigenvalue(self, m: int) -> complex:
        """Eigenvalue of S_alpha0 on degree-2m harmonics: the (alpha - alpha0)^{k0} coefficient."""
        row = self.rows[m]
        if row.exact_zero or -row.pole_order != self.k0():
            return 0j
        return row.leading

    def csv_rows(self) -> List[dict]:
        return [{"m": m, **self.rows[m].to_json()} for m in sorted(self.rows)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha0": fraction_str(self.alpha0),
            "M": self.M,
            "k0": self.k0(),
            "rows": self.csv_rows(),
        }


def spectral_table(n: int, alpha0: RationalLike, M: int = DEFAULT_TRUNCATION) -> SpectralTable:
    if not isinstance(M, int) or M < 1:
        raise DomainError(f"truncation M must be a positive integer, got {M!r}")
    alpha0 = to_fraction(alpha0, "alpha0")
    return SpectralTable(n, alpha0, M, {m: eigenvalue_mero(n, alpha0, m) for m in range(M + 1)})


def spectral_invertibility(n: int, alpha0: RationalLike, M: int = DEFAULT_TRUNCATION) -> Tuple[bool, SpectralTable]:
    """Decide invertibility of S_alpha0 (i = 1) from the germs of its eigenvalues.

    Exact zeros count as order +inf, so any exact zero makes the operator
    singular; otherwise every row must share the lowest Laurent exponent.
    """
    table = spectral_table(n, alpha0, M)
    k0 = table.k0()
    invertible = all(not row.exact_zero and -row.pole_order == k0 for row in table.rows.values())
    logger.debug("spectral invertibility n=%d alpha0=%s M=%d: k0=%d, %s", n, table.alpha0, M, k0, invertible)
    return invertible, table


def inverse_scalar_check(n: int, alpha: RationalLike, M: int = 10) -> Tuple[float, List[float]]:
    """Check that S_alpha S_{-n-alpha} is a scalar on the i = 1 spectrum.

    Returns:
        The maximal relative deviation max_m |p_m / p_0 - 1| of the products
        p_m = lambda_{alpha,2m} lambda_{-n-alpha,2m}, and the products.

    Raises:
        PreconditionError: if alpha or -n - alpha is exceptional, or a germ
            is not a finite non-zero value.
    """
    alpha = to_fraction(alpha, "alpha")
    dual = -n - alpha
    for point in (alpha, dual):
        if exceptional_clauses(n, 1, point):
            raise PreconditionError(f"alpha = {point} is exceptional for n = {n}, i = 1")
    products = []
    for m in range(M + 1):
        a, b = eigenvalue_mero(n, alpha, m), eigenvalue_mero(n, dual, m)
        if a.exact_zero or b.exact_zero or a.pole_order or b.pole_order:
            raise PreconditionError(f"eigenvalue germ at m = {m} is not a finite non-zero value")
        products.append((a.leading * b.leading).real)
    deviation = max(abs(p / products[0] - 1.0) for p in products)
    return deviation, products
