"""Independent quadrature oracle for the i = 1 eigenvalues on the convergence half-line alpha > -1."""

import logging
from typing import Callable

import numpy as np
from scipy.special import beta, eval_gegenbauer

from characters.errors import DomainError

logger = logging.getLogger(__name__)

ROUNDOFF = 64 * np.finfo(float).eps


class GaussLegendreQuadrature:
    """Adaptive Gauss-Legendre integration by interval bisection.

    Attributes:
        order: Nodes per panel.
        tol: Absolute tolerance for the whole integral.
        max_depth: Bisection depth after which the integral is declared unresolved.
    """

    def __init__(self, order: int = 20, tol: float = 1e-12, max_depth: int = 40) -> None:
        self.order = order
        self.tol = tol
        self.max_depth = max_depth
        self.nodes, self.weights = np.polynomial.legendre.leggauss(order)

    def panel(self, fun: Callable[[np.ndarray], np.ndarray], lo: float, hi: float) -> float:
        mid = 0.5 * (hi + lo)
        half = 0.5 * (hi - lo)
        return float(half * np.sum(self.weights * fun(mid + half * self.nodes)))

    def integrate(self, fun: Callable[[np.ndarray], np.ndarray], lo: float, hi: float) -> float:
        """Integrate a vectorized ``fun`` over [lo, hi]."""
        return self._adapt(fun, lo, hi, self.panel(fun, lo, hi), self.tol, 0)

    def _adapt(self, fun, lo: float, hi: float, whole: float, tol: float, depth: int) -> float:
        mid = 0.5 * (lo + hi)
        left = self.panel(fun, lo, mid)
        right = self.panel(fun, mid, hi)
        if abs(left + right - whole) <= max(tol, ROUNDOFF * abs(left + right)):
            return left + right
        if depth >= self.max_depth:
            raise DomainError(f"quadrature did not converge on [{lo}, {hi}]")
        return self._adapt(fun, lo, mid, left, tol / 2, depth + 1) + self._adapt(
            fun, mid, hi, right, tol / 2, depth + 1
        )


def eigenvalue_quadrature(n: int, alpha: float, m: int, tol: float = 1e-12) -> float:
    """lambda_{alpha,2m}(n) for real alpha > -1 by direct integration.

    The even integrand is folded onto [0, 1] and split at 1/2.  Near 0 the
    substitution t = u^{2/(1+alpha)} removes the |t|^alpha singularity; near 1
    the substitution t = sin(theta) removes the (1 - t^2)^{(n-3)/2} one.
    """
    if not isinstance(n, int) or n < 3:
        raise DomainError(f"the spherical model needs n >= 3, got {n!r}")
    alpha = float(alpha)
    if alpha <= -1:
        raise DomainError(f"the eigenvalue integral diverges at alpha = {alpha} <= -1")
    lam = (n - 2) / 2
    degree = 2 * m
    at_one = eval_gegenbauer(degree, lam, 1.0)
    quad = GaussLegendreQuadrature(tol=tol)

    q = 2.0 / (1.0 + alpha)

    def near_zero(u: np.ndarray) -> np.ndarray:
        # t = u^q, t^alpha dt = q u^{q(1+alpha)-1} du = q u du
        t = u ** q
        return q * u * eval_gegenbauer(degree, lam, t) / at_one * (1.0 - t * t) ** ((n - 3) / 2)

    def near_one(theta: np.ndarray) -> np.ndarray:
        t = np.sin(theta)
        return t ** alpha * eval_gegenbauer(degree, lam, t) / at_one * np.cos(theta) ** (n - 2)

    u_half = 0.5 ** (1.0 / q)
    total = quad.integrate(near_zero, 0.0, u_half) + quad.integrate(near_one, np.pi / 6, np.pi / 2)
    value = 2.0 * total / (beta(0.5, (n - 1) / 2))
    logger.debug("quadrature lambda(n=%d, alpha=%s, m=%d) = %.15g", n, alpha, m, value)
    return float(value)
