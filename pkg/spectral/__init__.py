from spectral.eigenvalues import eigenvalue_float, eigenvalue_mero, product_formula_mero
from spectral.exceptional import (
    InvertibilityReport,
    exceptional_alphas,
    exceptional_clauses,
    invertibility_crosscheck,
    s_alpha_invertible,
)
from spectral.gegenbauer import gegenbauer_at_one, gegenbauer_even_coeffs
from spectral.germs import MeroValue, half_beta_mero
from spectral.invertibility import SpectralTable, inverse_scalar_check, spectral_invertibility, spectral_table
from spectral.quadrature import GaussLegendreQuadrature, eigenvalue_quadrature
