"""Exact Student t-density convolution weights and the Boros-Moll quartic integral."""

from .basis import basis_poly, decompose_in_basis
from .errors import DomainError
from .moll import (
    QuarticIntegralSpec,
    closed_form_value,
    d_classical,
    d_derived,
    moll_polynomial,
    quartic_integrand,
)
from .quadrature import (
    QuadratureConfig,
    QuadratureResult,
    convolution_lhs,
    integrate_half_line,
    integrate_real_line,
)
from .rational import RationalPolynomial, binomial, factorial, pochhammer, pochhammer_half
from .student import (
    BetaTable,
    StudentDensity,
    apply_symmetry,
    beta_equal_orders,
    beta_general,
    beta_half,
    check_recursion,
    density_value,
)

__version__ = "0.1.0"
