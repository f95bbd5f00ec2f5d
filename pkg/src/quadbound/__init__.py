"""Gauss rules, error kernels and error bounds for induced Chebyshev measures."""
from .bounds import (BoundResult, bound_r1, bound_r2, bound_r3, find_rho_star, l1_integral_numeric,
                     max_kernel_modulus)
from .functions import TestFunction, chebyshev_coefficient, f0, f1, sup_norm
from .gauss import (GaussRule, RecurrenceCoeffs, actual_error, apply_rule, gauss_rule, recurrence_coeffs,
                    reference_integral, remainder_series)
from .geometry import (EllipseParam, cheb_eval, ellipse_length_upper, ellipse_point, inverse_joukowski,
                       joukowski)
from .kernels import KernelValue, kernel_closed, kernel_oracle, varrho_closed
from .measures import (CaseId, induced_poly_case_I, induced_poly_diag, induced_weight_value, modified_moment,
                       weight_value)

__all__ = [name for name in dir() if not name.startswith("_")]
