"""Generalized q-orthogonal polynomials of Sobolev type.

A numerical library for two extended basic-hypergeometric families (little
q-Jacobi and q-Laguerre type) and their special cases: series evaluation
and coefficient extraction, q-difference operators and Jackson integrals,
four-term recurrence coefficients in closed form, zero computation through
a generalized eigenvalue pencil and through Aberth-Ehrlich iteration,
orthogonality and q-difference-equation verification, and q -> 1 limit
studies.
"""

from .errors import (AdmissibilityError, ConvergenceError, DivergenceError, DomainError,
                     NotAPolynomialError, PairingError, PencilSingularError, PivotError,
                     QOrthoError, TruncationError)
from .families import Family, Params, coeffs, eval, make_spec
from .hyper import PhiParam, PhiSpec, Polynomial, pFq_coeffs, pFq_eval, phi_coeffs, phi_eval, phi_term_ratio
from .qcalc import delta_b, dq_fn, dq_poly, jackson_01, jackson_0inf, sobolev_op, sobolev_op_expanded
from .qcore import (Tolerances, q_beta, q_binomial, q_gamma, q_number, q_pochhammer,
                    q_pochhammer_inf, q_power, rising_factorial)
from .recurrence import FourTermCoeffs, eval_by_recurrence, mu_jacobi, mu_laguerre, recurrence_residual
from .zeros import (Pencil, ZeroSet, aberth_roots, build_pencil, classify_real, compute_zeros,
                    interlace_check, pencil_eigenvalues)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError", "ConvergenceError", "DivergenceError", "DomainError",
    "NotAPolynomialError", "PairingError", "PencilSingularError", "PivotError",
    "QOrthoError", "TruncationError",
    "Family", "Params", "coeffs", "eval", "make_spec",
    "PhiParam", "PhiSpec", "Polynomial", "pFq_coeffs", "pFq_eval", "phi_coeffs",
    "phi_eval", "phi_term_ratio",
    "delta_b", "dq_fn", "dq_poly", "jackson_01", "jackson_0inf", "sobolev_op",
    "sobolev_op_expanded",
    "Tolerances", "q_beta", "q_binomial", "q_gamma", "q_number", "q_pochhammer",
    "q_pochhammer_inf", "q_power", "rising_factorial",
    "FourTermCoeffs", "eval_by_recurrence", "mu_jacobi", "mu_laguerre", "recurrence_residual",
    "Pencil", "ZeroSet", "aberth_roots", "build_pencil", "classify_real", "compute_zeros",
    "interlace_check", "pencil_eigenvalues",
    "__version__",
]
