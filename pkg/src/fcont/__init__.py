"""Fourier continuation approximation on equispaced grids.

Non-periodic samples on [0, 1] are continued to a periodic function on
[-1, 1] with a two-point Hermite polynomial built from one-sided
finite-difference boundary derivatives; the truncated Fourier series of the
continuation then converges uniformly at rate min(p, r) + 1 instead of
suffering Gibbs oscillations.
"""

from .analysis import (ConvergenceRecord, TestFunction, builtin_catalog,
                       convergence_study, decay_rate, emit_table,
                       empirical_order, exact_boundary_matrix, fitted_order,
                       get_function, relative_error)
from .hermite import (R_MAX, BoundaryDataMatrix, ContinuationSpec,
                      HermiteBasisSet, binomial, combine_coefficients,
                      eval_continuation, eval_continuation_derivative,
                      eval_continuation_factored, factored_coefficients,
                      hermite_basis, operator_norm_bound, s_exactness,
                      verify_binomial_identity)
from .pipeline import (FcApproximant, PiecewisePolyContinuation,
                       continuation_ppoly, continuous_coefficient_ppoly,
                       discrete_continuation, evaluate, evaluate_dense,
                       extend_with_matrix, fc_approximate,
                       fc_approximate_with_matrix)
from .spectral import (TrigCoefficients, dft_forward, eval_series,
                       naive_dft_forward, resample)
from .stencils import Stencil, StencilSpec, boundary_derivatives, make_stencil

__version__ = "0.1.0"
