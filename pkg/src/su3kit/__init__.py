"""Euler-coordinate differential geometry on SU(3).

Group composition and decomposition in the eight-angle chart, exact
Maurer-Cartan data (invariant vector fields, one-forms, Haar density),
normalized Haar sampling and Monte Carlo integration, three-level pure-state
density matrices, and geometric phases of closed state loops.
"""

from .algebra import (C_TENSOR, D_TENSOR, LAMBDA, expand, expand_hermitian,
                      from_coefficients, star)
from .cartan import (DegenerateChartError, FrameAtPoint, closed_form_comparison,
                     frame, haar_density, haar_density_closed, left_coeffs,
                     left_fields, left_forms, right_coeffs, right_fields,
                     right_forms)
from .group import (ANGLE_NAMES, EulerAngles, adjoint, compose, compose_batch,
                    decompose, exp_generator, random_su3)
from .measure import (IntegrationResult, integrate, orthogonality_suite,
                      sample_haar, total_volume)
from .phase import (LoopSpec, connection, curvature, phase_connection,
                    phase_curvature, phase_pancharatnam)
from .states import DensityState, base_state, project, psi_of

__version__ = "0.1.0"

__all__ = [
    "ANGLE_NAMES", "C_TENSOR", "D_TENSOR", "DegenerateChartError",
    "DensityState", "EulerAngles", "FrameAtPoint", "IntegrationResult",
    "LAMBDA", "LoopSpec", "adjoint", "base_state", "closed_form_comparison",
    "compose", "compose_batch", "connection", "curvature", "decompose",
    "exp_generator", "expand", "expand_hermitian", "frame",
    "from_coefficients", "haar_density", "haar_density_closed", "integrate",
    "left_coeffs", "left_fields", "left_forms", "orthogonality_suite",
    "phase_connection", "phase_curvature", "phase_pancharatnam", "project",
    "psi_of", "random_su3", "right_coeffs", "right_fields", "right_forms",
    "sample_haar", "star", "total_volume",
]
