"""Maurer-Cartan data in the eight-angle chart.

For each coordinate x_j the derivative of the chart product D is an exactly
computable conjugated-generator sandwich,

    dD/dx_j = P_j (i l_{g_j}) P_j^dag D,          P_j = product of the
                                                  factors left of factor j,

so the coefficient matrix b of ``dD/dx_j = i b[k, j] l_k D`` follows from
trace projection with no series expansion and no finite differences.  The
right-handed analog uses suffix products:  ``D^dag dD/dx_j = i c[k, j] l_k``.

Everything else is linear algebra on b and c:

* left invariant vector fields   ``Lambda_i = i A[i, j] d_j``  with
  ``A = (b^T)^{-1}``, satisfying ``Lambda_i D = -l_i D``;
* right fields from c the same way, satisfying ``Lambda^r_i D = -D l_i``;
* invariant one-forms ``omega^l = -i b[l, k] dx^k`` (dual to the fields);
* the Haar density from |det b|.

Rows of every 8x8 matrix here are algebra indices (1..8), columns are chart
coordinates in the order (alpha, beta, gamma, theta, a, b, c, phi).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import closed_forms
from .algebra import LAMBDA, expand_hermitian
from .group import ANGLE_NAMES, FACTOR_GENERATORS, _angles_array, exp_generator

# |det(left_coeffs)| equals this constant times
# sin(2 beta) sin(2 b) sin(2 theta) sin^2(theta) at every chart point.
DENSITY_DET_RATIO = 0.5


class DegenerateChartError(ValueError):
    """Raised when fields/forms are requested on a degenerate stratum."""


def left_coeffs(angles) -> np.ndarray:
    """Exact coefficient matrix b with ``dD/dx_j = i b[k, j] l_k D``."""
    p = _angles_array(angles)
    b = np.empty((8, 8))
    prefix = np.eye(3, dtype=complex)
    for j in range(8):
        gen = LAMBDA[FACTOR_GENERATORS[j] - 1]
        b[:, j] = expand_hermitian(prefix @ gen @ prefix.conj().T)
        prefix = prefix @ exp_generator(FACTOR_GENERATORS[j], p[j])
    return b


def right_coeffs(angles) -> np.ndarray:
    """Exact coefficient matrix c with ``D^dag dD/dx_j = i c[k, j] l_k``."""
    p = _angles_array(angles)
    c = np.empty((8, 8))
    suffix = np.eye(3, dtype=complex)
    for j in range(7, -1, -1):
        suffix = exp_generator(FACTOR_GENERATORS[j], p[j]) @ suffix
        gen = LAMBDA[FACTOR_GENERATORS[j] - 1]
        c[:, j] = expand_hermitian(suffix.conj().T @ gen @ suffix)
    return c


def _check_nondegenerate(angles) -> None:
    p = _angles_array(angles)
    factors = {
        "sin(2 beta)": np.sin(2 * p[1]),
        "sin(2 theta)": np.sin(2 * p[3]),
        "sin(theta)": np.sin(p[3]),
        "sin(2 b)": np.sin(2 * p[5]),
    }
    for name, value in factors.items():
        if abs(value) < 1e-13:
            raise DegenerateChartError(
                f"chart is degenerate here: Haar density factor {name} vanishes")


def left_fields(angles) -> np.ndarray:
    """Coefficients A of the left invariant fields, Lambda_i = i A[i, j] d_j.

    Raises
    ------
    DegenerateChartError
        On strata where the Haar density vanishes and b is singular.
    """
    _check_nondegenerate(angles)
    return np.linalg.inv(left_coeffs(angles).T)


def right_fields(angles) -> np.ndarray:
    """Coefficients of the right invariant fields, Lambda^r_i = i A[i, j] d_j."""
    _check_nondegenerate(angles)
    return np.linalg.inv(right_coeffs(angles).T)


def left_forms(angles) -> np.ndarray:
    """Coefficients B of the left invariant forms, omega^l = -i B[l, k] dx^k.

    Dual to :func:`left_fields` by construction: ``B @ A.T = identity``.
    """
    _check_nondegenerate(angles)
    return left_coeffs(angles)


def right_forms(angles) -> np.ndarray:
    """Coefficients of the right invariant forms, omega^l_r = -i C[l, k] dx^k."""
    _check_nondegenerate(angles)
    return right_coeffs(angles)


@dataclass(frozen=True)
class FrameAtPoint:
    """All four coefficient matrices of the invariant (co)frame at one point."""

    point: np.ndarray
    b_left: np.ndarray
    a_left: np.ndarray
    b_right: np.ndarray
    a_right: np.ndarray


def frame(angles) -> FrameAtPoint:
    p = _angles_array(angles)
    b = left_coeffs(p)
    c = right_coeffs(p)
    _check_nondegenerate(p)
    return FrameAtPoint(point=p, b_left=b, a_left=np.linalg.inv(b.T),
                        b_right=c, a_right=np.linalg.inv(c.T))


def save_coeff_csv(matrix: np.ndarray, path_or_file) -> None:
    """Write an 8x8 coefficient matrix as CSV.

    Rows are algebra indices 1..8, columns the chart coordinates in their
    standard order; the header row carries the coordinate names.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (8, 8):
        raise ValueError("expected an 8x8 coefficient matrix")
    if hasattr(path_or_file, "write"):
        fh = path_or_file
        fh.write(",".join(ANGLE_NAMES) + "\n")
        for row in matrix:
            fh.write(",".join(f"{x:.17g}" for x in row) + "\n")
    else:
        with open(path_or_file, "w", encoding="utf-8") as fh:
            save_coeff_csv(matrix, fh)


def haar_density(angles) -> float:
    """Unnormalized Haar density |det b| / (global constant).

    Normalized so that the value equals
    ``sin(2 beta) sin(2 b) sin(2 theta) sin^2(theta)`` -- the determinant
    route is primary, the closed form serves as its cross-check.
    """
    return float(abs(np.linalg.det(left_coeffs(angles))) / DENSITY_DET_RATIO)


def haar_density_closed(angles) -> float:
    """Closed-form Haar density sin(2 beta) sin(2 b) sin(2 theta) sin^2(theta)."""
    p = _angles_array(angles)
    return float(np.sin(2 * p[1]) * np.sin(2 * p[5]) * np.sin(2 * p[3]) * np.sin(p[3]) ** 2)


@dataclass(frozen=True)
class ClosedFormComparison:
    """Tabulated closed forms evaluated at sample points, vs the exact frame.

    ``deviations[table]`` holds the max absolute entrywise deviation over the
    sample points for each of the four tables (rows = algebra index, columns
    = chart coordinate).  ``catalogue`` lists the entries whose deviation
    exceeded the tolerance, as (table, 1-based row, coordinate-name) triples.
    """

    points: np.ndarray
    deviations: dict
    catalogue: frozenset
    tolerance: float

    def matches_documented_catalogue(self) -> bool:
        return self.catalogue == closed_forms.KNOWN_DEVIATIONS

    def report_rows(self):
        """Flat (table, row, coordinate, max_deviation) rows, deviants first."""
        rows = []
        for table, dev in self.deviations.items():
            for r in range(8):
                for k in range(8):
                    rows.append((table, r + 1, ANGLE_NAMES[k], float(dev[r, k])))
        rows.sort(key=lambda row: -row[3])
        return rows


_TABLES = {
    "fields_left": (closed_forms.fields_left, lambda p: 1j * left_fields(p)),
    "fields_right": (closed_forms.fields_right, lambda p: 1j * right_fields(p)),
    "forms_left": (closed_forms.forms_left, lambda p: -1j * left_coeffs(p)),
    "forms_right": (closed_forms.forms_right, lambda p: -1j * right_coeffs(p)),
}


def closed_form_comparison(points=None, seed: int = 0, n_points: int = 32,
                           tolerance: float = 1e-9) -> ClosedFormComparison:
    """Evaluate the tabulated closed forms against the exact construction.

    Parameters
    ----------
    points : (n, 8) array_like, optional
        Evaluation points; all must avoid the degenerate strata.  When
        omitted, ``n_points`` points are drawn from the chart interior
        using ``seed``.
    tolerance : float
        Deviation threshold for catalogue membership.  Agreeing entries
        stay below 1e-10; the known deviant entries are O(0.1 .. 5).

    Returns
    -------
    ClosedFormComparison
    """
    if points is None:
        rng = np.random.default_rng(seed)
        points = rng.uniform(0.15, 1.35, size=(n_points, 8))
    points = np.atleast_2d(np.asarray(points, dtype=float))
    deviations = {name: np.zeros((8, 8)) for name in _TABLES}
    for p in points:
        for name, (tabulated, exact) in _TABLES.items():
            dev = np.abs(tabulated(p) - exact(p))
            np.maximum(deviations[name], dev, out=deviations[name])
    catalogue = frozenset(
        (name, r + 1, ANGLE_NAMES[k])
        for name, dev in deviations.items()
        for r in range(8) for k in range(8)
        if dev[r, k] > tolerance)
    return ClosedFormComparison(points=points, deviations=deviations,
                                catalogue=catalogue, tolerance=tolerance)
