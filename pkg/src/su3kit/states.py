"""Pure-state density matrices of three-level systems.

A pure state is ``rho = (1/3)(1 + sqrt(3) n . lambda)`` with an eight-real
coherence vector n obeying ``n.n = 1`` and ``star(n, n) = n``.  Conjugating
the base projector ``rho_0 = diag(0, 0, 1)`` by a group element reaches every
pure state; the map factors through the coset of the block-U(2) stabilizer
spanned by the (a, b, c, phi) angles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import IDENTITY3, LAMBDA, SQRT3, expand_hermitian, star
from .group import _angles_array, compose


@dataclass(frozen=True)
class DensityState:
    """A pure three-level state: 3x3 density matrix plus coherence vector."""

    rho: np.ndarray
    n: np.ndarray

    def to_json_dict(self) -> dict:
        """JSON-ready form: the matrix in re/im blocks plus the n vector."""
        return {"rho": {"re": self.rho.real.tolist(), "im": self.rho.imag.tolist()},
                "n": self.n.tolist()}

    def constraint_residuals(self) -> dict:
        """Residuals of the pure-state constraints (all should be ~0)."""
        rho, n = self.rho, self.n
        return {
            "hermiticity": float(np.abs(rho - rho.conj().T).max()),
            "trace": float(abs(np.trace(rho) - 1.0)),
            "idempotency": float(np.abs(rho @ rho - rho).max()),
            "unit_norm": float(abs(n @ n - 1.0)),
            "star_identity": float(np.abs(star(n, n) - n).max()),
            "reconstruction": float(np.abs(
                (IDENTITY3 + SQRT3 * np.einsum('k,kab->ab', n, LAMBDA)) / 3.0
                - rho).max()),
        }


def base_state() -> DensityState:
    """The reference projector diag(0, 0, 1), with n along -lambda_8."""
    n = np.zeros(8)
    n[7] = -1.0
    return DensityState(rho=np.diag([0.0, 0.0, 1.0]).astype(complex), n=n)


def project(g: np.ndarray) -> DensityState:
    """Conjugate the base projector: rho = g rho_0 g^dag.

    The coherence vector is extracted by basis expansion of
    ``(3 rho - 1)/sqrt(3)``; equivalently it is minus the eighth row of
    :func:`su3kit.group.adjoint` (both are asserted equal in the tests).
    """
    g = np.asarray(g, dtype=complex)
    rho = g @ base_state().rho @ g.conj().T
    n = expand_hermitian((3.0 * rho - IDENTITY3) / SQRT3)
    return DensityState(rho=rho, n=n)


def psi_of(angles) -> np.ndarray:
    """State vector of a chart point: the third column of compose(angles).

    Satisfies ``psi psi^dag = project(compose(angles)).rho`` and
    ``n_i = (sqrt(3)/2) psi^dag lambda_i psi``.  The magnitudes are
    ``(cos(beta) sin(theta), sin(beta) sin(theta), cos(theta))`` and the
    overall third-component phase is ``exp(-2 i phi / sqrt(3))``.
    """
    return compose(_angles_array(angles))[:, 2]
