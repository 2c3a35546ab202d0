"""Scalar diagnostics on density matrices.

Trace distance, purity, von Neumann entropy, Bloch vectors, and the
distinguishability of a reduced state from the maximally mixed state.
All functions are pure and basis-independent where the quantity is.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import DensityMatrix, hermitian_spectrum, maximally_mixed

#: Eigenvalues below this are a genuine positivity violation, not roundoff.
ENTROPY_NEG_EIGENVALUE_LIMIT = -1e-8

BLOCH_RADIUS_ATOL = 1e-10


@dataclass(frozen=True)
class BlochVector:
    """(x, y, z) representation of a qubit state, radius <= 1."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if self.radius > 1.0 + BLOCH_RADIUS_ATOL:
            raise ValueError(f"Bloch radius {self.radius} exceeds 1")

    @property
    def radius(self) -> float:
        return float(np.sqrt(self.x**2 + self.y**2 + self.z**2))


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """D(rho, sigma) = (1/2) sum |eigenvalues of rho - sigma|.

    rho - sigma is Hermitian, so its singular values are the absolute
    eigenvalues; the result lies in [0, 1].
    """
    if rho.dim != sigma.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {sigma.dim}")
    evals = hermitian_spectrum(rho.entries - sigma.entries)
    return float(0.5 * np.abs(evals).sum())


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2), between 1/dim (maximally mixed) and 1 (pure)."""
    return float(np.real(np.trace(rho.entries @ rho.entries)))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """-sum lambda ln lambda with 0 ln 0 = 0.

    Tiny negative eigenvalues from roundoff are clamped to zero; values
    below ``ENTROPY_NEG_EIGENVALUE_LIMIT`` raise instead of being hidden.
    """
    evals = hermitian_spectrum(rho.entries)
    if evals.min() < ENTROPY_NEG_EIGENVALUE_LIMIT:
        raise ValueError(f"eigenvalue {evals.min():.3e} is too negative for a density matrix")
    evals = np.clip(evals, 0.0, None)
    positive = evals[evals > 0.0]
    return float(-(positive * np.log(positive)).sum())


def bloch_vector(rho: DensityMatrix) -> BlochVector:
    """Pauli expectations (Tr rho sigma_x, Tr rho sigma_y, Tr rho sigma_z)."""
    if rho.dim != 2:
        raise ValueError(f"Bloch vector needs a qubit state, got dim {rho.dim}")
    m = rho.entries
    x = 2.0 * float(np.real(m[0, 1]))
    y = 2.0 * float(np.imag(m[1, 0]))
    z = float(np.real(m[0, 0] - m[1, 1]))
    return BlochVector(x, y, z)


def distinguishability_from_mixed(rho: DensityMatrix) -> float:
    """Trace distance to the maximally mixed state of the same dimension.

    For a qubit this equals half the Bloch radius.
    """
    return trace_distance(rho, maximally_mixed(rho.dim))
