"""Reproducible Haar-state and random-Hamiltonian sampling.

Randomness is organized as counter-based Philox streams keyed by
``(master_seed, sample_index)`` with a substream selector in the high
counter word.  A sample's stream is a pure function of its key, so
ensemble results do not depend on how samples are partitioned among
workers, and any sample can be regenerated in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import StateVector, TensorSpace

#: Reserved sample index for run-level draws (couplings, shared Hamiltonians).
MODEL_SAMPLE_INDEX = 2**64 - 1

#: Largest dimension for dense random Hamiltonians.
GUE_DENSE_CAP = 1024

_U64 = np.uint64


@dataclass(frozen=True)
class SeedSpec:
    """Identifies one sample's random stream within an ensemble."""

    master_seed: int
    sample_index: int

    def __post_init__(self):
        for name in ("master_seed", "sample_index"):
            v = getattr(self, name)
            if not 0 <= int(v) < 2**64:
                raise ValueError(f"{name} must be a 64-bit unsigned integer, got {v}")

    def generator(self, substream: int = 0) -> np.random.Generator:
        """Fresh generator for (master_seed, sample_index, substream)."""
        key = np.array([self.master_seed, self.sample_index], dtype=_U64)
        counter = np.array([0, 0, 0, substream], dtype=_U64)
        return np.random.Generator(np.random.Philox(key=key, counter=counter))


def model_seed(master_seed: int) -> SeedSpec:
    """Stream for run-level draws, disjoint from all per-sample streams."""
    return SeedSpec(master_seed, MODEL_SAMPLE_INDEX)


def sample_pure_state(dim: int, seed: SeedSpec, space: TensorSpace | None = None) -> StateVector:
    """Draw a Haar-uniform pure state of the given dimension.

    2*dim independent standard normals form the complex amplitudes, which
    are then normalized; unitary invariance of the Gaussian makes the
    result uniform on the unit sphere of the Hilbert space.
    """
    if dim < 2:
        raise ValueError(f"dim must be >= 2, got {dim}")
    if space is not None and space.total_dim != dim:
        raise ValueError(f"space dimension {space.total_dim} does not match dim {dim}")
    attempt = 0
    while True:
        # Redraws (probability zero) move to a reserved substream range so
        # they can never collide with other documented substreams.
        g = seed.generator(0 if attempt == 0 else 2**32 + attempt)
        raw = g.standard_normal(2 * dim)
        amps = raw[:dim] + 1j * raw[dim:]
        norm = np.linalg.norm(amps)
        if norm > 0.0:
            break
        attempt += 1
    return StateVector(space if space is not None else TensorSpace((dim,)), amps / norm)


def sample_gue_hamiltonian(dim: int, seed: SeedSpec, substream: int = 1) -> np.ndarray:
    """Hermitian matrix (A + A†)/2 with iid standard complex normal entries."""
    if dim < 2:
        raise ValueError(f"dim must be >= 2, got {dim}")
    if dim > GUE_DENSE_CAP:
        raise ValueError(f"dim {dim} exceeds the dense cap {GUE_DENSE_CAP}")
    g = seed.generator(substream)
    raw = g.standard_normal((2, dim, dim))
    a = (raw[0] + 1j * raw[1]) / np.sqrt(2.0)
    return 0.5 * (a + a.conj().T)


def evolve_dense(psi: StateVector, hamiltonian: np.ndarray, t: float) -> StateVector:
    """Apply U(t) = exp(-i H t) through an eigen-decomposition of H."""
    h = np.asarray(hamiltonian, dtype=np.complex128)
    if h.shape != (psi.dim, psi.dim):
        raise ValueError(f"Hamiltonian shape {h.shape} does not match state dim {psi.dim}")
    w, v = np.linalg.eigh(0.5 * (h + h.conj().T))
    coeffs = v.conj().T @ psi.amplitudes
    amps = v @ (np.exp(-1j * w * t) * coeffs)
    return StateVector(psi.space, amps)
