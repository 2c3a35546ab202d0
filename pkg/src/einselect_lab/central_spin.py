"""Central spin model: one qubit dephased by N environment qubits.

The interaction is the diagonal Ising-type coupling

    H = (1/2) sigma_z^(0) * sum_i g_i sigma_z^(i)

(identity on all other factors), with the central qubit first in the
big-endian factor order.  Because H is diagonal in the computational
basis, exact evolution reduces to a per-basis-state phase table, and the
central qubit's off-diagonal matrix element has the closed product form
implemented by :func:`decoherence_factor`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import StateVector, TensorSpace, tensor_compose
from .sampling import SeedSpec

NORM_ATOL = 1e-12


@dataclass(frozen=True)
class CentralSpinModel:
    """Couplings g_i of N environment qubits to the central qubit."""

    couplings: tuple[float, ...]

    def __post_init__(self):
        g = tuple(float(x) for x in self.couplings)
        if len(g) < 1:
            raise ValueError("at least one environment qubit is required")
        object.__setattr__(self, "couplings", g)
        _ = self.space  # validates 2^(N+1) against the dimension cap

    @property
    def env_count(self) -> int:
        return len(self.couplings)

    @property
    def space(self) -> TensorSpace:
        return TensorSpace((2,) * (self.env_count + 1))

    @classmethod
    def random(cls, env_count: int, seed: SeedSpec, low: float = 0.5, high: float = 1.5) -> "CentralSpinModel":
        """Couplings drawn uniformly from [low, high) via the seeded stream."""
        g = seed.generator(0).uniform(low, high, env_count)
        return cls(tuple(g))

    @classmethod
    def equal(cls, env_count: int, g: float = 1.0) -> "CentralSpinModel":
        return cls((float(g),) * env_count)


@dataclass(frozen=True)
class EnvironmentInit:
    """Product initial state of the environment, one (a_i, b_i) per qubit."""

    pairs: tuple[tuple[complex, complex], ...]

    def __post_init__(self):
        pairs = tuple((complex(a), complex(b)) for a, b in self.pairs)
        for i, (a, b) in enumerate(pairs):
            n = abs(a) ** 2 + abs(b) ** 2
            if abs(n - 1.0) > NORM_ATOL:
                raise ValueError(f"environment qubit {i} is not normalized: |a|^2+|b|^2 = {n}")
        object.__setattr__(self, "pairs", pairs)

    @property
    def qubit_count(self) -> int:
        return len(self.pairs)

    @classmethod
    def plus_states(cls, n: int) -> "EnvironmentInit":
        """Every qubit in (|0> + |1>)/sqrt(2), the maximally dephasing choice."""
        s = 1.0 / np.sqrt(2.0)
        return cls(((s, s),) * n)

    @classmethod
    def haar_random(cls, n: int, seed: SeedSpec, substream: int = 2) -> "EnvironmentInit":
        """Independent Haar-random single-qubit states."""
        g = seed.generator(substream)
        raw = g.standard_normal((n, 4))
        pairs = []
        for row in raw:
            a = row[0] + 1j * row[1]
            b = row[2] + 1j * row[3]
            norm = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
            pairs.append((a / norm, b / norm))
        return cls(tuple(pairs))


@dataclass(frozen=True)
class PhaseSpectrum:
    """Eigenphase E_k of the diagonal Hamiltonian for every basis state."""

    energies: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.energies, dtype=np.float64)
        if e.ndim != 1 or e.size < 2 or (e.size & (e.size - 1)) != 0:
            raise ValueError(f"expected 2^(N+1) eigenphases, got shape {e.shape}")
        e.setflags(write=False)
        object.__setattr__(self, "energies", e)

    @property
    def dim(self) -> int:
        return self.energies.size


def build_phase_spectrum(model: CentralSpinModel) -> PhaseSpectrum:
    """Diagonal of H over the computational basis, big-endian indexed.

    Bit value 0 carries sigma_z eigenvalue +1, bit value 1 carries -1, so
    for the basis state with central bit s0 and environment bits s_i,

        E = (1/2) * z(s0) * sum_i g_i * z(s_i).
    """
    n = model.env_count
    env_indices = np.arange(2**n)
    env_sum = np.zeros(2**n)
    for i, g in enumerate(model.couplings):
        bits = (env_indices >> (n - 1 - i)) & 1
        env_sum += g * (1.0 - 2.0 * bits)
    energies = 0.5 * np.concatenate([env_sum, -env_sum])  # central bit 0 block first
    return PhaseSpectrum(energies)


def initial_state(alpha: complex, beta: complex, env: EnvironmentInit) -> StateVector:
    """Product state (alpha|0> + beta|1>) (x) prod_i (a_i|0> + b_i|1>)."""
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > NORM_ATOL:
        raise ValueError("central amplitudes are not normalized")
    qubit = TensorSpace((2,))
    central = StateVector(qubit, np.array([alpha, beta], dtype=np.complex128))
    factors = [central] + [
        StateVector(qubit, np.array([a, b], dtype=np.complex128)) for a, b in env.pairs
    ]
    return tensor_compose(factors)


def evolve_phases(psi: StateVector, spectrum: PhaseSpectrum, t: float) -> StateVector:
    """Exact evolution under the diagonal Hamiltonian: amp_k -> e^{-i E_k t} amp_k."""
    if spectrum.dim != psi.dim:
        raise ValueError(f"spectrum dim {spectrum.dim} does not match state dim {psi.dim}")
    return StateVector(psi.space, np.exp(-1j * spectrum.energies * t) * psi.amplitudes)


def decoherence_factor(model: CentralSpinModel, env: EnvironmentInit, t):
    """Overlap r(t) of the two conditional environment branches.

    With U(t) = exp(-i H t) and the bit-0 branch of the central qubit
    evolving the environment by exp(-(i/2) B t), B = sum_i g_i sigma_z^(i),

        r(t) = prod_i ( |a_i|^2 e^{-i g_i t} + |b_i|^2 e^{+i g_i t} ),

    which multiplies the central qubit's reduced off-diagonal element:
    rho_01(t) = alpha * conj(beta) * r(t).  |r(t)| <= 1 always.

    ``t`` may be a scalar or an array; the return matches its shape.
    """
    if env.qubit_count != model.env_count:
        raise ValueError(
            f"environment has {env.qubit_count} qubits, model expects {model.env_count}"
        )
    t = np.asarray(t, dtype=np.float64)
    result = np.ones(t.shape, dtype=np.complex128)
    for g, (a, b) in zip(model.couplings, env.pairs):
        phase = np.exp(-1j * g * t)
        result *= abs(a) ** 2 * phase + abs(b) ** 2 * np.conj(phase)
    return result[()] if result.ndim == 0 else result
