"""States, density operators, and partial traces over tensor-product spaces.

Conventions used throughout the package:

- Composite basis indices are big-endian: the first tensor factor is the
  most significant digit of the flat index, so ``|s0 s1 ... sk>`` maps to
  ``s0 * d1*...*dk + ...``.  Keeping the subsystem of interest first makes
  its reduction a plain row-major reshape.
- Dense matrices are only ever built for small subsystems (or in oracle
  tests); full states live as flat amplitude arrays up to ``DIM_CAP``.

All containers are frozen dataclasses wrapping read-only numpy arrays, so
values can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Sequence

import numpy as np

#: Largest total Hilbert-space dimension a TensorSpace may describe (2^21).
DIM_CAP = 2**21

#: Absolute tolerance for state normalization and density-matrix validation.
NORM_ATOL = 1e-12
HERM_ATOL = 1e-12
PSD_ATOL = 1e-10

#: Hermiticity rejection threshold for eigen-decompositions.
SPECTRUM_HERM_ATOL = 1e-10


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class TensorSpace:
    """An ordered factorization of a finite-dimensional Hilbert space.

    Parameters
    ----------
    factor_dims : tuple of int
        Dimension of each tensor factor, in order.  Every factor must be
        at least 2 and the product must not exceed ``max_dim``.
    """

    factor_dims: tuple[int, ...]
    max_dim: int = field(default=DIM_CAP, repr=False, compare=False)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.factor_dims)
        object.__setattr__(self, "factor_dims", dims)
        if len(dims) < 1:
            raise ValueError("TensorSpace needs at least one factor")
        if any(d < 2 for d in dims):
            raise ValueError(f"factor dimensions must be >= 2, got {dims}")
        if prod(dims) > self.max_dim:
            raise ValueError(
                f"total dimension {prod(dims)} exceeds the cap {self.max_dim}"
            )

    @property
    def total_dim(self) -> int:
        return prod(self.factor_dims)

    @property
    def factor_count(self) -> int:
        return len(self.factor_dims)

    def dims_of(self, factors: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.factor_dims[i] for i in factors)


@dataclass(frozen=True)
class StateVector:
    """A normalized pure state over a :class:`TensorSpace`."""

    space: TensorSpace
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (self.space.total_dim,):
            raise ValueError(
                f"amplitude length {amps.shape} does not match space dimension "
                f"{self.space.total_dim}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_ATOL:
            raise ValueError(f"state is not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")
        object.__setattr__(self, "amplitudes", _readonly(amps))

    @property
    def dim(self) -> int:
        return self.space.total_dim

    def refactor(self, space: TensorSpace) -> "StateVector":
        """Reinterpret the same amplitudes over a different factorization."""
        return StateVector(space, self.amplitudes)


@dataclass(frozen=True)
class DensityMatrix:
    """A Hermitian, unit-trace, positive-semidefinite operator."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        herm_dev = np.max(np.abs(m - m.conj().T))
        if herm_dev > HERM_ATOL:
            raise ValueError(f"density matrix is not Hermitian: max|M - M†| = {herm_dev:.3e}")
        tr = m.trace()
        if abs(tr - 1.0) > NORM_ATOL:
            raise ValueError(f"density matrix trace is {tr}, not 1")
        evals = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
        if evals.min() < -PSD_ATOL:
            raise ValueError(f"density matrix has eigenvalue {evals.min():.3e} below -{PSD_ATOL}")
        object.__setattr__(self, "entries", _readonly(m))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def tensor_compose(factors: Sequence[StateVector]) -> StateVector:
    """Kronecker product of pure states, first factor most significant.

    The result's space is the concatenation of the inputs' factorizations.
    """
    if len(factors) == 0:
        raise ValueError("tensor_compose needs at least one factor")
    dims: tuple[int, ...] = ()
    for f in factors:
        dims = dims + f.space.factor_dims
    space = TensorSpace(dims)  # raises if the cap is exceeded
    amps = factors[0].amplitudes
    for f in factors[1:]:
        amps = np.kron(amps, f.amplitudes)
    return StateVector(space, amps)


def outer_product(psi: StateVector) -> DensityMatrix:
    """Rank-1 projector |psi><psi|."""
    return DensityMatrix(np.outer(psi.amplitudes, psi.amplitudes.conj()))


def _check_keep(space: TensorSpace, keep: Iterable[int]) -> tuple[int, ...]:
    kept = tuple(int(i) for i in sorted(set(keep)))
    if len(kept) == 0:
        raise ValueError("keep must name at least one factor")
    if kept[0] < 0 or kept[-1] >= space.factor_count:
        raise ValueError(
            f"keep indices {kept} out of range for {space.factor_count} factors"
        )
    return kept


def partial_trace(rho: DensityMatrix, space: TensorSpace, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every factor of ``space`` not listed in ``keep``.

    Kept factors stay in their original order.  Trace is preserved.
    """
    if rho.dim != space.total_dim:
        raise ValueError(
            f"density matrix dim {rho.dim} does not match space dim {space.total_dim}"
        )
    kept = _check_keep(space, keep)
    k = space.factor_count
    tensor = rho.entries.reshape(space.factor_dims * 2)
    # Integer-labelled einsum: row axis i and column axis k+i share a label
    # for traced factors, keeping kept row/column axes distinct.
    row_labels = list(range(k))
    col_labels = [i if i not in kept else k + i for i in range(k)]
    out_labels = [i for i in kept] + [k + i for i in kept]
    reduced = np.einsum(tensor, row_labels + col_labels, out_labels)
    d = prod(space.dims_of(kept))
    reduced = reduced.reshape(d, d)
    return DensityMatrix(0.5 * (reduced + reduced.conj().T))


def reduced_density_matrix(psi: StateVector, keep: Iterable[int]) -> DensityMatrix:
    """Reduced state of ``keep`` factors of a pure state.

    Contracts the amplitudes directly (Gram matrix of a reshaped amplitude
    block), never materializing the full |psi><psi| matrix, so it is usable
    at the full ``DIM_CAP``.
    """
    kept = _check_keep(psi.space, keep)
    tensor = psi.amplitudes.reshape(psi.space.factor_dims)
    tensor = np.moveaxis(tensor, kept, range(len(kept)))
    block = tensor.reshape(prod(psi.space.dims_of(kept)), -1)
    gram = block @ block.conj().T
    return DensityMatrix(0.5 * (gram + gram.conj().T))


def hermitian_spectrum(matrix: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending.

    The input is symmetrized as (M + M†)/2 before decomposition; inputs
    further than ``SPECTRUM_HERM_ATOL`` from Hermitian are rejected.
    """
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    herm_dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if herm_dev > SPECTRUM_HERM_ATOL:
        raise ValueError(f"matrix is not Hermitian: max|M - M†| = {herm_dev:.3e}")
    evals = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    return evals[::-1]


def maximally_mixed(dim: int) -> DensityMatrix:
    """The basis-independent state (1/dim) * identity."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    return DensityMatrix(np.eye(dim, dtype=np.complex128) / dim)
