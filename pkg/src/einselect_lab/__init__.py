"""einselect-lab: exact statevector experiments on decoherence and typicality.

Library layers:

- :mod:`einselect_lab.hilbert` — states, density operators, partial traces
- :mod:`einselect_lab.sampling` — seeded Haar states and random Hamiltonians
- :mod:`einselect_lab.central_spin` — the dephasing central spin model
- :mod:`einselect_lab.diagnostics` — trace distance, purity, entropy, Bloch
- :mod:`einselect_lab.experiments` — Monte Carlo and trajectory harnesses
- :mod:`einselect_lab.cli` — the ``einselect-lab`` command
"""

__version__ = "0.1.0"

from .central_spin import (
    CentralSpinModel,
    EnvironmentInit,
    PhaseSpectrum,
    build_phase_spectrum,
    decoherence_factor,
    evolve_phases,
    initial_state,
)
from .diagnostics import (
    BlochVector,
    bloch_vector,
    distinguishability_from_mixed,
    purity,
    trace_distance,
    von_neumann_entropy,
)
from .hilbert import (
    DIM_CAP,
    DensityMatrix,
    StateVector,
    TensorSpace,
    hermitian_spectrum,
    maximally_mixed,
    outer_product,
    partial_trace,
    reduced_density_matrix,
    tensor_compose,
)
from .sampling import (
    SeedSpec,
    evolve_dense,
    model_seed,
    sample_gue_hamiltonian,
    sample_pure_state,
)

__all__ = [
    "__version__",
    "DIM_CAP",
    "TensorSpace",
    "StateVector",
    "DensityMatrix",
    "tensor_compose",
    "outer_product",
    "partial_trace",
    "reduced_density_matrix",
    "hermitian_spectrum",
    "maximally_mixed",
    "SeedSpec",
    "model_seed",
    "sample_pure_state",
    "sample_gue_hamiltonian",
    "evolve_dense",
    "CentralSpinModel",
    "EnvironmentInit",
    "PhaseSpectrum",
    "build_phase_spectrum",
    "initial_state",
    "evolve_phases",
    "decoherence_factor",
    "BlochVector",
    "trace_distance",
    "purity",
    "von_neumann_entropy",
    "bloch_vector",
    "distinguishability_from_mixed",
]
